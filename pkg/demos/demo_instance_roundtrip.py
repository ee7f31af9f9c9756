"""
Build an instance by hand, save it, reload it, and query it from the
command line front end.

Run with:  python3 demos/demo_instance_roundtrip.py
"""

import io
import tempfile
from pathlib import Path

from g3lr import (Algebra3LR, GradedBasis, GroupSpec, instance_digest,
                  load_instance, run_all, save_instance)
from g3lr.cli import main

# A = F[t]/(t^3) graded over Z/4 with deg t = 1, acting on a
# one-dimensional module concentrated in degree 0.
G = GroupSpec((4,))
A = GradedBasis(("one", "t", "t2"),
                (G.elem((0,)), G.elem((1,)), G.elem((2,))))
L = GradedBasis(("x",), (G.elem((0,)),))
alg = Algebra3LR(
    G, L, A,
    bracket={},                                  # zero ternary bracket
    amul={(0, 0): {0: 1}, (0, 1): {1: 1},        # unit is neutral
          (0, 2): {2: 1}, (1, 1): {2: 1}},       # t * t = t^2
    action={(0, 0): {0: 1}},                     # only the unit moves x
    rho={})

print("axioms pass:", run_all(alg).passed)
print("digest:", instance_digest(alg))

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "truncated_poly.json"
    save_instance(alg, path)
    print("saved", path.name, "(%d bytes)" % path.stat().st_size)

    again = load_instance(path)
    print("round trip digest matches:", instance_digest(again)
          == instance_digest(alg))

    for argv in (["validate", str(path)],
                 ["classes", str(path)],
                 ["decompose", str(path)]):
        out = io.StringIO()
        code = main(argv, out=out)
        print("\n$ g3lr %s   (exit %d)" % (" ".join(argv[:1]), code))
        print(out.getvalue().rstrip())
