"""Command line front end.

Exit codes: 0 success with all checks clean, 2 axiom violations found,
3 parse error, 4 internal invariant failure (always a bug).
"""

import argparse
import sys

from .axioms import run_all
from .catalog import BUILTIN_NAMES, builtin
from .connections import compute_supports, lambda_classes, sigma_classes
from .decompose import check_gr_simple_A, check_gr_simple_L, decompose
from .instio import (ParseError, axiom_report_json, canonical_json,
                     class_json, decomposition_json, instance_digest,
                     instance_to_dict, load_instance, simplicity_json,
                     supports_json, REPORT_SCHEMA)

EXIT_OK = 0
EXIT_VIOLATIONS = 2
EXIT_PARSE = 3
EXIT_INTERNAL = 4


def _load(path, out):
    alg = load_instance(path)
    report = run_all(alg)
    if not report.passed:
        print("axiom violations in %s:" % path, file=out)
        for axiom, count in sorted(report.counts.items()):
            if count:
                print("  %-24s %d violation(s)" % (axiom, count), file=out)
                for v in report.capped()[axiom][:3]:
                    print("    witness %r" % (v.witness,), file=out)
        return alg, report, EXIT_VIOLATIONS
    return alg, report, EXIT_OK


def _cmd_validate(args, out):
    alg, report, code = _load(args.file, out)
    if code == EXIT_OK:
        print("ok: %d axiom group(s) checked, no violations"
              % len(report.counts), file=out)
        for note in report.notes:
            print("note: %s" % note, file=out)
    return code


def _cmd_classes(args, out):
    alg, report, code = _load(args.file, out)
    if code != EXIT_OK:
        return code
    supports = compute_supports(alg)
    doc = {
        "supports": supports_json(supports),
        "sigma_classes": [class_json(c) for c in sigma_classes(supports)],
        "lambda_classes": [class_json(c) for c in lambda_classes(supports)],
    }
    print(canonical_json(doc), file=out)
    return EXIT_OK


def _cmd_decompose(args, out):
    alg, report, code = _load(args.file, out)
    if code != EXIT_OK:
        return code
    rep = decompose(alg)
    if args.json:
        print(canonical_json(decomposition_json(rep)), file=out)
        return EXIT_OK
    print("sigma classes: %d, lambda classes: %d"
          % (len(rep.sigma_classes), len(rep.lambda_classes)), file=out)
    for I in rep.L_ideals:
        print("L-ideal [%r]: dim %d, graded ideal: %s, gr-simple: %s"
              % (I.source_class.representative.coords, I.subspace.dim,
                 I.is_graded_ideal, I.is_gr_simple), file=out)
    for J in rep.A_ideals:
        print("A-ideal [%r]: dim %d, graded ideal: %s"
              % (J.source_class.representative.coords, J.subspace.dim,
                 J.is_graded_ideal), file=out)
    print("complement dims: U=%d V=%d; L covers: %s direct: %s; "
          "A covers: %s direct: %s"
          % (rep.U_complement.dim, rep.V_complement.dim, rep.L_covers,
             rep.L_direct, rep.A_covers, rep.A_direct), file=out)
    print("tight: %s, maximal length: %s, multiplicative supports: %s"
          % (rep.tightness.tight, rep.maximal_length, rep.g_multiplicative),
          file=out)
    print("fine decomposition attempted: %s (%d component(s))"
          % (rep.fine_attempted, len(rep.fine_components)), file=out)
    for note in rep.notes:
        print("note: %s" % note, file=out)
    return EXIT_OK


def _cmd_simple(args, out):
    alg, report, code = _load(args.file, out)
    if code != EXIT_OK:
        return code
    vL = check_gr_simple_L(alg)
    vA = check_gr_simple_A(alg)
    print("L graded-simple: %s" % vL.verdict, file=out)
    print("A graded-simple: %s" % vA.verdict, file=out)
    doc = {"L": simplicity_json(vL), "A": simplicity_json(vA)}
    print(canonical_json(doc), file=out)
    return EXIT_OK


def _build_report_doc(alg, report):
    doc = {
        "schema": REPORT_SCHEMA,
        "instance_digest": instance_digest(alg),
        "axioms": axiom_report_json(report),
    }
    if report.passed:
        doc["decomposition"] = decomposition_json(decompose(alg))
        doc["interpretation_notes"] = [
            "the annihilator of A inside L is {x : Ax = 0}; the dual "
            "notion {a : aL = 0} is reported separately",
            "the kernel of the representation is one-sided: "
            "{x : rho(x, L) = 0}",
            "multiplicative-support bracket clause ranges over pairwise "
            "distinct degree triples",
            "connection chains additionally keep even partial products "
            "inside the supports, which blocks degenerate "
            "identity-cancelling chains",
        ]
    return doc


def _cmd_report(args, out):
    alg, report, code = _load(args.file, out)
    doc = _build_report_doc(alg, report)
    text = canonical_json(doc) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print("wrote %s" % args.out, file=out)
    else:
        out.write(text)
    return code


def _cmd_builtin(args, out):
    alg = builtin(args.name)
    text = canonical_json(instance_to_dict(alg)) + "\n"
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write(text)
        print("wrote %s" % args.emit, file=out)
    else:
        out.write(text)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="g3lr",
        description="analyze graded 3-Lie-Rinehart algebra instances")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="run the axiom suite")
    sp.add_argument("file")
    sp.set_defaults(fn=_cmd_validate)

    sp = sub.add_parser("classes", help="supports and connection classes")
    sp.add_argument("file")
    sp.set_defaults(fn=_cmd_classes)

    sp = sub.add_parser("decompose", help="ideal decomposition report")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=_cmd_decompose)

    sp = sub.add_parser("simple", help="graded simplicity verdicts")
    sp.add_argument("file")
    sp.set_defaults(fn=_cmd_simple)

    sp = sub.add_parser("report", help="full JSON report")
    sp.add_argument("file")
    sp.add_argument("--out")
    sp.set_defaults(fn=_cmd_report)

    sp = sub.add_parser("builtin", help="emit a catalog instance")
    sp.add_argument("name", choices=list(BUILTIN_NAMES))
    sp.add_argument("--emit")
    sp.set_defaults(fn=_cmd_builtin)

    return p


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, out)
    except ParseError as e:
        print("parse error: %s" % e, file=sys.stderr)
        return EXIT_PARSE
    except Exception as e:                      # noqa: BLE001
        print("internal error: %r" % (e,), file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
