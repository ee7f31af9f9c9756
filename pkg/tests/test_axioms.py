from fractions import Fraction

import pytest

from g3lr.axioms import (A_ALGEBRA, FUNDAMENTAL, GRADING, RINEHART,
                         VIOLATION_CAP, Violation, check_A_algebra,
                         check_fundamental_identity, check_grading,
                         check_representation, check_rho_derivation,
                         check_rinehart_compat, rho_antisymmetry_witnesses,
                         run_all)
from g3lr.catalog import builtin
from g3lr.model import Algebra3LR, GradedBasis


def _rebuild(alg, **overrides):
    parts = dict(bracket=alg.bracket, amul=alg.amul, action=alg.action,
                 rho=alg.rho)
    parts.update(overrides)
    return Algebra3LR(alg.group, alg.L, alg.A, **parts)


def test_all_builtins_pass():
    for name in ("trivial", "a4", "gl2-trace", "a4-dual-numbers",
                 "tight-pair"):
        report = run_all(builtin(name))
        assert report.passed, (name, report.counts)


def test_violation_requires_disagreement():
    with pytest.raises(AssertionError):
        Violation(FUNDAMENTAL, (0,), (1,), (1,))


def _garbage_ungraded():
    """Trivially graded 5-dimensional L with an arbitrary bracket table;
    the grading checker is silent but the fundamental identity fails on
    many 5-tuples."""
    from g3lr.groups import GroupSpec
    G = GroupSpec(())
    L = GradedBasis(tuple("v%d" % i for i in range(5)), (G.identity(),) * 5)
    A = GradedBasis(("one",), (G.identity(),))
    br = {(0, 1, 2): {3: 1}, (0, 1, 3): {4: 1}, (2, 3, 4): {0: 1},
          (1, 2, 4): {1: 1}, (0, 2, 3): {2: 1}}
    return Algebra3LR(G, L, A, br, {(0, 0): {0: 1}},
                      {(0, i): {i: 1} for i in range(5)}, {})


def test_fundamental_identity_violations_reported():
    broken = _garbage_ungraded()
    assert check_grading(broken) == []
    vs = check_fundamental_identity(broken)
    assert vs
    assert all(v.axiom == FUNDAMENTAL and v.lhs != v.rhs for v in vs)


def test_degenerate_bracket_variants_still_valid():
    """Dropping or rescaling one structure constant of the
    4-dimensional instance yields another valid (if different) algebra;
    the checker must not produce false positives on these."""
    alg = builtin("a4")
    for key in list(alg.bracket):
        dropped = {k: v for k, v in alg.bracket.items() if k != key}
        assert check_fundamental_identity(
            _rebuild(alg, bracket=dropped)) == []
        scaled = dict(alg.bracket)
        scaled[key] = {m: 2 * c for m, c in scaled[key].items()}
        assert check_fundamental_identity(
            _rebuild(alg, bracket=scaled)) == []


def test_wrong_degree_target_breaks_grading():
    alg = builtin("a4")
    bad = dict(alg.bracket)
    bad[(0, 1, 2)] = {0: 1}      # lands in the wrong fiber
    broken = _rebuild(alg, bracket=bad)
    vs = check_grading(broken)
    assert vs and vs[0].axiom == GRADING


def test_broken_action_breaks_rinehart():
    alg = builtin("a4")
    bad = dict(alg.action)
    bad[(0, 0)] = {0: 2}         # unit now acts by 2 on e1 only
    broken = _rebuild(alg, action=bad)
    assert check_rinehart_compat(broken) or check_A_algebra(broken)


def test_broken_amul_breaks_associativity():
    alg = builtin("a4-dual-numbers")
    bad = dict(alg.amul)
    bad[(1, 1)] = {1: 1}         # t*t = t
    broken = _rebuild(alg, amul=bad)
    vs = check_A_algebra(broken)
    assert any(v.witness[0] in ("assoc", "module") for v in vs)


def test_representation_checks_pass_on_trace_instance():
    alg = builtin("gl2-trace")
    assert check_representation(alg) == []
    assert check_rho_derivation(alg) == []


def test_rho_antisymmetry_note_absent_without_rho():
    alg = builtin("a4")
    assert rho_antisymmetry_witnesses(alg) == []
    assert all("antisymmetric" not in n for n in run_all(alg).notes)


def test_report_capping_keeps_counts():
    report = run_all(_garbage_ungraded())
    assert not report.passed
    assert report.counts[FUNDAMENTAL] > VIOLATION_CAP
    capped = report.capped()
    assert len(capped[FUNDAMENTAL]) == VIOLATION_CAP
    for axiom, vs in capped.items():
        assert len(vs) <= VIOLATION_CAP
        assert report.counts[axiom] >= len(vs)


def test_metamorphic_basis_relabel():
    """Renaming labels (not indices) changes nothing checkable."""
    alg = builtin("a4")
    L = GradedBasis(("x1", "x2", "x3", "x4"), alg.L.degrees)
    A = GradedBasis(("unit",), alg.A.degrees)
    relabeled = Algebra3LR(alg.group, L, A, alg.bracket, alg.amul,
                           alg.action, alg.rho)
    assert run_all(relabeled).passed


def test_metamorphic_basis_permutation():
    """Permuting the L-basis order of the 4-dimensional instance and
    rewriting the tables accordingly must stay valid."""
    alg = builtin("a4")
    perm = (2, 0, 3, 1)          # new index of old basis vector i
    inv = tuple(perm.index(i) for i in range(4))

    def resort(i, j, k, val):
        trip = sorted(((perm[i], 0), (perm[j], 1), (perm[k], 2)))
        order = tuple(p for _, p in trip)
        sign = 1 if order in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1
        key = tuple(p for p, _ in trip)
        return key, {perm[m]: sign * c for m, c in val.items()}

    bracket = {}
    for (i, j, k), val in alg.bracket.items():
        key, entry = resort(i, j, k, val)
        bracket[key] = entry
    action = {(0, perm[li]): {perm[m]: c for m, c in val.items()}
              for (ai, li), val in alg.action.items()}
    L = GradedBasis(tuple(alg.L.labels[inv[i]] for i in range(4)),
                    tuple(alg.L.degrees[inv[i]] for i in range(4)))
    permuted = Algebra3LR(alg.group, L, alg.A, bracket, alg.amul,
                          action, {})
    assert run_all(permuted).passed


def test_rinehart_rho_scaling_clause():
    """A nonzero rho that is not A-linear must be flagged."""
    alg = builtin("a4-dual-numbers")
    # rho(e1, e2) acts on "one" producing t: degree-consistent
    # ((1,0,0)(0,1,0)(0,0,0) = (1,1,0)) is violated too, but the
    # A-linearity clause must fire regardless
    rho = {(0, 1, 0): {1: Fraction(1)}}
    broken = _rebuild(alg, rho=rho)
    assert check_rinehart_compat(broken)
