"""Acceptance criteria, one test each.

Every test prints one line ``ACCEPTANCE <n> PASS|FAIL <title>: <detail>`` and the
collected lines are repeated in the pytest terminal summary.  Run directly
(``python tests/test_acceptance.py``) to get just the ten lines.
"""

import itertools
import sys
import time
from fractions import Fraction
from pathlib import Path

import mpmath
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from eulerium import identities as ids  # noqa: E402
from eulerium.genfunc import height_one_index, height_one_mrv  # noqa: E402
from eulerium.hparith import EvalConfig  # noqa: E402
from eulerium.sequences import (  # noqa: E402
    A1,
    A2,
    LaurentProbe,
    finite_functional,
    laurent_expected_order,
    laurent_order,
    seq_functional,
    seq_functional_closed,
)
from eulerium.sums import mrv, mrv_truncated  # noqa: E402
from eulerium.symbolic import SymExpr, eval_sym, sym_equal  # noqa: E402
from oracles import MOD_PRIMES, fraction_mod, naive_mrv, naive_mrv_mod  # noqa: E402

CFG40 = EvalConfig(digits=40, max_terms=10**6)
LINES: list[str] = []


def report(n: int, title: str, ok: bool, detail: str) -> None:
    line = f"ACCEPTANCE {n:2d} {'PASS' if ok else 'FAIL'} {title}: {detail}"
    LINES.append(line)
    print(line)


def worst(checks) -> str:
    return mpmath.nstr(max((c.abs_err for c in checks), default=mpmath.mpf(0)), 3)


def test_01_example_catalog():
    t0 = time.perf_counter()
    checks = [ids.verify_record(r, CFG40) for r in ids.example_catalog()]
    dt = time.perf_counter() - t0
    ok = len(checks) == 11 and all(c.abs_err < 1e-8 and c.terms_used <= 10**6 for c in checks) and dt < 60
    report(1, "example catalog", ok, f"{sum(c.abs_err < 1e-8 for c in checks)}/11 < 1e-8, max err {worst(checks)}, "
           f"max terms {max(c.terms_used for c in checks)}, {dt:.1f} s")
    assert ok


def test_02_duality_corollary():
    t0 = time.perf_counter()
    c = ids.duality_corollary_check(CFG40)
    dt = time.perf_counter() - t0
    ok = c.abs_err < 1e-8 and dt < 10
    report(2, "3R_{2,4}+2R_{3,3} = 112 z3^2 - pi^6/6", ok, f"err {mpmath.nstr(c.abs_err, 3)}, {dt:.1f} s")
    assert ok


def test_03_linear_sweep():
    checks = [
        ids.linear_check(p, q, v, CFG40, tol=1e-8)
        for v in ids.VARIANTS
        for p in range(1, 8)
        for q in range(2, 9 - p)
    ]
    relations = sum(1 for c in checks if "[relation]" in c.name)
    ok = len(checks) >= 40 and all(c.abs_err < 1e-8 for c in checks)
    report(3, "linear R-sum sweep p+q<=8", ok, f"{sum(c.abs_err < 1e-8 for c in checks)}/{len(checks)} "
           f"({relations} constant relations), max err {worst(checks)}")
    assert ok


THM33_CASES = [(m, p, q, A, B) for (m, p, q) in ((2, 2, 2), (2, 2, 3), (1, 2, 3)) for A in (A1, A2) for B in (A1, A2)]
THM34_CASES = [
    (1, 1, 2, A1, A1, A1),
    (1, 2, 2, A1, A2, A2),
    (2, 1, 2, A2, A1, A1),
    (1, 1, 3, A2, A2, A1),
    (2, 2, 2, A1, A1, A2),
    (1, 2, 3, A2, A2, A2),
]


def test_04_theorem_residuals():
    r31 = [ids.theorem31_residual(p, q, A, B, CFG40) for A in (A1, A2) for B in (A1, A2) for p in (1, 2, 3) for q in (2, 3, 4)]
    r33 = [ids.theorem33_residual(*c, CFG40) for c in THM33_CASES]
    r34 = [ids.theorem34_residual(*c, CFG40) for c in THM34_CASES]
    n31, n33, n34 = sum(r < 1e-8 for r in r31), sum(r < 1e-8 for r in r33), sum(r < 1e-6 for r in r34)
    ok = (len(r31), len(r33), len(r34)) == (36, 12, 6) and (n31, n33, n34) == (36, 12, 6)
    report(4, "theorem residual suites", ok, f"cot*Psi {n31}/36 (max {mpmath.nstr(max(r31), 3)}), "
           f"Psi*Psi {n33}/12 (max {mpmath.nstr(max(r33), 3)}), cot*Psi*Psi {n34}/6 (max {mpmath.nstr(max(r34), 3)})")
    assert ok


def test_05_generating_function():
    recs = [r for r in ids.example_catalog() if r.lhs.startswith("MRV")]
    sym_ok = 0
    for r in recs:
        ks = r.lhs_spec().ks
        sym_ok += sym_equal(height_one_mrv(ks[0] - 1, len(ks)), r.rhs)
    errs = []
    with mpmath.workdps(CFG40.work_dps):
        for m in range(1, 5):
            for n in range(1, 6 - m):
                errs.append(abs(mrv(height_one_index(m, n), CFG40).value - eval_sym(height_one_mrv(m, n), CFG40)))
    ok = len(recs) == 5 and sym_ok == 5 and len(errs) == 10 and max(errs) < 1e-6
    report(5, "height-one generating function", ok, f"symbolic {sym_ok}/5, numeric {sum(e < 1e-6 for e in errs)}/{len(errs)} "
           f"(m+n<=5) max err {mpmath.nstr(max(errs), 3)}")
    assert ok


QS_SETS = [((1, 2), 3), ((2, 2), 2), ((1, 1), 4), ((2, 3), 4), ((-1, 2), 3), ((2, -1), -2), ((1, 1, 1), 2), ((1, 1, 2), 3), ((1, -1, 2), 2)]


def test_06_quasi_shuffle():
    qs = [ids.quasi_shuffle_check(f, q, CFG40, tol=1e-6) for f, q in QS_SETS]
    br = [ids.bridge_check(p, q, v, CFG40, tol=1e-8) for v in ids.VARIANTS for p in (1, 2, 3) for q in (2, 3, 4)]
    ok = all(c.abs_err < 1e-6 for c in qs) and len(br) == 36 and all(c.abs_err < 1e-8 for c in br)
    report(6, "quasi-shuffle", ok, f"m=2,3 expansions {sum(c.abs_err < 1e-6 for c in qs)}/{len(qs)} (max {worst(qs)}), "
           f"bridges {sum(c.abs_err < 1e-8 for c in br)}/36 (max {worst(br)})")
    assert ok


def test_07_functional_closed_forms():
    cfg = EvalConfig(digits=25, tol=1e-14)
    errs = []
    exact_ok = exact_total = 0
    for A in (A1, A2):
        a0 = Fraction(A(0))
        for n in range(1, 31):
            for j in range(1, 7):
                for kind in ("M", "Mbar", "T"):
                    closed = eval_sym(seq_functional_closed(kind, A.kind, n, j), cfg)
                    errs.append(abs(seq_functional(kind, A, n, j, cfg, method="direct") - closed))
                # M + Mbar = T + a_0/n^j, symbolically on the closed forms and exactly on the finite parts
                lhs = seq_functional_closed("M", A.kind, n, j) + seq_functional_closed("Mbar", A.kind, n, j)
                rhs = seq_functional_closed("T", A.kind, n, j) + SymExpr.const(a0 / n**j)
                finite = finite_functional("E", A, n, j) - finite_functional("Ebar", A, n - 1, j) - finite_functional("G", A, n, j)
                exact_ok += sym_equal(lhs, rhs) and finite == a0 / n**j
                exact_total += 1
    ok = max(errs) < 1e-10 and exact_ok == exact_total
    report(7, "sequence functional closed forms", ok, f"{sum(e < 1e-10 for e in errs)}/{len(errs)} < 1e-10 "
           f"(max {mpmath.nstr(max(errs), 3)}), M+Mbar=T+a0/n^j exact {exact_ok}/{exact_total}")
    assert ok


LAURENT = [
    ("2.1", 0, 1, 2, A1), ("2.1", 2, 2, 3, A2), ("2.1", 1, 3, 2, A1),
    ("2.2", 1, 1, 2, A1), ("2.2", 3, 2, 2, A2),
    ("2.3", 0, 1, 2, A2), ("2.3", 2, 1, 3, A1), ("2.3", -1, 1, 2, A2),
    ("4.3a", 0, 1, 2, None), ("4.3a", 2, 2, 2, None),
    ("4.3b", 1, 1, 3, None), ("4.3b", 2, 3, 2, None),
]


def test_08_laurent_orders():
    cfg = EvalConfig(digits=30, tol=1e-15)
    good = []
    for lemma, n, p, J, A in LAURENT:
        c = LaurentProbe(lemma, n, p, J, 0).center
        probe = LaurentProbe(lemma, n, p, J, c + Fraction(1, 20))
        expected = laurent_expected_order(probe, A, cfg)
        observed = laurent_order(probe, A, cfg)
        good.append(expected / 2 <= observed <= 2 * expected)
    ok = len(LAURENT) >= 10 and all(good)
    report(8, "Laurent expansion orders", ok, f"{sum(good)}/{len(LAURENT)} probes within a factor 2 of the truncation order")
    assert ok


def test_09_triple_reduction():
    checks = [ids.triple_check(m, p, q, CFG40) for m, p, q in ((1, 2, 3), (2, 1, 3), (1, 1, 2))]
    ok = all(c.abs_err < 1e-6 for c in checks)
    report(9, "depth-three reduction", ok, f"{sum(c.abs_err < 1e-6 for c in checks)}/3 < 1e-6, max err {worst(checks)}")
    assert ok


def test_10_prefix_sums_equal_enumeration():
    vals = (-3, -2, -1, 1, 2, 3)
    indices = [ks for r in (1, 2, 3) for ks in itertools.product(vals, repeat=r) if ks[0] != 1]
    exact = congruent = 0
    bad = []
    for ks in indices:
        prefix = mrv_truncated(ks, 200)
        if len(ks) <= 2:
            hit = prefix == naive_mrv(ks, 200)
            exact += hit
        else:
            hit = all(fraction_mod(prefix, p) == naive_mrv_mod(ks, 200, p) for p in MOD_PRIMES)
            congruent += hit
        if not hit:
            bad.append(ks)
    ok = len(indices) == 215 and not bad
    report(10, "prefix-sum MRV vs naive enumeration (N=200)", ok,
           f"depth<=2 exact {exact}/35, depth 3 all {congruent}/180 congruent mod {len(MOD_PRIMES)} primes"
           + (f", mismatches {bad[:5]}" if bad else ""))
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
