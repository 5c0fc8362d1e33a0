"""Acceptance criteria, one test per criterion, each printing a single PASS/FAIL line.

Run directly (python tests/test_acceptance.py) for just the summary lines.
"""

import sys
import time

import pytest

from eisbasis.verify import SuiteConfig, run_suite

CRITERIA = [
    (1, "cusp series -> pair dilates, N <= 24, residual < 1e-6", ["basis-forward"]),
    (2, "pair dilates -> cusp series, N <= 24, residual < 1e-6", ["basis-inverse"]),
    (3, "exact round trips in the coefficient algebra, N <= 24", ["roundtrip"]),
    (4, "Fourier vs lattice < 1e-8 (k=0 all q1q2 <= 30; k=1..4 three pairs each)", ["fourier-vs-lattice"]),
    (5, "functional equation < 1e-7, coefficient equation < 1e-12", ["funceq"]),
    (6, "Hecke eigenvalues n <= 12 < 1e-7, zero case included", ["hecke"]),
    (7, "Atkin-Lehner, Fricke, oldform and D permutations < 1e-7",
     ["atkin-lehner", "fricke", "oldform-AL", "d-atkin-lehner"]),
    (8, "inner products by three routes < 1e-9, N <= 48, local laws exact", ["innerprod"]),
    (9, "inversion lemma, 100 random instances, kappa identity", ["inversion-lemma"]),
    (10, "p_k table exact, Phi closed vs numeric < 1e-7, Whittaker recursions < 1e-8",
     ["phi-mellin", "whittaker-recursion"]),
    (11, "Mellin transform < 1e-6, vanishing case < 1e-8", ["mellin-transform"]),
    (12, "singular cusp count formula vs enumeration, N <= 200", ["cusp-count"]),
    (13, "Kuznetsov Eisenstein side by two routes < 1e-9, AL pairing < 1e-10", ["kuznetsov-eisenstein"]),
    (14, "holomorphic q-expansions vs lattice < 1e-6", ["holomorphic-q"]),
]


def evaluate(suites):
    total, bad, worst = 0, [], 0.0
    for name in suites:
        reps, _ = run_suite(SuiteConfig(), name)
        total += len(reps)
        bad += [r for r in reps if not r.passed]
        worst = max([worst] + [r.residual for r in reps if r.tolerance > 0])
    return total, bad, worst


def line(num, text, total, bad, worst, seconds):
    verdict = "PASS" if total and not bad else "FAIL"
    return (f"criterion {num:2d}: {verdict}  {text}  [{total} checks, {len(bad)} failed, "
            f"worst residual {worst:.2e}, {seconds:.1f}s]")


@pytest.mark.parametrize("num,text,suites", CRITERIA, ids=[f"criterion-{c[0]:02d}" for c in CRITERIA])
def test_criterion(num, text, suites, capsys):
    t0 = time.time()
    total, bad, worst = evaluate(suites)
    with capsys.disabled():
        print("\n" + line(num, text, total, bad, worst, time.time() - t0))
    assert total > 0
    assert not bad, [r.to_json() for r in bad[:5]]


if __name__ == "__main__":
    failed = 0
    for num, text, suites in CRITERIA:
        t0 = time.time()
        total, bad, worst = evaluate(suites)
        failed += bool(bad) or not total
        print(line(num, text, total, bad, worst, time.time() - t0), flush=True)
    sys.exit(1 if failed else 0)
