import math

import pytest

from eisbasis.report import VerificationReport, exact_residual, report
from eisbasis.verify import SUITE_IDS, SuiteConfig, UnknownSuite, iter_suite, primitive_pairs, run_suite

PUBLIC = (
    "basis-forward", "basis-inverse", "roundtrip", "funceq", "fourier-vs-lattice", "hecke", "atkin-lehner",
    "fricke", "oldform-AL", "d-orthogonality", "d-atkin-lehner", "innerprod", "inversion-lemma", "phi-mellin",
    "mellin-transform", "cusp-count", "kuznetsov-eisenstein", "holomorphic-q", "whittaker-recursion",
    "lfun-funceq",
)


def test_suite_ids():
    assert set(PUBLIC) <= set(SUITE_IDS)


@pytest.mark.parametrize("kw", [{"tol": 1e-3}, {"tol": 1e-13}, {"max_level": 0}, {"max_level": 201},
                                {"prec": "quad"}, {"jobs": 0}])
def test_config_validation(kw):
    with pytest.raises(ValueError):
        SuiteConfig(**kw)


def test_config_defaults():
    cfg = SuiteConfig()
    assert cfg.level(24) == 24 and cfg.tolerance(1e-6) == 1e-6
    cfg = SuiteConfig(max_level=5, tol=1e-9, prec="extended")
    assert cfg.level(24) == 5 and cfg.tolerance(1e-6) == 1e-9
    assert cfg.trunc.decay > SuiteConfig().trunc.decay


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        list(iter_suite(SuiteConfig(), "nope"))


def test_report_conventions():
    assert report("x", {}, 0.0, 0.0).passed
    assert not report("x", {}, exact_residual(False), 0.0).passed
    assert not VerificationReport("x", {}, math.nan, 1.0).passed
    d = report("x", {"z": 0.3 + 1.1j}, 1e-9, 1e-6).to_dict(with_time=False)
    assert d["pass"] and "wall_ms" not in d and isinstance(d["params"]["z"], (list, str))


def test_primitive_pairs_parity():
    for q in range(1, 31):
        for k in range(5):
            for p in primitive_pairs(q, k):
                assert p.level == q and (p.chi1.parity + p.chi2.parity - k) % 2 == 0


# small instances of every suite: the full-size runs live in the acceptance tests
SMALL = {
    "basis-forward": 6, "basis-inverse": 6, "roundtrip": 8, "d-orthogonality": 8, "innerprod": 8,
    "kuznetsov-eisenstein": 6, "cusp-count": 20, "fourier-vs-lattice": 5, "fricke": 8, "oldform-AL": 9,
    "d-atkin-lehner": 9, "atkin-lehner": 8,
}


@pytest.mark.parametrize("suite", sorted(SMALL))
def test_small_suites_pass(suite):
    reps, status = run_suite(SuiteConfig(max_level=SMALL[suite]), suite)
    assert reps and status == 0, [r.to_json() for r in reps if not r.passed][:3]


@pytest.mark.parametrize("suite", ["whittaker-recursion", "lfun-funceq", "inversion-lemma", "holomorphic-q",
                                   "basis-independence", "funceq"])
def test_fixed_suites_pass(suite):
    reps, status = run_suite(SuiteConfig(), suite)
    assert reps and status == 0


def test_parallel_order_matches_serial():
    a = [r.to_dict(False) for r in iter_suite(SuiteConfig(max_level=10), "roundtrip")]
    b = [r.to_dict(False) for r in iter_suite(SuiteConfig(max_level=10, jobs=2), "roundtrip")]
    assert a == b


def test_custom_points_and_weights():
    cfg = SuiteConfig(max_level=4, weights=(0,), points=((0.1 + 0.9j, 1.6 + 0.5j),))
    reps, status = run_suite(cfg, "basis-forward")
    assert status == 0 and all(r.params["k"] == 0 for r in reps)
