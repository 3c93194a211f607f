"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every criterion is an exact identity (zero tolerance); the checks run at
the full stated bounds through the same registry the CLI `verify` command
uses.  Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import time

import pytest

from jackpoly import verify

BOUNDS = verify.Bounds()  # acceptance bounds are the defaults

_RUNTIMES = {}


def _run(criterion, label, check_names, budget=None):
    start = time.perf_counter()
    failures = []
    for name in check_names:
        result = verify.CHECKS[name](BOUNDS)
        if result.status == "fail":
            failures.append(f"{name}: {result.witness}")
        elif result.status == "skipped":
            failures.append(f"{name}: skipped ({result.witness})")
    elapsed = time.perf_counter() - start
    _RUNTIMES[criterion] = elapsed
    status = "PASS" if not failures else "FAIL"
    print(f"ACCEPTANCE {criterion:>2} ({label}): {status} ({elapsed:.2f}s)")
    assert not failures, "; ".join(failures)
    if budget is not None:
        assert elapsed <= budget, f"criterion {criterion} took {elapsed:.1f}s > {budget}s"


def test_criterion_01_eigenfunction_suite():
    _run(1, "joint eigenfunctions, monic triangular",
         ["E.eigen-triangular"], budget=60)


def test_criterion_02_evaluation_at_ones():
    _run(2, "E(1^N) equals e/d", ["E.value-at-ones"])


def test_criterion_03_torus_norm_ratios():
    _run(3, "constant-term norms at k=1,2",
         ["E.norm-orthogonality.ct", "P.norm-orthogonality.ct"])


def test_criterion_04_omega_decomposition():
    _run(4, "kernel sum of E x E over d'/d, diagonal pairing",
         ["omega.decomposition", "omega.pairing-diagonal"])


def test_criterion_05_pi_decomposition():
    _run(5, "kernel sum of P x P over d'/h, v stable in N",
         ["pi.decomposition", "pi.v-stability"])


def test_criterion_06_binomial_theorems():
    _run(6, "binomial expansions at r = 1, 2, 3, 5/2",
         ["binomial.nonsymmetric", "binomial.symmetric"])


def test_criterion_07_value_and_hook_identities():
    _run(7, "both value forms and the hook identity, incl. the 9-part shape",
         ["P.value-and-hook"])


def test_criterion_08_antisymmetrization():
    _run(8, "Asym E proportional to S with the measured sign",
         ["asym.proportionality", "asym.c-closed-forms", "asym.du-expansion"])


def test_criterion_09_norm_reconciliation():
    _run(9, "staircase-insertion identities and both S-norm forms",
         ["society.identities", "norm.reconciliation", "S.norm.ct"])


def test_criterion_10_oracle_equivalence():
    _run(10, "linear solve and Gram-Schmidt match the construction",
         ["oracle.E-linear-solve", "oracle.P-gram-schmidt"])


def test_criterion_11_negative_controls():
    _run(11, "perturbed inputs are detected", ["negative.controls"])


def test_full_verify_within_budget():
    start = time.perf_counter()
    report = verify.run_checks(BOUNDS)
    elapsed = time.perf_counter() - start
    print(f"ACCEPTANCE full verify: {report.counts['pass']} checks in {elapsed:.2f}s")
    assert report.ok, report.to_text()
    assert elapsed <= 600, f"full verify took {elapsed:.1f}s > 600s"
