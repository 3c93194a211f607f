import random
from fractions import Fraction

import pytest

from jackpoly import combinat as cb
from jackpoly import scalars as sc
from jackpoly.qalpha import (ALPHA, ONE, ZERO, AlphaRational, alpha_shift,
                             format_alpha, parse_alpha)

A = ALPHA


class TestField:
    def test_field_ops(self):
        assert A / (A + 1) + 1 / (A + 1) == ONE
        assert (A + 2) / (A + 1) * (A + 1) == A + 2
        with pytest.raises(ZeroDivisionError):
            ZERO.inverse()

    def test_reduction(self):
        assert (A ** 2 - 1) / (A - 1) == A + 1
        assert AlphaRational((2, 4), (6,)) == (A * 2 + 1) / 3

    def test_eval_at(self):
        assert (A / (A + 1)).eval_at(1) == Fraction(1, 2)
        assert (A + 2).eval_at(Fraction(1, 3)) == Fraction(7, 3)
        with pytest.raises(ZeroDivisionError):
            (1 / (A - 1)).eval_at(1)

    def test_eval_is_homomorphism(self):
        rng = random.Random(5)
        elems = [A, A + 3, 1 / (A + 2), (A ** 2 - 2) / (3 * A + 1)]
        for _ in range(20):
            x, y = rng.choice(elems), rng.choice(elems)
            a0 = Fraction(rng.randrange(1, 9), rng.randrange(1, 5))
            assert (x * y).eval_at(a0) == x.eval_at(a0) * y.eval_at(a0)
            assert (x + y).eval_at(a0) == x.eval_at(a0) + y.eval_at(a0)

    def test_substitute(self):
        sh = alpha_shift()
        assert A.substitute(sh) == sh
        assert (1 / A).substitute(sh) == (A + 1) / A
        assert ((A + 1) / A).substitute(sh) == (2 * A + 1) / A

    def test_substitute_commutes_with_ops(self):
        sh = alpha_shift()
        x = (A + 2) / (3 * A - 1)
        y = A ** 2 + 1
        assert (x * y).substitute(sh) == x.substitute(sh) * y.substitute(sh)
        assert (x - y).substitute(sh) == x.substitute(sh) - y.substitute(sh)
        assert x.inverse().substitute(sh) == x.substitute(sh).inverse()

    def test_parse_print_round_trip(self):
        elems = [ZERO, ONE, A, -A, (A + 2) / (A + 1), 2 * A ** 3 / (A ** 2 - 5),
                 AlphaRational(Fraction(-7, 3)), (4 * A ** 2 - A) / (2 * A + 6)]
        for x in elems:
            assert parse_alpha(format_alpha(x)) == x

    def test_json_round_trip(self):
        x = (3 * A ** 2 - 1) / (A + 4)
        assert AlphaRational.from_json(x.to_json()) == x


class TestConstants:
    def test_single_node_values(self):
        for n in (2, 3, 5):
            eta = (0,) * (n - 1) + (1,)
            assert sc.const_d(eta) == A + n
            assert sc.const_e(eta) == A + n
            assert sc.eval_E_at_ones(eta) == ONE
        assert sc.const_dp((1, 0)) == A
        assert sc.const_dp((0, 1)) == A + 1

    def test_empty_diagram(self):
        eta = (0, 0, 0)
        for kind in ("d", "dp", "e", "ep", "b", "h"):
            assert sc.constant(kind, eta) == ONE

    def test_h_requires_partition(self):
        with pytest.raises(ValueError):
            sc.const_h((0, 1))

    def test_e_depends_only_on_shape(self):
        for n in (2, 3):
            for eta in cb.compositions_upto(4, n):
                ep = cb.sort_to_partition(eta)
                assert sc.const_e(eta) == sc.const_e(ep)
                assert sc.const_ep(eta) == sc.const_ep(ep)
                assert sc.const_b(eta) == sc.const_b(ep)

    def test_gen_factorial_empty(self):
        assert sc.gen_factorial(Fraction(7, 2), (0, 0, 0)) == ONE

    def test_gen_factorial_identities(self):
        for n in (2, 3, 4):
            for eta in cb.compositions_upto(5 if n < 4 else 3, n):
                ep = cb.sort_to_partition(eta)
                m = sum(eta)
                assert A ** m * sc.gen_factorial((A + n) / A, ep) == sc.const_e(eta)
                assert A ** m * sc.gen_factorial((A + n - 1) / A, ep) == sc.const_ep(eta)
                assert A ** m * sc.gen_factorial((ONE * n) / A, ep) == sc.const_b(eta)


class TestFormulas:
    def test_eval_E_at_ones(self):
        assert sc.eval_E_at_ones((1, 0, 0)) == (A + 3) / (A + 1)
        assert sc.eval_E_at_ones((0, 0)) == ONE

    def test_norm_ratio_E(self):
        assert sc.norm_ratio_E((0, 0, 1)) == ONE
        assert sc.norm_ratio_E((0, 0)) == ONE
        assert sc.norm_ratio_E((1, 0)) == A * (A + 2) / (A + 1) ** 2

    def test_u_eta(self):
        assert sc.u_eta((1, 0)) == A / (A + 1)
        assert sc.u_eta((0, 1)) == (A + 1) / (A + 2)
        assert sc.u_eta((0, 0, 0)) == ONE

    def test_eval_P_at_ones(self):
        assert sc.eval_P_at_ones((1, 0, 0, 0)) == 4
        assert sc.eval_P_at_ones((2, 0)) == 2 * (A + 2) / (A + 1)
        assert sc.eval_P_at_ones((1, 1)) == ONE

    def test_norm_ratio_P(self):
        assert sc.norm_ratio_P((1, 0)) == 2 * A / (A + 1)
        assert sc.norm_ratio_P((1, 0, 0)) == 3 * A / (A + 2)
        assert sc.norm_ratio_P((0, 0)) == ONE

    def test_v_kappa(self):
        assert sc.v_kappa((1, 0)) == A
        assert sc.v_kappa((0, 0)) == ONE
        assert sc.v_kappa((2, 0)) == 2 * A ** 2 / (A + 1)

    def test_P_value_forms_agree(self):
        for n in (2, 3, 4):
            for kappa in cb.partitions_upto(6, n):
                assert sc.check_P_ones_consistency(kappa)
                assert sc.check_norm_P_consistency(kappa)


class TestHookAndSociety:
    def test_hook_small(self):
        assert sc.check_hook_identity((1, 0))
        assert sc.check_hook_identity((1, 1))

    def test_hook_sweep(self):
        for n in (2, 3, 4):
            for kappa in cb.partitions_upto(6, n):
                assert sc.check_hook_identity(kappa)

    def test_hook_large_shape(self):
        assert sc.check_hook_identity((8, 7, 7, 4, 3, 3, 2, 1, 0))

    def test_society_identities(self):
        assert sc.check_society_identities((0, 0), 2)
        assert sc.check_society_identities((1, 0), 2)
        for n in (2, 3, 4):
            for ep in cb.partitions_upto(5, n):
                assert sc.check_society_identities(ep, n)

    def test_staircase_norm_ratio(self):
        assert sc.staircase_norm_ratio(2) == (A + 2) / (A + 1)

    def test_norm_reconciliation(self):
        assert sc.check_norm_reconciliation((0, 0), 2)
        assert sc.check_norm_reconciliation((1, 0), 2)
        for n in (2, 3):
            for ep in cb.partitions_upto(4, n):
                assert sc.check_norm_reconciliation(ep, n)


class TestCRho:
    def test_forms_agree(self):
        for n in (2, 3):
            delta = cb.staircase(n)
            for ep in cb.partitions_upto(6 - sum(delta), n):
                rho_plus = tuple(p + d for p, d in zip(ep, delta))
                for rho in cb.rearrangements(rho_plus):
                    assert sc.c_rho(rho, "shifted-shape") == sc.c_rho(rho, "rearrangement")

    def test_increasing_index_gives_global_sign(self):
        # weakly increasing rho: both closed forms collapse to the sign
        for rho in [(0, 1), (0, 1, 2), (1, 2, 4)]:
            n = len(rho)
            sign = -1 if (n * (n - 1) // 2) % 2 else 1
            assert sc.c_rho(rho) == AlphaRational.from_fraction(sign)

    def test_staircase_magnitude(self):
        assert sc.c_rho((1, 0)) == -A / (A + 1)
        assert sc.c_rho_resolved((1, 0)) == A / (A + 1)

    def test_rejects_repeated_parts(self):
        with pytest.raises(ValueError):
            sc.c_rho((1, 1))
