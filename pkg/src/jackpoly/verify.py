"""Registry of verification checks and the report the CLI prints.

Each check sweeps one identity family inside the supplied bounds and
returns a CheckResult; a failing result always carries a witness naming the
offending label and both values.  Checks are independent of one another and
may run in parallel worker processes.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import combinat, jack, oracle, scalars
from .polyalg import (MultiPoly, apply_transposition, cherednik_apply,
                      divided_difference)
from .qalpha import ALPHA, ONE, AlphaRational, alpha_shift

FIG2_SHAPE = (8, 7, 7, 4, 3, 3, 2, 1, 0)


@dataclass(frozen=True)
class Bounds:
    n_max: int = 4
    deg: int = 5
    ks: tuple = (1, 2)
    rs: tuple = (Fraction(1), Fraction(2), Fraction(3), Fraction(5, 2))


@dataclass
class CheckResult:
    name: str
    params: dict
    status: str  # pass / fail / skipped
    witness: str = None
    seconds: float = 0.0

    def to_json(self):
        return {"name": self.name, "params": self.params, "status": self.status,
                "witness": self.witness, "seconds": round(self.seconds, 4)}


@dataclass
class VerifyReport:
    results: list = field(default_factory=list)

    @property
    def counts(self):
        c = {"pass": 0, "fail": 0, "skipped": 0}
        for r in self.results:
            c[r.status] += 1
        return c

    @property
    def ok(self):
        return self.counts["fail"] == 0

    def to_json(self):
        return {"checks": [r.to_json() for r in self.results],
                "summary": self.counts,
                "total_seconds": round(sum(r.seconds for r in self.results), 4)}

    def to_text(self):
        lines = []
        width = max((len(r.name) for r in self.results), default=10)
        for r in self.results:
            mark = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[r.status]
            params = " ".join(f"{k}={v}" for k, v in r.params.items())
            lines.append(f"{mark}  {r.name:<{width}}  [{params}]  ({r.seconds:.2f}s)")
            if r.witness:
                lines.append(f"      witness: {r.witness}")
        c = self.counts
        lines.append(f"{c['pass']} passed, {c['fail']} failed, {c['skipped']} skipped")
        return "\n".join(lines)


def _pass(name, params):
    return CheckResult(name, params, "pass")


def _fail(name, params, witness):
    return CheckResult(name, params, "fail", witness)


def _skip(name, params, why):
    return CheckResult(name, params, "skipped", why)


def _eigen_sweep(bounds):
    """(N, degree cap) pairs for the construction sweeps."""
    out = []
    for n in range(2, min(bounds.n_max, 4) + 1):
        cap = min(bounds.deg, 5) if n <= 3 else min(bounds.deg, 3)
        out.append((n, cap))
    return out


def _ns(bounds):
    """Variable counts for the desk-scale sweeps (2 and, room permitting, 3)."""
    return tuple(n for n in (2, 3) if n <= max(2, bounds.n_max))


# ---------------------------------------------------------------------------
# construction checks
# ---------------------------------------------------------------------------

def check_E_eigen_triangular(bounds: Bounds) -> CheckResult:
    name = "E.eigen-triangular"
    params = {"sweep": _eigen_sweep(bounds)}
    for n, cap in _eigen_sweep(bounds):
        for eta in combinat.compositions_upto(cap, n):
            f = jack.build_E(eta)
            if not jack.eigen_ok(f, eta):
                bars = combinat.eigenvalue_vector(eta)
                for i in range(1, n + 1):
                    lhs = cherednik_apply(f, i)
                    rhs = f.scale(bars[i - 1])
                    if lhs != rhs:
                        return _fail(name, params,
                                     f"eta={eta} i={i}: xi_i E = {lhs} != {rhs}")
            if not jack.triangular_ok(f, eta):
                return _fail(name, params, f"eta={eta}: not monic triangular: {f}")
    return _pass(name, params)


def check_E_at_ones(bounds: Bounds) -> CheckResult:
    name = "E.value-at-ones"
    params = {"sweep": _eigen_sweep(bounds)}
    for n, cap in _eigen_sweep(bounds):
        for eta in combinat.compositions_upto(cap, n):
            lhs = jack.build_E(eta).eval_ones()
            rhs = scalars.eval_E_at_ones(eta)
            if lhs != rhs:
                return _fail(name, params, f"eta={eta}: {lhs} != {rhs}")
    return _pass(name, params)


def check_s_action(bounds: Bounds) -> CheckResult:
    name = "E.swap-action"
    cap = min(bounds.deg, 4)
    params = {"deg": cap, "N": list(_ns(bounds))}
    for n in _ns(bounds):
        for eta in combinat.compositions_upto(cap, n):
            for i in range(1, n):
                if not jack.check_s_i_action(eta, i):
                    return _fail(name, params, f"eta={eta} i={i}")
    return _pass(name, params)


def check_xi_commutation(bounds: Bounds) -> CheckResult:
    name = "xi.commutation"
    params = {"N": list(_ns(bounds)), "deg": 4, "trials": 3}
    rng = random.Random(20240211)
    for n in _ns(bounds):
        for _ in range(3):
            terms = {}
            for _ in range(5):
                e = tuple(rng.randrange(0, 3) for _ in range(n))
                if sum(e) <= 4:
                    terms[e] = AlphaRational.from_fraction(
                        Fraction(rng.randrange(-9, 10), rng.randrange(1, 5)))
            f = MultiPoly(n, terms)
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    lhs = cherednik_apply(cherednik_apply(f, i), j)
                    rhs = cherednik_apply(cherednik_apply(f, j), i)
                    if lhs != rhs:
                        return _fail(name, params, f"N={n} f={f}: [{i},{j}] != 0")
    return _pass(name, params)


def check_divided_difference(bounds: Bounds) -> CheckResult:
    name = "divided-difference.multiply-back"
    params = {"N": "2..3", "trials": 4}
    rng = random.Random(771)
    for n in (2, 3):
        for _ in range(4):
            terms = {}
            for _ in range(6):
                e = tuple(rng.randrange(0, 4) for _ in range(n))
                terms[e] = AlphaRational.from_fraction(rng.randrange(-5, 6))
            f = MultiPoly(n, terms)
            for i in range(1, n + 1):
                for p in range(1, n + 1):
                    if i == p:
                        continue
                    dd = divided_difference(f, i, p)
                    zi = MultiPoly.variable(i, n)
                    zp = MultiPoly.variable(p, n)
                    if dd * (zi - zp) != f - apply_transposition(f, i, p):
                        return _fail(name, params, f"N={n} ({i},{p}) f={f}")
    return _pass(name, params)


# ---------------------------------------------------------------------------
# symmetric / anti-symmetric family checks
# ---------------------------------------------------------------------------

def check_P_properties(bounds: Bounds) -> CheckResult:
    name = "P.symmetric-eigen-dominance"
    cap = min(bounds.deg, 5)
    params = {"deg": cap, "N": list(_ns(bounds))}
    for n in _ns(bounds):
        for kappa in combinat.partitions_upto(cap, n):
            if not jack.check_P_symmetric_eigen(kappa, n):
                return _fail(name, params, f"kappa={kappa} N={n}")
    return _pass(name, params)


def check_pe_vs_sym(bounds: Bounds) -> CheckResult:
    name = "P.two-routes"
    cap = min(bounds.deg, 5)
    params = {"deg": cap, "N": list(_ns(bounds))}
    for n in _ns(bounds):
        for kappa in combinat.partitions_upto(cap, n):
            if not jack.check_pe_vs_sym(kappa, n):
                p1 = jack.build_P(kappa, n)
                p2 = jack.build_P_sym_route(kappa, n)
                return _fail(name, params, f"kappa={kappa} N={n}: {p1} vs {p2}")
    return _pass(name, params)


def check_P_stability(bounds: Bounds) -> CheckResult:
    name = "P.stability"
    cap = min(bounds.deg, 4)
    params = {"deg": cap, "N": "3 -> 2"}
    for n in (3,):
        for kappa in combinat.partitions_upto(cap, n - 1):
            if not jack.check_P_stability(kappa, n):
                return _fail(name, params, f"kappa={kappa} N={n}")
    return _pass(name, params)


def check_sym_proportionality(bounds: Bounds) -> CheckResult:
    name = "sym.proportionality"
    cap = min(bounds.deg, 4)
    params = {"deg": cap, "N": list(_ns(bounds))}
    measured = {}
    for n in _ns(bounds):
        for eta in combinat.compositions_upto(cap, n):
            try:
                c = jack.sym_constant(eta)
            except ArithmeticError as exc:
                return _fail(name, params, f"eta={eta}: {exc}")
            if sum(eta) <= 2:
                measured[str(eta)] = str(c)
    # no closed form is asserted for these; the report records the values
    params["measured"] = measured
    return _pass(name, params)


def check_hook(bounds: Bounds) -> CheckResult:
    name = "P.value-and-hook"
    cap = min(bounds.deg + 1, 6)
    params = {"deg": cap, "N": f"2..{min(bounds.n_max, 4)}", "fig2": "N=9"}
    for n in range(2, min(bounds.n_max, 4) + 1):
        for kappa in combinat.partitions_upto(cap, n):
            if not scalars.check_hook_identity(kappa):
                return _fail(name, params, f"hook kappa={kappa}")
            if not scalars.check_P_ones_consistency(kappa):
                return _fail(name, params,
                             f"kappa={kappa}: {scalars.eval_P_at_ones(kappa)} != "
                             f"{scalars.eval_P_at_ones_sym_route(kappa)}")
            if not scalars.check_norm_P_consistency(kappa):
                return _fail(name, params, f"norm forms kappa={kappa}")
    if not scalars.check_hook_identity(FIG2_SHAPE):
        return _fail(name, params, f"hook at {FIG2_SHAPE}")
    if not scalars.check_P_ones_consistency(FIG2_SHAPE):
        return _fail(name, params, f"value forms at {FIG2_SHAPE}")
    return _pass(name, params)


def check_asym(bounds: Bounds) -> CheckResult:
    name = "asym.proportionality"
    cap = min(bounds.deg + 1, 6)
    params = {"|rho|<=": cap, "N": list(_ns(bounds)),
              "sign": "(-1)^(ascending pairs) * d'(rho)/d'(rhoR)"}
    for n in _ns(bounds):
        base = n * (n - 1) // 2
        if base > cap:
            continue
        for ep in combinat.partitions_upto(cap - base, n):
            rho_plus = tuple(p + d for p, d in zip(ep, combinat.staircase(n)))
            for rho in combinat.rearrangements(rho_plus):
                try:
                    c, ok = jack.check_asym_formula(rho)
                except ArithmeticError as exc:
                    return _fail(name, params, f"rho={rho}: {exc}")
                if not ok:
                    return _fail(name, params,
                                 f"rho={rho}: measured {c} != "
                                 f"{scalars.c_rho_resolved(rho)}")
        # repeated parts must antisymmetrize to zero
        for eta in combinat.compositions_upto(min(cap, 4), n):
            if combinat.has_distinct_parts(eta):
                continue
            c, ok = jack.check_asym_formula(eta)
            if not ok:
                return _fail(name, params, f"rho={eta}: Asym E != 0")
    return _pass(name, params)


def check_c_forms(bounds: Bounds) -> CheckResult:
    name = "asym.c-closed-forms"
    cap = min(bounds.deg + 1, 6)
    params = {"|rho|<=": cap, "N": list(_ns(bounds))}
    for n in _ns(bounds):
        base = n * (n - 1) // 2
        if base > cap:
            continue
        for ep in combinat.partitions_upto(cap - base, n):
            rho_plus = tuple(p + d for p, d in zip(ep, combinat.staircase(n)))
            for rho in combinat.rearrangements(rho_plus):
                a = scalars.c_rho(rho, "shifted-shape")
                b = scalars.c_rho(rho, "rearrangement")
                if a != b:
                    return _fail(name, params, f"rho={rho}: {a} != {b}")
    return _pass(name, params)


def check_du(bounds: Bounds) -> CheckResult:
    name = "asym.du-expansion"
    cap = min(bounds.deg + 1, 6)
    params = {"|rho|<=": cap, "N": list(_ns(bounds))}
    for n in _ns(bounds):
        base = n * (n - 1) // 2
        if base > cap:
            continue
        for ep in combinat.partitions_upto(cap - base, n):
            if not jack.check_du_expansion(ep, n):
                return _fail(name, params, f"eta+={ep} N={n}")
    return _pass(name, params)


def check_society(bounds: Bounds) -> CheckResult:
    name = "society.identities"
    cap = min(bounds.deg, 4)
    params = {"deg": cap, "N": list(_ns(bounds))}
    for n in _ns(bounds):
        for ep in combinat.partitions_upto(cap, n):
            if not scalars.check_society_identities(ep, n):
                return _fail(name, params, f"eta+={ep} N={n}")
    return _pass(name, params)


def check_reconciliation(bounds: Bounds) -> CheckResult:
    name = "norm.reconciliation"
    cap = min(bounds.deg, 4)
    params = {"deg": cap, "N": list(_ns(bounds))}
    for n in _ns(bounds):
        for ep in combinat.partitions_upto(cap, n):
            if not scalars.check_norm_reconciliation(ep, n):
                return _fail(name, params, f"eta+={ep} N={n}")
    return _pass(name, params)


# ---------------------------------------------------------------------------
# kernel decompositions and binomial expansions
# ---------------------------------------------------------------------------

def check_omega(bounds: Bounds) -> CheckResult:
    name = "omega.decomposition"
    cap = min(bounds.deg, 3)
    params = {"D": cap, "N": list(_ns(bounds))}
    for n in _ns(bounds):
        if not jack.check_omega_decomposition(n, cap):
            return _fail(name, params, f"N={n} D={cap}")
    return _pass(name, params)


def check_omega_pairing(bounds: Bounds) -> CheckResult:
    name = "omega.pairing-diagonal"
    cap = min(bounds.deg, 3)
    params = {"D": cap, "N": list(_ns(bounds))}
    for n in _ns(bounds):
        for eta in combinat.compositions_upto(cap, n):
            try:
                u = oracle.u_from_series(eta, n, cap)
            except ArithmeticError as exc:
                return _fail(name, params, f"eta={eta} N={n}: {exc}")
            if u != scalars.u_eta(eta):
                return _fail(name, params,
                             f"eta={eta} N={n}: {u} != {scalars.u_eta(eta)}")
    return _pass(name, params)


def check_pi(bounds: Bounds) -> CheckResult:
    name = "pi.decomposition"
    cap = min(bounds.deg, 3)
    params = {"D": cap, "N": list(_ns(bounds))}
    for n in _ns(bounds):
        if not jack.check_pi_decomposition(n, cap):
            return _fail(name, params, f"N={n} D={cap}")
    return _pass(name, params)


def check_v_stability(bounds: Bounds) -> CheckResult:
    name = "pi.v-stability"
    cap = min(bounds.deg, 3)
    params = {"D": cap, "N": "2 vs 3"}
    for kappa in combinat.partitions_upto(cap, 2):
        kk = tuple(p for p in kappa if p) or (0,)
        v2 = oracle.v_from_series(kk, 2, cap)
        v3 = oracle.v_from_series(kk, 3, cap)
        if v2 != v3:
            return _fail(name, params, f"kappa={kk}: {v2} (N=2) != {v3} (N=3)")
        target = scalars.v_kappa(tuple(kk) + (0,) * (2 - len(kk)))
        if v2 != target:
            return _fail(name, params, f"kappa={kk}: {v2} != d'/h = {target}")
    return _pass(name, params)


def check_binomial_E(bounds: Bounds) -> CheckResult:
    name = "binomial.nonsymmetric"
    cap = min(bounds.deg, 3)
    params = {"D": cap, "N": list(_ns(bounds)), "r": [str(r) for r in bounds.rs]}
    for n in _ns(bounds):
        for r in bounds.rs:
            if not jack.check_binomial(r, n, cap, "bi2"):
                return _fail(name, params, f"N={n} r={r}")
    return _pass(name, params)


def check_binomial_P(bounds: Bounds) -> CheckResult:
    name = "binomial.symmetric"
    cap = min(bounds.deg, 3)
    params = {"D": cap, "N": list(_ns(bounds)), "r": [str(r) for r in bounds.rs]}
    for n in _ns(bounds):
        for r in bounds.rs:
            if not jack.check_binomial(r, n, cap, "bi3"):
                return _fail(name, params, f"N={n} r={r}")
    return _pass(name, params)


def check_cauchy(bounds: Bounds) -> CheckResult:
    from .polyalg import check_cauchy_alternant
    name = "cauchy.double-alternant"
    cap = min(bounds.deg, 3)
    params = {"D": cap, "N": list(_ns(bounds))}
    for n in _ns(bounds):
        if not check_cauchy_alternant(n, cap):
            return _fail(name, params, f"N={n}")
    return _pass(name, params)


# ---------------------------------------------------------------------------
# constant-term oracle checks
# ---------------------------------------------------------------------------

def check_E_ct(bounds: Bounds) -> CheckResult:
    name = "E.norm-orthogonality.ct"
    cap = min(bounds.deg, 4)
    params = {"deg": cap, "N": list(_ns(bounds)), "k": list(bounds.ks)}
    for n in _ns(bounds):
        for k in bounds.ks:
            a0 = Fraction(1, k)
            for d in range(cap + 1):
                comps = list(combinat.compositions(d, n))
                spec = {e: jack.build_E(e).specialize(a0) for e in comps}
                for idx, e1 in enumerate(comps):
                    got = oracle.ct_norm_ratio(spec[e1], n, k)
                    want = scalars.norm_ratio_E(e1).eval_at(a0)
                    if got != want:
                        return _fail(name, params,
                                     f"eta={e1} k={k}: ct {got} != {want}")
                    for e2 in comps[idx + 1:]:
                        pair = oracle.ct_inner_product(spec[e1], spec[e2], n, k)
                        if pair != 0:
                            return _fail(name, params,
                                         f"<E_{e1}, E_{e2}> = {pair} at k={k}")
    return _pass(name, params)


def check_P_ct(bounds: Bounds) -> CheckResult:
    name = "P.norm-orthogonality.ct"
    cap = min(bounds.deg, 4)
    params = {"deg": cap, "N": list(_ns(bounds)), "k": list(bounds.ks)}
    for n in _ns(bounds):
        for k in bounds.ks:
            a0 = Fraction(1, k)
            for d in range(cap + 1):
                parts = list(combinat.partitions(d, n))
                spec = {p: jack.build_P(p, n).specialize(a0) for p in parts}
                for idx, p1 in enumerate(parts):
                    got = oracle.ct_norm_ratio(spec[p1], n, k)
                    want = scalars.norm_ratio_P(p1).eval_at(a0)
                    if got != want:
                        return _fail(name, params,
                                     f"kappa={p1} k={k}: ct {got} != {want}")
                    for p2 in parts[idx + 1:]:
                        pair = oracle.ct_inner_product(spec[p1], spec[p2], n, k)
                        if pair != 0:
                            return _fail(name, params,
                                         f"<P_{p1}, P_{p2}> = {pair} at k={k}")
    return _pass(name, params)


def check_S_ct(bounds: Bounds) -> CheckResult:
    """Anti-symmetric norms at the desk-scale point: the weight-2 norm of S
    at parameter 1 equals the weight-4 norm of the shifted P, and both match
    their closed forms; the weight-normalization bridge is the staircase
    ratio."""
    name = "S.norm.ct"
    params = {"eta+": [(0, 0), (1, 0)], "alpha": 1, "k": [1, 2]}
    if 1 not in bounds.ks or 2 not in bounds.ks:
        return _skip(name, params, "needs k in {1,2}")
    n = 2
    sh = alpha_shift()
    for ep in [(0, 0), (1, 0)]:
        rho_plus = tuple(p + d for p, d in zip(ep, combinat.staircase(n)))
        s_spec = jack.build_S(rho_plus).specialize(Fraction(1))
        p_spec = jack.build_P(ep, n, shift_param=True).specialize(Fraction(1))
        lhs = oracle.ct_inner_product(s_spec, s_spec, n, 1)
        rhs = oracle.ct_inner_product(p_spec, p_spec, n, 2)
        if lhs != rhs:
            return _fail(name, params, f"eta+={ep}: <S,S>={lhs} != <P,P>={rhs}")
        rho_r = combinat.reverse_partition(rho_plus)
        white = (math.factorial(n) * scalars.const_dp(rho_r) * scalars.const_e(rho_plus)
                 / (scalars.const_d(rho_plus) * scalars.const_ep(rho_plus))).eval_at(1)
        if oracle.ct_norm_ratio(s_spec, n, 1) != white:
            return _fail(name, params, f"eta+={ep}: white ratio mismatch")
        black = (scalars.const_b(ep, sh) * scalars.const_dp(ep, sh)
                 / (scalars.const_ep(ep, sh) * scalars.const_h(ep, sh))).eval_at(1)
        if oracle.ct_norm_ratio(p_spec, n, 2) != black:
            return _fail(name, params, f"eta+={ep}: black ratio mismatch")
    one = {(0,) * n: Fraction(1)}
    bridge = (oracle.ct_inner_product(one, one, n, 2)
              / oracle.ct_inner_product(one, one, n, 1))
    target = (math.factorial(n) * scalars.staircase_norm_ratio(n)).eval_at(1)
    if bridge != target:
        return _fail(name, params, f"weight bridge {bridge} != {target}")
    return _pass(name, params)


def check_oracle_E(bounds: Bounds) -> CheckResult:
    name = "oracle.E-linear-solve"
    params = {"sweep": _eigen_sweep(bounds), "alpha0": ["2", "3", "7/2"]}
    for n, cap in _eigen_sweep(bounds):
        for eta in combinat.compositions_upto(cap, n):
            for a0 in (Fraction(2), Fraction(3), Fraction(7, 2)):
                try:
                    got = oracle.solve_E_linear(eta, a0)
                except oracle.EigenvalueCollision:
                    _, got = oracle.solve_E_auto(eta)
                want = jack.build_E(eta).specialize(a0)
                if got != want:
                    return _fail(name, params,
                                 f"eta={eta} alpha0={a0}: {got} != {want}")
    return _pass(name, params)


def check_oracle_P(bounds: Bounds) -> CheckResult:
    name = "oracle.P-gram-schmidt"
    cap = min(bounds.deg, 4)
    params = {"deg": cap, "N": list(_ns(bounds)), "k": list(bounds.ks)}
    for n in _ns(bounds):
        for kappa in combinat.partitions_upto(cap, n):
            kk = tuple(p for p in kappa if p) or (0,)
            for k in bounds.ks:
                got = oracle.gram_schmidt_P(kk, n, k)
                want = jack.build_P(kappa, n).specialize(Fraction(1, k))
                if got != want:
                    return _fail(name, params,
                                 f"kappa={kappa} N={n} k={k}: {got} != {want}")
    return _pass(name, params)


# ---------------------------------------------------------------------------
# negative controls: every detector must reject a perturbed input
# ---------------------------------------------------------------------------

def _corrupt(f: MultiPoly) -> MultiPoly:
    """Add 1 to the lexicographically first coefficient."""
    e, c = f.lead_term()
    terms = dict(f.terms)
    terms[e] = c + ONE
    return MultiPoly(f.nvars, terms)


def check_negative_controls(bounds: Bounds) -> CheckResult:
    name = "negative.controls"
    params = {"perturbation": "+1 on one coefficient"}
    controls = []

    e21 = jack.build_E((2, 1))
    controls.append(("eigen", not jack.eigen_ok(_corrupt(e21), (2, 1))))

    lead_scaled = e21.scale(AlphaRational.from_fraction(2))
    controls.append(("triangular", not jack.triangular_ok(lead_scaled, (2, 1))))

    p21 = jack.build_P((2, 1), 2)
    controls.append(("P-properties", not jack.p_properties_ok(_corrupt(p21), (2, 1))))

    ones_bad = _corrupt(jack.build_E((1, 0))).eval_ones() == scalars.eval_E_at_ones((1, 0))
    controls.append(("at-ones", not ones_bad))

    bad = dict(jack.build_E((1, 0)).specialize(Fraction(1)))
    bad[(0, 1)] = bad[(0, 1)] + 1
    ct_norm_bad = oracle.ct_norm_ratio(bad, 2, 1) == scalars.norm_ratio_E((1, 0)).eval_at(1)
    controls.append(("ct-norm", not ct_norm_bad))

    other = jack.build_E((0, 1)).specialize(Fraction(1))
    controls.append(("ct-orthogonality",
                     oracle.ct_inner_product(bad, other, 2, 1) != 0))

    acc = jack.omega_sum(2, 2)
    e10 = jack.build_E((1, 0))
    acc = acc.add_outer(e10, e10, ONE)  # double-count one diagonal term
    from .polyalg import omega_truncated
    controls.append(("omega", acc != omega_truncated(2, 2)))

    controls.append(("binomial", not _binomial_with_shifted_r()))

    s = jack.build_S((2, 0))
    from .polyalg import antisymmetrize, exact_scalar_ratio
    a = antisymmetrize(jack.build_E((2, 0)))
    controls.append(("asym-proportional", exact_scalar_ratio(_corrupt(a), s) is None))

    sol = dict(oracle.solve_E_linear((1, 0), Fraction(2)))
    sol[(0, 1)] = sol[(0, 1)] + 1
    controls.append(("oracle-solve", sol != jack.build_E((1, 0)).specialize(Fraction(2))))

    gs = dict(oracle.gram_schmidt_P((2,), 2, 1))
    gs[(1, 1)] = gs[(1, 1)] + 1
    controls.append(("oracle-gram", gs != jack.build_P((2, 0), 2).specialize(Fraction(1))))

    failures = [label for label, detected in controls if not detected]
    if failures:
        return _fail(name, params, f"undetected perturbations: {failures}")
    params["controls"] = [label for label, _ in controls]
    return _pass(name, params)


def _binomial_with_shifted_r() -> bool:
    """bi2 with the scalar side evaluated at r+1: must not match."""
    r = Fraction(2)
    from . import combinat as cb
    from .polyalg import binomial_series
    n, cap = 2, 2
    lhs = jack._one_variable_product(binomial_series(r, cap), n, cap)
    rhs = MultiPoly.zero(n)
    for eta in cb.compositions_upto(cap, n):
        kappa = cb.sort_to_partition(eta)
        coeff = (ALPHA ** sum(eta) * scalars.gen_factorial(r + 1, kappa)
                 / (scalars.u_eta(eta) * scalars.const_d(eta)))
        rhs = rhs + jack.build_E(eta).scale(coeff)
    return lhs == rhs


# ---------------------------------------------------------------------------
# registry and runner
# ---------------------------------------------------------------------------

CHECKS = {
    "E.eigen-triangular": check_E_eigen_triangular,
    "E.value-at-ones": check_E_at_ones,
    "E.swap-action": check_s_action,
    "xi.commutation": check_xi_commutation,
    "divided-difference.multiply-back": check_divided_difference,
    "P.symmetric-eigen-dominance": check_P_properties,
    "P.two-routes": check_pe_vs_sym,
    "P.stability": check_P_stability,
    "sym.proportionality": check_sym_proportionality,
    "P.value-and-hook": check_hook,
    "asym.proportionality": check_asym,
    "asym.c-closed-forms": check_c_forms,
    "asym.du-expansion": check_du,
    "society.identities": check_society,
    "norm.reconciliation": check_reconciliation,
    "omega.decomposition": check_omega,
    "omega.pairing-diagonal": check_omega_pairing,
    "pi.decomposition": check_pi,
    "pi.v-stability": check_v_stability,
    "binomial.nonsymmetric": check_binomial_E,
    "binomial.symmetric": check_binomial_P,
    "cauchy.double-alternant": check_cauchy,
    "E.norm-orthogonality.ct": check_E_ct,
    "P.norm-orthogonality.ct": check_P_ct,
    "S.norm.ct": check_S_ct,
    "oracle.E-linear-solve": check_oracle_E,
    "oracle.P-gram-schmidt": check_oracle_P,
    "negative.controls": check_negative_controls,
}


def _run_one(args):
    key, bounds = args
    fn = CHECKS[key]
    start = time.perf_counter()
    try:
        result = fn(bounds)
    except Exception as exc:  # a crash is a failing check, not a crash of the run
        result = CheckResult(key, {}, "fail", f"exception: {exc!r}")
    result.seconds = time.perf_counter() - start
    return result


def run_checks(bounds: Bounds = None, name_filter: str = None, jobs: int = 1) -> VerifyReport:
    bounds = bounds or Bounds()
    keys = sorted(CHECKS)
    if name_filter:
        keys = [k for k in keys if name_filter in k]
    work = [(k, bounds) for k in keys]
    if jobs > 1 and len(work) > 1:
        import concurrent.futures
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, work))
    else:
        results = [_run_one(w) for w in work]
    results.sort(key=lambda r: r.name)
    return VerifyReport(results)
