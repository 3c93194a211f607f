"""Scalar constants and closed-form values attached to composition diagrams.

Every function returns an exact element of Q(alpha).  The six node-product
constants take an optional `alpha` argument so the same products can be
formed at a substituted parameter such as alpha/(alpha+1); the default is
the generator itself.  Empty diagrams give 1 throughout.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import combinat
from .qalpha import ALPHA, ONE, AlphaRational, alpha_shift


def _alpha(alpha):
    return ALPHA if alpha is None else alpha


def const_d(eta, alpha=None) -> AlphaRational:
    a = _alpha(alpha)
    out = ONE
    for s in combinat.diagram_nodes(eta):
        out = out * (a * (s.arm + 1) + (s.leg + 1))
    return out


def const_dp(eta, alpha=None) -> AlphaRational:
    a = _alpha(alpha)
    out = ONE
    for s in combinat.diagram_nodes(eta):
        out = out * (a * (s.arm + 1) + s.leg)
    return out


def const_e(eta, alpha=None) -> AlphaRational:
    a = _alpha(alpha)
    n = len(eta)
    out = ONE
    for s in combinat.diagram_nodes(eta):
        out = out * (a * (s.arm_co + 1) + (n - s.leg_co))
    return out


def const_ep(eta, alpha=None) -> AlphaRational:
    a = _alpha(alpha)
    n = len(eta)
    out = ONE
    for s in combinat.diagram_nodes(eta):
        out = out * (a * (s.arm_co + 1) + (n - 1 - s.leg_co))
    return out


def const_b(eta, alpha=None) -> AlphaRational:
    a = _alpha(alpha)
    n = len(eta)
    out = ONE
    for s in combinat.diagram_nodes(eta):
        out = out * (a * s.arm_co + (n - s.leg_co))
    return out


def const_h(kappa, alpha=None) -> AlphaRational:
    """Hook-type product alpha*a(s) + l(s) + 1; defined for partitions only."""
    if not combinat.is_partition(kappa):
        raise ValueError(f"h is defined for partitions, got {kappa}")
    a = _alpha(alpha)
    out = ONE
    for s in combinat.diagram_nodes(kappa):
        out = out * (a * s.arm + (s.leg + 1))
    return out


CONSTANTS = {
    "d": const_d,
    "dp": const_dp,
    "e": const_e,
    "ep": const_ep,
    "b": const_b,
    "h": const_h,
}


def constant(kind: str, eta, alpha=None) -> AlphaRational:
    try:
        fn = CONSTANTS[kind]
    except KeyError:
        raise ValueError(f"unknown constant kind {kind!r}") from None
    return fn(eta, alpha)


def gen_factorial(u, kappa, alpha=None) -> AlphaRational:
    """Rising-factorial product over the rows of a padded partition:
    prod_j prod_{i=0}^{kappa_j - 1} (u - (j-1)/alpha + i)."""
    a = _alpha(alpha)
    if isinstance(u, (int, Fraction)):
        u = AlphaRational.from_fraction(u)
    ainv = a.inverse()
    out = ONE
    for j, kj in enumerate(kappa, start=1):
        base = u - ainv * (j - 1)
        for i in range(kj):
            out = out * (base + i)
    return out


# ---------------------------------------------------------------------------
# evaluation and norm formulas
# ---------------------------------------------------------------------------

def eval_E_at_ones(eta) -> AlphaRational:
    """Value of the non-symmetric polynomial at z = (1, ..., 1): e/d."""
    return const_e(eta) / const_d(eta)


def norm_ratio_E(eta) -> AlphaRational:
    """Torus-norm ratio of E relative to the constant polynomial: d'e/(de')."""
    return const_dp(eta) * const_e(eta) / (const_d(eta) * const_ep(eta))


def u_eta(eta) -> AlphaRational:
    """Diagonal norm in the kernel pairing for the E family: d'/d."""
    return const_dp(eta) / const_d(eta)


def eval_P_at_ones(kappa) -> AlphaRational:
    """Value of the symmetric polynomial at z = (1, ..., 1): b/h."""
    return const_b(kappa) / const_h(kappa)


def eval_P_at_ones_sym_route(kappa) -> AlphaRational:
    """Same value through the increasing rearrangement: N!/stab(kappa) e/d,
    where stab is the full frequency factorial with zero parts included (the
    zero rows of the padded shape carry no diagram nodes, so their
    permutations must be divided out here)."""
    eta_r = combinat.reverse_partition(kappa)
    n = len(kappa)
    c = Fraction(math.factorial(n), combinat.stabilizer_order(kappa))
    return AlphaRational.from_fraction(c) * const_e(eta_r) / const_d(eta_r)


def norm_ratio_P(kappa) -> AlphaRational:
    """Torus-norm ratio of P relative to the constant polynomial: bd'/(e'h)."""
    return (const_b(kappa) * const_dp(kappa)
            / (const_ep(kappa) * const_h(kappa)))


def norm_ratio_P_sym_route(kappa) -> AlphaRational:
    """The same ratio via the increasing rearrangement."""
    eta_r = combinat.reverse_partition(kappa)
    n = len(kappa)
    c = Fraction(math.factorial(n), combinat.stabilizer_order(kappa))
    return (AlphaRational.from_fraction(c) * const_dp(kappa) * const_e(eta_r)
            / (const_d(eta_r) * const_ep(eta_r)))


def v_kappa(kappa) -> AlphaRational:
    """Diagonal norm in the kernel pairing for the P family: d'/h."""
    return const_dp(kappa) / const_h(kappa)


# ---------------------------------------------------------------------------
# the antisymmetrization constant
# ---------------------------------------------------------------------------

def _check_distinct(rho):
    if not combinat.has_distinct_parts(rho):
        raise ValueError(f"{rho} has repeated parts")


def c_rho(rho, form: str = "rearrangement") -> AlphaRational:
    """The proportionality constant relating the antisymmetrized E to the
    Vandermonde times a parameter-shifted P, in either closed form:
    "rearrangement" uses d'(rho)/d'(rhoR), "shifted-shape" routes through
    the staircase-shifted shape at the substituted parameter.  Both carry
    the global sign (-1)^(N(N-1)/2); see c_rho_resolved for the sign
    convention this package's Asym/Vandermonde choices actually produce."""
    _check_distinct(rho)
    n = len(rho)
    sign = -1 if (n * (n - 1) // 2) & 1 else 1
    if form == "rearrangement":
        rho_r = combinat.reverse_partition(rho)
        return sign * const_dp(rho) / const_dp(rho_r)
    if form == "shifted-shape":
        rho_plus = combinat.sort_to_partition(rho)
        delta = combinat.staircase(n)
        eta_plus = tuple(r - d for r, d in zip(rho_plus, delta))
        if any(p < 0 for p in eta_plus) or not combinat.is_partition(eta_plus):
            raise ValueError(f"{rho}+ minus the staircase is not a partition")
        sh = alpha_shift()
        return (sign * const_dp(rho) / const_d(rho_plus)
                * const_h(eta_plus, sh) / const_dp(eta_plus, sh))
    raise ValueError(f"unknown c_rho form {form!r}")


def c_rho_resolved(rho) -> AlphaRational:
    """The measured constant under this package's conventions: the global
    sign is (-1)^(number of ascending pairs of rho), so a strictly decreasing
    rho gets +1 and its increasing rearrangement gets (-1)^(N(N-1)/2)."""
    _check_distinct(rho)
    sign = -1 if combinat.ascending_pair_count(rho) & 1 else 1
    rho_r = combinat.reverse_partition(rho)
    return sign * const_dp(rho) / const_dp(rho_r)


# ---------------------------------------------------------------------------
# identity checks
# ---------------------------------------------------------------------------

def check_hook_identity(eta) -> bool:
    """h(eta+)/stab(eta+) == d(etaR) / prod_j (alpha*eta+_j + N - j + 1).

    The right side's product runs over all N rows, including empty ones
    whose factors N - j + 1 are matched by the zero-part permutations
    inside stab, not by any diagram node."""
    eta_plus = combinat.sort_to_partition(eta)
    eta_r = combinat.reverse_partition(eta)
    n = len(eta)
    lhs = const_h(eta_plus) / combinat.stabilizer_order(eta_plus)
    denom = ONE
    for j, pj in enumerate(eta_plus, start=1):
        denom = denom * (ALPHA * pj + (n - j + 1))
    rhs = const_d(eta_r) / denom
    return lhs == rhs


def check_P_ones_consistency(kappa) -> bool:
    return eval_P_at_ones(kappa) == eval_P_at_ones_sym_route(kappa)


def check_norm_P_consistency(kappa) -> bool:
    return norm_ratio_P(kappa) == norm_ratio_P_sym_route(kappa)


def staircase_norm_ratio(n: int) -> AlphaRational:
    """e/e' at the staircase: (1/N!) prod_j (j*alpha + N) / (1+alpha)^N."""
    num = ONE
    for j in range(1, n + 1):
        num = num * (ALPHA * j + n)
    return num / ((ALPHA + 1) ** n * math.factorial(n))


def check_society_identities(eta_plus, n: int) -> bool:
    """Three diagram-insertion identities tying the staircase-shifted shape
    rho+ = eta+ + staircase back to eta+ at the substituted parameter."""
    eta_plus = combinat.as_partition(eta_plus)
    if len(eta_plus) != n:
        eta_plus = tuple(eta_plus) + (0,) * (n - len(eta_plus))
    delta = combinat.staircase(n)
    rho_plus = tuple(p + d for p, d in zip(eta_plus, delta))
    rho_r = combinat.reverse_partition(rho_plus)
    sh = alpha_shift()

    lhs1 = const_e(rho_plus) / const_ep(rho_plus)
    rhs1 = (const_e(delta) / const_ep(delta)
            * const_b(eta_plus, sh) / const_ep(eta_plus, sh))
    if lhs1 != rhs1:
        return False

    lhs2 = const_d(rho_plus) / const_dp(rho_r)
    rhs2 = const_h(eta_plus, sh) / const_dp(eta_plus, sh)
    if lhs2 != rhs2:
        return False

    return const_e(delta) / const_ep(delta) == staircase_norm_ratio(n)


def check_norm_reconciliation(eta_plus, n: int) -> bool:
    """The two closed forms of the anti-symmetric norm agree as ratios:
    [bd'/(e'h)](alpha/(alpha+1)) * N! * e_delta/e'_delta equals
    N! * d'(rhoR) e(rho+) / (d(rho+) e'(rho+))."""
    eta_plus = combinat.as_partition(eta_plus)
    if len(eta_plus) != n:
        eta_plus = tuple(eta_plus) + (0,) * (n - len(eta_plus))
    delta = combinat.staircase(n)
    rho_plus = tuple(p + d for p, d in zip(eta_plus, delta))
    rho_r = combinat.reverse_partition(rho_plus)
    sh = alpha_shift()
    fact = math.factorial(n)

    black = (const_b(eta_plus, sh) * const_dp(eta_plus, sh)
             / (const_ep(eta_plus, sh) * const_h(eta_plus, sh)))
    black = black * fact * (const_e(delta) / const_ep(delta))
    white = (fact * const_dp(rho_r) * const_e(rho_plus)
             / (const_d(rho_plus) * const_ep(rho_plus)))
    return black == white
