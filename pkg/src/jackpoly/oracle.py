"""Brute-force cross-checks that never touch the main construction path.

Everything here runs over plain Fraction-coefficient dicts keyed by integer
exponent tuples (negative exponents allowed for the torus weight):

* the torus inner product at integer inverse parameter, realized as a
  Laurent constant term against the fully expanded weight;
* a linear-algebra construction of the non-symmetric polynomials at a
  specialized rational parameter, from the triangular ansatz;
* Gram-Schmidt construction of the symmetric polynomials from monomial
  symmetric functions under the constant-term inner product;
* extraction of the kernel-pairing norms from the truncated kernels by
  exact triangular linear algebra over Q(alpha).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import combinat, jack
from .polyalg import BiPoly, omega_truncated, pi_truncated
from .qalpha import ALPHA, ZERO, AlphaRational


class EigenvalueCollision(ValueError):
    """The specialized eigenvalue vectors fail to separate the ansatz."""


ALPHA0_SEQUENCE = (Fraction(2), Fraction(3), Fraction(5), Fraction(7, 2),
                   Fraction(11, 3), Fraction(13, 2))


# ---------------------------------------------------------------------------
# Fraction-dict polynomial helpers
# ---------------------------------------------------------------------------

def qp_add(f: dict, g: dict) -> dict:
    out = dict(f)
    for e, c in g.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        elif e in out:
            del out[e]
    return out


def qp_scale(f: dict, c: Fraction) -> dict:
    if not c:
        return {}
    return {e: v * c for e, v in f.items()}


def qp_sub(f, g):
    return qp_add(f, qp_scale(g, Fraction(-1)))


def qp_mul(f: dict, g: dict) -> dict:
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            elif e in out:
                del out[e]
    return out


# ---------------------------------------------------------------------------
# the torus weight and constant-term inner product
# ---------------------------------------------------------------------------

_WEIGHT_CACHE: dict = {}


def weight_expand(n: int, k: int) -> dict:
    """Fully expanded prod_{j != l} (1 - z_j/z_l)^k as a Laurent dict."""
    if k < 1:
        raise ValueError("the weight exponent k must be a positive integer")
    cached = _WEIGHT_CACHE.get((n, k))
    if cached is not None:
        return cached
    out = {(0,) * n: Fraction(1)}
    for j in range(n):
        for l in range(n):
            if j == l:
                continue
            e = [0] * n
            e[j], e[l] = 1, -1
            factor = {(0,) * n: Fraction(1), tuple(e): Fraction(-1)}
            for _ in range(k):
                out = qp_mul(out, factor)
    _WEIGHT_CACHE[(n, k)] = out
    return out


def ct_inner_product(f: dict, g: dict, n: int, k: int) -> Fraction:
    """Constant term of f(1/z) g(z) w(z); the common normalization of the
    underlying torus integral cancels in every ratio taken from this."""
    w = weight_expand(n, k)
    total = Fraction(0)
    for mu, cf in f.items():
        for nu, cg in g.items():
            key = tuple(a - b for a, b in zip(mu, nu))
            cw = w.get(key)
            if cw is not None:
                total += cf * cg * cw
    return total


def ct_norm_ratio(f: dict, n: int, k: int) -> Fraction:
    """<f, f> / <1, 1> under the constant-term realization."""
    one = {(0,) * n: Fraction(1)}
    return ct_inner_product(f, f, n, k) / ct_inner_product(one, one, n, k)


# ---------------------------------------------------------------------------
# linear-algebra construction of the non-symmetric polynomials
# ---------------------------------------------------------------------------

def _xi_monomial(exps: tuple, i: int, alpha0: Fraction) -> dict:
    """Apply the i-th first-order operator to a single monomial, working
    directly from its definition with Fraction arithmetic (independent of
    the symbolic operator code)."""
    n = len(exps)
    out = {}

    def bump(e, c):
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        elif e in out:
            del out[e]

    ii = i - 1
    if exps[ii]:
        bump(exps, alpha0 * exps[ii])
    if i > 1:
        bump(exps, Fraction(1 - i))
    for p in range(1, n + 1):
        if p == i:
            continue
        pp = p - 1
        a, b = exps[ii], exps[pp]
        if a == b:
            continue
        # z_m * (monomial - swapped)/(z_i - z_p), m = i for p < i else p
        mult = ii if p < i else pp
        base = list(exps)
        if a > b:
            for t in range(a - b):
                base[ii], base[pp] = a - 1 - t, b + t
                base[mult] += 1
                bump(tuple(base), Fraction(1))
                base[mult] -= 1
        else:
            for t in range(b - a):
                base[ii], base[pp] = a + t, b - 1 - t
                base[mult] += 1
                bump(tuple(base), Fraction(-1))
                base[mult] -= 1
    return out


def _solve_exact(rows, ncols):
    """Gaussian elimination over Q for rows of length ncols+1 (augmented).
    Returns the unique solution vector or None when underdetermined;
    raises on an inconsistent system."""
    mat = [list(r) for r in rows]
    pivots = []
    col = 0
    r = 0
    while col < ncols and r < len(mat):
        piv = next((idx for idx in range(r, len(mat)) if mat[idx][col]), None)
        if piv is None:
            col += 1
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for idx in range(len(mat)):
            if idx != r and mat[idx][col]:
                factor = mat[idx][col]
                mat[idx] = [a - factor * b for a, b in zip(mat[idx], mat[r])]
        pivots.append(col)
        r += 1
        col += 1
    for idx in range(r, len(mat)):
        if not any(mat[idx][:ncols]) and mat[idx][ncols]:
            raise ArithmeticError("inconsistent linear system")
    if len(pivots) < ncols:
        return None
    sol = [Fraction(0)] * ncols
    for row_idx, col_idx in enumerate(pivots):
        sol[col_idx] = mat[row_idx][ncols]
    return sol


def solve_E_linear(eta, alpha0) -> dict:
    """Solve for the unique monic triangular joint eigenfunction at a
    rational parameter value, using only the eigen-equations and exact
    Gaussian elimination.  Raises EigenvalueCollision when the specialized
    spectrum fails to separate the candidate monomials."""
    eta = combinat.as_composition(eta)
    alpha0 = Fraction(alpha0)
    n, m = len(eta), sum(eta)
    comps = [nu for nu in combinat.compositions(m, n)
             if combinat.composition_leq(nu, eta)]
    comps.sort(key=combinat.composition_order_key)
    bars_eta = combinat.eigenvalue_fractions(eta, alpha0)
    for nu in comps:
        if nu != eta and combinat.eigenvalue_fractions(nu, alpha0) == bars_eta:
            raise EigenvalueCollision(
                f"eigenvalues of {nu} and {eta} collide at alpha = {alpha0}")
    index = {nu: t for t, nu in enumerate(comps)}
    ncols = len(comps)

    rows = []
    # normalization: leading coefficient 1
    norm = [Fraction(0)] * (ncols + 1)
    norm[index[eta]] = Fraction(1)
    norm[ncols] = Fraction(1)
    rows.append(norm)

    for i in range(1, n + 1):
        lam = bars_eta[i - 1]
        by_monomial = {}
        for nu in comps:
            applied = _xi_monomial(nu, i, alpha0)
            for mono, c in applied.items():
                by_monomial.setdefault(mono, {})[nu] = c
        for mono, coeffs in by_monomial.items():
            if mono not in index:
                raise ArithmeticError(
                    f"operator left the triangular span at {mono}")
            row = [Fraction(0)] * (ncols + 1)
            for nu, c in coeffs.items():
                row[index[nu]] += c
            row[index[mono]] -= lam
            if any(row[:ncols]):
                rows.append(row)
        sol = _solve_exact(rows, ncols)
        if sol is not None:
            return {nu: sol[index[nu]] for nu in comps if sol[index[nu]]}
    raise EigenvalueCollision(
        f"system for {eta} stayed underdetermined at alpha = {alpha0}")


def solve_E_auto(eta):
    """Walk the fixed parameter sequence until the solve separates."""
    for alpha0 in ALPHA0_SEQUENCE:
        try:
            return alpha0, solve_E_linear(eta, alpha0)
        except EigenvalueCollision:
            continue
    raise EigenvalueCollision(f"no parameter in the fixed sequence works for {eta}")


# ---------------------------------------------------------------------------
# Gram-Schmidt construction of the symmetric polynomials
# ---------------------------------------------------------------------------

def _monomial_symmetric_q(kappa, n: int) -> dict:
    padded = tuple(kappa) + (0,) * (n - len(kappa))
    return {e: Fraction(1) for e in set(itertools.permutations(padded))}


def gram_schmidt_P(kappa, n: int, k: int) -> dict:
    """Orthogonalize the monomial symmetric functions below kappa (in a
    linear extension of dominance) under the constant-term inner product at
    alpha = 1/k; returns the monic result for kappa itself.  Positivity of
    every intermediate norm is asserted, which verifies the leading
    principal minors of the Gram matrix are positive."""
    kappa = combinat.as_partition(kappa)
    kappa = tuple(p for p in kappa if p)
    m = sum(kappa)
    shapes = [mu for mu in combinat.partitions(m, n)
              if combinat.dominance_leq(mu, tuple(kappa) + (0,) * (n - len(kappa)))]
    shapes.sort(key=combinat.dominance_key)
    built = []
    target = tuple(kappa) + (0,) * (n - len(kappa))
    result = None
    for mu in shapes:
        v = _monomial_symmetric_q(mu, n)
        for (w, norm_w) in built:
            c = ct_inner_product(v, w, n, k) / norm_w
            if c:
                v = qp_sub(v, qp_scale(w, c))
        norm_v = ct_inner_product(v, v, n, k)
        if norm_v <= 0:
            raise ArithmeticError(
                f"Gram matrix lost positive definiteness at {mu} (k={k})")
        built.append((v, norm_v))
        if mu == target:
            result = v
    if result is None:
        raise ValueError(f"{kappa} does not fit into {n} variables")
    return result


# ---------------------------------------------------------------------------
# norm extraction from the truncated kernels
# ---------------------------------------------------------------------------

def _solve_upper_unitriangular(mat, rhs_cols, labels):
    """Solve M X = B where M[r][c] is upper unitriangular over the ordered
    labels; mat and rhs are dicts of dicts keyed by label."""
    out = {}
    for col_label, rhs in rhs_cols.items():
        x = {}
        for r in range(len(labels) - 1, -1, -1):
            lr = labels[r]
            acc = rhs.get(lr, ZERO)
            row = mat.get(lr, {})
            for c in range(r + 1, len(labels)):
                lc = labels[c]
                coeff = row.get(lc)
                if coeff is not None and lc in x:
                    acc = acc - coeff * x[lc]
            if acc:
                x[lr] = acc
        out[col_label] = x
    return out


def _kernel_pairing_matrix(kernel: BiPoly, basis_polys: dict, labels) -> dict:
    """Express the bidegree component of the kernel in the outer-product
    basis and return C with kernel = sum C[a][b] f_a(x) f_b(y).

    The basis change matrix M[mono][label] (coefficient of the monomial in
    the polynomial for the label) is unitriangular in the label order, so C
    comes out of two triangular solves: M C M^T = W.
    """
    m_matrix = {}
    for col in labels:
        for mono, c in basis_polys[col].terms.items():
            m_matrix.setdefault(mono, {})[col] = c
    d = sum(labels[0])
    w_cols = {}
    for (xe, ye), c in kernel.bidegree_component(d).items():
        w_cols.setdefault(ye, {})[xe] = c
    # first solve eliminates the x side: rows indexed by y-monomial
    x_solved = _solve_upper_unitriangular(m_matrix, w_cols, labels)
    y_cols = {}
    for ymono, coeffs in x_solved.items():
        for xlab, c in coeffs.items():
            y_cols.setdefault(xlab, {})[ymono] = c
    # second solve eliminates the y side: C[xlabel][ylabel]
    return _solve_upper_unitriangular(m_matrix, y_cols, labels)


def u_from_series(eta, n: int, bound: int) -> AlphaRational:
    """Extract the diagonal norm of the non-symmetric family from the
    truncated kernel by exact linear algebra; asserts the off-diagonal
    pairings vanish."""
    eta = combinat.as_composition(eta)
    d = sum(eta)
    if d > bound:
        raise ValueError(f"|{eta}| exceeds the truncation bound {bound}")
    kernel = omega_truncated(n, bound)
    labels = sorted(combinat.compositions(d, n), key=combinat.composition_order_key)
    basis = {lab: jack.build_E(lab) for lab in labels}
    c = _kernel_pairing_matrix(kernel, basis, labels)
    for xlab, row in c.items():
        for ylab, val in row.items():
            if xlab != ylab and val:
                raise ArithmeticError(
                    f"off-diagonal kernel pairing at ({xlab}, {ylab}): {val}")
    diag = c.get(tuple(eta), {}).get(tuple(eta), ZERO)
    if not diag:
        raise ArithmeticError(f"vanishing diagonal pairing at {eta}")
    return diag.inverse()


def v_from_series(kappa, n: int, bound: int) -> AlphaRational:
    """Symmetric-family counterpart of u_from_series, against the bilinear
    kernel at the plain parameter."""
    kappa = combinat.as_partition(kappa)
    padded = tuple(kappa) + (0,) * (n - len(kappa))
    d = sum(padded)
    if d > bound:
        raise ValueError(f"|{kappa}| exceeds the truncation bound {bound}")
    kernel = pi_truncated(ALPHA, n, n, bound)
    labels = sorted(combinat.partitions(d, n), key=combinat.dominance_key)
    basis = {lab: jack.build_P(lab, n) for lab in labels}
    c = _kernel_pairing_matrix(kernel, basis, labels)
    for xlab, row in c.items():
        for ylab, val in row.items():
            if xlab != ylab and val:
                raise ArithmeticError(
                    f"off-diagonal kernel pairing at ({xlab}, {ylab}): {val}")
    diag = c.get(padded, {}).get(padded, ZERO)
    if not diag:
        raise ArithmeticError(f"vanishing diagonal pairing at {kappa}")
    return diag.inverse()
