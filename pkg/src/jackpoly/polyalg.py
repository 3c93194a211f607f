"""Sparse multivariate polynomials over Q(alpha) and the operators on them.

Terms live in a dict keyed by exponent tuples (length = number of
variables); zero coefficients are never stored.  Variable indices in the
operator API are 1-based to match diagram coordinates.  The same class also
serves Laurent-style data (negative exponents) on the oracle side, where
coefficients are plain Fractions; nothing here assumes a coefficient type
beyond field arithmetic and truthiness.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .combinat import perm_sign
from .qalpha import ALPHA, ONE, ZERO, AlphaRational


def _coerce_scalar(c):
    if isinstance(c, AlphaRational):
        return c
    if isinstance(c, (int, Fraction)):
        return AlphaRational.from_fraction(c)
    return None


class MultiPoly:
    """Sparse polynomial in z_1..z_N with Q(alpha) coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    if len(exps) != nvars:
                        raise ValueError(f"exponent {exps} has wrong length for N={nvars}")
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {(0,) * nvars: ONE})

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: _coerce_scalar(c)})

    @classmethod
    def monomial(cls, exps, coeff=ONE):
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, i: int, nvars: int):
        exps = [0] * nvars
        exps[i - 1] = 1
        return cls(nvars, {tuple(exps): ONE})

    # -- ring operations ----------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("ambient variable counts differ")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return MultiPoly._raw(self.nvars, out)

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = -c if s is None else s - c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return MultiPoly._raw(self.nvars, out)

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    c = c1 * c2
                    s = out.get(e)
                    s = c if s is None else s + c
                    if s:
                        out[e] = s
                    elif e in out:
                        del out[e]
            return MultiPoly._raw(self.nvars, out)
        c = _coerce_scalar(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def __rmul__(self, other):
        c = _coerce_scalar(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def scale(self, c):
        if not c:
            return MultiPoly._raw(self.nvars, {})
        return MultiPoly._raw(self.nvars, {e: k * c for e, k in self.terms.items()})

    @classmethod
    def _raw(cls, nvars, terms):
        self = object.__new__(cls)
        self.nvars = nvars
        self.terms = terms
        return self

    # -- queries ------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def coeff(self, exps):
        return self.terms.get(tuple(exps), ZERO)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def lead_term(self):
        """Lexicographically first nonzero term, or None."""
        if not self.terms:
            return None
        e = min(self.terms)
        return e, self.terms[e]

    def truncate(self, degree: int):
        return MultiPoly._raw(self.nvars,
                              {e: c for e, c in self.terms.items() if sum(e) <= degree})

    def eval_ones(self):
        out = ZERO
        for c in self.terms.values():
            out = out + c
        return out

    def map_coeff(self, fn):
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return MultiPoly._raw(self.nvars, out)

    def specialize(self, alpha0) -> dict:
        """Exact Fraction-coefficient dict at a rational parameter value."""
        alpha0 = Fraction(alpha0)
        out = {}
        for e, c in self.terms.items():
            v = c.eval_at(alpha0)
            if v:
                out[e] = v
        return out

    # -- presentation -------------------------------------------------------

    def to_json(self):
        return {"N": self.nvars,
                "terms": [{"exp": list(e), "coeff": c.to_json()}
                          for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, obj):
        terms = {tuple(t["exp"]): AlphaRational.from_json(t["coeff"])
                 for t in obj["terms"]}
        return cls(obj["N"], terms)

    def format(self, symbol="z"):
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            vars_part = "*".join(
                f"{symbol}{i+1}" + (f"^{k}" if k > 1 else "")
                for i, k in enumerate(e) if k)
            cs = str(c)
            if not vars_part:
                chunks.append(cs)
            elif c.is_one():
                chunks.append(vars_part)
            elif (-c).is_one():
                chunks.append(f"-{vars_part}")
            elif c.den == (1,) and len([x for x in c.num if x]) == 1:
                chunks.append(f"{cs}*{vars_part}")
            else:
                chunks.append(f"({cs})*{vars_part}")
        out = chunks[0]
        for ch in chunks[1:]:
            out += f" - {ch[1:]}" if ch.startswith("-") else f" + {ch}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MultiPoly(N={self.nvars}, {self.format()})"


# ---------------------------------------------------------------------------
# variable actions
# ---------------------------------------------------------------------------

def apply_transposition(f: MultiPoly, i: int, p: int) -> MultiPoly:
    """Swap variables z_i and z_p (1-based)."""
    n = f.nvars
    if not (1 <= i <= n and 1 <= p <= n and i != p):
        raise ValueError(f"bad transposition indices ({i},{p}) for N={n}")
    a, b = i - 1, p - 1
    out = {}
    for e, c in f.terms.items():
        if e[a] == e[b]:
            out[e] = out.get(e, ZERO) + c if e in out else c
            continue
        l = list(e)
        l[a], l[b] = l[b], l[a]
        out[tuple(l)] = c
    return MultiPoly._raw(n, out)


def apply_permutation(f: MultiPoly, perm) -> MultiPoly:
    """Substitute variable i by variable perm[i] (0-based images)."""
    out = {}
    n = f.nvars
    for e, c in f.terms.items():
        ne = [0] * n
        for i, k in enumerate(e):
            ne[perm[i]] = k
        key = tuple(ne)
        s = out.get(key)
        out[key] = c if s is None else s + c
    return MultiPoly._raw(n, {e: c for e, c in out.items() if c})


def apply_phi(f: MultiPoly) -> MultiPoly:
    """z_N * f(z_N, z_1, ..., z_{N-1}); shifts exponents cyclically and
    increments the last slot."""
    n = f.nvars
    out = {}
    for e, c in f.terms.items():
        out[e[1:] + (e[0] + 1,)] = c
    return MultiPoly._raw(n, out)


def mul_variable(f: MultiPoly, i: int) -> MultiPoly:
    a = i - 1
    out = {}
    for e, c in f.terms.items():
        out[e[:a] + (e[a] + 1,) + e[a + 1:]] = c
    return MultiPoly._raw(f.nvars, out)


def degree_scale(f: MultiPoly, i: int) -> MultiPoly:
    """The Euler-type action z_i d/dz_i, exponent-weighted termwise."""
    a = i - 1
    out = {}
    for e, c in f.terms.items():
        if e[a]:
            out[e] = c * e[a]
    return MultiPoly._raw(f.nvars, out)


def divided_difference(f: MultiPoly, i: int, p: int) -> MultiPoly:
    """(f - s_ip f)/(z_i - z_p), by the telescoping rule on each monomial.

    For a monomial with exponents (a, b) at the two positions the quotient
    is a geometric bridge: a > b gives sum_t z_i^(a-1-t) z_p^(b+t) for
    0 <= t < a-b, and a < b gives the negated mirror.  No general division
    is ever performed.
    """
    n = f.nvars
    if not (1 <= i <= n and 1 <= p <= n and i != p):
        raise ValueError(f"bad index pair ({i},{p}) for N={n}")
    ii, pp = i - 1, p - 1
    out = {}
    for e, c in f.terms.items():
        a, b = e[ii], e[pp]
        if a == b:
            continue
        base = list(e)
        if a > b:
            for t in range(a - b):
                base[ii] = a - 1 - t
                base[pp] = b + t
                key = tuple(base)
                s = out.get(key)
                s = c if s is None else s + c
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        else:
            for t in range(b - a):
                base[ii] = a + t
                base[pp] = b - 1 - t
                key = tuple(base)
                s = out.get(key)
                s = -c if s is None else s - c
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
    return MultiPoly._raw(n, out)


# ---------------------------------------------------------------------------
# the commuting first-order operators and the symmetric second-order one
# ---------------------------------------------------------------------------

def cherednik_apply(f: MultiPoly, i: int) -> MultiPoly:
    """alpha z_i df/dz_i + sum_{p<i} z_i DD_ip f + sum_{p>i} z_p DD_ip f
    + (1-i) f, where DD_ip is the divided difference for the pair."""
    n = f.nvars
    if not 1 <= i <= n:
        raise ValueError(f"operator index {i} out of range for N={n}")
    out = degree_scale(f, i).scale(ALPHA)
    for p in range(1, n + 1):
        if p == i:
            continue
        dd = divided_difference(f, i, p)
        out = out + mul_variable(dd, i if p < i else p)
    if i > 1:
        out = out + f.scale(AlphaRational.from_fraction(1 - i))
    return out


def is_symmetric(f: MultiPoly) -> bool:
    return all(apply_transposition(f, i, i + 1) == f for i in range(1, f.nvars))


def d2_apply(f: MultiPoly) -> MultiPoly:
    """The second-order symmetric eigenoperator: sum_j z_j^2 d^2/dz_j^2 plus
    (2/alpha) sum over pairs of (z_j^2 d_j - z_k^2 d_k)/(z_j - z_k), defined
    on symmetric input where every pair term is again a polynomial."""
    n = f.nvars
    if not is_symmetric(f):
        raise ValueError("d2_apply requires a symmetric polynomial")
    out = {}
    for e, c in f.terms.items():
        w = 0
        for k in e:
            w += k * (k - 1)
        if w:
            out[e] = c * w
    acc = MultiPoly._raw(n, out)
    two_over_alpha = AlphaRational.from_fraction(2) / ALPHA
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            g = mul_variable(degree_scale(f, j), j)
            acc = acc + divided_difference(g, j, k).scale(two_over_alpha)
    return acc


# ---------------------------------------------------------------------------
# symmetrization, alternants, bases
# ---------------------------------------------------------------------------

def symmetrize(f: MultiPoly) -> MultiPoly:
    out = MultiPoly.zero(f.nvars)
    for perm in itertools.permutations(range(f.nvars)):
        out = out + apply_permutation(f, perm)
    return out


def antisymmetrize(f: MultiPoly) -> MultiPoly:
    out = MultiPoly.zero(f.nvars)
    for perm in itertools.permutations(range(f.nvars)):
        g = apply_permutation(f, perm)
        out = out + g if perm_sign(perm) > 0 else out - g
    return out


def vandermonde(n: int) -> MultiPoly:
    """prod_{j<k} (x_j - x_k)."""
    out = MultiPoly.one(n)
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            out = out * (MultiPoly.variable(j, n) - MultiPoly.variable(k, n))
    return out


def monomial_symmetric(kappa, n: int) -> MultiPoly:
    """Sum of the distinct rearrangements of the exponent vector."""
    kappa = tuple(kappa)
    if len(kappa) > n:
        raise ValueError(f"partition {kappa} longer than N={n}")
    padded = kappa + (0,) * (n - len(kappa))
    terms = {e: ONE for e in set(itertools.permutations(padded))}
    return MultiPoly._raw(n, terms)


def exact_scalar_ratio(f: MultiPoly, g: MultiPoly):
    """The scalar c with f == c*g, or None when f is not a multiple of g."""
    if not g:
        raise ZeroDivisionError("ratio against the zero polynomial")
    if not f:
        return ZERO
    e, gc = g.lead_term()
    fc = f.terms.get(e)
    if fc is None:
        return None
    c = fc / gc
    return c if f == g.scale(c) else None


# ---------------------------------------------------------------------------
# truncated generating kernels
# ---------------------------------------------------------------------------

def binomial_series(c, degree: int) -> list:
    """Coefficients of (1-t)^(-c) through t^degree: c(c+1)...(c+n-1)/n!."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    c = _coerce_scalar(c)
    out = [ONE]
    cur = ONE
    for n in range(1, degree + 1):
        cur = cur * (c + (n - 1)) / n
        out.append(cur)
    return out


class BiPoly:
    """Truncated series in two groups of variables, stored sparsely as
    (x-exponent, y-exponent) -> coefficient with both total degrees <= bound."""

    __slots__ = ("nx", "ny", "bound", "terms")

    def __init__(self, nx, ny, bound, terms=None):
        self.nx = nx
        self.ny = ny
        self.bound = bound
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, nx, ny, bound):
        return cls(nx, ny, bound, {((0,) * nx, (0,) * ny): ONE})

    def __eq__(self, other):
        return (isinstance(other, BiPoly) and self.nx == other.nx
                and self.ny == other.ny and self.terms == other.terms)

    def __sub__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = -c if s is None else s - c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return BiPoly(self.nx, self.ny, self.bound, out)

    def mul_bilinear_series(self, j: int, k: int, coeffs) -> "BiPoly":
        """Multiply by sum_n coeffs[n] (x_j y_k)^n, truncating at the bound."""
        out = {}
        jj, kk = j - 1, k - 1
        for (xe, ye), c in self.terms.items():
            room = self.bound - max(sum(xe), sum(ye))
            for n in range(min(room, len(coeffs) - 1) + 1):
                cn = coeffs[n]
                if not cn:
                    continue
                key = (xe[:jj] + (xe[jj] + n,) + xe[jj + 1:],
                       ye[:kk] + (ye[kk] + n,) + ye[kk + 1:])
                s = out.get(key)
                s = c * cn if s is None else s + c * cn
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return BiPoly(self.nx, self.ny, self.bound, out)

    def mul_split_polys(self, fx: MultiPoly, gy: MultiPoly) -> "BiPoly":
        """Multiply by fx(x) * gy(y), truncating at the bound."""
        out = {}
        for (xe, ye), c in self.terms.items():
            for ex, cx in fx.terms.items():
                nxe = tuple(a + b for a, b in zip(xe, ex))
                if sum(nxe) > self.bound:
                    continue
                for ey, cy in gy.terms.items():
                    nye = tuple(a + b for a, b in zip(ye, ey))
                    if sum(nye) > self.bound:
                        continue
                    key = (nxe, nye)
                    v = c * cx * cy
                    s = out.get(key)
                    s = v if s is None else s + v
                    if s:
                        out[key] = s
                    elif key in out:
                        del out[key]
        return BiPoly(self.nx, self.ny, self.bound, out)

    def add_outer(self, fx: MultiPoly, gy: MultiPoly, coeff) -> "BiPoly":
        """Accumulate coeff * fx(x) * gy(y) (no truncation applied)."""
        out = dict(self.terms)
        for ex, cx in fx.terms.items():
            for ey, cy in gy.terms.items():
                key = (ex, ey)
                v = coeff * cx * cy
                s = out.get(key)
                s = v if s is None else s + v
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return BiPoly(self.nx, self.ny, self.bound, out)

    def asym_x(self) -> "BiPoly":
        """Antisymmetrize over the x variables."""
        out = {}
        for perm in itertools.permutations(range(self.nx)):
            sgn = perm_sign(perm)
            for (xe, ye), c in self.terms.items():
                ne = [0] * self.nx
                for i, v in enumerate(xe):
                    ne[perm[i]] = v
                key = (tuple(ne), ye)
                v = c if sgn > 0 else -c
                s = out.get(key)
                s = v if s is None else s + v
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return BiPoly(self.nx, self.ny, self.bound, out)

    def y_coefficient(self, eta) -> MultiPoly:
        """The x-polynomial multiplying y^eta."""
        eta = tuple(eta)
        if sum(eta) > self.bound:
            raise ValueError(f"|{eta}| exceeds the truncation bound {self.bound}")
        out = {}
        for (xe, ye), c in self.terms.items():
            if ye == eta:
                out[xe] = c
        return MultiPoly(self.nx, out)

    def bidegree_component(self, d: int) -> dict:
        return {k: c for k, c in self.terms.items()
                if sum(k[0]) == d and sum(k[1]) == d}

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json(self):
        return {"Nx": self.nx, "Ny": self.ny, "D": self.bound,
                "terms": [{"xexp": list(x), "yexp": list(y), "coeff": c.to_json()}
                          for (x, y), c in self.sorted_terms()]}


def pi_truncated(param, nx: int, ny: int, bound: int) -> BiPoly:
    """Truncation of prod_{j,k} (1 - x_j y_k)^(-1/param); param may be any
    invertible element of Q(alpha), e.g. alpha or alpha/(alpha+1)."""
    if bound < 0:
        raise ValueError("truncation bound must be >= 0")
    series = binomial_series(_coerce_scalar(param).inverse(), bound)
    out = BiPoly.one(nx, ny, bound)
    for j in range(1, nx + 1):
        for k in range(1, ny + 1):
            out = out.mul_bilinear_series(j, k, series)
    return out


def omega_truncated(n: int, bound: int) -> BiPoly:
    """Truncation of prod_j (1 - x_j y_j)^(-1) prod_{j,k} (1 - x_j y_k)^(-1/alpha)."""
    geo = [ONE] * (bound + 1)
    out = pi_truncated(ALPHA, n, n, bound)
    for j in range(1, n + 1):
        out = out.mul_bilinear_series(j, j, geo)
    return out


def diagonal_kernel_truncated(n: int, bound: int) -> BiPoly:
    """Truncation of prod_j (1 - x_j y_j)^(-1) alone."""
    geo = [ONE] * (bound + 1)
    out = BiPoly.one(n, n, bound)
    for j in range(1, n + 1):
        out = out.mul_bilinear_series(j, j, geo)
    return out


def extract_q_eta(omega: BiPoly, eta) -> MultiPoly:
    """Coefficient x-polynomial of y^eta in the expanded kernel."""
    return omega.y_coefficient(eta)


def check_cauchy_alternant(n: int, bound: int) -> bool:
    """Antisymmetrizing the diagonal kernel over x equals the Vandermonde in
    x times the one in y times the full bilinear kernel at parameter 1,
    through the stated total degree."""
    offset = n * (n - 1) // 2
    big = bound + offset
    lhs = diagonal_kernel_truncated(n, big).asym_x()
    dx = vandermonde(n)
    kernel = pi_truncated(ONE, n, n, big)
    rhs = kernel.mul_split_polys(dx, dx)
    return lhs == rhs
