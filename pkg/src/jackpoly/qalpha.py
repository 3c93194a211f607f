"""Exact arithmetic in the rational-function field Q(alpha).

Elements are reduced ratios of integer-coefficient polynomials in the
parameter alpha.  Polynomials are stored as tuples of ints, index = power,
with no trailing zeros (the zero polynomial is the empty tuple).  The
canonical form divides out the polynomial gcd and the integer content and
fixes the sign so the denominator has a positive leading coefficient, which
makes equality a plain tuple comparison.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction


# ---------------------------------------------------------------------------
# integer-polynomial helpers (tuples of ints, ascending powers)
# ---------------------------------------------------------------------------

def _trim(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _neg(a):
    return tuple(-c for c in a)


def _sub(a, b):
    return _add(a, _neg(b))


def _mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def _scale(a, k):
    if k == 0:
        return ()
    return tuple(c * k for c in a)


def _content(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _primitive(a):
    """Return (content, primitive part); sign stays on the primitive part."""
    if not a:
        return 0, ()
    c = _content(a)
    return c, tuple(x // c for x in a)


def _pseudo_rem(a, b):
    """Pseudo-remainder of a by b over Z (b nonzero, deg a >= deg b)."""
    db, lb = len(b) - 1, b[-1]
    r = list(a)
    while len(r) - 1 >= db and any(r):
        r = _trim(r)
        if not r or len(r) - 1 < db:
            break
        dr = len(r) - 1
        lr = r[-1]
        r = [c * lb for c in r]
        shift = dr - db
        for i in range(len(b)):
            r[i + shift] -= lr * b[i]
        r = list(_trim(r))
    return _trim(r)


def _gcd(a, b):
    """Polynomial gcd over Z (content included), positive leading coefficient."""
    if not a:
        g = b
    elif not b:
        g = a
    else:
        ca, pa = _primitive(a)
        cb, pb = _primitive(b)
        c = math.gcd(ca, cb)
        while pb:
            r = _pseudo_rem(pa, pb)
            _, r = _primitive(r)
            pa, pb = pb, r
        g = _scale(pa, c)
    if g and g[-1] < 0:
        g = _neg(g)
    return g


def _div_exact(a, b):
    """Exact division a / b over Z; raises if the division is not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    q = [0] * (len(a) - len(b) + 1)
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    for i in range(len(q) - 1, -1, -1):
        coef = r[i + db]
        if coef % lb != 0:
            raise ArithmeticError("inexact polynomial division")
        coef //= lb
        q[i] = coef
        if coef:
            for j, cb in enumerate(b):
                r[i + j] -= coef * cb
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _eval(a, x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(a):
        out = out * x + c
    return out


# ---------------------------------------------------------------------------
# the field
# ---------------------------------------------------------------------------

class AlphaRational:
    """An element of Q(alpha) in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        n = _coerce_poly(num)
        d = _coerce_poly(den)
        # ints/Fractions arrive as (poly, denominator-int) pairs
        n, dn = n
        d, dd = d
        self.num, self.den = _reduce(_scale(n, dd), _scale(d, dn))

    @classmethod
    def _raw(cls, num, den):
        """Internal constructor from already-canonical tuples."""
        self = object.__new__(cls)
        self.num = num
        self.den = den
        return self

    @classmethod
    def from_fraction(cls, q) -> "AlphaRational":
        q = Fraction(q)
        return cls._raw(*_reduce((q.numerator,) if q.numerator else (),
                                 (q.denominator,)))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == (1,)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = _add(_mul(self.num, other.den), _mul(other.num, self.den))
        return AlphaRational._raw(*_reduce(n, _mul(self.den, other.den)))

    __radd__ = __add__

    def __neg__(self):
        return AlphaRational._raw(_neg(self.num), self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = _sub(_mul(self.num, other.den), _mul(other.num, self.den))
        return AlphaRational._raw(*_reduce(n, _mul(self.den, other.den)))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return AlphaRational._raw(*_reduce(_mul(self.num, other.num),
                                           _mul(self.den, other.den)))

    __rmul__ = __mul__

    def inverse(self) -> "AlphaRational":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(alpha)")
        return AlphaRational._raw(*_reduce(self.den, self.num))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- equality -----------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- specialization and substitution ------------------------------------

    def eval_at(self, alpha0) -> Fraction:
        """Exact value at a rational point; raises on a pole."""
        alpha0 = Fraction(alpha0)
        d = _eval(self.den, alpha0)
        if d == 0:
            raise ZeroDivisionError(f"pole at alpha = {alpha0}")
        return _eval(self.num, alpha0) / d

    def substitute(self, image: "AlphaRational") -> "AlphaRational":
        """Compose with alpha -> image, e.g. image = alpha/(alpha+1)."""
        p, q = image.num, image.den
        dn, dd = len(self.num) - 1, len(self.den) - 1
        big = max(dn, dd)
        if big < 0:
            return ZERO

        def lift(coeffs):
            # sum_i c_i p^i q^(big-i), exact in Z[alpha]
            out = ()
            ppow = (1,)
            qpows = [(1,)]
            for _ in range(big):
                qpows.append(_mul(qpows[-1], q))
            for i, c in enumerate(coeffs):
                if c:
                    out = _add(out, _scale(_mul(ppow, qpows[big - i]), c))
                ppow = _mul(ppow, p)
            return out

        new_num = lift(self.num)
        new_den = lift(self.den)
        if not new_den:
            raise ZeroDivisionError("substitution sends the denominator to zero")
        return AlphaRational._raw(*_reduce(new_num, new_den))

    # -- presentation -------------------------------------------------------

    def __str__(self):
        return format_alpha(self)

    def __repr__(self):
        return f"AlphaRational({self.num!r}, {self.den!r})"

    def to_json(self):
        return {"num": list(self.num), "den": list(self.den)}

    @classmethod
    def from_json(cls, obj):
        return cls._raw(*_reduce(_trim(obj["num"]), _trim(obj["den"])))


def _reduce(num, den):
    """Canonical form: coprime over Z, denominator leading coefficient > 0."""
    if not den:
        raise ZeroDivisionError("zero denominator in Q(alpha)")
    if not num:
        return (), (1,)
    g = _gcd(num, den)
    if g != (1,):
        num = _div_exact(num, g)
        den = _div_exact(den, g)
    if den[-1] < 0:
        num, den = _neg(num), _neg(den)
    return num, den


def _coerce_poly(v):
    """Accept int / Fraction / coefficient sequence; return (poly, denom_int)."""
    if isinstance(v, int):
        return ((v,) if v else (), 1)
    if isinstance(v, Fraction):
        return ((v.numerator,) if v.numerator else (), v.denominator)
    if isinstance(v, AlphaRational):
        raise TypeError("pass AlphaRational operands through arithmetic, not the constructor")
    return (_trim(tuple(int(c) for c in v)), 1)


def _coerce(other):
    if isinstance(other, AlphaRational):
        return other
    if isinstance(other, (int, Fraction)):
        return AlphaRational.from_fraction(other)
    return NotImplemented


ZERO = AlphaRational(0)
ONE = AlphaRational(1)
ALPHA = AlphaRational((0, 1))


def alpha_shift() -> AlphaRational:
    """The substituted parameter alpha/(alpha+1)."""
    return AlphaRational._raw((0, 1), (1, 1))


def from_int(n: int) -> AlphaRational:
    return AlphaRational.from_fraction(n)


# ---------------------------------------------------------------------------
# printing and parsing (round-trip canonical strings)
# ---------------------------------------------------------------------------

ALPHA_CHAR = "α"


def format_poly(cs, symbol=ALPHA_CHAR) -> str:
    if not cs:
        return "0"
    parts = []
    for i in range(len(cs) - 1, -1, -1):
        c = cs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            var = symbol if i == 1 else f"{symbol}^{i}"
            body = var if mag == 1 else f"{mag}*{var}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_alpha(x: AlphaRational, symbol=ALPHA_CHAR) -> str:
    if x.den == (1,):
        return format_poly(x.num, symbol)
    return f"({format_poly(x.num, symbol)})/({format_poly(x.den, symbol)})"


_TERM_RE = re.compile(
    r"([+-]?)\s*(\d+)?\s*(?:\*\s*)?(?:(?:α|alpha|a)(?:\^(\d+))?)?\s*"
)


def parse_poly(s: str):
    s = s.strip()
    if s == "0":
        return ()
    coeffs = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {s!r} at offset {pos}")
        sign, mag, power = m.groups()
        has_var = ("α" in m.group(0)) or ("alpha" in m.group(0)) or ("a" in m.group(0))
        if mag is None and not has_var:
            raise ValueError(f"empty term in {s!r}")
        k = int(power) if power else (1 if has_var else 0)
        c = int(mag) if mag is not None else 1
        if sign == "-":
            c = -c
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
        while pos < len(s) and s[pos] == " ":
            pos += 1
    deg = max(coeffs)
    return _trim(tuple(coeffs.get(i, 0) for i in range(deg + 1)))


def parse_alpha(s: str) -> AlphaRational:
    """Inverse of format_alpha on canonical output."""
    s = s.strip()
    if s.startswith("(") and ")/(" in s and s.endswith(")"):
        numtxt, dentxt = s[1:-1].split(")/(", 1)
        return AlphaRational(parse_poly(numtxt), parse_poly(dentxt))
    return AlphaRational(parse_poly(s))
