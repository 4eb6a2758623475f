"""Exact coefficient field Q(t), with q embedded as a fixed power of t.

Every structure constant in this package lives in the rational function
field Q(t).  A :class:`ScalarContext` fixes the rank ``n`` and the embedding
``q = t^(2(n+1))``, so that the fractional powers ``q^(1/2) = t^(n+1)`` and
``q^(1/(n+1)) = t^2`` needed by the quantum-group side are honest integer
powers of the single variable t.  Nothing is ever approximated: numerators
and denominators are sparse Laurent polynomials with Fraction coefficients,
kept in a canonical reduced form so that equality is literal equality.

A context may instead pin ``t`` to a fixed rational value (the "specialized"
backend).  Scalars then degenerate to plain rationals but flow through the
same code paths, which keeps symbolic and specialized runs bit-identical in
structure.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

Rat = Fraction

# Shared canonical denominator for polynomial scalars.  Never mutated.
_DEN_ONE: dict[int, Fraction] = {0: Fraction(1)}

NumberLike = Union[int, Fraction, "Scalar"]


class ScalarContext:
    """Arithmetic context shared by every scalar of one session.

    ``n`` is the rank (so the quantum group is built on sl_{n+1}) and the
    embedding exponent is ``e = 2(n+1)``: q = t^e.  With ``t0`` set, the
    backend is specialized and t is the fixed rational ``t0`` (never 0 or
    +-1, which keeps q off the roots of unity reachable at desk scale).
    """

    __slots__ = ("n", "e", "t0", "cache", "_zero", "_one")

    def __init__(self, n: int, t0=None):
        if n < 1:
            raise ValueError("rank n must be >= 1")
        self.n = n
        self.e = 2 * (n + 1)
        if t0 is not None:
            t0 = Fraction(t0)
            if t0 == 0 or t0 == 1 or t0 == -1:
                raise ValueError("specialized t must avoid 0, 1, -1")
        self.t0 = t0
        self.cache: dict = {}
        self._zero = Scalar(self, {}, _DEN_ONE)
        self._one = Scalar(self, {0: Fraction(1)}, _DEN_ONE)

    @property
    def zero(self) -> "Scalar":
        return self._zero

    @property
    def one(self) -> "Scalar":
        return self._one

    def scalar(self, x) -> "Scalar":
        """Embed a rational number."""
        x = Fraction(x)
        if x == 0:
            return self._zero
        return Scalar(self, {0: x}, _DEN_ONE)

    def t_power(self, k: int) -> "Scalar":
        """The monomial t^k (a rational value on the specialized backend)."""
        if self.t0 is not None:
            return self.scalar(self.t0 ** k)
        return Scalar(self, {k: Fraction(1)}, _DEN_ONE)

    def q_power(self, r) -> "Scalar":
        """q^r for rational r with r * 2(n+1) integral."""
        m = Fraction(r) * self.e
        if m.denominator != 1:
            raise ValueError(
                f"q^{r} is not representable: needs denominator dividing {self.e}"
            )
        return self.t_power(int(m))

    @property
    def q(self) -> "Scalar":
        return self.q_power(1)

    @property
    def q_half(self) -> "Scalar":
        return self.q_power(Fraction(1, 2))

    def backend_name(self) -> str:
        return "symbolic" if self.t0 is None else f"rational:{self.t0}"

    def __repr__(self):
        return f"ScalarContext(n={self.n}, backend={self.backend_name()})"


def _strip(d: dict) -> dict:
    return {e: c for e, c in d.items() if c}


def _dict_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def _dict_mul(a: dict, b: dict) -> dict:
    if len(a) == 1:
        (ea, ca), = a.items()
        return {ea + eb: ca * cb for eb, cb in b.items()}
    if len(b) == 1:
        (eb, cb), = b.items()
        return {ea + eb: ca * cb for ea, ca in a.items()}
    out: dict[int, Fraction] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e)
            if s is None:
                out[e] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


def _dense(p: dict) -> list:
    """Coefficient list of a genuine polynomial dict (min exponent 0)."""
    deg = max(p)
    out = [Fraction(0)] * (deg + 1)
    for e, c in p.items():
        out[e] = c
    return out


def _dense_trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _dense_rem(a: list, b: list) -> list:
    """Remainder of a by monic-normalized b (b made monic by caller)."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        lead = a[-1]
        if lead:
            da = len(a) - 1
            for i in range(db + 1):
                a[da - db + i] -= lead * b[i]
        a.pop()
    return _dense_trim(a)


def _dense_monic(a: list) -> list:
    lead = a[-1]
    if lead == 1:
        return a
    return [c / lead for c in a]


def _poly_gcd(p: dict, r: dict) -> list:
    """Monic gcd of two polynomial dicts (min exponents 0), as a dense list."""
    a = _dense_monic(_dense_trim(_dense(p)))
    b = _dense_monic(_dense_trim(_dense(r)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _dense_rem(a, b)
        if b:
            b = _dense_monic(b)
    return a


def _dense_div_exact(a: list, b: list) -> dict:
    """Exact quotient a / b as a sparse dict; b monic, remainder must vanish."""
    a = list(a)
    db = len(b) - 1
    q: dict[int, Fraction] = {}
    while len(a) - 1 >= db and a:
        lead = a[-1]
        da = len(a) - 1
        if lead:
            q[da - db] = lead
            for i in range(db + 1):
                a[da - db + i] -= lead * b[i]
        a.pop()
    if _dense_trim(a):
        raise ArithmeticError("non-exact polynomial division")
    return q


def _canon(num: dict, den: dict):
    """Reduce num/den to canonical form.

    The denominator ends up a genuine polynomial with nonzero constant term
    and leading coefficient 1; the numerator absorbs any Laurent shift; the
    two are coprime.  Zero is ({}, 1).
    """
    num = _strip(num)
    den = _strip(den)
    if not den:
        raise ZeroDivisionError("scalar with zero denominator")
    if not num:
        return {}, _DEN_ONE
    dmin = min(den)
    if dmin:
        den = {e - dmin: c for e, c in den.items()}
        num = {e - dmin: c for e, c in num.items()}
    if len(den) == 1:
        c = den[0]
        if c != 1:
            num = {e: v / c for e, v in num.items()}
        return num, _DEN_ONE
    nmin = min(num)
    npoly = {e - nmin: c for e, c in num.items()} if nmin else num
    g = _poly_gcd(npoly, den)
    if len(g) > 1:
        npoly = _dense_div_exact(_dense(npoly), g)
        den = _dense_div_exact(_dense(den), g)
        if len(den) == 1:
            c = den[0]
            num = {e + nmin: v / c for e, v in npoly.items()}
            return num, _DEN_ONE
    lead = den[max(den)]
    if lead != 1:
        den = {e: c / lead for e, c in den.items()}
        npoly = {e: c / lead for e, c in npoly.items()}
    num = {e + nmin: c for e, c in npoly.items()} if nmin else npoly
    return num, den


class Scalar:
    """An element of Q(t) in canonical reduced form.

    Immutable; all operations return fresh values, so scalars are safe to
    share across threads and to reuse inside cached matrices.
    """

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx: ScalarContext, num: dict, den: dict):
        self.ctx = ctx
        self.num = num
        self.den = den

    # -- helpers -----------------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.ctx is not self.ctx:
                raise ValueError("scalars from different contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.scalar(other)
        return NotImplemented  # type: ignore[return-value]

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.den is _DEN_ONE and self.num == {0: 1}

    def __bool__(self):
        return bool(self.num)

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den is _DEN_ONE and o.den is _DEN_ONE:
            return Scalar(self.ctx, _dict_add(self.num, o.num), _DEN_ONE)
        num = _dict_add(_dict_mul(self.num, o.den), _dict_mul(o.num, self.den))
        den = _dict_mul(self.den, o.den)
        num, den = _canon(num, den)
        return Scalar(self.ctx, num, den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ctx, {e: -c for e, c in self.num.items()}, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.num or not o.num:
            return self.ctx._zero
        if self.den is _DEN_ONE and o.den is _DEN_ONE:
            return Scalar(self.ctx, _dict_mul(self.num, o.num), _DEN_ONE)
        num, den = _canon(_dict_mul(self.num, o.num), _dict_mul(self.den, o.den))
        return Scalar(self.ctx, num, den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise ZeroDivisionError("inverse of zero scalar")
        num, den = _canon(self.den, self.num)
        return Scalar(self.ctx, num, den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k == 0:
            return self.ctx._one
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return (
            self.ctx is other.ctx
            and self.num == other.num
            and self.den == other.den
        )

    __hash__ = None  # type: ignore[assignment]

    # -- specialization and inspection --------------------------------------

    def specialize(self, t0) -> Fraction:
        """Exact evaluation at t = t0; raises on a pole."""
        t0 = Fraction(t0)
        if t0 == 0 or t0 == 1 or t0 == -1:
            raise ValueError("specialization point must avoid 0, 1, -1")
        dval = sum((c * t0 ** e for e, c in self.den.items()), Fraction(0))
        if dval == 0:
            raise ZeroDivisionError(f"pole at t = {t0}")
        nval = sum((c * t0 ** e for e, c in self.num.items()), Fraction(0))
        return nval / dval

    def as_t_monomial(self) -> Optional[tuple]:
        """(exponent, coefficient) if this is c * t^k, else None."""
        if self.den is not _DEN_ONE and self.den != _DEN_ONE:
            return None
        if len(self.num) != 1:
            return None
        (e, c), = self.num.items()
        return e, c

    def as_rational(self) -> Optional[Fraction]:
        m = self.as_t_monomial()
        if m is None:
            return Fraction(0) if self.is_zero() else None
        e, c = m
        return c if e == 0 else None

    def as_q_monomial(self) -> Optional[tuple]:
        """(coefficient, integer q-exponent) when the t-exponent divides out."""
        m = self.as_t_monomial()
        if m is None:
            return None
        e, c = m
        if e % self.ctx.e:
            return None
        return c, e // self.ctx.e

    # -- rendering -----------------------------------------------------------

    def _int_cleared(self):
        """(num, den) with integer coefficients, jointly primitive, den lead > 0."""
        from math import gcd, lcm

        denoms = [c.denominator for c in self.num.values()]
        denoms += [c.denominator for c in self.den.values()]
        m = lcm(*denoms) if denoms else 1
        ni = {e: int(c * m) for e, c in self.num.items()}
        di = {e: int(c * m) for e, c in self.den.items()}
        content = 0
        for c in ni.values():
            content = gcd(content, abs(c))
        for c in di.values():
            content = gcd(content, abs(c))
        if content > 1:
            ni = {e: c // content for e, c in ni.items()}
            di = {e: c // content for e, c in di.items()}
        if di and di[max(di)] < 0:
            ni = {e: -c for e, c in ni.items()}
            di = {e: -c for e, c in di.items()}
        return ni, di

    def __str__(self):
        if not self.num:
            return "0"
        ni, di = self._int_cleared()
        ns = _poly_str(ni)
        if di == {0: 1}:
            return ns
        return f"({ns})/({_poly_str(di)})"

    def __repr__(self):
        return f"Scalar({self})"

    def render_q(self) -> str:
        """Render as c*q^m when possible, else fall back to the t form."""
        m = self.as_q_monomial()
        if m is None:
            return str(self)
        c, k = m
        if k == 0:
            return str(c)
        qs = "q" if k == 1 else f"q^{k}"
        if c == 1:
            return qs
        if c == -1:
            return "-" + qs
        return f"{c}*{qs}"


def _poly_str(p: dict) -> str:
    """Human- and parser-friendly rendering of an integer Laurent polynomial."""
    terms = []
    for e in sorted(p, reverse=True):
        c = p[e]
        if e == 0:
            body = str(abs(c))
        else:
            tpow = "t" if e == 1 else f"t^{e}"
            body = tpow if abs(c) == 1 else f"{abs(c)}*{tpow}"
        terms.append(("-" if c < 0 else "+", body))
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _parse_poly(ctx: ScalarContext, s: str) -> dict:
    s = s.strip().replace(" - ", " + -").replace(" + ", "|")
    out: dict[int, Fraction] = {}
    for piece in s.split("|"):
        piece = piece.strip()
        if not piece:
            raise ValueError("empty term in scalar string")
        sign = 1
        if piece.startswith("-"):
            sign = -1
            piece = piece[1:]
        if "*" in piece:
            cs, ts = piece.split("*", 1)
            coeff = Fraction(cs)
        elif piece.startswith("t"):
            coeff = Fraction(1)
            ts = piece
        else:
            coeff = Fraction(piece)
            ts = ""
        if ts:
            if ts == "t":
                exp = 1
            elif ts.startswith("t^"):
                exp = int(ts[2:])
            else:
                raise ValueError(f"bad term {piece!r} in scalar string")
        else:
            exp = 0
        out[exp] = out.get(exp, Fraction(0)) + sign * coeff
    return _strip(out)


def parse_scalar(ctx: ScalarContext, s: str) -> Scalar:
    """Parse the rendering produced by :meth:`Scalar.__str__`."""
    s = s.strip()
    if s == "0":
        return ctx.zero
    if s.startswith("(") and ")/(" in s and s.endswith(")"):
        ns, ds = s[1:-1].split(")/(", 1)
        num = _parse_poly(ctx, ns)
        den = _parse_poly(ctx, ds)
    else:
        num = _parse_poly(ctx, s)
        den = {0: Fraction(1)}
    num, den = _canon(num, den)
    sc = Scalar(ctx, num, den)
    if ctx.t0 is not None:
        # Specialized backend stores plain rationals.
        return ctx.scalar(sc.specialize(ctx.t0))
    return sc


def q_int(ctx: ScalarContext, m: int) -> Scalar:
    """The quantum integer [m]_q = (q^m - q^-m)/(q - q^-1)."""
    num = ctx.q_power(m) - ctx.q_power(-m)
    den = ctx.q - ctx.q_power(-1)
    return num / den


def q_binom(ctx: ScalarContext, m: int, r: int) -> Scalar:
    """Quantum binomial coefficient [m r]_q."""
    if r < 0 or r > m:
        return ctx.zero
    out = ctx.one
    for i in range(r):
        out = out * q_int(ctx, m - i)
    for i in range(1, r + 1):
        out = out / q_int(ctx, i)
    return out
