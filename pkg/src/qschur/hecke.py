"""The finite Hecke algebra H_ell(q^2) in the sigma_w basis.

Elements are sparse maps Perm -> Scalar.  Multiplication uses the standard
recursion on reduced words: sigma_w * sigma_i equals sigma_{w tau_i} when the
length goes up, and (q^2 - 1) sigma_w + q^2 sigma_{w tau_i} when it goes
down.  The only Kazhdan-Lusztig elements needed downstream are the C_{w_pi}
attached to longest elements of parabolic subgroups, where every KL
polynomial is 1, so no KL recursion lives here.
"""

from __future__ import annotations

from .scalars import Scalar, ScalarContext
from .symgroup import (
    Perm,
    block_join,
    check_partition,
    elements_of_parabolic,
    parabolic_longest,
)


class HeckeElt:
    """An element of H_ell(q^2), sparse over the sigma_w basis."""

    __slots__ = ("ctx", "ell", "terms")

    def __init__(self, ctx: ScalarContext, ell: int, terms=None):
        self.ctx = ctx
        self.ell = ell
        self.terms: dict[Perm, Scalar] = terms if terms is not None else {}

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(ctx, ell) -> "HeckeElt":
        return HeckeElt(ctx, ell)

    @staticmethod
    def one(ctx, ell) -> "HeckeElt":
        return HeckeElt(ctx, ell, {Perm.identity(ell): ctx.one})

    @staticmethod
    def basis(ctx, w: Perm) -> "HeckeElt":
        return HeckeElt(ctx, w.ell, {w: ctx.one})

    @staticmethod
    def sigma(ctx, ell, i) -> "HeckeElt":
        return HeckeElt.basis(ctx, Perm.transposition(ell, i))

    def _check(self, other: "HeckeElt"):
        if self.ell != other.ell:
            raise ValueError("Hecke elements of different sizes")
        if self.ctx is not other.ctx:
            raise ValueError("Hecke elements from different contexts")

    # -- linear structure -------------------------------------------------------

    def _add_term(self, w: Perm, c: Scalar):
        s = self.terms.get(w)
        if s is None:
            if not c.is_zero():
                self.terms[w] = c
        else:
            s = s + c
            if s.is_zero():
                del self.terms[w]
            else:
                self.terms[w] = s

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        self._check(other)
        out = HeckeElt(self.ctx, self.ell, dict(self.terms))
        for w, c in other.terms.items():
            out._add_term(w, c)
        return out

    def __neg__(self) -> "HeckeElt":
        return HeckeElt(self.ctx, self.ell, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + (-other)

    def scale(self, c) -> "HeckeElt":
        if not isinstance(c, Scalar):
            c = self.ctx.scalar(c)
        if c.is_zero():
            return HeckeElt.zero(self.ctx, self.ell)
        return HeckeElt(self.ctx, self.ell, {w: c * v for w, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.ell == other.ell and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    # -- multiplication -----------------------------------------------------------

    def times_sigma(self, i: int) -> "HeckeElt":
        """Right multiplication by sigma_i."""
        ctx = self.ctx
        q2 = ctx.q_power(2)
        q2m1 = q2 - ctx.one
        out = HeckeElt(ctx, self.ell)
        for w, c in self.terms.items():
            wt = w.times_tau(i)
            if w.has_right_descent(i):
                out._add_term(w, c * q2m1)
                out._add_term(wt, c * q2)
            else:
                out._add_term(wt, c)
        return out

    def times_sigma_inv(self, i: int) -> "HeckeElt":
        """Right multiplication by sigma_i^{-1} = q^{-2} sigma_i - (1 - q^{-2})."""
        ctx = self.ctx
        q2inv = ctx.q_power(-2)
        out = self.times_sigma(i).scale(q2inv)
        return out - self.scale(ctx.one - q2inv)

    def __mul__(self, other):
        if isinstance(other, Scalar) or isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, HeckeElt):
            return NotImplemented
        self._check(other)
        out = HeckeElt.zero(self.ctx, self.ell)
        for v, c in other.terms.items():
            cur = self
            for i in v.reduced_word():
                cur = cur.times_sigma(i)
            for w, d in cur.terms.items():
                out._add_term(w, d * c)
        return out

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def coeff(self, w: Perm) -> Scalar:
        return self.terms.get(w, self.ctx.zero)

    def support(self) -> set:
        return set(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms):
            word = ",".join(str(i) for i in w.reduced_word()) or "e"
            bits.append(f"({self.terms[w]}) * s[{word}]")
        return " + ".join(bits)

    def to_json(self) -> list:
        return [
            {"perm": w.one_line(), "scalar": str(c)}
            for w, c in sorted(self.terms.items(), key=lambda t: t[0])
        ]


def kl_parabolic_element(ctx: ScalarContext, parts, ell=None) -> HeckeElt:
    """The Kazhdan-Lusztig element C_{w_pi} for a parabolic longest element.

    C_{w_pi} = q^{len(w_pi)} * sum over w' in the parabolic subgroup of
    (-1)^{len(w_pi) - len(w')} q^{-2 len(w')} sigma_{w'}; the sum ranges over
    the whole parabolic because exactly its elements are Bruhat-below w_pi,
    and all their KL polynomials are 1.  For a single transposition this is
    C_i = q^{-1} sigma_i - q.
    """
    parts = check_partition(parts, ell)
    total = sum(parts)
    wpi = parabolic_longest(parts)
    L = wpi.length()
    out = HeckeElt.zero(ctx, total)
    for w in elements_of_parabolic(parts):
        lw = w.length()
        c = ctx.q_power(L - 2 * lw)
        if (L - lw) % 2:
            c = -c
        out._add_term(w, c)
    return out


def iota_embed(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    """The multiplicative embedding H_l1 (x) H_l2 -> H_{l1+l2}.

    sigma_i in the first factor stays sigma_i; sigma_i in the second becomes
    sigma_{i+l1}.  On basis elements this is sigma_u (x) sigma_v ->
    sigma_{u x v}, which is multiplicative because lengths add.
    """
    if a.ctx is not b.ctx:
        raise ValueError("Hecke elements from different contexts")
    out = HeckeElt.zero(a.ctx, a.ell + b.ell)
    for u, c in a.terms.items():
        for v, d in b.terms.items():
            out._add_term(block_join(u, v), c * d)
    return out
