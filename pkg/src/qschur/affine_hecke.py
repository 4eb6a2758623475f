"""The affine Hecke algebra in Bernstein normal form, and its modules.

An element is a sparse map (alpha, w) -> Scalar representing
sum c_{alpha,w} y^alpha sigma_w, with the Laurent part on the left.  Normal
form is unique, so equality of elements is equality of maps.  Multiplication
straightens with the two-sided moves

    sigma_i y_i     = y_{i+1} sigma_i - (q^2 - 1) y_{i+1}
    sigma_i y_{i+1} = y_i sigma_i     + (q^2 - 1) y_{i+1}
    sigma_i y_i^{-1}     = y_{i+1}^{-1} sigma_i + (q^2 - 1) y_i^{-1}
    sigma_i y_{i+1}^{-1} = y_i^{-1} sigma_i     - (q^2 - 1) y_i^{-1}

(the inverse-variable moves follow from the primary ones by clearing
denominators; the tests confirm each by substituting back into
sigma_i y_i sigma_i = q^2 y_{i+1}).

Modules are finite-dimensional right modules stored as generator action
matrices on row vectors, so action matrices compose in reading order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .linalg import Matrix
from .scalars import Scalar, ScalarContext
from .symgroup import (
    Perm,
    all_perms,
    coset_factorize,
    min_coset_reps,
    split_parabolic,
)
from .hecke import HeckeElt


def _zero_alpha(ell: int) -> tuple:
    return (0,) * ell


class AffHeckeElt:
    """Element of the affine Hecke algebra in Bernstein normal form."""

    __slots__ = ("ctx", "ell", "terms")

    def __init__(self, ctx: ScalarContext, ell: int, terms=None):
        self.ctx = ctx
        self.ell = ell
        self.terms: dict[tuple, Scalar] = terms if terms is not None else {}

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(ctx, ell) -> "AffHeckeElt":
        return AffHeckeElt(ctx, ell)

    @staticmethod
    def one(ctx, ell) -> "AffHeckeElt":
        key = (_zero_alpha(ell), Perm.identity(ell))
        return AffHeckeElt(ctx, ell, {key: ctx.one})

    @staticmethod
    def sigma(ctx, ell, i) -> "AffHeckeElt":
        key = (_zero_alpha(ell), Perm.transposition(ell, i))
        return AffHeckeElt(ctx, ell, {key: ctx.one})

    @staticmethod
    def sigma_perm(ctx, w: Perm) -> "AffHeckeElt":
        key = (_zero_alpha(w.ell), w)
        return AffHeckeElt(ctx, w.ell, {key: ctx.one})

    @staticmethod
    def y(ctx, ell, j, power=1) -> "AffHeckeElt":
        if not 1 <= j <= ell:
            raise ValueError(f"y_{j} out of range for ell={ell}")
        alpha = [0] * ell
        alpha[j - 1] = power
        key = (tuple(alpha), Perm.identity(ell))
        return AffHeckeElt(ctx, ell, {key: ctx.one})

    @staticmethod
    def y_monomial(ctx, alpha) -> "AffHeckeElt":
        alpha = tuple(alpha)
        key = (alpha, Perm.identity(len(alpha)))
        return AffHeckeElt(ctx, len(alpha), {key: ctx.one})

    @staticmethod
    def from_hecke(h: HeckeElt) -> "AffHeckeElt":
        a0 = _zero_alpha(h.ell)
        return AffHeckeElt(h.ctx, h.ell, {(a0, w): c for w, c in h.terms.items()})

    # -- linear structure ---------------------------------------------------------

    def _check(self, other):
        if self.ell != other.ell:
            raise ValueError("elements of different sizes")
        if self.ctx is not other.ctx:
            raise ValueError("elements from different contexts")

    def _add_term(self, key, c: Scalar):
        s = self.terms.get(key)
        if s is None:
            if not c.is_zero():
                self.terms[key] = c
        else:
            s = s + c
            if s.is_zero():
                del self.terms[key]
            else:
                self.terms[key] = s

    def __add__(self, other: "AffHeckeElt") -> "AffHeckeElt":
        self._check(other)
        out = AffHeckeElt(self.ctx, self.ell, dict(self.terms))
        for k, c in other.terms.items():
            out._add_term(k, c)
        return out

    def __neg__(self):
        return AffHeckeElt(self.ctx, self.ell, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "AffHeckeElt":
        if not isinstance(c, Scalar):
            c = self.ctx.scalar(c)
        if c.is_zero():
            return AffHeckeElt.zero(self.ctx, self.ell)
        return AffHeckeElt(self.ctx, self.ell, {k: c * v for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, AffHeckeElt):
            return NotImplemented
        return self.ell == other.ell and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    # -- straightening ---------------------------------------------------------------

    def times_sigma(self, i: int) -> "AffHeckeElt":
        ctx = self.ctx
        q2 = ctx.q_power(2)
        q2m1 = q2 - ctx.one
        out = AffHeckeElt(ctx, self.ell)
        for (alpha, w), c in self.terms.items():
            wt = w.times_tau(i)
            if w.has_right_descent(i):
                out._add_term((alpha, w), c * q2m1)
                out._add_term((alpha, wt), c * q2)
            else:
                out._add_term((alpha, wt), c)
        return out

    def times_sigma_inv(self, i: int) -> "AffHeckeElt":
        ctx = self.ctx
        q2inv = ctx.q_power(-2)
        return self.times_sigma(i).scale(q2inv) - self.scale(ctx.one - q2inv)

    def times_y(self, j: int, power: int = 1) -> "AffHeckeElt":
        """Right multiplication by y_j^{power} (power = +-1 per step)."""
        if power not in (1, -1):
            out = self
            step = 1 if power > 0 else -1
            for _ in range(abs(power)):
                out = out.times_y(j, step)
            return out
        ctx = self.ctx
        out = AffHeckeElt(ctx, self.ell)
        for (alpha, w), c in self.terms.items():
            moved = _sigma_word_times_y(ctx, w, j, power)
            for (beta, u), d in moved.terms.items():
                gamma = tuple(a + b for a, b in zip(alpha, beta))
                out._add_term((gamma, u), c * d)
        return out

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        if not isinstance(other, AffHeckeElt):
            return NotImplemented
        self._check(other)
        out = AffHeckeElt.zero(self.ctx, self.ell)
        for (beta, v), d in other.terms.items():
            cur = self
            for j, bj in enumerate(beta, start=1):
                if bj:
                    cur = cur.times_y(j, bj)
            for i in v.reduced_word():
                cur = cur.times_sigma(i)
            for k, c in cur.terms.items():
                out._add_term(k, c * d)
        return out

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def coeff(self, alpha, w: Perm) -> Scalar:
        return self.terms.get((tuple(alpha), w), self.ctx.zero)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (alpha, w) in sorted(self.terms, key=lambda k: (k[1], k[0])):
            c = self.terms[(alpha, w)]
            ys = ".".join(
                f"y{j+1}^{a}" for j, a in enumerate(alpha) if a
            )
            word = ",".join(str(i) for i in w.reduced_word()) or "e"
            body = (ys + "." if ys else "") + f"s[{word}]"
            bits.append(f"({c}) * {body}")
        return " + ".join(bits)


def straighten_mul(a: AffHeckeElt, b: AffHeckeElt) -> AffHeckeElt:
    """Product in Bernstein normal form (alias for the * operator)."""
    return a * b


def _sigma_word_times_y(ctx: ScalarContext, w: Perm, j: int, s: int) -> AffHeckeElt:
    """Normal form of sigma_w * y_j^s, memoized per context.

    Recursion strips the last letter tau_i of a reduced word of w and pushes
    y_j^s through sigma_i with the straightening moves; every intermediate
    term again has a single-variable Laurent part, so the recursion closes.
    """
    key = ("wy", w.ell, w.images, j, s)
    hit = ctx.cache.get(key)
    if hit is not None:
        return hit
    ell = w.ell
    if w.is_identity():
        out = AffHeckeElt.y(ctx, ell, j, s)
        ctx.cache[key] = out
        return out
    i = w.right_descents()[0]
    wp = w.times_tau(i)
    q2m1 = ctx.q_power(2) - ctx.one
    if j != i and j != i + 1:
        out = _sigma_word_times_y(ctx, wp, j, s).times_sigma(i)
    elif j == i and s == 1:
        a = _sigma_word_times_y(ctx, wp, i + 1, 1)
        out = a.times_sigma(i) - a.scale(q2m1)
    elif j == i + 1 and s == 1:
        a = _sigma_word_times_y(ctx, wp, i, 1)
        b = _sigma_word_times_y(ctx, wp, i + 1, 1)
        out = a.times_sigma(i) + b.scale(q2m1)
    elif j == i and s == -1:
        a = _sigma_word_times_y(ctx, wp, i + 1, -1)
        b = _sigma_word_times_y(ctx, wp, i, -1)
        out = a.times_sigma(i) + b.scale(q2m1)
    else:  # j == i + 1, s == -1
        a = _sigma_word_times_y(ctx, wp, i, -1)
        b = _sigma_word_times_y(ctx, wp, i, -1)
        out = a.times_sigma(i) - b.scale(q2m1)
    ctx.cache[key] = out
    return out


# ---------------------------------------------------------------------------
# Right modules
# ---------------------------------------------------------------------------


@dataclass
class RightModule:
    """A finite-dimensional right module over H_ell(q^2) or its affine cover.

    Generator matrices act on row vectors, so the matrix of a product of
    algebra elements is the product of their matrices in reading order.
    ``kind`` is "H" (finite) or "Hhat" (affine, with y actions present).
    """

    ctx: ScalarContext
    kind: str
    ell: int
    dim: int
    sigma: list  # Matrix for sigma_i, index i-1
    y: Optional[list] = None
    y_inv: Optional[list] = None
    labels: Optional[list] = None

    def __post_init__(self):
        if self.kind not in ("H", "Hhat"):
            raise ValueError(f"unknown algebra kind {self.kind}")
        if self.kind == "Hhat" and (self.y is None or self.y_inv is None):
            raise ValueError("affine module needs y actions")

    def generators(self) -> dict:
        out = {}
        for i, m in enumerate(self.sigma, start=1):
            out[f"s{i}"] = m
        if self.kind == "Hhat":
            for j, m in enumerate(self.y, start=1):
                out[f"y{j}"] = m
            for j, m in enumerate(self.y_inv, start=1):
                out[f"y{j}inv"] = m
        return out

    def action_matrices(self) -> list:
        return list(self.generators().values())

    def sigma_inv(self, i: int) -> Matrix:
        # sigma^{-1} = q^{-2} sigma - (1 - q^{-2})
        ctx = self.ctx
        q2inv = ctx.q_power(-2)
        eye = Matrix.identity(ctx, self.dim)
        return self.sigma[i - 1].scale(q2inv) - eye.scale(ctx.one - q2inv)

    def act_elt(self, elt) -> Matrix:
        """Matrix of a Hecke or affine Hecke element acting on the right."""
        ctx = self.ctx
        out = Matrix.zero(ctx, self.dim, self.dim)
        if isinstance(elt, HeckeElt):
            items = [((_zero_alpha(self.ell), w), c) for w, c in elt.terms.items()]
        else:
            if elt.ell != self.ell:
                raise ValueError("element size does not match module")
            items = list(elt.terms.items())
        for (alpha, w), c in items:
            m = Matrix.identity(ctx, self.dim)
            for j, a in enumerate(alpha, start=1):
                if a > 0:
                    for _ in range(a):
                        m = m * self.y[j - 1]
                elif a < 0:
                    for _ in range(-a):
                        m = m * self.y_inv[j - 1]
            for i in w.reduced_word():
                m = m * self.sigma[i - 1]
            out = out + m.scale(c)
        return out

    def restrict_to_finite(self) -> "RightModule":
        return RightModule(
            self.ctx, "H", self.ell, self.dim, self.sigma, labels=self.labels
        )

    def to_json(self) -> dict:
        gens = {name: m.to_triplets() for name, m in self.generators().items()}
        out = {
            "algebra": self.kind,
            "ell": self.ell,
            "dim": self.dim,
            "generators": gens,
        }
        if self.labels:
            out["labels"] = list(self.labels)
        return out

    @staticmethod
    def from_json(ctx, data) -> "RightModule":
        kind = data["algebra"]
        ell = int(data["ell"])
        dim = int(data["dim"])
        gens = data["generators"]

        def get(name):
            return Matrix.from_triplets(ctx, dim, dim, gens[name])

        sigma = [get(f"s{i}") for i in range(1, ell)]
        y = y_inv = None
        if kind == "Hhat":
            y = [get(f"y{j}") for j in range(1, ell + 1)]
            y_inv = [get(f"y{j}inv") for j in range(1, ell + 1)]
        return RightModule(ctx, kind, ell, dim, sigma, y, y_inv,
                           labels=data.get("labels"))


@dataclass
class RelationReport:
    """Outcome of checking defining relations as exact matrix identities."""

    results: list  # (name, passed: bool, witness position or None)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.results)

    def failures(self) -> list:
        return [name for name, ok, _ in self.results if not ok]

    def to_json(self) -> list:
        return [{"relation": name, "pass": ok} for name, ok, _ in self.results]

    def __repr__(self):
        n = len(self.results)
        bad = self.failures()
        return f"RelationReport({n - len(bad)}/{n} ok" + (
            f", failing: {bad})" if bad else ")"
        )


def _residual(name, m: Matrix, results: list):
    pos = m.first_nonzero()
    results.append((name, pos is None, pos))


def verify_module_relations(mod: RightModule) -> RelationReport:
    """Check every defining relation of the (affine) Hecke algebra on mod."""
    ctx = mod.ctx
    ell = mod.ell
    eye = Matrix.identity(ctx, mod.dim)
    q2 = ctx.q_power(2)
    res: list = []
    sig = mod.sigma
    for i in range(1, ell):
        s = sig[i - 1]
        _residual(f"(s{i}+1)(s{i}-q^2)=0", (s + eye) * (s - eye.scale(q2)), res)
        _residual(f"s{i}*s{i}^-1=1", s * mod.sigma_inv(i) - eye, res)
    for i in range(1, ell - 1):
        a, b = sig[i - 1], sig[i]
        _residual(f"braid(s{i},s{i+1})", a * b * a - b * a * b, res)
    for i in range(1, ell):
        for j in range(i + 2, ell):
            _residual(f"s{i}*s{j}=s{j}*s{i}", sig[i - 1] * sig[j - 1] - sig[j - 1] * sig[i - 1], res)
    if mod.kind == "Hhat":
        ys, yinvs = mod.y, mod.y_inv
        for j in range(1, ell + 1):
            _residual(f"y{j}*y{j}^-1=1", ys[j - 1] * yinvs[j - 1] - eye, res)
        for j in range(1, ell + 1):
            for k in range(j + 1, ell + 1):
                _residual(
                    f"y{j}*y{k}=y{k}*y{j}",
                    ys[j - 1] * ys[k - 1] - ys[k - 1] * ys[j - 1],
                    res,
                )
        for i in range(1, ell):
            for j in range(1, ell + 1):
                if j in (i, i + 1):
                    continue
                _residual(
                    f"y{j}*s{i}=s{i}*y{j}",
                    ys[j - 1] * sig[i - 1] - sig[i - 1] * ys[j - 1],
                    res,
                )
        for i in range(1, ell):
            lhs = sig[i - 1] * ys[i - 1] * sig[i - 1]
            _residual(f"s{i}*y{i}*s{i}=q^2*y{i+1}", lhs - ys[i].scale(q2), res)
    return RelationReport(res)


# ---------------------------------------------------------------------------
# Module constructions
# ---------------------------------------------------------------------------


def hecke_regular_module(ctx: ScalarContext, ell: int) -> RightModule:
    """The right regular representation of H_ell(q^2) on the sigma_w basis."""
    perms = all_perms(ell)
    index = {w: k for k, w in enumerate(perms)}
    q2 = ctx.q_power(2)
    q2m1 = q2 - ctx.one
    sigma = []
    for i in range(1, ell):
        m = Matrix.zero(ctx, len(perms), len(perms))
        for k, w in enumerate(perms):
            wt = w.times_tau(i)
            if w.has_right_descent(i):
                m.add_to_entry(k, k, q2m1)
                m.add_to_entry(k, index[wt], q2)
            else:
                m.add_to_entry(k, index[wt], ctx.one)
        sigma.append(m)
    labels = [w.one_line() for w in perms]
    return RightModule(ctx, "H", ell, len(perms), sigma, labels=labels)


def universal_module(ctx: ScalarContext, avec) -> RightModule:
    """The universal module M_a: quotient by the right ideal (y_j - a_j).

    Dimension ell! with basis the images of the sigma_w; the sigma action is
    right regular, and y_j acts by straightening sigma_w y_j and substituting
    y^alpha -> a^alpha.
    """
    avec = [a if isinstance(a, Scalar) else ctx.scalar(a) for a in avec]
    if any(a.is_zero() for a in avec):
        raise ValueError("universal module needs nonzero parameters")
    ell = len(avec)
    reg = hecke_regular_module(ctx, ell)
    perms = all_perms(ell)
    index = {w: k for k, w in enumerate(perms)}

    def y_matrix(j, s):
        m = Matrix.zero(ctx, len(perms), len(perms))
        for k, w in enumerate(perms):
            nf = _sigma_word_times_y(ctx, w, j, s)
            for (alpha, u), c in nf.terms.items():
                val = c
                for a, av in zip(alpha, avec):
                    if a:
                        val = val * av ** a
                m.add_to_entry(k, index[u], val)
        return m

    y = [y_matrix(j, 1) for j in range(1, ell + 1)]
    y_inv = [y_matrix(j, -1) for j in range(1, ell + 1)]
    return RightModule(
        ctx, "Hhat", ell, len(perms), reg.sigma, y, y_inv, labels=reg.labels
    )


def _induced_generator(M1: RightModule, M2: RightModule, reps, rep_index, gen):
    """Action matrix of one affine generator on the induced module basis.

    Basis (m1 (x) m2 (x) d_k) with flat index (r*dim2 + s)*len(reps) + k.
    sigma_{d_k} * gen is straightened; each normal-form term y^beta sigma_u
    factors as (y^beta sigma_p) * sigma_{d'} with p parabolic, and the
    parabolic/Laurent part folds into M1 (x) M2 through the block embedding.
    """
    ctx = M1.ctx
    l1, l2 = M1.ell, M2.ell
    ell = l1 + l2
    d1, d2 = M1.dim, M2.dim
    K = len(reps)
    out = Matrix.zero(ctx, d1 * d2 * K, d1 * d2 * K)
    for k, d in enumerate(reps):
        elt = AffHeckeElt.sigma_perm(ctx, d)
        kindname, idx = gen
        if kindname == "s":
            elt = elt.times_sigma(idx)
        else:
            elt = elt.times_y(idx[0], idx[1])
        # group terms by target coset rep
        blocks: dict[int, Matrix] = {}
        for (beta, u), c in elt.terms.items():
            p, dprime = coset_factorize(u, l1, l2)
            p1, p2 = split_parabolic(p, l1, l2)
            e1 = AffHeckeElt.y_monomial(ctx, beta[:l1])
            e1 = e1 * AffHeckeElt.sigma_perm(ctx, p1)
            e2 = AffHeckeElt.y_monomial(ctx, beta[l1:])
            e2 = e2 * AffHeckeElt.sigma_perm(ctx, p2)
            a1 = M1.act_elt(e1)
            a2 = M2.act_elt(e2)
            kp = rep_index[dprime]
            piece = a1.kron(a2).scale(c)
            blocks[kp] = blocks.get(kp, Matrix.zero(ctx, d1 * d2, d1 * d2)) + piece
        for kp, piece in blocks.items():
            for rs, row in enumerate(piece.rows):
                orow = out.rows[rs * K + k]
                for rs2, v in row.items():
                    tgt = rs2 * K + kp
                    cur = orow.get(tgt)
                    if cur is None:
                        orow[tgt] = v
                    else:
                        cur = cur + v
                        if cur.is_zero():
                            del orow[tgt]
                        else:
                            orow[tgt] = cur
    return out


def zelevinsky_induce(M1: RightModule, M2: RightModule) -> RightModule:
    """The affine Zelevinsky tensor product M1 (.) M2 induced up to ell1+ell2."""
    if M1.kind != "Hhat" or M2.kind != "Hhat":
        raise ValueError("affine induction needs affine modules")
    ctx = M1.ctx
    l1, l2 = M1.ell, M2.ell
    ell = l1 + l2
    reps = min_coset_reps(l1, l2)
    rep_index = {d: k for k, d in enumerate(reps)}
    sigma = [
        _induced_generator(M1, M2, reps, rep_index, ("s", i)) for i in range(1, ell)
    ]
    y = [
        _induced_generator(M1, M2, reps, rep_index, ("y", (j, 1)))
        for j in range(1, ell + 1)
    ]
    y_inv = [
        _induced_generator(M1, M2, reps, rep_index, ("y", (j, -1)))
        for j in range(1, ell + 1)
    ]
    return RightModule(ctx, "Hhat", ell, M1.dim * M2.dim * len(reps), sigma, y, y_inv)


def zelevinsky_induce_finite(M1: RightModule, M2: RightModule) -> RightModule:
    """The finite Zelevinsky tensor product of H-modules."""
    ctx = M1.ctx
    l1, l2 = M1.ell, M2.ell
    ell = l1 + l2
    d1, d2 = M1.dim, M2.dim
    reps = min_coset_reps(l1, l2)
    rep_index = {d: k for k, d in enumerate(reps)}
    K = len(reps)
    sigma = []
    for i in range(1, ell):
        out = Matrix.zero(ctx, d1 * d2 * K, d1 * d2 * K)
        for k, d in enumerate(reps):
            elt = HeckeElt.basis(ctx, d).times_sigma(i)
            for u, c in elt.terms.items():
                p, dprime = coset_factorize(u, l1, l2)
                p1, p2 = split_parabolic(p, l1, l2)
                a1 = M1.act_elt(HeckeElt.basis(ctx, p1))
                a2 = M2.act_elt(HeckeElt.basis(ctx, p2))
                kp = rep_index[dprime]
                piece = a1.kron(a2).scale(c)
                for rs, row in enumerate(piece.rows):
                    for rs2, v in row.items():
                        out.add_to_entry(rs * K + k, rs2 * K + kp, v)
        sigma.append(out)
    return RightModule(ctx, "H", ell, d1 * d2 * K, sigma)


def cherednik_pullback(M: RightModule, a) -> RightModule:
    """Pull a finite Hecke module back to the affine algebra at parameter a.

    y_j acts by a q^{-2(j-1)} sigma_{j-1} ... sigma_2 sigma_1^2 sigma_2 ...
    sigma_{j-1}; the sigma action is untouched.
    """
    ctx = M.ctx
    if not isinstance(a, Scalar):
        a = ctx.scalar(a)
    if a.is_zero():
        raise ValueError("evaluation parameter must be nonzero")
    if M.kind != "H":
        raise ValueError("pullback starts from a finite Hecke module")
    eye = Matrix.identity(ctx, M.dim)
    y = []
    y_inv = []
    for j in range(1, M.ell + 1):
        m = eye
        for i in range(j - 1, 0, -1):
            m = m * M.sigma[i - 1]
        for i in range(1, j):
            m = m * M.sigma[i - 1]
        y.append(m.scale(a * ctx.q_power(-2 * (j - 1))))
        minv = eye
        for i in range(j - 1, 0, -1):
            minv = minv * M.sigma_inv(i)
        for i in range(1, j):
            minv = minv * M.sigma_inv(i)
        y_inv.append(minv.scale(a.inverse() * ctx.q_power(2 * (j - 1))))
    return RightModule(ctx, "Hhat", M.ell, M.dim, M.sigma, y, y_inv, labels=M.labels)


def one_dimensional_module(ctx: ScalarContext, ell: int, sigma_value) -> RightModule:
    """The 1-dim H_ell module sigma_i -> sigma_value (q^2 or -1)."""
    if not isinstance(sigma_value, Scalar):
        sigma_value = ctx.scalar(sigma_value)
    m = Matrix(ctx, 1, 1)
    m.set_entry(0, 0, sigma_value)
    return RightModule(ctx, "H", ell, 1, [m.copy() for _ in range(ell - 1)])


def one_dimensional_affine_module(ctx: ScalarContext, yvals) -> RightModule:
    """The 1-dim affine module of H_1 extensions: ell = len(yvals) must be 1."""
    if len(yvals) != 1:
        raise ValueError("only ell = 1 has unconstrained 1-dim affine modules")
    a = yvals[0] if isinstance(yvals[0], Scalar) else ctx.scalar(yvals[0])
    if a.is_zero():
        raise ValueError("y must act invertibly")
    y = Matrix(ctx, 1, 1)
    y.set_entry(0, 0, a)
    yi = Matrix(ctx, 1, 1)
    yi.set_entry(0, 0, a.inverse())
    return RightModule(ctx, "Hhat", 1, 1, [], [y], [yi])
