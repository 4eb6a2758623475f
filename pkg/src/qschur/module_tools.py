"""Generic exact-field module algorithms.

Submodule spinning, a Meataxe-style irreducibility decision with checkable
certificates, isomorphism testing by solving the intertwiner equations, and
characters.  Everything is deterministic given a seed: randomized choices
come from an explicit random.Random, and every verdict is backed by a
certificate that can be re-checked with plain linear algebra.

Left modules (quantum group side) are handled by transposing their action
matrices: invariant subspaces are unchanged, so one right-action code path
serves both sides.
"""

from __future__ import annotations

import random
from typing import Optional

from .linalg import Matrix, SubspaceBasis, column_kernel, left_kernel, span, solve_upper
from .scalars import Scalar, ScalarContext
from fractions import Fraction


def _as_right_action(mod) -> tuple:
    """(ctx, dim, matrices-as-right-action, names) for either module species."""
    from .affine_hecke import RightModule
    from .uq_rep import UqModule

    if isinstance(mod, RightModule):
        gens = mod.generators()
        return mod.ctx, mod.dim, list(gens.values()), list(gens.keys())
    if isinstance(mod, UqModule):
        gens = mod.generators()
        return (
            mod.ctx,
            mod.dim,
            [m.transpose() for m in gens.values()],
            list(gens.keys()),
        )
    raise TypeError(f"not a module: {mod!r}")


def spin(ctx: ScalarContext, ambient: int, mats, vectors) -> SubspaceBasis:
    """Smallest subspace containing the vectors and stable under all mats.

    Right-action convention: a basis row v grows the space by v * M.  The
    result is a fixed point of a full generator sweep.
    """
    basis = SubspaceBasis(ctx, ambient)
    for v in vectors:
        basis.add(v)
    changed = True
    while changed:
        changed = False
        for row in list(basis.rows()):
            for m in mats:
                if basis.add(m.apply_row(row)):
                    changed = True
    return basis


def spin_module(mod, vector) -> SubspaceBasis:
    ctx, dim, mats, _ = _as_right_action(mod)
    return spin(ctx, dim, mats, [vector])


def restrict_to_subspace(mats, basis: SubspaceBasis) -> list:
    """Action matrices on the row-span of basis (which must be stable)."""
    rows = basis.rows()
    out = []
    for m in mats:
        sub = Matrix(m.ctx, basis.dim, basis.dim)
        for r, row in enumerate(rows):
            img = m.apply_row(row)
            coords = solve_upper(basis, img)
            if coords is None:
                raise ValueError("subspace is not stable under the action")
            for c, v in coords.items():
                sub.set_entry(r, c, v)
        out.append(sub)
    return out


def quotient_action(mats, basis: SubspaceBasis) -> tuple:
    """Action on ambient/span(basis) in the free-column coordinates.

    Returns (matrices, free_columns); the class of ambient e_j has
    coordinates reduce(e_j) read off on the free columns.
    """
    ctx = mats[0].ctx if mats else basis.ctx
    free = basis.free_columns()
    pos = {c: k for k, c in enumerate(free)}
    dim = len(free)
    out = []
    for m in mats:
        qm = Matrix(m.ctx, dim, dim)
        for r, c0 in enumerate(free):
            img = m.apply_row({c0: m.ctx.one})
            img = basis.reduce(img)
            for c, v in img.items():
                qm.set_entry(r, pos[c], v)
        out.append(qm)
    return out, free


# ---------------------------------------------------------------------------
# Irreducibility
# ---------------------------------------------------------------------------


def _word_sample(ctx, mats, rng, max_len=4):
    """A random short word in the action matrices with small coefficients."""
    dim = mats[0].nrows
    z = Matrix.zero(ctx, dim, dim)
    for _ in range(rng.randint(1, 3)):
        w = Matrix.identity(ctx, dim)
        for _ in range(rng.randint(1, max_len)):
            w = w * rng.choice(mats)
        z = z + w.scale(ctx.scalar(rng.randint(-2, 2)))
    return z


def _theta_candidates(ctx, mats, names, rng, rounds):
    """Singular-candidate stream.

    Hecke generators are shifted by their two known eigenvalues -1 and q^2
    (forced by the quadratic relation); everything else is shifted by its
    own diagonal entries, which are exact eigenvalues for the diagonal k's
    and good guesses for triangular-ish actions.  Raw generators come first,
    which catches the nilpotent raising/lowering operators immediately.
    """
    eye = Matrix.identity(ctx, mats[0].nrows) if mats else None
    dim = mats[0].nrows

    def shifted(z):
        diag_vals = []
        for i in range(dim):
            c = z.rows[i].get(i)
            if c is not None and all(not (c == d) for d in diag_vals):
                diag_vals.append(c)
        yield z
        for c in diag_vals[:4]:
            yield z - eye.scale(c)

    q2 = ctx.q_power(2)
    for name, m in zip(names, mats):
        if name.startswith("s"):
            yield m + eye
            yield m - eye.scale(q2)
    for m in mats:
        yield from shifted(m)
    for a in mats:
        for b in mats:
            yield from shifted(a * b)
    for _ in range(rounds):
        yield from shifted(_word_sample(ctx, mats, rng))


def _decide_irreducibility(ctx, dim, mats, names, seed, budget):
    """("reducible", vector, SubspaceBasis) or ("irreducible", cert dict)."""
    if dim == 0:
        raise ValueError("empty module")
    if dim == 1:
        return ("irreducible", {"kind": "dimension-one"})
    if not mats:
        # no generators: every line is a submodule
        v = {0: ctx.one}
        return ("reducible", v, span(ctx, dim, [v]))
    rng = random.Random(seed)
    mats_t = None
    tried = 0
    for theta in _theta_candidates(ctx, mats, names, rng, rounds=budget):
        tried += 1
        if tried > budget:
            break
        ker = left_kernel(theta)
        if not ker or len(ker) == dim:
            continue
        for v in ker:
            sub = spin(ctx, dim, mats, [v])
            if sub.dim < dim:
                return ("reducible", v, sub)
        if len(ker) == 1:
            if mats_t is None:
                mats_t = [m.transpose() for m in mats]
            dker = left_kernel(theta.transpose())
            if len(dker) == 1:
                u = dker[0]
                dsub = spin(ctx, dim, mats_t, [u])
                if dsub.dim < dim:
                    # the annihilator of a dual submodule is a submodule
                    comp = _annihilator(ctx, dim, dsub)
                    gen = comp.rows()[0]
                    full = spin(ctx, dim, mats, [gen])
                    return ("reducible", gen, full)
                return ("irreducible", {"kind": "norton", "nullity": 1})
    # density fallback: the unital algebra generated by the action matrices
    alg = _matrix_algebra_closure(ctx, dim, mats)
    if alg.dim == dim * dim:
        return ("irreducible", {"kind": "density", "algebra_dim": alg.dim})
    # algebra is proper: hunt for a submodule via kernels of algebra elements
    for row in alg.rows():
        theta = _unflatten(ctx, dim, row)
        ker = left_kernel(theta)
        if 0 < len(ker) < dim:
            for v in ker:
                sub = spin(ctx, dim, mats, [v])
                if sub.dim < dim:
                    return ("reducible", v, sub)
    # kernels of centralizer elements are submodules outright
    for z in _centralizer_elements(ctx, dim, mats):
        for i in range(dim):
            c = z.rows[i].get(i)
            shift = z if c is None else z - Matrix.identity(ctx, dim).scale(c)
            ker = left_kernel(shift)
            if 0 < len(ker) < dim:
                sub = spin(ctx, dim, mats, [ker[0]])
                if sub.dim < dim:
                    return ("reducible", ker[0], sub)
    raise RuntimeError(
        "irreducibility undecided within budget; raise the budget or the seed"
    )


def _centralizer_elements(ctx, dim, mats):
    """A basis of matrices commuting with the whole action."""
    constraints = SubspaceBasis(ctx, dim * dim)
    for m in mats:
        # entry (r, c) of zm - mz = 0, linear in the entries of z
        for r in range(dim):
            for c in range(dim):
                rowd: dict[int, Scalar] = {}
                for kk in range(dim):
                    a = m.rows[kk].get(c)
                    if a is not None:
                        key = r * dim + kk
                        cur = rowd.get(key)
                        rowd[key] = a if cur is None else cur + a
                for kk, v in m.rows[r].items():
                    key = kk * dim + c
                    cur = rowd.get(key)
                    rowd[key] = -v if cur is None else cur - v
                rowd = {k: v for k, v in rowd.items() if not v.is_zero()}
                if rowd:
                    constraints.add(rowd)
    out = []
    for kv in column_kernel(constraints.to_matrix()):
        out.append(_unflatten(ctx, dim, kv))
    return out


def is_irreducible(mod, seed: int = 0, budget: int = 60) -> tuple:
    """Decide irreducibility; returns (bool, certificate dict).

    Reducible verdicts carry a generating vector of a proper submodule.
    Irreducible verdicts are certified either by a nullity-one Norton check
    (kernel vector and dual kernel vector both spin to everything) or by the
    action algebra spanning the full matrix algebra (density), both of which
    are re-checkable by direct linear algebra.
    """
    ctx, dim, mats, names = _as_right_action(mod)
    verdict = _decide_irreducibility(ctx, dim, mats, names, seed, budget)
    if verdict[0] == "irreducible":
        return True, verdict[1]
    _, v, sub = verdict
    return False, {
        "kind": "submodule",
        "vector": _vec_json(ctx, v, dim),
        "submodule_dim": sub.dim,
    }


def proper_submodule(mod, seed: int = 0, budget: int = 60):
    """A proper nonzero submodule as a SubspaceBasis, or None if irreducible."""
    ctx, dim, mats, names = _as_right_action(mod)
    verdict = _decide_irreducibility(ctx, dim, mats, names, seed, budget)
    if verdict[0] == "irreducible":
        return None
    return verdict[2]


def _annihilator(ctx, dim, basis: SubspaceBasis) -> SubspaceBasis:
    """Vectors v with <v, u> = 0 for all u in the subspace."""
    m = basis.to_matrix()
    return span(ctx, dim, column_kernel(m))


def _matrix_algebra_closure(ctx, dim, mats) -> SubspaceBasis:
    """Row-span of the unital algebra generated by mats inside End."""
    basis = SubspaceBasis(ctx, dim * dim)
    basis.add(_flatten(Matrix.identity(ctx, dim)))
    for m in mats:
        basis.add(_flatten(m))
    changed = True
    while changed:
        changed = False
        for row in list(basis.rows()):
            z = _unflatten(ctx, dim, row)
            for m in mats:
                if basis.add(_flatten(z * m)):
                    changed = True
    return basis


def _flatten(m: Matrix) -> dict:
    out = {}
    for i, r in enumerate(m.rows):
        for j, c in r.items():
            out[i * m.ncols + j] = c
    return out


def _unflatten(ctx, dim, row) -> Matrix:
    m = Matrix(ctx, dim, dim)
    for idx, c in row.items():
        m.set_entry(idx // dim, idx % dim, c)
    return m


def _vec_json(ctx, v, dim) -> list:
    """Witness vector as a dense scalar-string array."""
    return [str(v.get(i, ctx.zero)) for i in range(dim)]


def verify_submodule_certificate(mod, cert) -> bool:
    """Re-check a reducibility certificate by spinning its vector."""
    from .scalars import parse_scalar

    ctx, dim, mats, _ = _as_right_action(mod)
    v = {
        i: s
        for i, raw in enumerate(cert["vector"])
        if not (s := parse_scalar(ctx, raw)).is_zero()
    }
    sub = spin(ctx, dim, mats, [v])
    return 0 < sub.dim == cert["submodule_dim"] < dim


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------


def _matched_generators(A, B) -> tuple:
    """Paired action matrices, plus the convention ("right" or "left")."""
    from .affine_hecke import RightModule
    from .uq_rep import UqModule

    if isinstance(A, RightModule) and isinstance(B, RightModule):
        if A.kind != B.kind or A.ell != B.ell:
            raise ValueError("modules over different algebras")
        ga, gb = A.generators(), B.generators()
        return [(ga[k], gb[k]) for k in ga], "right"
    if isinstance(A, UqModule) and isinstance(B, UqModule):
        if A.n != B.n or A.is_affine() != B.is_affine():
            raise ValueError("modules over different algebras")
        ga, gb = A.generators(), B.generators()
        keys = [k for k in ga if not k.startswith("t")]
        return [(ga[k], gb[k]) for k in keys], "left"
    raise TypeError("cannot match generator signatures")


def _weights_or_none(m):
    from .uq_rep import UqModule

    if isinstance(m, UqModule) and m.weights is not None:
        return m.weights
    return None


def are_isomorphic(A, B, seed: int = 0, max_tries: int = 24) -> Optional[Matrix]:
    """An invertible intertwiner between A and B, or None.

    For right modules the result T satisfies rho_A(g) T = T rho_B(g) (row
    convention); for left modules T rho_A(g) = rho_B(g) T (column
    convention), i.e. T carries A-coordinates to B-coordinates either way.
    Invertibility of a candidate is certified by full rank, checked cheaply
    at a specialization point first and symbolically as a fallback.
    """
    pairs, conv = _matched_generators(A, B)
    da = A.dim
    db = B.dim
    if da != db:
        return None
    ctx = pairs[0][0].ctx if pairs else A.ctx
    wa, wb = _weights_or_none(A), _weights_or_none(B)
    if conv == "right":
        pairs = [(ga.transpose(), gb.transpose()) for ga, gb in pairs]
    if wa is not None and wb is not None:
        if sorted(wa) != sorted(wb):
            return None
        allowed = [(r, c) for r in range(db) for c in range(da) if wb[r] == wa[c]]
    else:
        allowed = [(r, c) for r in range(db) for c in range(da)]
    idx = {rc: k for k, rc in enumerate(allowed)}
    # constraint rows of X rho_A(g) - rho_B(g) X = 0 over the allowed unknowns
    constraints = SubspaceBasis(ctx, len(allowed))
    for ga, gb in pairs:
        ga_cols: dict[int, dict] = {}
        for k, row in enumerate(ga.rows):
            for c, v in row.items():
                ga_cols.setdefault(c, {})[k] = v
        for r in range(db):
            grow = gb.rows[r]
            for c in range(da):
                row: dict[int, Scalar] = {}
                for k, v in ga_cols.get(c, {}).items():
                    key = idx.get((r, k))
                    if key is not None:
                        cur = row.get(key)
                        row[key] = v if cur is None else cur + v
                for k, v in grow.items():
                    key = idx.get((k, c))
                    if key is not None:
                        cur = row.get(key)
                        nv = -v if cur is None else cur - v
                        row[key] = nv
                row = {k: v for k, v in row.items() if not v.is_zero()}
                if row:
                    constraints.add(row)
    sols = column_kernel(constraints.to_matrix())
    if not sols:
        return None

    def assemble(coords) -> Matrix:
        x = Matrix(ctx, db, da)
        for k, c in coords.items():
            r, cc = allowed[k]
            x.add_to_entry(r, cc, c)
        return x

    rng = random.Random(seed)
    candidates = list(sols)
    tries = 0
    while tries < max_tries:
        if tries < len(candidates):
            coords = candidates[tries]
        else:
            coords = {}
            for s in sols:
                w = rng.randint(-3, 3)
                if w:
                    for k, c in s.items():
                        cur = coords.get(k)
                        nc = c * w if cur is None else cur + c * w
                        coords[k] = nc
            coords = {k: c for k, c in coords.items() if not c.is_zero()}
            if not coords:
                tries += 1
                continue
        x = assemble(coords)
        if _is_invertible(x):
            if conv == "right":
                return x.transpose()
            return x
        tries += 1
    return None


def _is_invertible(m: Matrix) -> bool:
    if m.nrows != m.ncols:
        return False
    ctx = m.ctx
    if ctx.t0 is None:
        for point in (Fraction(7, 5), Fraction(-3, 2), Fraction(11, 4)):
            try:
                spec = _specialize_matrix(m, point)
            except ZeroDivisionError:
                continue
            if _rational_rank(spec, m.nrows) == m.nrows:
                return True
        # a vanishing determinant at sample points is only suggestive;
        # settle it symbolically
    from .linalg import rank

    return rank(m) == m.nrows


def _specialize_matrix(m: Matrix, t0) -> list:
    return [
        {j: c.specialize(t0) for j, c in row.items()} for row in m.rows
    ]


def _rational_rank(rows, ncols) -> int:
    rows = [dict(r) for r in rows if r]
    rank = 0
    pivots: dict[int, dict] = {}
    for row in rows:
        for j in sorted(pivots):
            c = row.get(j)
            if c:
                prow = pivots[j]
                for k, v in prow.items():
                    nv = row.get(k, Fraction(0)) - c * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        row = {k: v for k, v in row.items() if v}
        if row:
            j = min(row)
            inv = 1 / row[j]
            pivots[j] = {k: v * inv for k, v in row.items()}
            rank += 1
    return rank


# ---------------------------------------------------------------------------
# Characters
# ---------------------------------------------------------------------------


def character(W) -> dict:
    """Weight multiplicity table of a quantum group module."""
    from .uq_rep import UqModule

    if not isinstance(W, UqModule) or W.weights is None:
        raise ValueError("character needs a weight-labelled module")
    out: dict[tuple, int] = {}
    for w in W.weights:
        out[w] = out.get(w, 0) + 1
    return out
