"""Sparse exact linear algebra over the scalar field.

Matrices are lists of sparse rows (dict column -> Scalar) and never contain
stored zeros.  Vectors are sparse dicts.  Row convention: right-module
actions multiply row vectors on the right (v . M); left-module actions
multiply column vectors (M . v).  :class:`SubspaceBasis` keeps a subspace in
fully reduced row echelon form, which makes subspace equality literal
equality of the pivot rows.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .scalars import Scalar, ScalarContext


Vec = dict  # sparse vector: column index -> Scalar


def vec_add(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for j, c in b.items():
        s = out.get(j)
        if s is None:
            out[j] = c
        else:
            s = s + c
            if s.is_zero():
                del out[j]
            else:
                out[j] = s
    return out


def vec_scale(a: Vec, c: Scalar) -> Vec:
    if c.is_zero():
        return {}
    if c.is_one():
        return dict(a)
    return {j: c * v for j, v in a.items()}


def vec_sub_scaled(a: Vec, c: Scalar, b: Vec) -> Vec:
    """a - c*b, sparse."""
    out = dict(a)
    for j, v in b.items():
        s = out.get(j)
        cv = c * v
        if s is None:
            if not cv.is_zero():
                out[j] = -cv
        else:
            s = s - cv
            if s.is_zero():
                del out[j]
            else:
                out[j] = s
    return out


class Matrix:
    """Sparse matrix over one scalar context."""

    __slots__ = ("ctx", "nrows", "ncols", "rows")

    def __init__(self, ctx: ScalarContext, nrows: int, ncols: int, rows=None):
        self.ctx = ctx
        self.nrows = nrows
        self.ncols = ncols
        self.rows: list[Vec] = rows if rows is not None else [dict() for _ in range(nrows)]

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(ctx, nrows, ncols) -> "Matrix":
        return Matrix(ctx, nrows, ncols)

    @staticmethod
    def identity(ctx, n) -> "Matrix":
        m = Matrix(ctx, n, n)
        one = ctx.one
        for i in range(n):
            m.rows[i][i] = one
        return m

    @staticmethod
    def diagonal(ctx, entries) -> "Matrix":
        entries = list(entries)
        m = Matrix(ctx, len(entries), len(entries))
        for i, c in enumerate(entries):
            if not c.is_zero():
                m.rows[i][i] = c
        return m

    def copy(self) -> "Matrix":
        return Matrix(self.ctx, self.nrows, self.ncols, [dict(r) for r in self.rows])

    # -- element access ------------------------------------------------------

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i].get(j, self.ctx.zero)

    def set_entry(self, i: int, j: int, c: Scalar):
        if c.is_zero():
            self.rows[i].pop(j, None)
        else:
            self.rows[i][j] = c

    def add_to_entry(self, i: int, j: int, c: Scalar):
        if c.is_zero():
            return
        s = self.rows[i].get(j)
        if s is None:
            self.rows[i][j] = c
        else:
            s = s + c
            if s.is_zero():
                del self.rows[i][j]
            else:
                self.rows[i][j] = s

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)
        return Matrix(
            self.ctx, self.nrows, self.ncols,
            [vec_add(a, b) for a, b in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(
            self.ctx, self.nrows, self.ncols,
            [{j: -c for j, c in r.items()} for r in self.rows],
        )

    def scale(self, c: Scalar) -> "Matrix":
        if c.is_zero():
            return Matrix.zero(self.ctx, self.nrows, self.ncols)
        return Matrix(
            self.ctx, self.nrows, self.ncols,
            [{j: c * v for j, v in r.items()} for r in self.rows],
        )

    def __mul__(self, other):
        if isinstance(other, Matrix):
            assert self.ncols == other.nrows, "matrix shape mismatch"
            rows = []
            orows = other.rows
            for r in self.rows:
                acc: Vec = {}
                for k, c in r.items():
                    for j, v in orows[k].items():
                        s = acc.get(j)
                        cv = c * v
                        if s is None:
                            if not cv.is_zero():
                                acc[j] = cv
                        else:
                            s = s + cv
                            if s.is_zero():
                                del acc[j]
                            else:
                                acc[j] = s
                rows.append(acc)
            return Matrix(self.ctx, self.nrows, other.ncols, rows)
        if isinstance(other, Scalar):
            return self.scale(other)
        if isinstance(other, int):
            return self.scale(self.ctx.scalar(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.__mul__(other)
        return NotImplemented

    def transpose(self) -> "Matrix":
        m = Matrix(self.ctx, self.ncols, self.nrows)
        for i, r in enumerate(self.rows):
            for j, c in r.items():
                m.rows[j][i] = c
        return m

    def kron(self, other: "Matrix") -> "Matrix":
        """Tensor product; row/col index = (self index) * (other dim) + (other index)."""
        m = Matrix(self.ctx, self.nrows * other.nrows, self.ncols * other.ncols)
        for i, r in enumerate(self.rows):
            for j, c in r.items():
                for i2, r2 in enumerate(other.rows):
                    row = m.rows[i * other.nrows + i2]
                    for j2, c2 in r2.items():
                        row[j * other.ncols + j2] = c * c2
        return m

    # -- vector action -----------------------------------------------------------

    def apply_row(self, v: Vec) -> Vec:
        """v . M for a sparse row vector v."""
        out: Vec = {}
        for i, c in v.items():
            for j, m in self.rows[i].items():
                s = out.get(j)
                cm = c * m
                if s is None:
                    if not cm.is_zero():
                        out[j] = cm
                else:
                    s = s + cm
                    if s.is_zero():
                        del out[j]
                    else:
                        out[j] = s
        return out

    def apply_col(self, v: Vec) -> Vec:
        """M . v for a sparse column vector v."""
        out: Vec = {}
        for i, r in enumerate(self.rows):
            acc = None
            for j, c in r.items():
                x = v.get(j)
                if x is not None:
                    acc = c * x if acc is None else acc + c * x
            if acc is not None and not acc.is_zero():
                out[i] = acc
        return out

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    __hash__ = None  # type: ignore[assignment]

    def first_nonzero(self) -> Optional[tuple]:
        for i, r in enumerate(self.rows):
            if r:
                j = min(r)
                return i, j
        return None

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    # -- serialization ----------------------------------------------------------

    def to_triplets(self) -> list:
        return [[i, j, str(c)] for i, r in enumerate(self.rows) for j, c in sorted(r.items())]

    @staticmethod
    def from_triplets(ctx, nrows, ncols, triplets) -> "Matrix":
        from .scalars import parse_scalar

        m = Matrix(ctx, nrows, ncols)
        for i, j, s in triplets:
            m.set_entry(int(i), int(j), parse_scalar(ctx, s))
        return m


class SubspaceBasis:
    """A subspace of row vectors kept in reduced row echelon form.

    The pivot rows are fully back-eliminated at all times, so two
    SubspaceBasis objects describe the same subspace iff their pivot maps
    are equal.
    """

    __slots__ = ("ctx", "ambient", "pivots")

    def __init__(self, ctx: ScalarContext, ambient: int):
        self.ctx = ctx
        self.ambient = ambient
        self.pivots: dict[int, Vec] = {}

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Vec) -> Vec:
        """Residual of v after elimination against the basis.

        Pivot rows carry zeros at every other pivot column, so eliminating
        each pivot entry of v once cannot reintroduce pivot entries.
        """
        piv = self.pivots
        hits = [j for j in v if j in piv]
        if not hits:
            return dict(v)
        out = dict(v)
        for j in hits:
            c = out.get(j)
            if c is not None and not c.is_zero():
                out = vec_sub_scaled(out, c, piv[j])
        return out

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def add(self, v: Vec) -> bool:
        """Insert v; returns True if the dimension grew."""
        v = self.reduce(v)
        if not v:
            return False
        j = min(v)
        inv = v[j].inverse()
        v = {k: inv * c for k, c in v.items()}
        # back-eliminate the new pivot column from existing rows
        for p, row in self.pivots.items():
            c = row.get(j)
            if c is not None:
                self.pivots[p] = vec_sub_scaled(row, c, v)
        self.pivots[j] = v
        return True

    def add_all(self, vectors: Iterable[Vec]) -> None:
        for v in vectors:
            self.add(v)

    def rows(self) -> list:
        return [self.pivots[j] for j in sorted(self.pivots)]

    def pivot_columns(self) -> list:
        return sorted(self.pivots)

    def free_columns(self) -> list:
        piv = self.pivots
        return [j for j in range(self.ambient) if j not in piv]

    def to_matrix(self) -> Matrix:
        return Matrix(self.ctx, self.dim, self.ambient, [dict(r) for r in self.rows()])

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return self.ambient == other.ambient and self.pivots == other.pivots

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"SubspaceBasis(dim={self.dim}, ambient={self.ambient})"


def span(ctx, ambient: int, vectors: Iterable[Vec]) -> SubspaceBasis:
    b = SubspaceBasis(ctx, ambient)
    b.add_all(vectors)
    return b


def row_space(m: Matrix) -> SubspaceBasis:
    return span(m.ctx, m.ncols, (r for r in m.rows if r))


def rank(m: Matrix) -> int:
    return row_space(m).dim


def column_kernel(m: Matrix) -> list:
    """Basis (sparse column vectors) of {x : M x = 0}."""
    rs = row_space(m)
    piv = rs.pivots
    out = []
    for j in rs.free_columns():
        v: Vec = {j: m.ctx.one}
        for p, row in piv.items():
            c = row.get(j)
            if c is not None:
                v[p] = -c
        out.append(v)
    return out


def left_kernel(m: Matrix) -> list:
    """Basis of {w : w M = 0} as sparse row vectors."""
    return column_kernel(m.transpose())


def intersect(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """Intersection of two row-vector subspaces of the same ambient space."""
    assert a.ambient == b.ambient
    ra = a.rows()
    rb = b.rows()
    stacked = Matrix(a.ctx, len(ra) + len(rb), a.ambient, [dict(r) for r in ra + rb])
    out = SubspaceBasis(a.ctx, a.ambient)
    for w in left_kernel(stacked):
        v: Vec = {}
        for i, c in w.items():
            if i < len(ra):
                v = vec_add(v, vec_scale(ra[i], c))
        out.add(v)
    return out


def solve_upper(basis: SubspaceBasis, v: Vec) -> Optional[Vec]:
    """Coordinates of v in the basis rows (sorted by pivot), or None."""
    coords: Vec = {}
    v = dict(v)
    rows = basis.rows()
    piv = basis.pivot_columns()
    for idx, j in enumerate(piv):
        c = v.get(j)
        if c is not None:
            coords[idx] = c
            v = vec_sub_scaled(v, c, rows[idx])
    if v:
        return None
    return coords
