"""Exact integer matrix routines: Smith form, kernels, solving.

Everything works over Python ints, so no overflow and no floating point.
Matrices carry explicit shapes because zero-row and zero-column matrices
show up constantly (trivial groups, empty complexes).

The Smith form here returns all four transform matrices, which is what the
kernel/solve/cokernel helpers below need; diagonalization alone would not
be enough.
"""


class IntMatrix:
    """An immutable integer matrix with an explicit shape."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError(f"ncols={ncols} but rows have width {width}")
            ncols = width
        elif ncols is None:
            raise ValueError("empty matrix needs an explicit ncols")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, *a):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def from_columns(cls, cols, nrows):
        return cls(tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return IntMatrix(tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def hstack(self, other):
        if other.nrows != self.nrows:
            raise ValueError("row count mismatch")
        return IntMatrix(
            tuple(a + b for a, b in zip(self.rows, other.rows)) if self.nrows else (),
            self.ncols + other.ncols,
        )

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for row in self.rows:
            acc = [0] * other.ncols
            for k, a in enumerate(row):
                if a == 0:
                    continue
                orow = other.rows[k]
                for j, b in enumerate(orow):
                    if b:
                        acc[j] += a * b
            out.append(tuple(acc))
        return IntMatrix(tuple(out), other.ncols)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __neg__(self):
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def scale(self, k):
        return IntMatrix(tuple(tuple(k * a for a in r) for r in self.rows), self.ncols)

    def apply(self, vector):
        """Matrix-vector product."""
        if len(vector) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * v for a, v in zip(row, vector) if a) for row in self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def is_zero(self):
        return all(a == 0 for r in self.rows for a in r)

    def to_lists(self):
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ncols, self.rows))

    def __repr__(self):
        return f"IntMatrix({self.to_lists()!r}, ncols={self.ncols})"


class SmithForm:
    """Result of diagonalization: ``u @ a @ v == s`` with u, v unimodular."""

    __slots__ = ("s", "u", "v", "uinv", "vinv", "diagonal", "rank")

    def __init__(self, s, u, v, uinv, vinv):
        self.s = s
        self.u = u
        self.v = v
        self.uinv = uinv
        self.vinv = vinv
        self.diagonal = tuple(
            s.rows[i][i] for i in range(min(s.nrows, s.ncols))
        )
        self.rank = sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(a: IntMatrix) -> SmithForm:
    """Smith form with transforms: diagonal d1 | d2 | ..., all >= 0."""
    m, n = a.nrows, a.ncols
    w = [list(r) for r in a.rows]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    uinv = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    vinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_swap(i, j):
        w[i], w[j] = w[j], w[i]
        u[i], u[j] = u[j], u[i]
        for r in uinv:
            r[i], r[j] = r[j], r[i]

    def row_add(i, j, k):
        # row i += k * row j
        w[i] = [x + k * y for x, y in zip(w[i], w[j])]
        u[i] = [x + k * y for x, y in zip(u[i], u[j])]
        for r in uinv:
            r[j] -= k * r[i]

    def row_negate(i):
        w[i] = [-x for x in w[i]]
        u[i] = [-x for x in u[i]]
        for r in uinv:
            r[i] = -r[i]

    def col_swap(i, j):
        for r in w:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def col_add(i, j, k):
        # col i += k * col j
        for r in w:
            r[i] += k * r[j]
        for r in v:
            r[i] += k * r[j]
        vinv[j] = [x - k * y for x, y in zip(vinv[j], vinv[i])]

    def col_negate(i):
        for r in w:
            r[i] = -r[i]
        for r in v:
            r[i] = -r[i]
        vinv[i] = [-x for x in vinv[i]]

    t = 0
    while t < min(m, n):
        # locate a pivot of least magnitude in the remaining block
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = w[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            row_swap(t, pivot[0])
        if pivot[1] != t:
            col_swap(t, pivot[1])

        while True:
            # shrink entries below and to the right of the pivot
            dirty = False
            for i in range(t + 1, m):
                if w[i][t] != 0:
                    q = w[i][t] // w[t][t]
                    row_add(i, t, -q)
                    if w[i][t] != 0:
                        row_swap(t, i)  # smaller remainder becomes the pivot
                        dirty = True
            for j in range(t + 1, n):
                if w[t][j] != 0:
                    q = w[t][j] // w[t][t]
                    col_add(j, t, -q)
                    if w[t][j] != 0:
                        col_swap(t, j)
                        dirty = True
            if dirty:
                continue
            # pivot row/col clean; force divisibility over the rest
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if w[i][j] % w[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(t, offender, 1)
        if w[t][t] < 0:
            row_negate(t)
        t += 1

    for j in range(t, min(m, n)):
        if w[j][j] < 0:  # unreachable, but keep the invariant obvious
            col_negate(j)

    return SmithForm(
        IntMatrix(w, n),
        IntMatrix(u, m),
        IntMatrix(v, n),
        IntMatrix(uinv, m),
        IntMatrix(vinv, n),
    )


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """A basis of the lattice ``{x : a @ x = 0}``, as matrix columns."""
    nf = smith_normal_form(a)
    cols = [nf.v.column(j) for j in range(nf.rank, a.ncols)]
    return IntMatrix.from_columns(cols, a.ncols) if cols else IntMatrix.zeros(a.ncols, 0)


def lattice_basis(span: IntMatrix) -> IntMatrix:
    """A basis for the lattice spanned by the columns of ``span``."""
    nf = smith_normal_form(span)
    cols = []
    for i in range(nf.rank):
        d = nf.diagonal[i]
        cols.append(tuple(d * x for x in nf.uinv.column(i)))
    return IntMatrix.from_columns(cols, span.nrows) if cols else IntMatrix.zeros(span.nrows, 0)


def solve(a: IntMatrix, b) -> tuple | None:
    """An integer solution ``x`` of ``a @ x = b``, or None."""
    nf = smith_normal_form(a)
    ub = nf.u.apply(tuple(b))
    y = [0] * a.ncols
    for i, c in enumerate(ub):
        if i < nf.rank:
            d = nf.diagonal[i]
            if c % d != 0:
                return None
            y[i] = c // d
        elif c != 0:
            return None
    return nf.v.apply(tuple(y))


def solve_matrix(a: IntMatrix, b: IntMatrix) -> IntMatrix | None:
    """An integer matrix ``x`` with ``a @ x = b``, or None."""
    if a.nrows != b.nrows:
        raise ValueError("row count mismatch")
    nf = smith_normal_form(a)
    cols = []
    for j in range(b.ncols):
        ub = nf.u.apply(b.column(j))
        y = [0] * a.ncols
        ok = True
        for i, c in enumerate(ub):
            if i < nf.rank:
                d = nf.diagonal[i]
                if c % d != 0:
                    ok = False
                    break
                y[i] = c // d
            elif c != 0:
                ok = False
                break
        if not ok:
            return None
        cols.append(nf.v.apply(tuple(y)))
    return IntMatrix.from_columns(cols, a.ncols) if cols else IntMatrix.zeros(a.ncols, 0)


def cokernel_invariants(a: IntMatrix) -> tuple[int, tuple[int, ...]]:
    """Invariant factors of ``Z^rows / column-span(a)``.

    Returns ``(free_rank, torsion)`` with torsion a divisibility chain of
    entries >= 2.
    """
    nf = smith_normal_form(a)
    torsion = tuple(d for d in nf.diagonal if d > 1)
    return a.nrows - nf.rank, torsion
