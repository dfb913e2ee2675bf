"""Dense exact matrices over a finite field, plus canonical forms.

Conventions.  Matrices act on column vectors: column j of a matrix is the
image of the j-th basis vector, so composition reads right to left.  Vectors
are plain lists of element codes.  companion(f) carries ones on the first
subdiagonal and the negated coefficients of f in the last column, so that
C e_i = e_(i+1) for i < deg f.  Jordan blocks put the eigenvalue on the
diagonal and ones on the subdiagonal.  Matrix data is a flat row-major list
of element codes; instances are treated as immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DoesNotSplit, MixedFields, NonMonic, ShapeMismatch, Singular
from .fields import Field, FieldElem, Poly


class Matrix:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data: Sequence[int]):
        if len(data) != rows * cols:
            raise ShapeMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = list(data)

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Iterable]) -> "Matrix":
        grid = [[field.code(x) for x in row] for row in rows]
        r = len(grid)
        c = len(grid[0]) if grid else 0
        if any(len(row) != c for row in grid):
            raise ShapeMismatch("ragged rows")
        return cls(field, r, c, [x for row in grid for x in row])

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence[int]]) -> "Matrix":
        c = len(cols)
        r = len(cols[0]) if cols else 0
        data = [0] * (r * c)
        for j, col in enumerate(cols):
            if len(col) != r:
                raise ShapeMismatch("ragged columns")
            for i, x in enumerate(col):
                data[i * c + j] = x
        return cls(field, r, c, data)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        data = [0] * (n * n)
        for i in range(n):
            data[i * n + i] = 1
        return cls(field, n, n, data)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, [0] * (rows * cols))

    @classmethod
    def scalar(cls, field: Field, n: int, c) -> "Matrix":
        code = field.code(c)
        data = [0] * (n * n)
        for i in range(n):
            data[i * n + i] = code
        return cls(field, n, n, data)

    # -- access ---------------------------------------------------------------

    def at(self, i: int, j: int) -> FieldElem:
        return FieldElem(self.field, self.data[i * self.cols + j])

    def code_at(self, i: int, j: int) -> int:
        return self.data[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> list[int]:
        return self.data[j :: self.cols]

    def row_lists(self) -> list[list[int]]:
        c = self.cols
        return [self.data[i * c : (i + 1) * c] for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self.data)

    def is_scalar(self) -> Optional[FieldElem]:
        """The scalar c if self == c*I, else None."""
        if self.rows != self.cols or self.rows == 0:
            return None
        c = self.data[0]
        n = self.cols
        for i in range(self.rows):
            for j in range(n):
                want = c if i == j else 0
                if self.data[i * n + j] != want:
                    return None
        return FieldElem(self.field, c)

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other: "Matrix"):
        if self.field != other.field:
            raise MixedFields(f"{self.field} vs {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("addition shape mismatch")
        add = self.field.add
        return Matrix(
            self.field, self.rows, self.cols,
            [add(a, b) for a, b in zip(self.data, other.data)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("subtraction shape mismatch")
        sub = self.field.sub
        return Matrix(
            self.field, self.rows, self.cols,
            [sub(a, b) for a, b in zip(self.data, other.data)],
        )

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, self.rows, self.cols, [neg(a) for a in self.data])

    def __mul__(self, other):
        if isinstance(other, (FieldElem, int)):
            c = self.field.code(other)
            mul = self.field.mul
            return Matrix(
                self.field, self.rows, self.cols, [mul(a, c) for a in self.data]
            )
        self._check(other)
        if self.cols != other.rows:
            raise ShapeMismatch(
                f"{self.rows}x{self.cols} times {other.rows}x{other.cols}"
            )
        n, m, k = self.rows, self.cols, other.cols
        add, mul = self.field.add, self.field.mul
        A, B = self.data, other.data
        out = [0] * (n * k)
        for i in range(n):
            arow = A[i * m : (i + 1) * m]
            orow = i * k
            for t, a in enumerate(arow):
                if a:
                    brow = B[t * k : (t + 1) * k]
                    for j in range(k):
                        b = brow[j]
                        if b:
                            out[orow + j] = add(out[orow + j], mul(a, b))
        return Matrix(self.field, n, k, out)

    def __rmul__(self, other):
        if isinstance(other, (FieldElem, int)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, e: int) -> "Matrix":
        if self.rows != self.cols:
            raise ShapeMismatch("power of a non-square matrix")
        if e < 0:
            return self.inv() ** (-e)
        result = Matrix.identity(self.field, self.rows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, tuple(self.data)))

    def apply(self, v: Sequence[int]) -> list[int]:
        """Matrix times column vector of codes."""
        if len(v) != self.cols:
            raise ShapeMismatch(f"vector length {len(v)} for {self.cols} columns")
        add, mul = self.field.add, self.field.mul
        A = self.data
        c = self.cols
        out = [0] * self.rows
        for i in range(self.rows):
            acc = 0
            base = i * c
            for j, x in enumerate(v):
                if x:
                    a = A[base + j]
                    if a:
                        acc = add(acc, mul(a, x))
            out[i] = acc
        return out

    def transpose(self) -> "Matrix":
        out = [0] * (self.rows * self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                out[j * self.rows + i] = self.data[i * self.cols + j]
        return Matrix(self.field, self.cols, self.rows, out)

    def trace(self) -> FieldElem:
        if self.rows != self.cols:
            raise ShapeMismatch("trace of a non-square matrix")
        add = self.field.add
        acc = 0
        for i in range(self.rows):
            acc = add(acc, self.data[i * self.cols + i])
        return FieldElem(self.field, acc)

    # -- elimination ----------------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and its pivot columns."""
        rows, pivots = _rref_rows(self.field, self.row_lists(), self.cols)
        flat = [x for row in rows for x in row]
        return Matrix(self.field, self.rows, self.cols, flat), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> FieldElem:
        if self.rows != self.cols:
            raise ShapeMismatch("determinant of a non-square matrix")
        f = self.field
        sub, mul, div, neg = f.sub, f.mul, f.div, f.neg
        n = self.rows
        M = self.row_lists()
        det = 1
        for c in range(n):
            pr = None
            for i in range(c, n):
                if M[i][c]:
                    pr = i
                    break
            if pr is None:
                return FieldElem(f, 0)
            if pr != c:
                M[c], M[pr] = M[pr], M[c]
                det = neg(det)
            piv = M[c][c]
            det = mul(det, piv)
            for i in range(c + 1, n):
                if M[i][c]:
                    factor = div(M[i][c], piv)
                    Mi, Mc = M[i], M[c]
                    for k in range(c, n):
                        Mi[k] = sub(Mi[k], mul(factor, Mc[k]))
        return FieldElem(f, det)

    def inv(self) -> "Matrix":
        if self.rows != self.cols:
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = [self.row(i) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
        rows, pivots = _rref_rows(self.field, aug, 2 * n)
        if len(pivots) < n or pivots[n - 1] >= n:
            raise Singular("matrix is singular")
        return Matrix(self.field, n, n, [x for row in rows for x in row[n:]])

    def solve(self, b: Sequence[int]) -> Optional[list[int]]:
        """One solution of self * x = b, or None if inconsistent.

        Free variables are set to zero, so the answer is deterministic.
        """
        if len(b) != self.rows:
            raise ShapeMismatch("right-hand side length mismatch")
        aug = [self.row(i) + [b[i]] for i in range(self.rows)]
        rows, pivots = _rref_rows(self.field, aug, self.cols + 1)
        if pivots and pivots[-1] == self.cols:
            return None
        x = [0] * self.cols
        for r, c in enumerate(pivots):
            x[c] = rows[r][self.cols]
        return x

    def kernel_basis(self) -> list[list[int]]:
        """Basis of the right kernel, from the reduced echelon form.

        One vector per free column, ascending; entry 1 at the free column.
        """
        rows, pivots = _rref_rows(self.field, self.row_lists(), self.cols)
        neg = self.field.neg
        pivset = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivset:
                continue
            v = [0] * self.cols
            v[free] = 1
            for r, c in enumerate(pivots):
                v[c] = neg(rows[r][free])
            basis.append(v)
        return basis

    def __repr__(self):
        f = self.field
        body = "; ".join(
            " ".join(repr(FieldElem(f, x)) for x in self.row(i))
            for i in range(self.rows)
        )
        return f"Matrix({f}, [{body}])"


def _rref_rows(
    field: Field, M: list[list[int]], cols: int
) -> tuple[list[list[int]], tuple[int, ...]]:
    """In-place reduced row echelon on a list of row lists."""
    sub, mul, inv = field.sub, field.mul, field.inv
    nrows = len(M)
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, nrows):
            if M[i][c]:
                pr = i
                break
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        piv = M[r][c]
        if piv != 1:
            ip = inv(piv)
            M[r] = [mul(ip, x) for x in M[r]]
        Mr = M[r]
        for i in range(nrows):
            if i != r and M[i][c]:
                factor = M[i][c]
                Mi = M[i]
                for k in range(cols):
                    if Mr[k]:
                        Mi[k] = sub(Mi[k], mul(factor, Mr[k]))
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return M, tuple(pivots)


class Echelon:
    """Growing row echelon basis for a subspace of code vectors.

    Inserted vectors are kept normalized (pivot entry 1) and fully reduced
    against each other, so membership tests are plain reductions.
    """

    __slots__ = ("field", "width", "vectors", "pivots")

    def __init__(self, field: Field, width: int):
        self.field = field
        self.width = width
        self.vectors: list[list[int]] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def reduce(self, v: Sequence[int]) -> list[int]:
        f = self.field
        sub, mul = f.sub, f.mul
        w = list(v)
        for row, p in zip(self.vectors, self.pivots):
            c = w[p]
            if c:
                for k in range(self.width):
                    if row[k]:
                        w[k] = sub(w[k], mul(c, row[k]))
        return w

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def insert(self, v: Sequence[int]) -> Optional[int]:
        """Add v to the span; returns its pivot, or None if dependent."""
        w = self.reduce(v)
        piv = None
        for k, x in enumerate(w):
            if x:
                piv = k
                break
        if piv is None:
            return None
        f = self.field
        ipv = f.inv(w[piv])
        if ipv != 1:
            mul = f.mul
            w = [mul(ipv, x) for x in w]
        # keep earlier rows reduced against the new one
        sub, mul = f.sub, f.mul
        for row in self.vectors:
            c = row[piv]
            if c:
                for k in range(self.width):
                    if w[k]:
                        row[k] = sub(row[k], mul(c, w[k]))
        self.vectors.append(w)
        self.pivots.append(piv)
        return piv

    def copy(self) -> "Echelon":
        e = Echelon(self.field, self.width)
        e.vectors = [list(v) for v in self.vectors]
        e.pivots = list(self.pivots)
        return e

    def sorted_rows(self) -> list[list[int]]:
        order = sorted(range(self.dim), key=lambda i: self.pivots[i])
        return [list(self.vectors[i]) for i in order]


# -- structured builders --------------------------------------------------------


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a * b - b * a


def companion(f: Poly) -> Matrix:
    """Companion matrix of monic f: subdiagonal ones, -f in the last column."""
    if not f.is_monic() or f.degree < 1:
        raise NonMonic("companion matrix needs a monic polynomial of degree >= 1")
    n = f.degree
    field = f.field
    neg = field.neg
    data = [0] * (n * n)
    for i in range(1, n):
        data[i * n + (i - 1)] = 1
    for i in range(n):
        data[i * n + (n - 1)] = neg(f.coeffs[i])
    return Matrix(field, n, n, data)


def jordan_block(field: Field, eigenvalue, size: int) -> Matrix:
    lam = field.code(eigenvalue)
    data = [0] * (size * size)
    for i in range(size):
        data[i * size + i] = lam
        if i + 1 < size:
            data[(i + 1) * size + i] = 1
    return Matrix(field, size, size, data)


def direct_sum(mats: Sequence[Matrix]) -> Matrix:
    if not mats:
        raise ShapeMismatch("direct sum of nothing")
    field = mats[0].field
    for m in mats:
        if m.field != field:
            raise MixedFields("direct sum across fields")
    n = sum(m.rows for m in mats)
    c = sum(m.cols for m in mats)
    out = Matrix.zeros(field, n, c)
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            row = m.row(i)
            base = (r0 + i) * c + c0
            out.data[base : base + m.cols] = row
        r0 += m.rows
        c0 += m.cols
    return out

def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; block (i,j) is a[i][j] * b."""
    a._check(b)
    f = a.field
    mul = f.mul
    R, C = a.rows * b.rows, a.cols * b.cols
    out = [0] * (R * C)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a.data[i * a.cols + j]
            if x:
                for k in range(b.rows):
                    base = (i * b.rows + k) * C + j * b.cols
                    brow = k * b.cols
                    for l in range(b.cols):
                        y = b.data[brow + l]
                        if y:
                            out[base + l] = mul(x, y)
    return Matrix(f, R, C, out)


def assemble_grid(grid: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a block matrix from a rectangular grid of equal blocks."""
    field = grid[0][0].field
    br, bc = grid[0][0].rows, grid[0][0].cols
    for row in grid:
        for m in row:
            if m.field != field:
                raise MixedFields("grid across fields")
            if (m.rows, m.cols) != (br, bc):
                raise ShapeMismatch("grid blocks must share one shape")
    R, C = len(grid) * br, len(grid[0]) * bc
    out = [0] * (R * C)
    for bi, row in enumerate(grid):
        if len(row) != len(grid[0]):
            raise ShapeMismatch("ragged grid")
        for bj, m in enumerate(row):
            for i in range(br):
                base = (bi * br + i) * C + bj * bc
                out[base : base + bc] = m.row(i)
    return Matrix(field, R, C, out)


# -- polynomial evaluation at a matrix -------------------------------------------


def poly_at(f: Poly, a: Matrix) -> Matrix:
    """f(a) by Horner's rule."""
    if a.rows != a.cols:
        raise ShapeMismatch("polynomial of a non-square matrix")
    if a.field != f.field:
        raise MixedFields("polynomial and matrix over different fields")
    n = a.rows
    acc = Matrix.zeros(a.field, n, n)
    for c in reversed(f.coeffs):
        acc = acc * a
        if c:
            acc = acc + Matrix.scalar(a.field, n, c)
    return acc


def poly_apply(f: Poly, a: Matrix, v: Sequence[int]) -> list[int]:
    """f(a) applied to the vector v, without forming f(a)."""
    add, mul = a.field.add, a.field.mul
    acc = [0] * len(v)
    for c in reversed(f.coeffs):
        acc = a.apply(acc)
        if c:
            acc = [add(x, mul(c, y)) for x, y in zip(acc, v)]
    return acc


# -- minimal polynomial ------------------------------------------------------------


def _local_min_poly(a: Matrix, v: Sequence[int], base: Optional[Echelon] = None
                    ) -> Poly:
    """Least monic g with g(a) v inside the base subspace (default 0)."""
    field = a.field
    n = a.rows
    ech = base.copy() if base is not None else Echelon(field, n)
    offset = ech.dim
    # rows inserted past the offset carry combination coefficients over the
    # Krylov sequence v, a v, a^2 v, ...
    tracks: list[list[int]] = []
    sub, mul = field.sub, field.mul
    u = list(v)
    k = 0
    while True:
        w = list(u)
        track = [0] * (k + 1)
        track[k] = 1
        for idx, (row, p) in enumerate(zip(ech.vectors, ech.pivots)):
            c = w[p]
            if c:
                for t in range(n):
                    if row[t]:
                        w[t] = sub(w[t], mul(c, row[t]))
                if idx >= offset:
                    tr = tracks[idx - offset]
                    for t in range(len(tr)):
                        if tr[t]:
                            track[t] = sub(track[t], mul(c, tr[t]))
        piv = None
        for t, x in enumerate(w):
            if x:
                piv = t
                break
        if piv is None:
            return Poly._raw(field, track)
        ip = field.inv(w[piv])
        if ip != 1:
            w = [mul(ip, x) for x in w]
            track = [mul(ip, x) for x in track]
        ech.vectors.append(w)
        ech.pivots.append(piv)
        tracks.append(track)
        u = a.apply(u)
        k += 1
        assert k <= n, "Krylov chain exceeded the ambient dimension"


def min_poly(a: Matrix) -> Poly:
    """Minimal polynomial: lcm of cyclic annihilators over standard seeds."""
    if a.rows != a.cols:
        raise ShapeMismatch("minimal polynomial of a non-square matrix")
    field = a.field
    n = a.rows
    if n == 0:
        return Poly._raw(field, [1])
    covered = Echelon(field, n)
    m = Poly._raw(field, [1])
    for i in range(n):
        e = [0] * n
        e[i] = 1
        if covered.contains(e):
            continue
        g = _local_min_poly(a, e)
        m = m.lcm(g)
        # fold the whole Krylov subspace of e into the covered span
        u = e
        for _ in range(g.degree):
            covered.insert(u)
            u = a.apply(u)
        if covered.dim == n:
            break
    return m


# -- rational canonical form ----------------------------------------------------


@dataclass
class CanonicalForm:
    """Frobenius data: invariant factors d1 | d2 | ... and a transform T
    with T^-1 A T equal to the direct sum of their companion blocks."""

    invariant_factors: list[Poly]
    transform: Matrix

    @property
    def form(self) -> Matrix:
        return direct_sum([companion(d) for d in self.invariant_factors])


def _coprime_to(g: Poly, h: Poly) -> Poly:
    """Largest divisor of g sharing no irreducible factor with h."""
    u = g
    c = u.gcd(h)
    while c.degree > 0:
        u = u // c
        c = u.gcd(h)
    return u


def _lcm_split(g: Poly, h: Poly) -> tuple[Poly, Poly]:
    """Coprime g1 | g, h1 | h with g1 * h1 = lcm(g, h), gcd only."""
    a = _coprime_to(g, h)
    b = _coprime_to(h, g)
    gc = g // a
    hc = h // b
    # on the shared primes, keep each prime's higher power wherever it is;
    # ties go to the g side
    m = gc.gcd(hc)
    hh = hc // m
    cg = _coprime_to(gc, hh)
    ch = hc // _coprime_to(hc, hh)
    g1 = (a * cg).monic()
    h1 = (b * ch).monic()
    assert g1.gcd(h1).degree == 0
    assert (g1 * h1).monic() == g.lcm(h)
    return g1, h1


def frobenius_form(a: Matrix) -> CanonicalForm:
    """Rational canonical form with an explicit change of basis.

    Repeatedly splits off the cyclic subspace of a vector whose annihilator
    modulo the part already extracted is the minimal polynomial of the
    quotient, adjusted to have annihilator exactly that polynomial.
    """
    if a.rows != a.cols:
        raise ShapeMismatch("canonical form of a non-square matrix")
    field = a.field
    n = a.rows
    if n == 0:
        raise ShapeMismatch("canonical form of an empty matrix")
    W = Echelon(field, n)
    blocks: list[tuple[list[int], Poly]] = []
    while W.dim < n:
        best_v: Optional[list[int]] = None
        best_g: Optional[Poly] = None
        for i in range(n):
            e = [0] * n
            e[i] = 1
            g = _local_min_poly(a, e, W)
            if g.degree == 0:
                continue
            if best_g is None:
                best_v, best_g = e, g
            else:
                l = best_g.lcm(g)
                if l != best_g:
                    g1, h1 = _lcm_split(best_g, g)
                    u1 = poly_apply(best_g // g1, a, best_v)
                    u2 = poly_apply(g // h1, a, e)
                    add = field.add
                    best_v = [add(x, y) for x, y in zip(u1, u2)]
                    best_g = l
            if best_g.degree == n - W.dim:
                break
        assert best_v is not None and best_g is not None
        # make the annihilator exact: subtract the components inside W
        w = poly_apply(best_g, a, best_v)
        if any(w):
            cols = []
            for gen, d in blocks:
                u = list(gen)
                for _ in range(d.degree):
                    cols.append(u)
                    u = a.apply(u)
            B = Matrix.from_columns(field, cols)
            coords = B.solve(w)
            assert coords is not None, "g(a)v must lie in the extracted span"
            pos = 0
            sub = field.sub
            u = best_v
            for gen, d in blocks:
                h = Poly._raw(field, coords[pos : pos + d.degree])
                pos += d.degree
                if not h.is_zero():
                    quo, rem = divmod(h, best_g)
                    assert rem.is_zero(), "conductor must divide block factors"
                    corr = poly_apply(quo, a, gen)
                    u = [sub(x, y) for x, y in zip(u, corr)]
            best_v = u
            w = poly_apply(best_g, a, best_v)
            assert not any(w), "adjusted vector must be annihilated exactly"
        u = list(best_v)
        for _ in range(best_g.degree):
            inserted = W.insert(u)
            assert inserted is not None, "cyclic basis must be independent"
            u = a.apply(u)
        blocks.append((best_v, best_g))
    # extraction yields decreasing divisibility; report ascending d1 | d2 | ...
    blocks.reverse()
    for d1, d2 in zip(blocks, blocks[1:]):
        assert (d2[1] % d1[1]).is_zero(), "invariant factor chain broken"
    cols = []
    for gen, d in blocks:
        u = list(gen)
        for _ in range(d.degree):
            cols.append(u)
            u = a.apply(u)
    T = Matrix.from_columns(field, cols)
    result = CanonicalForm([d for _, d in blocks], T)
    assert T.inv() * a * T == result.form, "canonical form verification failed"
    return result


def char_poly(a: Matrix) -> Poly:
    """Characteristic polynomial as the product of the invariant factors."""
    if a.rows != a.cols:
        raise ShapeMismatch("characteristic polynomial of a non-square matrix")
    if a.rows == 0:
        return Poly._raw(a.field, [1])
    out = Poly._raw(a.field, [1])
    for d in frobenius_form(a).invariant_factors:
        out = out * d
    return out


def similarity_transform(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """An invertible T with T^-1 a T = b, or None if not similar."""
    a._check(b)
    if a.rows != a.cols or b.rows != b.cols:
        raise ShapeMismatch("similarity needs square matrices")
    if a.rows != b.rows:
        return None
    ca = frobenius_form(a)
    cb = frobenius_form(b)
    if ca.invariant_factors != cb.invariant_factors:
        return None
    # T^-1 a T = F = S^-1 b S, so (T S^-1) conjugates a to b
    t = ca.transform * cb.transform.inv()
    assert t.inv() * a * t == b
    return t


# -- Jordan form ---------------------------------------------------------------


def eigenvalues_with_multiplicity(a: Matrix) -> tuple[list[tuple[int, int]], Poly]:
    """Roots of the characteristic polynomial found in the base field.

    Returns ([(eigenvalue code, algebraic multiplicity)...] by ascending
    code, remaining rootless factor).
    """
    f = char_poly(a)
    field = a.field
    out = []
    for lam in range(field.order):
        mult = 0
        lin = Poly._raw(field, [field.neg(lam), 1])
        while f.degree >= 1 and f(lam).code == 0:
            f = f // lin
            mult += 1
        if mult:
            out.append((lam, mult))
    return out, f


def jordan_form(a: Matrix) -> tuple[Matrix, Matrix]:
    """(J, T) with T^-1 A T = J when the characteristic polynomial splits.

    Blocks are grouped by ascending eigenvalue code and decreasing size
    inside each eigenvalue; ones sit on the subdiagonal.
    """
    if a.rows != a.cols:
        raise ShapeMismatch("Jordan form of a non-square matrix")
    field = a.field
    n = a.rows
    eig, rest = eigenvalues_with_multiplicity(a)
    if rest.degree > 0:
        raise DoesNotSplit(
            f"characteristic polynomial has a rootless factor {rest!r}"
        )
    blocks: list[Matrix] = []
    columns: list[list[int]] = []
    for lam, mult in eig:
        N = a - Matrix.scalar(field, n, lam)
        # kernels of N, N^2, ... until the generalized eigenspace saturates
        kernels = [Echelon(field, n)]
        power = Matrix.identity(field, n)
        while kernels[-1].dim < mult:
            power = power * N
            ech = Echelon(field, n)
            for v in power.kernel_basis():
                ech.insert(v)
            assert ech.dim > kernels[-1].dim, "kernel chain stalled"
            kernels.append(ech)
        s = len(kernels) - 1
        # choose chain tops level by level, longest chains first
        tops: list[tuple[list[int], int]] = []
        for k in range(s, 0, -1):
            seen = kernels[k - 1].copy()
            for v, h in tops:
                img = list(v)
                for _ in range(h - k):
                    img = N.apply(img)
                seen.insert(img)
            for v in kernels[k].sorted_rows():
                if seen.insert(v) is not None:
                    tops.append((v, k))
        for v, h in tops:
            blocks.append(jordan_block(field, lam, h))
            u = list(v)
            for _ in range(h):
                columns.append(u)
                u = N.apply(u)
    J = direct_sum(blocks)
    T = Matrix.from_columns(field, columns)
    assert T.inv() * a * T == J, "Jordan form verification failed"
    return J, T
