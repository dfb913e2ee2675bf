"""The Heisenberg Lie algebra h(n) over a finite field and its modules.

h(n) has a symplectic basis x_1..x_n, y_1..y_n, z where the only nonzero
brackets are [x_i, y_i] = z.  A matrix representation stores one image per
basis element; the bracket relations and the behaviour of the central image
determine everything this module computes.

The central family of modules lives on truncated polynomials
F[X_1..X_n]/(X_1^p..X_n^p) with the monomial basis ordered by the mixed
radix index i_1 p^(n-1) + ... + i_n, so each of x_k, y_k, z is a Kronecker
product of n single-variable blocks:

  z    acts by  alpha
  x_k  acts by  beta_k + alpha * d/dX_k
  y_k  acts by  gamma_k + multiplication by X_k
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    DegreeMismatch,
    MinPolyShape,
    MixedFields,
    NonMonic,
    NotScalarCenter,
    RelationViolated,
    ShapeMismatch,
    WrongDeltaCount,
    WrongDimension,
    ZeroAlpha,
)
from .fields import Field, FieldElem, GF, Poly, make_extension
from .matrices import (
    Matrix,
    assemble_grid,
    commutator,
    companion,
    direct_sum,
    jordan_block,
    kron,
)


class HeisenbergAlgebra:
    """h(n) over a fixed field; 2n+1 dimensional."""

    __slots__ = ("n", "field")

    def __init__(self, n: int, field: Field):
        if n < 1:
            raise ValueError("rank n must be >= 1")
        self.n = n
        self.field = field

    @property
    def dim(self) -> int:
        return 2 * self.n + 1

    def basis_labels(self) -> list[str]:
        n = self.n
        return (
            [f"x{i + 1}" for i in range(n)]
            + [f"y{i + 1}" for i in range(n)]
            + ["z"]
        )

    def __eq__(self, other):
        return (
            isinstance(other, HeisenbergAlgebra)
            and self.n == other.n
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.n, self.field))

    def __repr__(self):
        return f"h({self.n}) over {self.field}"


class ModuleParams:
    """Parameters (alpha, beta_1..beta_n, gamma_1..gamma_n), alpha != 0."""

    __slots__ = ("alpha", "betas", "gammas")

    def __init__(
        self,
        alpha: FieldElem,
        betas: Sequence[FieldElem],
        gammas: Sequence[FieldElem],
    ):
        if alpha.code == 0:
            raise ZeroAlpha("alpha must be nonzero")
        betas = tuple(betas)
        gammas = tuple(gammas)
        if len(betas) != len(gammas) or not betas:
            raise ValueError("need equally many betas and gammas, at least one")
        field = alpha.field
        for e in betas + gammas:
            if e.field != field:
                raise MixedFields("parameters must share one field")
        self.alpha = alpha
        self.betas = betas
        self.gammas = gammas

    @property
    def n(self) -> int:
        return len(self.betas)

    @property
    def field(self) -> Field:
        return self.alpha.field

    def invariants(self) -> "InvariantTuple":
        """The isomorphism invariants: alpha and all p-th powers."""
        p = self.field.p
        return InvariantTuple(
            self.alpha,
            tuple(b**p for b in self.betas),
            tuple(g**p for g in self.gammas),
        )

    def __eq__(self, other):
        return (
            isinstance(other, ModuleParams)
            and self.alpha == other.alpha
            and self.betas == other.betas
            and self.gammas == other.gammas
        )

    def __hash__(self):
        return hash((self.alpha, self.betas, self.gammas))

    def __repr__(self):
        return (
            f"ModuleParams(alpha={self.alpha!r}, betas={list(self.betas)!r}, "
            f"gammas={list(self.gammas)!r})"
        )


@dataclass(frozen=True)
class InvariantTuple:
    """(alpha, delta_1..delta_n, epsilon_1..epsilon_n): the full invariant
    of a faithful irreducible module of dimension p^n."""

    alpha: FieldElem
    deltas: tuple[FieldElem, ...]
    epsilons: tuple[FieldElem, ...]

    def __repr__(self):
        return (
            f"InvariantTuple(alpha={self.alpha!r}, "
            f"deltas={list(self.deltas)!r}, epsilons={list(self.epsilons)!r})"
        )


class Representation:
    """Matrix images of the basis of h(n), acting on column vectors."""

    __slots__ = ("algebra", "x", "y", "z")

    def __init__(
        self,
        algebra: HeisenbergAlgebra,
        x: Sequence[Matrix],
        y: Sequence[Matrix],
        z: Matrix,
    ):
        n = algebra.n
        if len(x) != n or len(y) != n:
            raise ShapeMismatch(f"need {n} images for the x and y parts")
        d = z.rows
        for m in list(x) + list(y) + [z]:
            if m.rows != m.cols:
                raise ShapeMismatch("images must be square")
            if m.rows != d:
                raise ShapeMismatch("images must share one size")
            if m.field != algebra.field:
                raise MixedFields("images must live over the algebra's field")
        self.algebra = algebra
        self.x = tuple(x)
        self.y = tuple(y)
        self.z = z

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.z.rows

    @property
    def n(self) -> int:
        return self.algebra.n

    def generators(self) -> list[tuple[str, Matrix]]:
        out = [(f"x{i + 1}", m) for i, m in enumerate(self.x)]
        out += [(f"y{i + 1}", m) for i, m in enumerate(self.y)]
        out.append(("z", self.z))
        return out

    def gen_matrices(self) -> list[Matrix]:
        return list(self.x) + list(self.y) + [self.z]

    def is_faithful(self) -> bool:
        """Nonzero central image; equivalent to faithfulness once the
        bracket relations hold, since every nonzero ideal contains z."""
        return not self.z.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and self.algebra == other.algebra
            and self.x == other.x
            and self.y == other.y
            and self.z == other.z
        )

    def __repr__(self):
        return f"Representation({self.algebra!r}, dim={self.dim})"


@dataclass
class ValidationReport:
    violations: list[str]
    faithful: bool
    z_scalar: Optional[FieldElem]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_rep(rep: Representation) -> ValidationReport:
    """Check every defining bracket relation and report violations."""
    n = rep.n
    zero = Matrix.zeros(rep.field, rep.dim, rep.dim)
    found = []
    for i in range(n):
        for j in range(n):
            c = commutator(rep.x[i], rep.y[j])
            want = rep.z if i == j else zero
            if c != want:
                rhs = "z" if i == j else "0"
                found.append(f"[x{i + 1}, y{j + 1}] != {rhs}")
    for i in range(n):
        for j in range(i + 1, n):
            if commutator(rep.x[i], rep.x[j]) != zero:
                found.append(f"[x{i + 1}, x{j + 1}] != 0")
            if commutator(rep.y[i], rep.y[j]) != zero:
                found.append(f"[y{i + 1}, y{j + 1}] != 0")
    for i in range(n):
        if commutator(rep.x[i], rep.z) != zero:
            found.append(f"[x{i + 1}, z] != 0")
        if commutator(rep.y[i], rep.z) != zero:
            found.append(f"[y{i + 1}, z] != 0")
    return ValidationReport(found, not rep.z.is_zero(), rep.z.is_scalar())


# -- constructors -------------------------------------------------------------


def build_M(p: int, alpha: FieldElem, beta: FieldElem) -> Matrix:
    """The p x p block: beta on the diagonal, i*alpha at (i, i+1), 1-indexed.

    This is beta + alpha * d/dX acting on F[X]/(X^p) in the monomial basis.
    """
    field = alpha.field
    if beta.field != field:
        raise MixedFields("alpha and beta must share one field")
    if p != field.p:
        raise ValueError(f"block size {p} must equal the characteristic {field.p}")
    data = [0] * (p * p)
    mul = field.mul
    for i in range(p):
        data[i * p + i] = beta.code
        if i + 1 < p:
            data[i * p + (i + 1)] = mul((i + 1) % p, alpha.code)
    return Matrix(field, p, p, data)


def _shift_block(field: Field, gamma: FieldElem, p: int) -> Matrix:
    # gamma + multiplication by X on F[X]/(X^p): gamma diagonal, subdiagonal 1
    return jordan_block(field, gamma, p)


def build_V(algebra: HeisenbergAlgebra, params: ModuleParams) -> Representation:
    """The p^n dimensional module on truncated polynomials."""
    field = algebra.field
    if params.field != field:
        raise MixedFields("parameters must live over the algebra's field")
    n = algebra.n
    if params.n != n:
        raise ShapeMismatch(f"parameters have rank {params.n}, algebra rank {n}")
    p = field.p
    eye = Matrix.identity(field, p)

    def fold(k: int, block: Matrix) -> Matrix:
        factors = [block if j == k else eye for j in range(n)]
        out = factors[0]
        for f in factors[1:]:
            out = kron(out, f)
        return out

    xs = [fold(k, build_M(p, params.alpha, params.betas[k])) for k in range(n)]
    ys = [fold(k, _shift_block(field, params.gammas[k], p)) for k in range(n)]
    z = Matrix.scalar(field, p**n, params.alpha)
    return Representation(algebra, xs, ys, z)


def build_standard(algebra: HeisenbergAlgebra) -> Representation:
    """The faithful (n+2)-dimensional module on strictly upper triangular
    matrices: x_i -> e(1, i+1), y_i -> e(i+1, n+2), z -> e(1, n+2)."""
    n = algebra.n
    field = algebra.field
    d = n + 2

    def e(i: int, j: int) -> Matrix:
        m = Matrix.zeros(field, d, d)
        m.data[(i - 1) * d + (j - 1)] = 1
        return m

    xs = [e(1, i + 2) for i in range(n)]
    ys = [e(i + 2, d) for i in range(n)]
    return Representation(algebra, xs, ys, e(1, d))


def build_D(p: int, alpha: FieldElem, deltas: Sequence[FieldElem]) -> Matrix:
    """The p x p matrix with i*alpha at (i, i+1) and delta_k on the k-th
    lower diagonal; zero main diagonal."""
    field = alpha.field
    if p != field.p:
        raise ValueError(f"block size {p} must equal the characteristic {field.p}")
    deltas = tuple(deltas)
    if len(deltas) != p - 1:
        raise WrongDeltaCount(f"need {p - 1} deltas for characteristic {p}")
    for dlt in deltas:
        if dlt.field != field:
            raise MixedFields("deltas must share alpha's field")
    if alpha.code == 0:
        raise ZeroAlpha("alpha must be nonzero")
    data = [0] * (p * p)
    mul = field.mul
    for i in range(p):
        if i + 1 < p:
            data[i * p + (i + 1)] = mul((i + 1) % p, alpha.code)
        for j in range(i):
            data[i * p + j] = deltas[i - j - 1].code
    return Matrix(field, p, p, data)


def build_companion_rep(
    alpha: FieldElem, beta: FieldElem, f: Poly
) -> Representation:
    """x_1 -> m copies of the basic block, y_1 -> companion of f(X^p),
    z -> alpha; a faithful h(1)-module of dimension p*deg(f)."""
    field = alpha.field
    if beta.field != field or f.field != field:
        raise MixedFields("alpha, beta and f must share one field")
    if alpha.code == 0:
        raise ZeroAlpha("alpha must be nonzero")
    if not f.is_monic() or f.degree < 1:
        raise NonMonic("f must be monic of degree >= 1")
    p = field.p
    m = f.degree
    M = build_M(p, alpha, beta)
    x = direct_sum([M] * m)
    y = companion(f.inflate(p))
    z = Matrix.scalar(field, p * m, alpha)
    rep = Representation(HeisenbergAlgebra(1, field), [x], [y], z)
    assert validate_rep(rep).ok, "companion construction broke the relations"
    return rep


def regular_matrix(K: Field, elem: FieldElem, basis_cols: "Matrix") -> Matrix:
    """Multiplication by elem on K, as a matrix over the prime field in the
    basis whose prime-field coordinates are the columns of basis_cols."""
    if elem.field != K:
        raise MixedFields("element must belong to the extension")
    F = GF(K.p)
    m = K.degree
    cols = []
    for j in range(m):
        bj = K.code_from_coeffs(basis_cols.column(j))
        img = K.coeffs_of(K.mul(elem.code, bj))
        cols.append(list(img))
    std = Matrix.from_columns(F, cols)
    return basis_cols.inv() * std


def build_restriction_rep(
    p: int,
    q: Poly,
    f_list: Sequence[Poly],
    g_list: Sequence[Poly],
    alpha: Optional[FieldElem] = None,
) -> Representation:
    """Restrict V over K = GF(p)[X]/(q) to the prime field.

    Parameters over K are f_i(alpha) and g_i(alpha) with alpha the class of
    X by default.  Every K-entry becomes the m x m matrix of multiplication
    by it in the basis 1, alpha, ..., alpha^(m-1); the result is a faithful
    irreducible module of dimension p^n * m over GF(p).
    """
    F = GF(p)
    if q.field != F:
        raise MixedFields("q must be a polynomial over GF(p)")
    if len(f_list) != len(g_list) or not f_list:
        raise ValueError("need equally many f and g polynomials, at least one")
    for h in list(f_list) + list(g_list):
        if h.field != F:
            raise MixedFields("f and g must be polynomials over GF(p)")
    K = make_extension(p, q)
    m = K.degree
    if alpha is None:
        alpha = K.generator()
    elif alpha.field != K:
        raise MixedFields("alpha must belong to the extension")
    # basis 1, alpha, ..., alpha^(m-1) must span K over GF(p)
    pow_cols = []
    acc = 1
    for _ in range(m):
        pow_cols.append(list(K.coeffs_of(acc)))
        acc = K.mul(acc, alpha.code)
    basis_cols = Matrix.from_columns(F, pow_cols)
    if basis_cols.rank() != m:
        raise DegreeMismatch("alpha does not have degree m over GF(p)")

    def lift(h: Poly) -> FieldElem:
        # evaluate a prime-field polynomial at alpha inside K
        acc = 0
        for c in reversed(h.coeffs):
            acc = K.add(K.mul(acc, alpha.code), c)
        return FieldElem(K, acc)

    n = len(f_list)
    params = ModuleParams(
        alpha, [lift(h) for h in f_list], [lift(h) for h in g_list]
    )
    over_K = build_V(HeisenbergAlgebra(n, K), params)

    cache: dict[int, Matrix] = {}

    def reg(code: int) -> Matrix:
        got = cache.get(code)
        if got is None:
            got = regular_matrix(K, FieldElem(K, code), basis_cols)
            cache[code] = got
        return got

    def blow_up(mat: Matrix) -> Matrix:
        grid = [
            [reg(mat.code_at(i, j)) for j in range(mat.cols)]
            for i in range(mat.rows)
        ]
        return assemble_grid(grid)

    rep = Representation(
        HeisenbergAlgebra(n, F),
        [blow_up(mx) for mx in over_K.x],
        [blow_up(my) for my in over_K.y],
        blow_up(over_K.z),
    )
    assert validate_rep(rep).ok, "restriction broke the relations"
    return rep


def conjugate_rep(rep: Representation, t: Matrix) -> Representation:
    """The equivalent representation g -> t^-1 rep(g) t."""
    ti = t.inv()
    return Representation(
        rep.algebra,
        [ti * m * t for m in rep.x],
        [ti * m * t for m in rep.y],
        ti * rep.z * t,
    )


def direct_sum_reps(reps: Sequence[Representation]) -> Representation:
    first = reps[0]
    for r in reps[1:]:
        if r.algebra != first.algebra:
            raise MixedFields("summands must share the algebra")
    n = first.n
    return Representation(
        first.algebra,
        [direct_sum([r.x[k] for r in reps]) for k in range(n)],
        [direct_sum([r.y[k] for r in reps]) for k in range(n)],
        direct_sum([r.z for r in reps]),
    )


# -- classification ------------------------------------------------------------


def _pth_power_scalar(m: Matrix, p: int, what: str) -> FieldElem:
    """Extract delta when the minimal polynomial of m has the exact shape
    X^p - delta.

    Equivalent to inspecting min_poly(m) but much cheaper: the minimal
    polynomial equals X^p - delta iff m^p is the scalar delta (it then
    divides (X - delta^{1/p})^p) and the nilpotent part (m - delta^{1/p})
    has order exactly p.
    """
    power = m**p
    delta = power.is_scalar()
    if delta is None:
        raise MinPolyShape(f"minimal polynomial of {what} is not X^{p} - c")
    beta = delta.pth_root()
    nil = m - Matrix.scalar(m.field, m.rows, beta)
    if (nil ** (p - 1)).is_zero():
        raise MinPolyShape(
            f"minimal polynomial of {what} divides X^{p} - c properly"
        )
    return delta


def _central_scalar(rep: Representation) -> FieldElem:
    c = rep.z.is_scalar()
    if c is None or c.code == 0:
        raise NotScalarCenter("z must act as a nonzero scalar")
    return c


def invariants(rep: Representation) -> InvariantTuple:
    """(alpha, deltas, epsilons) for a relation-checked module of dimension
    p^n with scalar central action."""
    field = rep.field
    p = field.p
    alpha = _central_scalar(rep)
    if rep.dim != p**rep.n:
        raise WrongDimension(f"dimension {rep.dim} is not p^n = {p**rep.n}")
    deltas = tuple(
        _pth_power_scalar(m, p, f"x{k + 1}") for k, m in enumerate(rep.x)
    )
    epsilons = tuple(
        _pth_power_scalar(m, p, f"y{k + 1}") for k, m in enumerate(rep.y)
    )
    return InvariantTuple(alpha, deltas, epsilons)


def classify(rep: Representation) -> tuple[ModuleParams, Matrix]:
    """Parameters and an exact equivalence onto the truncated polynomial
    module: the returned t satisfies t^-1 rep(g) t = build_V(params)(g).

    The basis behind t is the common eigenvector of all x images followed
    by its shifts under the y images, in mixed radix order.
    """
    field = rep.field
    p = field.p
    n = rep.n
    inv = invariants(rep)
    alpha = inv.alpha
    betas = [d.pth_root() for d in inv.deltas]
    gammas = [e.pth_root() for e in inv.epsilons]
    d = rep.dim

    # common eigenvector: kernel of all x_k - beta_k stacked vertically
    stacked_rows = []
    for k in range(n):
        shifted = rep.x[k] - Matrix.scalar(field, d, betas[k])
        stacked_rows.extend(shifted.row_lists())
    stacked = Matrix(field, n * d, d, [e for row in stacked_rows for e in row])
    kernel = stacked.kernel_basis()
    assert kernel, "commuting nilpotent images must share an eigenvector"
    v = kernel[0]

    shifts = [rep.y[k] - Matrix.scalar(field, d, gammas[k]) for k in range(n)]
    cols = []
    for idx in range(p**n):
        exps = []
        rest = idx
        for _ in range(n):
            exps.append(rest % p)
            rest //= p
        exps.reverse()  # exps[0] pairs with y_1, the most significant digit
        w = list(v)
        for k in range(n):
            for _ in range(exps[k]):
                w = shifts[k].apply(w)
        cols.append(w)
    t = Matrix.from_columns(field, cols)
    params = ModuleParams(alpha, betas, gammas)
    model = build_V(rep.algebra, params)
    assert not t.det().is_zero(), "classification basis must be invertible"
    for (_, m), (_, want) in zip(rep.generators(), model.generators()):
        # m t == t model is conjugacy since t is invertible
        assert m * t == t * want, "classification transform failed to verify"
    return params, t


# -- matrix triples ---------------------------------------------------------------


def _check_triple(a: Matrix, b: Matrix, c: Matrix) -> FieldElem:
    field = a.field
    if b.field != field or c.field != field:
        raise MixedFields("triple must share one field")
    p = field.p
    for m in (a, b, c):
        if m.rows != m.cols or m.rows != p:
            raise WrongDimension(f"triple must consist of {p} x {p} matrices")
    if commutator(a, b) != c:
        raise RelationViolated("[A, B] != C")
    alpha = c.is_scalar()
    if alpha is None or alpha.code == 0:
        # the relations force this; reject inputs that fail it
        if c.is_zero():
            raise RelationViolated("C must be nonzero")
        if commutator(a, c).is_zero() and commutator(b, c).is_zero():
            raise NotScalarCenter("C commutes with A and B but is not scalar")
        raise RelationViolated("[A, C] != 0 or [B, C] != 0")
    return alpha


def canonical_pair(a: Matrix, b: Matrix, c: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Normal forms (A', B') and a transform X for a triple with [A,B] = C,
    C a nonzero scalar: A' has beta on the diagonal and i*alpha above it,
    B' has gamma on the diagonal and ones below it.

    X's columns are an eigenvector of A followed by its (B - gamma) shifts;
    X^-1 A X = A' and X^-1 B X = B'.
    """
    alpha = _check_triple(a, b, c)
    field = a.field
    p = field.p
    beta = a.det().pth_root()
    gamma = b.det().pth_root()
    kernel = (a - Matrix.scalar(field, p, beta)).kernel_basis()
    assert kernel, "A - beta must be singular"
    cols = [kernel[0]]
    shift = b - Matrix.scalar(field, p, gamma)
    for _ in range(p - 1):
        cols.append(shift.apply(cols[-1]))
    x = Matrix.from_columns(field, cols)
    a_form = build_M(p, alpha, beta)
    b_form = jordan_block(field, gamma, p)
    xi = x.inv()
    assert xi * a * x == a_form and xi * b * x == b_form, (
        "normal form transform failed to verify"
    )
    return a_form, b_form, x


def triple_similarity(
    t1: tuple[Matrix, Matrix, Matrix], t2: tuple[Matrix, Matrix, Matrix]
) -> Optional[Matrix]:
    """A simultaneous similarity X (X^-1 A1 X = A2 and so on), or None.

    Triples are similar exactly when the three determinants agree.
    """
    a1, b1, c1 = t1
    a2, b2, c2 = t2
    _check_triple(a1, b1, c1)
    _check_triple(a2, b2, c2)
    if a1.field != a2.field:
        raise MixedFields("triples must share one field")
    if (a1.det(), b1.det(), c1.det()) != (a2.det(), b2.det(), c2.det()):
        return None
    _, _, x1 = canonical_pair(a1, b1, c1)
    _, _, x2 = canonical_pair(a2, b2, c2)
    x = x1 * x2.inv()
    xi = x.inv()
    assert xi * a1 * x == a2 and xi * b1 * x == b2 and xi * c1 * x == c2
    return x
