"""Submodule structure of matrix representations.

A subspace is stored as the unique reduced echelon basis of row vectors, so
subspace equality is tuple equality.  Spinning closes a vector under all
generator images.  Irreducibility is decided by exhaustive spinning of one
representative per 1-dimensional subspace when the ambient count q^dim is
small, and by the randomized kernel test (spin every kernel vector of a
singular algebra element, then one transposed spin) above that bound; the
randomized path never guesses: it either exhibits a submodule, certifies
irreducibility, or raises after the sample budget.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import (
    DoesNotSplit,
    MixedFields,
    NotExtension,
    ShapeMismatch,
    TooLarge,
    UndecidedIrreducibility,
    ZeroAlpha,
)
from .fields import Field, FieldElem, GF, Poly, is_prime
from .heisenberg import (
    HeisenbergAlgebra,
    InvariantTuple,
    Representation,
    build_standard,
    commutator,
    invariants,
    validate_rep,
)
from .matrices import Echelon, Matrix, min_poly, poly_at

_EXHAUSTIVE_BOUND = 1 << 24


class SubspaceBasis:
    """A subspace of F^d held as its reduced echelon basis."""

    __slots__ = ("field", "ambient", "vectors")

    def __init__(self, field: Field, ambient: int, vectors: Sequence[Sequence[int]]):
        ech = Echelon(field, ambient)
        for v in vectors:
            if len(v) != ambient:
                raise ShapeMismatch("vector length differs from ambient dimension")
            ech.insert(v)
        self.field = field
        self.ambient = ambient
        self.vectors = tuple(tuple(v) for v in ech.sorted_rows())

    @classmethod
    def _from_echelon(cls, ech: Echelon) -> "SubspaceBasis":
        s = object.__new__(cls)
        s.field = ech.field
        s.ambient = ech.width
        s.vectors = tuple(tuple(v) for v in ech.sorted_rows())
        return s

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def pivots(self) -> list[int]:
        out = []
        for v in self.vectors:
            for i, x in enumerate(v):
                if x:
                    out.append(i)
                    break
        return out

    def _echelon(self) -> Echelon:
        e = Echelon(self.field, self.ambient)
        e.vectors = [list(v) for v in self.vectors]
        e.pivots = self.pivots()
        return e

    def contains(self, v: Sequence[int]) -> bool:
        return self._echelon().contains(v)

    def contains_subspace(self, other: "SubspaceBasis") -> bool:
        e = self._echelon()
        return all(e.contains(v) for v in other.vectors)

    def is_invariant(self, rep: Representation) -> bool:
        e = self._echelon()
        for g in rep.gen_matrices():
            for v in self.vectors:
                if not e.contains(g.apply(list(v))):
                    return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, SubspaceBasis)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.vectors == other.vectors
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.vectors))

    def __repr__(self):
        return f"SubspaceBasis(dim={self.dim} of {self.ambient} over {self.field})"


def spin(rep: Representation, v: Sequence[int]) -> SubspaceBasis:
    """The smallest invariant subspace containing v."""
    d = rep.dim
    if len(v) != d:
        raise ShapeMismatch("seed length differs from the dimension")
    field = rep.field
    ech = Echelon(field, d)
    if ech.insert(v) is None:
        return SubspaceBasis._from_echelon(ech)
    gens = rep.gen_matrices()
    queue = [list(v)]
    while queue and ech.dim < d:
        u = queue.pop()
        for g in gens:
            w = g.apply(u)
            if ech.insert(w) is not None:
                queue.append(w)
                if ech.dim == d:
                    break
    return SubspaceBasis._from_echelon(ech)


def _canonical_lines(field: Field, d: int, reverse: bool = False
                     ) -> Iterator[list[int]]:
    """One vector per 1-dimensional subspace: first nonzero entry is 1."""
    q = field.order
    leads = range(d - 1, -1, -1) if reverse else range(d)
    for lead in leads:
        tail_len = d - lead - 1
        total = q**tail_len
        codes = range(total - 1, -1, -1) if reverse else range(total)
        for code in codes:
            v = [0] * d
            v[lead] = 1
            rest = code
            for i in range(tail_len):
                v[lead + 1 + i] = rest % q
                rest //= q
            yield v


@dataclass
class IrreducibilityResult:
    irreducible: bool
    method: str
    detail: str
    submodule: Optional[SubspaceBasis]

    def __bool__(self):
        return self.irreducible


def is_irreducible(
    rep: Representation,
    max_samples: int = 64,
    seed: int = 0,
    reverse_seeds: bool = False,
) -> IrreducibilityResult:
    """Decide irreducibility with a certificate, never by guessing."""
    d = rep.dim
    if d == 0:
        raise ShapeMismatch("irreducibility needs dimension >= 1")
    field = rep.field
    if field.order**d <= _EXHAUSTIVE_BOUND:
        count = 0
        for v in _canonical_lines(field, d, reverse_seeds):
            count += 1
            s = spin(rep, v)
            if s.dim < d:
                return IrreducibilityResult(
                    False,
                    "exhaustive-spin",
                    f"line {count} generates a dim {s.dim} submodule",
                    s,
                )
        return IrreducibilityResult(
            True, "exhaustive-spin", f"all {count} lines spin to the full space",
            None,
        )
    return _norton(rep, max_samples, seed)


def _norton(rep: Representation, max_samples: int, seed: int
            ) -> IrreducibilityResult:
    """Randomized kernel test on singular elements of the image algebra."""
    field = rep.field
    d = rep.dim
    rng = random.Random(seed)
    pool = [m for m in rep.gen_matrices() if not m.is_zero()]
    pool.append(Matrix.identity(field, d))
    transposed = Representation(
        rep.algebra,
        [m.transpose() for m in rep.x],
        [m.transpose() for m in rep.y],
        rep.z.transpose(),
    )
    for attempt in range(max_samples):
        if attempt:
            # enrich the sampling pool with algebra words
            a, b = rng.choice(pool), rng.choice(pool)
            pool.append(a * b)
        terms = rng.randrange(2, 5)
        t = Matrix.zeros(field, d, d)
        for _ in range(terms):
            coeff = rng.randrange(1, field.order)
            t = t + rng.choice(pool) * coeff
        if t.is_zero():
            continue
        kernel = t.kernel_basis()
        if not kernel:
            continue
        for v in kernel:
            s = spin(rep, v)
            if s.dim < d:
                return IrreducibilityResult(
                    False,
                    "norton",
                    f"kernel vector of sample {attempt + 1} generates a "
                    f"dim {s.dim} submodule",
                    s,
                )
        w = t.transpose().kernel_basis()[0]
        s = spin(transposed, w)
        if s.dim < d:
            # the annihilator of a proper transposed submodule is invariant
            rows = [list(r) for r in s.vectors]
            ann = Matrix(field, s.dim, d, [x for r in rows for x in r])
            sub = SubspaceBasis(field, d, ann.kernel_basis())
            assert 0 < sub.dim < d and sub.is_invariant(rep)
            return IrreducibilityResult(
                False,
                "norton",
                f"transposed kernel vector of sample {attempt + 1} exposes a "
                f"dim {sub.dim} submodule",
                sub,
            )
        return IrreducibilityResult(
            True,
            "norton",
            f"sample {attempt + 1}: every kernel spin and a transposed "
            "kernel spin fill the space",
            None,
        )
    raise UndecidedIrreducibility(
        f"no singular algebra element found in {max_samples} samples"
    )


# -- subquotients -----------------------------------------------------------------


def sub_representation(
    rep: Representation, basis: SubspaceBasis
) -> Representation:
    """The action restricted to an invariant subspace, in its echelon basis."""
    rows = [list(v) for v in basis.vectors]
    pivots = basis.pivots()
    field = rep.field

    def restrict(g: Matrix) -> Matrix:
        cols = []
        for b in rows:
            img = g.apply(b)
            coords = [img[p] for p in pivots]
            # invariance check: the coordinates must reconstruct the image
            recon = [0] * rep.dim
            add, mul = field.add, field.mul
            for c, b2 in zip(coords, rows):
                if c:
                    for i, x in enumerate(b2):
                        if x:
                            recon[i] = add(recon[i], mul(c, x))
            if recon != img:
                raise ShapeMismatch("subspace is not invariant")
            cols.append(coords)
        return Matrix.from_columns(field, cols)

    return Representation(
        rep.algebra,
        [restrict(m) for m in rep.x],
        [restrict(m) for m in rep.y],
        restrict(rep.z),
    )


def quotient_representation(
    rep: Representation, basis: SubspaceBasis
) -> Representation:
    """The action on the quotient, in the complement-coordinate basis.

    Coordinates are read off at the non-pivot positions after reducing by
    the subspace basis.
    """
    field = rep.field
    d = rep.dim
    ech = basis._echelon()
    pivset = set(basis.pivots())
    free = [i for i in range(d) if i not in pivset]

    def project(v: Sequence[int]) -> list[int]:
        r = ech.reduce(v)
        return [r[i] for i in free]

    def act(g: Matrix) -> Matrix:
        cols = []
        for pos in free:
            e = [0] * d
            e[pos] = 1
            cols.append(project(g.apply(e)))
        return Matrix.from_columns(field, cols)

    return Representation(
        rep.algebra,
        [act(m) for m in rep.x],
        [act(m) for m in rep.y],
        act(rep.z),
    )


@dataclass
class CompositionFactor:
    dim: int
    faithful: bool
    invariants: Optional[InvariantTuple]
    rep: Representation


@dataclass
class CompositionSeries:
    chain: list[SubspaceBasis]
    factors: list[CompositionFactor]

    @property
    def chain_dims(self) -> list[int]:
        return [s.dim for s in self.chain]


def _factor_info(rep: Representation) -> CompositionFactor:
    faithful = rep.is_faithful()
    inv = None
    if faithful and rep.dim == rep.field.p**rep.n:
        try:
            inv = invariants(rep)
        except Exception:
            inv = None
    return CompositionFactor(rep.dim, faithful, inv, rep)


def composition_series(
    rep: Representation,
    max_samples: int = 64,
    seed: int = 0,
    reverse_seeds: bool = False,
) -> CompositionSeries:
    """A full chain of invariant subspaces with irreducible quotients."""
    field = rep.field
    d = rep.dim
    res = is_irreducible(rep, max_samples, seed, reverse_seeds)
    empty = SubspaceBasis(field, d, [])
    full = SubspaceBasis(field, d, Matrix.identity(field, d).row_lists())
    if res.irreducible:
        return CompositionSeries([empty, full], [_factor_info(rep)])
    w = res.submodule
    assert w is not None
    sub = sub_representation(rep, w)
    quot = quotient_representation(rep, w)
    lower = composition_series(sub, max_samples, seed, reverse_seeds)
    upper = composition_series(quot, max_samples, seed, reverse_seeds)

    w_rows = [list(v) for v in w.vectors]
    pivset = set(w.pivots())
    free = [i for i in range(d) if i not in pivset]
    add, mul = field.add, field.mul

    def lift_sub(space: SubspaceBasis) -> SubspaceBasis:
        out = []
        for coords in space.vectors:
            v = [0] * d
            for c, b in zip(coords, w_rows):
                if c:
                    for i, x in enumerate(b):
                        if x:
                            v[i] = add(v[i], mul(c, x))
            out.append(v)
        return SubspaceBasis(field, d, out)

    def lift_quot(space: SubspaceBasis) -> SubspaceBasis:
        out = list(w_rows)
        for coords in space.vectors:
            v = [0] * d
            for c, pos in zip(coords, free):
                v[pos] = c
            out.append(v)
        return SubspaceBasis(field, d, out)

    chain = [empty]
    chain.extend(lift_sub(s) for s in lower.chain[1:])
    chain.extend(lift_quot(s) for s in upper.chain[1:])
    series = CompositionSeries(chain, lower.factors + upper.factors)
    dims = series.chain_dims
    assert dims[0] == 0 and dims[-1] == d
    assert all(a < b for a, b in zip(dims, dims[1:]))
    assert all(s.is_invariant(rep) for s in chain[1:-1])
    return series


def is_uniserial(rep: Representation) -> bool:
    """True when the invariant subspaces form a chain.

    Every submodule is a sum of cyclic ones, so the lattice is a chain
    exactly when the spins of all 1-dimensional subspaces are totally
    ordered by inclusion.
    """
    field = rep.field
    d = rep.dim
    if field.order**d > _EXHAUSTIVE_BOUND:
        raise TooLarge(
            f"uniserial check would enumerate {field.order}^{d} vectors"
        )
    distinct: dict[tuple, SubspaceBasis] = {}
    for v in _canonical_lines(field, d):
        s = spin(rep, v)
        distinct.setdefault(s.vectors, s)
    spins = sorted(distinct.values(), key=lambda s: s.dim)
    for a, b in zip(spins, spins[1:]):
        if a.dim == b.dim or not b.contains_subspace(a):
            return False
    return True


# -- homomorphisms and the image algebra ---------------------------------------


def hom_space(r1: Representation, r2: Representation) -> list[Matrix]:
    """Basis of the intertwiners t with t r1(g) = r2(g) t."""
    if r1.field != r2.field:
        raise MixedFields("modules must share one field")
    if r1.algebra != r2.algebra:
        raise ShapeMismatch("modules must belong to one algebra")
    field = r1.field
    d1, d2 = r1.dim, r2.dim
    unknowns = d2 * d1
    rows = []
    sub = field.sub
    for a, b in zip(r1.gen_matrices(), r2.gen_matrices()):
        for i in range(d2):
            for j in range(d1):
                row = [0] * unknowns
                for k in range(d1):
                    row[i * d1 + k] = a.code_at(k, j)
                for k in range(d2):
                    row[k * d1 + j] = sub(row[k * d1 + j], b.code_at(i, k))
                rows.append(row)
    m = Matrix(field, len(rows), unknowns, [x for r in rows for x in r])
    return [
        Matrix(field, d2, d1, v) for v in m.kernel_basis()
    ]


class EnvelopingAlgebra:
    """The unital matrix algebra generated by the images, as a subspace of
    d x d matrices closed under left multiplication by the generators."""

    __slots__ = ("field", "size", "basis", "_ech")

    def __init__(self, rep: Representation):
        field = rep.field
        d = rep.dim
        self.field = field
        self.size = d
        self._ech = Echelon(field, d * d)
        self.basis: list[Matrix] = []
        gens = [m for m in rep.gen_matrices()]
        queue = []
        for m in [Matrix.identity(field, d)] + gens:
            if self._ech.insert(m.data) is not None:
                self.basis.append(m)
                queue.append(m)
        while queue:
            m = queue.pop()
            for g in gens:
                w = g * m
                if self._ech.insert(w.data) is not None:
                    self.basis.append(w)
                    queue.append(w)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, m: Matrix) -> bool:
        if (m.rows, m.cols) != (self.size, self.size) or m.field != self.field:
            return False
        return self._ech.contains(m.data)


def enveloping_algebra(rep: Representation) -> EnvelopingAlgebra:
    return EnvelopingAlgebra(rep)


def condition_c(rep: Representation, target: Matrix) -> bool:
    """Membership of the target operator in the image algebra."""
    return enveloping_algebra(rep).contains(target)


# -- change of scalars ------------------------------------------------------------


def field_embedding(F: Field, K: Field):
    """A ring embedding F -> K as a code map, or NotExtension."""
    if F.p != K.p:
        raise NotExtension(f"{K} does not contain {F}: different characteristic")
    if F.modulus is None:
        return lambda c: c
    if F == K:
        return lambda c: c
    # image of the generator: a root of F's modulus inside K
    mod = F.modulus
    root = None
    for cand in range(K.order):
        acc = 0
        for c in reversed(mod):
            acc = K.add(K.mul(acc, cand), c)
        if acc == 0:
            root = cand
            break
    if root is None:
        raise NotExtension(f"{K} contains no root of the modulus of {F}")

    def embed(code: int) -> int:
        acc = 0
        for c in reversed(F.coeffs_of(code)):
            acc = K.add(K.mul(acc, root), c)
        return acc

    return embed


def extend_scalars(rep: Representation, K: Field) -> Representation:
    """The same matrices read over the larger field K."""
    embed = field_embedding(rep.field, K)

    def lift(m: Matrix) -> Matrix:
        return Matrix(K, m.rows, m.cols, [embed(c) for c in m.data])

    return Representation(
        HeisenbergAlgebra(rep.n, K),
        [lift(m) for m in rep.x],
        [lift(m) for m in rep.y],
        lift(rep.z),
    )


@dataclass
class Summand:
    eigenvalue: FieldElem
    basis: SubspaceBasis
    rep: Representation


def split_by_central(
    rep: Representation, central: Optional[Matrix] = None
) -> list[Summand]:
    """Decompose along the generalized eigenspaces of a central operator.

    The default operator is the p-th power of the first y image, which
    commutes with every generator.  Raises DoesNotSplit when its minimal
    polynomial has a rootless factor over the coefficient field.
    """
    field = rep.field
    d = rep.dim
    if central is None:
        central = rep.y[0] ** field.p
    for _, g in rep.generators():
        if not commutator(central, g).is_zero():
            raise ShapeMismatch("splitting operator must be central")
    m = min_poly(central)
    roots = []
    for lam in range(field.order):
        lin = Poly(field, [field.neg(lam), 1])
        mult = 0
        while m.degree >= 1 and m(lam).code == 0:
            m = m // lin
            mult += 1
        if mult:
            roots.append(lam)
    if m.degree > 0:
        raise DoesNotSplit(f"minimal polynomial factor {m!r} has no roots")
    out = []
    total = 0
    for lam in roots:
        shifted = central - Matrix.scalar(field, d, lam)
        basis = SubspaceBasis(field, d, (shifted**d).kernel_basis())
        total += basis.dim
        out.append(
            Summand(FieldElem(field, lam), basis, sub_representation(rep, basis))
        )
    assert total == d, "generalized eigenspaces must fill the space"
    return out


# -- exhaustive search -------------------------------------------------------------


@dataclass
class SearchResult:
    found: bool
    rep: Optional[Representation]
    pairs_tested: int
    mode: str


def search_min_faithful(n: int, p: int, d: int) -> SearchResult:
    """Look for a faithful h(n)-representation of dimension d over GF(p).

    d = n + 2 returns the strictly upper triangular witness directly.  Any
    other d runs an exhaustive scan over all pairs of d x d matrices for
    rank 1, which is feasible only while p^(2 d^2) stays within 2^32.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    field = GF(p)
    if d == n + 2:
        rep = build_standard(HeisenbergAlgebra(n, field))
        assert validate_rep(rep).ok and rep.is_faithful()
        return SearchResult(True, rep, 0, "witness")
    if n != 1:
        raise TooLarge("exhaustive search supports rank 1 only")
    total = p ** (2 * d * d)
    if total > 1 << 32:
        raise TooLarge(f"{total} pairs exceed the 2^32 search bound")
    import numpy as np

    count = p ** (d * d)
    mats = np.array(
        list(itertools.product(range(p), repeat=d * d)), dtype=np.int16
    ).reshape(count, d, d)
    chunk = max(1, (1 << 22) // (count * d * d))
    pairs = 0
    witness = None
    for start in range(0, count, chunk):
        A = mats[start : start + chunk]
        AB = np.einsum("aij,bjk->abik", A, mats) % p
        BA = np.einsum("bij,ajk->abik", mats, A) % p
        C = (AB - BA) % p
        nonzero = C.any(axis=(2, 3))
        AC = np.einsum("aij,abjk->abik", A, C) % p
        CA = np.einsum("abij,ajk->abik", C, A) % p
        BC = np.einsum("bij,abjk->abik", mats, C) % p
        CB = np.einsum("abij,bjk->abik", C, mats) % p
        ok = (
            nonzero
            & (AC == CA).all(axis=(2, 3))
            & (BC == CB).all(axis=(2, 3))
        )
        pairs += A.shape[0] * count
        if ok.any():
            ai, bi = (int(v) for v in np.argwhere(ok)[0])
            a = Matrix(field, d, d, [int(v) for v in mats[start + ai].flat])
            b = Matrix(field, d, d, [int(v) for v in mats[bi].flat])
            c = commutator(a, b)
            witness = Representation(HeisenbergAlgebra(1, field), [a], [b], c)
            assert validate_rep(witness).ok and witness.is_faithful()
            break
    return SearchResult(witness is not None, witness, pairs, "exhaustive")
