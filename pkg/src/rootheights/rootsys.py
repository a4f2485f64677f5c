"""Finite root systems built from Cartan matrices.

Roots live in the root lattice and are written in the basis of simple roots,
so every root is an integer vector.  The Cartan matrix uses the convention
``A[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``; with it the pairing
``2 (beta, alpha_i) / (alpha_i, alpha_i)`` is the i-th entry of ``A @ b``.
Simple roots are numbered as in Bourbaki's tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import (
    ConsistencyError,
    DomainError,
    NotFiniteTypeError,
    PreconditionError,
    WeylGroupTooLargeError,
)

DEFAULT_HEIGHT_CAP = 100
DEFAULT_WEYL_ORDER_CAP = 10**7

Matrix = tuple[tuple[int, ...], ...]


class RootVector(tuple):
    """Element of the root lattice in simple-root coordinates."""

    __slots__ = ()

    def __new__(cls, coords: Iterable[int]) -> RootVector:
        return super().__new__(cls, (int(c) for c in coords))

    @property
    def coords(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def height(self) -> int:
        return sum(self)

    def is_nonnegative(self) -> bool:
        """True when the vector lies in Q+ (all coordinates >= 0)."""
        return all(c >= 0 for c in self)

    def __add__(self, other: Sequence[int]) -> RootVector:  # type: ignore[override]
        return RootVector(a + b for a, b in zip(self, other, strict=True))

    def __sub__(self, other: Sequence[int]) -> RootVector:
        return RootVector(a - b for a, b in zip(self, other, strict=True))

    def __neg__(self) -> RootVector:
        return RootVector(-a for a in self)

    def scale(self, k: int) -> RootVector:
        return RootVector(k * a for a in self)

    def __repr__(self) -> str:
        return f"RootVector({list(self)})"

    def label(self) -> str:
        return ",".join(str(c) for c in self)


def unit(n: int, i: int, k: int = 1) -> RootVector:
    return RootVector(k if j == i else 0 for j in range(n))


@dataclass(frozen=True)
class CartanMatrix:
    entries: Matrix
    symmetrizer: tuple[int, ...]
    label: str = ""

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]], label: str = "") -> CartanMatrix:
        """Validate a generalized Cartan matrix and attach its minimal symmetrizer."""
        a = tuple(tuple(int(x) for x in row) for row in entries)
        n = len(a)
        if n == 0:
            raise DomainError("Cartan matrix must have positive rank")
        for i, row in enumerate(a):
            if len(row) != n:
                raise DomainError("Cartan matrix must be square")
            if row[i] != 2:
                raise DomainError(f"diagonal entry A[{i}][{i}] = {row[i]}, expected 2")
            for j, x in enumerate(row):
                if i == j:
                    continue
                if x > 0:
                    raise DomainError(f"off-diagonal entry A[{i}][{j}] = {x} is positive")
                if (x == 0) != (a[j][i] == 0):
                    raise DomainError(f"zero pattern not symmetric at ({i}, {j})")
        return cls(a, _symmetrizer(a), label)

    def inner(self, x: Sequence[int], y: Sequence[int]) -> int:
        """Symmetric form ``sum d_i A_ij x_i y_j``, scaled so that it is integral."""
        a, d = self.entries, self.symmetrizer
        total = 0
        for i, xi in enumerate(x):
            if xi:
                row = a[i]
                total += d[i] * xi * sum(row[j] * yj for j, yj in enumerate(y))
        return total


def _symmetrizer(a: Matrix) -> tuple[int, ...]:
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or a[i][j] == 0:
                    continue
                dj = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = dj
                    stack.append(j)
                elif d[j] != dj:
                    raise DomainError("Cartan matrix is not symmetrizable")
    denom = reduce(lcm, (x.denominator for x in d), 1)
    ints = [int(x * denom) for x in d]
    g = reduce(gcd, ints)
    return tuple(x // g for x in ints)


_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def cartan_matrix(family: str, rank: int) -> CartanMatrix:
    """Standard Cartan matrix of type ``family``\\ ``rank`` (Bourbaki numbering)."""
    fam = str(family).upper()
    valid = (fam in _MIN_RANK and isinstance(rank, int) and rank >= _MIN_RANK[fam]) or (
        fam in _EXCEPTIONAL and rank in _EXCEPTIONAL[fam]
    )
    if not valid:
        raise DomainError(f"no simple Lie algebra of type ({family}, {rank})")
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if fam in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if fam == "B":
            # alpha_n short
            link(n - 2, n - 1, -1, -2)
        elif fam == "C":
            # alpha_n long
            link(n - 2, n - 1, -2, -1)
    elif fam == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif fam == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    else:
        link(0, 1, -1, -3)
    return CartanMatrix.from_entries(a, label=f"{fam}{n}")


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    sign: int
    length: int = 0

    def apply(self, v: Sequence) -> tuple:
        return tuple(sum(m * x for m, x in zip(row, v)) for row in self.matrix)

    def compose(self, other: WeylElement) -> WeylElement:
        """Matrix of ``self`` after ``other``; length is not tracked."""
        cols = list(zip(*other.matrix))
        m = tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.matrix)
        return WeylElement(m, self.sign * other.sign, -1)


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanMatrix
    positive_roots: tuple[RootVector, ...]
    rho: tuple[Fraction, ...]
    theta: RootVector
    height_counts: tuple[int, ...]
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.cartan.n

    @property
    def label(self) -> str:
        return self.cartan.label or f"rank{self.rank}"

    @property
    def simple_roots(self) -> tuple[RootVector, ...]:
        return tuple(unit(self.rank, i) for i in range(self.rank))

    def index_of(self, beta: Sequence[int]) -> int:
        """Position of a positive root in ``positive_roots``; KeyError if absent."""
        return self._index[tuple(beta)]

    def is_positive_root(self, beta: Sequence[int]) -> bool:
        return tuple(beta) in self._index

    def pairing(self, beta: Sequence[int], i: int) -> int:
        _check_index(i, self.rank)
        return sum(aij * bj for aij, bj in zip(self.cartan.entries[i], beta))

    def inner(self, x: Sequence[int], y: Sequence[int]) -> int:
        return self.cartan.inner(x, y)

    def simple_reflection(self, i: int, beta: Sequence[int]) -> RootVector:
        k = self.pairing(beta, i)
        return RootVector(b - k if j == i else b for j, b in enumerate(beta))

    def root_string_length(self, beta: Sequence[int], i: int) -> int:
        """Return k such that beta, beta - alpha_i, ..., beta - k alpha_i are the
        positive roots on the alpha_i-string from beta down to s_i(beta)."""
        k = self.pairing(beta, i)
        if k <= 0:
            raise PreconditionError(f"(beta, alpha_{i + 1}) <= 0 for beta={list(beta)}")
        if not self.is_positive_root(beta):
            raise PreconditionError(f"{list(beta)} is not a positive root")
        for j in range(k + 1):
            member = RootVector(b - j if m == i else b for m, b in enumerate(beta))
            if not self.is_positive_root(member):
                raise ConsistencyError(f"alpha_{i + 1}-string member {list(member)} is not a positive root")
        return k

    def max_height(self) -> int:
        return self.theta.height


def _check_index(i: int, n: int) -> None:
    if not 0 <= i < n:
        raise IndexError(f"simple-root index {i} out of range for rank {n}")


def build_root_system(cartan: CartanMatrix, height_cap: int = DEFAULT_HEIGHT_CAP) -> RootSystem:
    """Compute the positive roots by closure, height by height.

    For a root beta of height h and a simple index i, the alpha_i-string
    through beta runs from beta - r alpha_i to beta + q alpha_i with
    r - q equal to the pairing; r is known from lower heights, so beta +
    alpha_i is a root exactly when q > 0.
    """
    if height_cap < 1:
        raise DomainError("height_cap must be >= 1")
    n = cartan.n
    a = cartan.entries
    known: set[tuple[int, ...]] = set()
    layers: list[list[tuple[int, ...]]] = []
    layer = [unit(n, i).coords for i in range(n)]
    known.update(layer)
    while layer:
        layers.append(sorted(layer))
        nxt: set[tuple[int, ...]] = set()
        for beta in layer:
            for i in range(n):
                if beta == unit(n, i).coords:
                    continue
                down = list(beta)
                r = 0
                while True:
                    down[i] -= 1
                    if tuple(down) not in known:
                        break
                    r += 1
                q = r - sum(a[i][j] * beta[j] for j in range(n))
                if q > 0:
                    up = tuple(b + 1 if j == i else b for j, b in enumerate(beta))
                    nxt.add(up)
        if nxt and len(layers) + 1 > height_cap:
            raise NotFiniteTypeError(
                f"root closure exceeds height cap {height_cap}; Cartan matrix is not of finite type"
            )
        known.update(nxt)
        layer = list(nxt)

    roots = tuple(RootVector(b) for lay in layers for b in lay)
    index = {r.coords: k for k, r in enumerate(roots)}

    half_sum = [Fraction(sum(col), 2) for col in zip(*roots)]
    rho = tuple(_solve_exact(a, [1] * n))
    if list(rho) != half_sum:
        raise ConsistencyError("rho from the linear solve differs from the half-sum of positive roots")

    norms = [cartan.inner(r, r) for r in roots]
    long_norm = max(norms)
    top = max(r.height for r, nm in zip(roots, norms) if nm == long_norm)
    candidates = [r for r, nm in zip(roots, norms) if nm == long_norm and r.height == top]
    if len(candidates) != 1:
        raise DomainError(
            f"highest long root is not unique ({len(candidates)} candidates); is the Dynkin diagram connected?"
        )
    theta = candidates[0]

    counts = tuple(len(lay) for lay in layers)
    return RootSystem(cartan, roots, rho, theta, counts, index)


def root_system(family: str, rank: int, height_cap: int = DEFAULT_HEIGHT_CAP) -> RootSystem:
    return build_root_system(cartan_matrix(family, rank), height_cap)


def _solve_exact(a: Matrix, rhs: Sequence[int]) -> list[Fraction]:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(a, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise DomainError("Cartan matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def reflection_matrix(cartan: CartanMatrix, i: int) -> Matrix:
    n = cartan.n
    row_i = cartan.entries[i]
    return tuple(
        tuple((1 if r == c else 0) - (row_i[c] if r == i else 0) for c in range(n)) for r in range(n)
    )


def _left_reflect(m: Matrix, i: int, neighbours: Sequence[tuple[int, int]]) -> Matrix:
    # s_i M: row i becomes -row_i(M) - sum_{j != i} A_ij row_j(M)
    row = [-x for x in m[i]]
    for j, aij in neighbours:
        row = [x - aij * y for x, y in zip(row, m[j])]
    return m[:i] + (tuple(row),) + m[i + 1 :]


def weyl_group(system: RootSystem, order_cap: int = DEFAULT_WEYL_ORDER_CAP) -> list[WeylElement]:
    """All Weyl group elements by breadth-first closure under simple reflections.

    Elements are ordered by word length, then lexicographically by matrix.
    """
    if order_cap < 1:
        raise DomainError("order_cap must be >= 1")
    n = system.rank
    a = system.cartan.entries
    neighbours = [[(j, a[i][j]) for j in range(n) if j != i and a[i][j]] for i in range(n)]
    identity: Matrix = tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))
    seen = {identity}
    out = [WeylElement(identity, 1, 0)]
    frontier = [identity]
    length = 0
    while frontier:
        length += 1
        sign = -1 if length % 2 else 1
        new: list[Matrix] = []
        for m in frontier:
            for i in range(n):
                w = _left_reflect(m, i, neighbours[i])
                if w not in seen:
                    seen.add(w)
                    new.append(w)
                    if len(seen) > order_cap:
                        raise WeylGroupTooLargeError(order_cap)
        new.sort()
        out.extend(WeylElement(w, sign, length) for w in new)
        frontier = new
    return out


def determinant(m: Matrix) -> int:
    """Exact integer determinant by fraction-free elimination (Bareiss)."""
    n = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
