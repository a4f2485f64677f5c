"""Vector partitions of elements of Q+ into positive roots.

A partition pi of gamma is a choice of multiplicities c_alpha >= 0 with
sum c_alpha * alpha = gamma.  ``n`` counts parts with repetition and ``d``
counts distinct parts; the weight of pi is t^(n-d) (t-1)^d, and the sum of
weights over all partitions of gamma is the coefficient of e^{-gamma} in the
product of the geometric factors.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ConsistencyError, DomainError, PartitionCapError, PreconditionError
from .rootsys import RootSystem, RootVector, unit
from .tpoly import T, T_MINUS_1, TPoly, ZERO

DEFAULT_PARTITION_CAP = 10**7


@dataclass(frozen=True)
class VectorPartition:
    """``multiplicities`` is a tuple of (positive-root index, count) pairs
    with strictly increasing indices and positive counts."""

    multiplicities: tuple[tuple[int, int], ...]
    target: RootVector

    @property
    def n(self) -> int:
        return sum(c for _, c in self.multiplicities)

    @property
    def d(self) -> int:
        return len(self.multiplicities)

    def count(self, root_index: int) -> int:
        for k, c in self.multiplicities:
            if k == root_index:
                return c
        return 0

    def parts(self, system: RootSystem) -> list[tuple[RootVector, int]]:
        return [(system.positive_roots[k], c) for k, c in self.multiplicities]

    def check(self, system: RootSystem) -> None:
        total = [0] * system.rank
        for root, c in self.parts(system):
            for j, b in enumerate(root):
                total[j] += c * b
        if tuple(total) != tuple(self.target):
            raise ConsistencyError(f"parts sum to {total}, not to {list(self.target)}")

    def to_json(self, system: RootSystem) -> list[dict]:
        return [{"root": list(root), "count": c} for root, c in self.parts(system)]


@lru_cache(maxsize=None)
def _weight_nd(n: int, d: int) -> TPoly:
    return T ** (n - d) * T_MINUS_1**d


def weight(pi: VectorPartition) -> TPoly:
    """t^(n - d) (t - 1)^d."""
    return _weight_nd(pi.n, pi.d)


def wt(partitions: Iterable[VectorPartition]) -> TPoly:
    """Total weight of a collection of partitions."""
    tally = Counter((pi.n, pi.d) for pi in partitions)
    total = ZERO
    for (n, d), mult in sorted(tally.items()):
        total = total + mult * _weight_nd(n, d)
    return total


def _as_gamma(gamma: Sequence[int], system: RootSystem) -> RootVector:
    g = RootVector(gamma)
    if len(g) != system.rank:
        raise DomainError(f"{list(g)} has length {len(g)}, expected rank {system.rank}")
    return g


def _multiplicity_vectors(
    gamma: tuple[int, ...], system: RootSystem, cap: int
) -> list[tuple[int, ...]]:
    n = system.rank
    roots = system.positive_roots
    # Descend from the highest root down; the simple roots (indices < n) are
    # forced by whatever remains, so every branch reaching them succeeds.
    order = [k for k in range(len(roots) - 1, -1, -1) if roots[k].height > 1]
    simple_pos = [system.index_of(unit(n, j)) for j in range(n)]
    supports = [[(j, b) for j, b in enumerate(roots[k]) if b] for k in order]
    found: list[tuple[int, ...]] = []
    counts = [0] * len(roots)
    rem = list(gamma)

    def descend(pos: int) -> None:
        if pos == len(order):
            for j in range(n):
                counts[simple_pos[j]] = rem[j]
            found.append(tuple(counts))
            if len(found) > cap:
                raise PartitionCapError(cap)
            return
        k = order[pos]
        supp = supports[pos]
        top = min(rem[j] // b for j, b in supp)
        for c in range(top, -1, -1):
            counts[k] = c
            for j, b in supp:
                rem[j] -= c * b
            descend(pos + 1)
            for j, b in supp:
                rem[j] += c * b
        counts[k] = 0

    descend(0)
    # lexicographically descending in canonical root order
    found.sort(reverse=True)
    return found


def enumerate_partitions(
    gamma: Sequence[int], system: RootSystem, cap: int = DEFAULT_PARTITION_CAP
) -> list[VectorPartition]:
    """Every partition of ``gamma`` into positive roots, without duplicates.

    Partitions are ordered by their multiplicity vectors (indexed by the
    canonical positive-root order), lexicographically descending.  An
    element outside Q+ has no partitions.
    """
    g = _as_gamma(gamma, system)
    if not g.is_nonnegative():
        return []
    vecs = _multiplicity_vectors(g.coords, system, cap)
    return [
        VectorPartition(tuple((k, c) for k, c in enumerate(v) if c), g) for v in vecs
    ]


def nd_counts(gamma: Sequence[int], system: RootSystem, cap: int = DEFAULT_PARTITION_CAP) -> Counter:
    """Tally of (n, d) over the partitions of gamma."""
    g = _as_gamma(gamma, system)
    if not g.is_nonnegative():
        return Counter()
    tally: Counter = Counter()
    for v in _multiplicity_vectors(g.coords, system, cap):
        nz = [c for c in v if c]
        tally[(sum(nz), len(nz))] += 1
    return tally


def xi_coefficient_comb(gamma: Sequence[int], system: RootSystem, cap: int = DEFAULT_PARTITION_CAP) -> TPoly:
    """Coefficient of e^{-gamma} as the weighted sum over vector partitions."""
    g = _as_gamma(gamma, system)
    if not g.is_nonnegative():
        raise DomainError(f"{list(g)} is not in Q+")
    total = ZERO
    for (n, d), mult in sorted(nd_counts(g, system, cap).items()):
        total = total + mult * _weight_nd(n, d)
    return total


def split_by_simple(
    gamma: Sequence[int], i: int, system: RootSystem, cap: int = DEFAULT_PARTITION_CAP
) -> tuple[list[VectorPartition], list[VectorPartition]]:
    """Split the partitions of gamma by whether alpha_i is one of the parts.

    Returns ``(with_alpha_i, without_alpha_i)``, each in enumeration order.
    """
    if not 0 <= i < system.rank:
        raise IndexError(f"simple-root index {i} out of range for rank {system.rank}")
    simple_idx = system.index_of(unit(system.rank, i))
    with_i: list[VectorPartition] = []
    without_i: list[VectorPartition] = []
    for pi in enumerate_partitions(gamma, system, cap):
        (with_i if pi.count(simple_idx) else without_i).append(pi)
    return with_i, without_i


def fact1_map(pi: VectorPartition, i: int, system: RootSystem) -> VectorPartition:
    """Apply s_i to every part of a partition that avoids alpha_i.

    The image is a partition of s_i(target) with the same multiplicities;
    every image part is checked to be a positive root other than alpha_i.
    """
    alpha_i = unit(system.rank, i)
    simple_idx = system.index_of(alpha_i)
    if pi.count(simple_idx):
        raise PreconditionError(f"partition uses alpha_{i + 1} as a part")
    image_target = system.simple_reflection(i, pi.target)
    if not image_target.is_nonnegative():
        raise PreconditionError(f"s_{i + 1}({list(pi.target)}) = {list(image_target)} is not in Q+")
    new: dict[int, int] = {}
    for k, c in pi.multiplicities:
        image = system.simple_reflection(i, system.positive_roots[k])
        if not system.is_positive_root(image) or image == alpha_i:
            raise ConsistencyError(f"s_{i + 1} sends part {list(system.positive_roots[k])} to {list(image)}")
        new[system.index_of(image)] = c
    return VectorPartition(tuple(sorted(new.items())), image_target)


def verify_fact2(beta: Sequence[int], i: int, system: RootSystem, cap: int = DEFAULT_PARTITION_CAP) -> bool:
    """Check wt(P_i(beta)) = t wt(P_i(beta - alpha_i)) + (t-1) wt(P_not_i(beta - alpha_i))."""
    b = _as_gamma(beta, system)
    lower = b - unit(system.rank, i)
    if not lower.is_nonnegative():
        raise PreconditionError(f"{list(b)} - alpha_{i + 1} is not in Q+")
    with_b, _ = split_by_simple(b, i, system, cap)
    with_l, without_l = split_by_simple(lower, i, system, cap)
    return wt(with_b) == T * wt(with_l) + T_MINUS_1 * wt(without_l)


def verify_fact1_weights(beta: Sequence[int], i: int, system: RootSystem, cap: int = DEFAULT_PARTITION_CAP) -> bool:
    """Check wt(P_not_i(beta)) = wt(P_not_i(s_i beta))."""
    b = _as_gamma(beta, system)
    reflected = system.simple_reflection(i, b)
    if not reflected.is_nonnegative():
        raise PreconditionError(f"s_{i + 1}({list(b)}) is not in Q+")
    return wt(split_by_simple(b, i, system, cap)[1]) == wt(split_by_simple(reflected, i, system, cap)[1])


def verify_telescoping(beta: Sequence[int], i: int, system: RootSystem, cap: int = DEFAULT_PARTITION_CAP) -> bool:
    """Check the identity obtained by summing the simple-root recursion down the alpha_i-string:

    wt(P_i(beta)) - wt(P_i(beta - k alpha_i)) = (t-1) sum_{j=1..k} wt(P(beta - j alpha_i))
    with k the pairing of beta against alpha_i.
    """
    b = _as_gamma(beta, system)
    k = system.root_string_length(b, i)
    alpha_i = unit(system.rank, i)
    lhs = wt(split_by_simple(b, i, system, cap)[0]) - wt(split_by_simple(b - alpha_i.scale(k), i, system, cap)[0])
    rhs = ZERO
    for j in range(1, k + 1):
        rhs = rhs + xi_coefficient_comb(b - alpha_i.scale(j), system, cap)
    return lhs == T_MINUS_1 * rhs


def t_kostant(gamma: Sequence[int], system: RootSystem, cap: int = DEFAULT_PARTITION_CAP) -> TPoly:
    """Sum over partitions pi of gamma of t^n(pi); zero outside Q+."""
    g = _as_gamma(gamma, system)
    if not g.is_nonnegative():
        return ZERO
    coeffs: Counter = Counter()
    for (n, _), mult in nd_counts(g, system, cap).items():
        coeffs[n] += mult
    if not coeffs:
        return ZERO
    return TPoly(coeffs[m] for m in range(max(coeffs) + 1))
