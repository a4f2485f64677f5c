"""Height-truncated power series in e^{-alpha_1}, ..., e^{-alpha_n} over Z[t]."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, PreconditionError, TruncationError
from .rootsys import RootSystem, RootVector
from .tpoly import ONE, TPoly, ZERO


@dataclass(frozen=True)
class ExpSeries:
    """Finite map from exponents gamma in Q+ (height <= trunc_height) to the
    coefficient of e^{-gamma}.  Zero coefficients are never stored."""

    rank: int
    trunc_height: int
    terms: Mapping[tuple[int, ...], TPoly] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for key, coeff in self.terms.items():
            key = tuple(key)
            if len(key) != self.rank or any(c < 0 for c in key):
                raise DomainError(f"exponent {list(key)} is not in Q+ of rank {self.rank}")
            if sum(key) > self.trunc_height:
                raise TruncationError(f"exponent {list(key)} exceeds truncation height {self.trunc_height}")
            if coeff:
                clean[key] = coeff
        object.__setattr__(self, "terms", clean)

    @classmethod
    def one(cls, rank: int, trunc_height: int) -> ExpSeries:
        return cls(rank, trunc_height, {(0,) * rank: ONE})

    def __mul__(self, other: ExpSeries) -> ExpSeries:
        return series_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExpSeries):
            return NotImplemented
        return (self.rank, self.trunc_height, self.terms) == (other.rank, other.trunc_height, other.terms)

    def restrict(self, height: int) -> ExpSeries:
        """Drop every term above ``height``."""
        if height > self.trunc_height:
            raise TruncationError(f"cannot restrict to {height} > truncation height {self.trunc_height}")
        return ExpSeries(self.rank, height, {k: v for k, v in self.terms.items() if sum(k) <= height})

    def sorted_items(self) -> list[tuple[tuple[int, ...], TPoly]]:
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def to_json(self) -> list[dict]:
        return [{"exponent": list(k), "coeff": v.to_list()} for k, v in self.sorted_items()]


def series_mul(a: ExpSeries, b: ExpSeries) -> ExpSeries:
    if a.rank != b.rank or a.trunc_height != b.trunc_height:
        raise PreconditionError(
            f"series mismatch: rank {a.rank}/{b.rank}, truncation {a.trunc_height}/{b.trunc_height}"
        )
    h_max = a.trunc_height
    out: dict[tuple[int, ...], TPoly] = {}
    b_items = [(k, sum(k), v) for k, v in b.terms.items()]
    for ka, va in a.terms.items():
        ha = sum(ka)
        for kb, hb, vb in b_items:
            if ha + hb > h_max:
                continue
            key = tuple(x + y for x, y in zip(ka, kb))
            prod = va * vb
            prev = out.get(key)
            out[key] = prod if prev is None else prev + prod
    return ExpSeries(a.rank, h_max, out)


def geometric_factor(alpha: Sequence[int], trunc_height: int) -> ExpSeries:
    """Expansion of (1 - e^{-alpha}) / (1 - t e^{-alpha}) up to height ``trunc_height``.

    The coefficient of e^{-m alpha} is t^{m-1} (t - 1) for m >= 1.
    """
    if trunc_height < 0:
        raise DomainError("truncation height must be >= 0")
    alpha = tuple(alpha)
    h = sum(alpha)
    if h <= 0 or any(c < 0 for c in alpha):
        raise DomainError(f"{list(alpha)} is not a nonzero element of Q+")
    terms = {(0,) * len(alpha): ONE}
    m = 1
    while m * h <= trunc_height:
        terms[tuple(m * c for c in alpha)] = TPoly([0] * (m - 1) + [-1, 1])
        m += 1
    return ExpSeries(len(alpha), trunc_height, terms)


def xi_series(
    system: RootSystem, trunc_height: int | None = None, order: Iterable[Sequence[int]] | None = None
) -> ExpSeries:
    """Product over positive roots of their geometric factors.

    ``trunc_height`` defaults to ht(theta) + 1.  ``order`` permutes the
    factors; the default is the canonical positive-root order.
    """
    if trunc_height is None:
        trunc_height = system.theta.height + 1
    roots = system.positive_roots if order is None else [RootVector(r) for r in order]
    acc = ExpSeries.one(system.rank, trunc_height)
    for alpha in roots:
        acc = series_mul(acc, geometric_factor(alpha, trunc_height))
    return acc


def coefficient(series: ExpSeries, gamma: Sequence[int]) -> TPoly:
    gamma = tuple(gamma)
    if len(gamma) != series.rank:
        raise DomainError(f"exponent {list(gamma)} has wrong rank (expected {series.rank})")
    if any(c < 0 for c in gamma):
        raise DomainError(f"exponent {list(gamma)} is not in Q+")
    if sum(gamma) > series.trunc_height:
        raise TruncationError(
            f"height {sum(gamma)} of {list(gamma)} exceeds truncation height {series.trunc_height}"
        )
    return series.terms.get(gamma, ZERO)
