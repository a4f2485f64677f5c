"""Verifiers tying root heights to the exponents of a simple Lie algebra.

Two independent routes to the exponents are compared:

* the Weyl-sum formula for the Kostka-Foulkes polynomial K_{theta,0}(t),
  which is a sum of t^m over the exponents m;
* the counts a_i of positive roots of height i, where i occurs
  a_i - a_{i+1} times as an exponent.

The coefficient of e^{-beta} in the truncated product is computed twice as
well, once as a series product and once as a sum over vector partitions.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Any, Iterator, Sequence

from .errors import ConsistencyError, MalformedKostkaError, MonotonicityError
from .fseries import coefficient, xi_series
from .rootsys import DEFAULT_WEYL_ORDER_CAP, RootSystem, RootVector, unit, weyl_group
from .tpoly import T, TPoly, ZERO, monomial_gap
from .vecpart import (
    DEFAULT_PARTITION_CAP,
    fact1_map,
    split_by_simple,
    t_kostant,
    verify_telescoping,
    wt,
    xi_coefficient_comb,
)


@dataclass(frozen=True)
class ClaimRecord:
    claim_id: str
    inputs: dict[str, Any]
    expected: Any
    computed: Any
    passed: bool


@dataclass
class VerificationReport:
    system: str
    records: list[ClaimRecord] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def add(self, claim_id: str, inputs: dict[str, Any], expected: Any, computed: Any, passed: bool | None = None) -> None:
        if passed is None:
            passed = expected == computed
        self.records.append(ClaimRecord(claim_id, inputs, expected, computed, bool(passed)))

    def extend(self, other: VerificationReport) -> None:
        self.records.extend(other.records)
        self.elapsed += other.elapsed

    def summary(self) -> tuple[int, int]:
        return sum(r.passed for r in self.records), len(self.records)


@dataclass(frozen=True)
class ExponentMultiset:
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(sorted(self.values)))
        if any(m < 1 for m in self.values):
            raise MalformedKostkaError(f"exponents must be positive: {self.values}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def descending(self) -> tuple[int, ...]:
        return tuple(reversed(self.values))

    def as_poly(self) -> TPoly:
        out = ZERO
        for m in self.values:
            out = out + TPoly.monomial(m)
        return out


def conjugate_partition(parts: Sequence[int]) -> tuple[int, ...]:
    """Transpose of a Young diagram given by its row lengths."""
    rows = sorted((p for p in parts if p > 0), reverse=True)
    if not rows:
        return ()
    return tuple(sum(1 for r in rows if r > j) for j in range(rows[0]))


def verify_prop1(system: RootSystem, cap: int = DEFAULT_PARTITION_CAP) -> VerificationReport:
    """Coefficient of e^{-beta} for every positive root beta, computed from the
    series product and from vector partitions, against t^ht - t^(ht-1)."""
    start = time.perf_counter()
    report = VerificationReport(system.label)
    series = xi_series(system, system.theta.height)
    for beta in system.positive_roots:
        expected = monomial_gap(beta.height)
        comb = xi_coefficient_comb(beta, system, cap)
        ser = coefficient(series, beta)
        report.add(
            "prop1",
            {"beta": list(beta), "series": ser},
            expected,
            comb,
            comb == expected and ser == expected,
        )
    report.elapsed = time.perf_counter() - start
    return report


def lattice_points(rank: int, max_height: int) -> Iterator[RootVector]:
    """Elements of Q+ with height <= max_height, by height then lexicographically."""
    for h in range(max_height + 1):
        pts = [p for p in itertools.product(range(h + 1), repeat=rank) if sum(p) == h]
        for p in sorted(pts):
            yield RootVector(p)


def oracle_report(system: RootSystem, cap: int = DEFAULT_PARTITION_CAP) -> VerificationReport:
    """Series coefficient equals the partition sum for every gamma with ht <= ht(theta)."""
    start = time.perf_counter()
    report = VerificationReport(system.label)
    hmax = system.theta.height
    series = xi_series(system, hmax)
    for gamma in lattice_points(system.rank, hmax):
        report.add("oracle", {"gamma": list(gamma)}, coefficient(series, gamma), xi_coefficient_comb(gamma, system, cap))
    report.elapsed = time.perf_counter() - start
    return report


def fact1_report(system: RootSystem, cap: int = DEFAULT_PARTITION_CAP) -> VerificationReport:
    """Partitions avoiding alpha_i: weights of beta and s_i(beta) agree, and
    part-wise reflection is a bijection preserving (n, d)."""
    start = time.perf_counter()
    report = VerificationReport(system.label)
    for beta in system.positive_roots:
        if beta.height < 2:
            continue
        for i in range(system.rank):
            if system.pairing(beta, i) <= 0:
                continue
            reflected = system.simple_reflection(i, beta)
            src = split_by_simple(beta, i, system, cap)[1]
            dst = split_by_simple(reflected, i, system, cap)[1]
            images = [fact1_map(pi, i, system) for pi in src]
            nd_kept = all((p.n, p.d) == (q.n, q.d) for p, q in zip(src, images))
            bijective = len(set(images)) == len(src) == len(dst) and set(images) == set(dst)
            involutive = all(fact1_map(q, i, system) == p for p, q in zip(src, images))
            expected, computed = wt(dst), wt(src)
            report.add(
                "fact1",
                {"beta": list(beta), "i": i + 1},
                expected,
                computed,
                expected == computed and nd_kept and bijective and involutive,
            )
    report.elapsed = time.perf_counter() - start
    return report


def fact2_report(system: RootSystem, cap: int = DEFAULT_PARTITION_CAP) -> VerificationReport:
    """The simple-root recursion for every (beta, i) with beta - alpha_i in Q+ and ht beta <= ht theta,
    then the identity summed along each alpha_i-string through a positive root."""
    start = time.perf_counter()
    report = VerificationReport(system.label)
    for beta in lattice_points(system.rank, system.theta.height):
        for i in range(system.rank):
            if beta[i] < 1:
                continue
            lower = beta - unit(system.rank, i)
            with_b = wt(split_by_simple(beta, i, system, cap)[0])
            with_l, without_l = (wt(x) for x in split_by_simple(lower, i, system, cap))
            expected = T * with_l + TPoly((-1, 1)) * without_l
            report.add("fact2", {"beta": list(beta), "i": i + 1}, expected, with_b)
    for beta in system.positive_roots:
        if beta.height < 2:
            continue
        for i in range(system.rank):
            if system.pairing(beta, i) > 0:
                ok = verify_telescoping(beta, i, system, cap)
                k = system.pairing(beta, i)
                report.add("telescoping", {"beta": list(beta), "i": i + 1, "k": k}, True, ok)
    report.elapsed = time.perf_counter() - start
    return report


def kostka_theta(
    system: RootSystem,
    weyl_order_cap: int = DEFAULT_WEYL_ORDER_CAP,
    partition_cap: int = DEFAULT_PARTITION_CAP,
) -> TPoly:
    """K_{theta,0}(t) as the alternating Weyl sum of the t-Kostant partition
    function at w(theta + rho) - rho."""
    # Scale by the common denominator of rho so the action stays in integers;
    # divisibility of the result is the integrality check.
    denom = 1
    for r in system.rho:
        denom = lcm(denom, r.denominator)
    rho = [int(r * denom) for r in system.rho]
    shifted = tuple(denom * b + r for b, r in zip(system.theta, rho))
    total = ZERO
    for w in weyl_group(system, weyl_order_cap):
        scaled = [x - r for x, r in zip(w.apply(shifted), rho)]
        if any(x % denom for x in scaled):
            raise ConsistencyError(
                f"w(theta + rho) - rho = {[Fraction(x, denom) for x in scaled]} is not integral"
            )
        if any(x < 0 for x in scaled):
            continue
        total = total + w.sign * t_kostant([x // denom for x in scaled], system, partition_cap)
    if any(c < 0 for c in total.coeffs):
        raise ConsistencyError(f"K_theta,0 has a negative coefficient: {total.to_list()}")
    if total(1) != system.rank:
        raise ConsistencyError(f"K_theta,0(1) = {total(1)}, expected rank {system.rank}")
    return total


def exponents_from_kostka(k: TPoly) -> ExponentMultiset:
    if k[0] != 0:
        raise MalformedKostkaError(f"nonzero constant term in {k.to_list()}")
    if any(c < 0 for c in k.coeffs):
        raise MalformedKostkaError(f"negative coefficient in {k.to_list()}")
    return ExponentMultiset(tuple(m for m, c in enumerate(k.coeffs) for _ in range(c)))


def exponents_from_heights(system: RootSystem) -> ExponentMultiset:
    a = list(system.height_counts) + [0]
    out = []
    for i in range(len(a) - 1):
        diff = a[i] - a[i + 1]
        if diff < 0:
            raise MonotonicityError(f"a_{i + 1} = {a[i]} < a_{i + 2} = {a[i + 1]}")
        out.extend([i + 1] * diff)
    ex = ExponentMultiset(tuple(out))
    if len(ex) != system.rank or ex.values[0] != 1:
        raise ConsistencyError(f"exponents {ex.values} inconsistent with rank {system.rank}")
    return ex


def duality_report(system: RootSystem, kostka: TPoly | None = None, **caps: int) -> VerificationReport:
    start = time.perf_counter()
    report = VerificationReport(system.label)
    if kostka is None:
        kostka = kostka_theta(system, **caps)
    from_heights = exponents_from_heights(system)
    from_kostka = exponents_from_kostka(kostka)
    report.add("exponents", {}, from_heights.as_poly(), kostka, from_heights == from_kostka)
    heights = tuple(system.height_counts)
    report.add(
        "conjugate",
        {"height_counts": list(heights)},
        {"partition": list(from_kostka.descending())},
        {"partition": list(conjugate_partition(heights))},
    )
    report.add("sum_rule", {}, len(system.positive_roots), sum(from_kostka))
    report.elapsed = time.perf_counter() - start
    return report


def verify_duality(system: RootSystem, **caps: int) -> bool:
    return duality_report(system, **caps).passed


def constant_term_report(
    system: RootSystem, kostka: TPoly | None = None, partition_cap: int = DEFAULT_PARTITION_CAP, **caps: int
) -> VerificationReport:
    """K_{theta,0} = rank + sum over positive roots of the e^{-alpha} coefficient,
    the right side taken from vector-partition sums."""
    start = time.perf_counter()
    report = VerificationReport(system.label)
    if kostka is None:
        kostka = kostka_theta(system, partition_cap=partition_cap, **caps)
    rhs = TPoly.const(system.rank)
    for alpha in system.positive_roots:
        rhs = rhs + xi_coefficient_comb(alpha, system, partition_cap)
    report.add("constant_term", {}, kostka, rhs)
    report.elapsed = time.perf_counter() - start
    return report


def verify_constant_term(system: RootSystem, **caps: int) -> bool:
    return constant_term_report(system, **caps).passed


def kostka_matches_heights(system: RootSystem, **caps: int) -> bool:
    return kostka_theta(system, **caps) == exponents_from_heights(system).as_poly()
