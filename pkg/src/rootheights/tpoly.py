"""Polynomials in one variable ``t`` with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DomainError


class TPoly:
    """Immutable element of Z[t].

    Coefficients are stored in ascending degree with no trailing zeros, so
    the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise DomainError(f"TPoly coefficients must be integers, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TPoly is immutable")

    @classmethod
    def const(cls, c: int) -> TPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> TPoly:
        if degree < 0:
            raise DomainError(f"negative degree {degree}")
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = TPoly.const(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return 0

    def __add__(self, other: TPoly | int) -> TPoly:
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> TPoly:
        return TPoly(-c for c in self.coeffs)

    def __sub__(self, other: TPoly | int) -> TPoly:
        return poly_add(self, -_coerce(other))

    def __rsub__(self, other: TPoly | int) -> TPoly:
        return poly_add(_coerce(other), -self)

    def __mul__(self, other: TPoly | int) -> TPoly:
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TPoly:
        if k < 0:
            raise DomainError("negative power of a polynomial")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_list(cls, data: Sequence[int]) -> TPoly:
        return cls(data)

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for deg in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[deg]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                var = "t" if deg == 1 else f"t^{deg}"
                body = var if mag == 1 else f"{mag}*{var}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"TPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.pretty()


def _coerce(x: TPoly | int) -> TPoly:
    if isinstance(x, TPoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return TPoly.const(x)
    raise DomainError(f"cannot use {x!r} as an integer polynomial")


def poly_add(a: TPoly, b: TPoly) -> TPoly:
    ac, bc = a.coeffs, b.coeffs
    if len(ac) < len(bc):
        ac, bc = bc, ac
    out = list(ac)
    for i, c in enumerate(bc):
        out[i] += c
    return TPoly(out)


def poly_mul(a: TPoly, b: TPoly) -> TPoly:
    ac, bc = a.coeffs, b.coeffs
    if not ac or not bc:
        return ZERO
    out = [0] * (len(ac) + len(bc) - 1)
    for i, x in enumerate(ac):
        if x == 0:
            continue
        for j, y in enumerate(bc):
            out[i + j] += x * y
    return TPoly(out)


def monomial_gap(h: int) -> TPoly:
    """Return ``t**h - t**(h-1)``, the predicted coefficient for a root of height h."""
    if h < 1:
        raise DomainError(f"monomial_gap needs h >= 1, got {h}")
    return TPoly([0] * (h - 1) + [-1, 1])


ZERO = TPoly()
ONE = TPoly((1,))
T = TPoly((0, 1))
T_MINUS_1 = TPoly((-1, 1))
