"""Exact Laurent-polynomial arithmetic over the integers.

A ``LaurentPoly`` is a dense coefficient block plus an integer offset (the
lowest exponent), so sets of negative integers have generating functions
too.  Coefficients are arbitrary-precision ints; nothing here can overflow
silently.  The inverse direction (recovering a 0/1-coefficient h-th root)
lives in :func:`hth_root_01`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .errors import NoRootError
from .intset import FiniteIntSet


@dataclass(frozen=True)
class LaurentPoly:
    """Integer-coefficient polynomial with possibly negative exponents.

    Normalized so the first and last stored coefficients are nonzero; the
    zero polynomial is the empty coefficient block with offset 0.
    """

    offset: int
    coeffs: tuple[int, ...]

    def __init__(self, offset: int = 0, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        while len(cs) > lead and cs[-1] == 0:
            cs.pop()
        cs = cs[lead:]
        object.__setattr__(self, "offset", int(offset) + lead if cs else 0)
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly(0, ())

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly(0, (1,))

    @staticmethod
    def monomial(exponent: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly(exponent, (coeff,))

    @staticmethod
    def from_dict(d: dict[int, int]) -> "LaurentPoly":
        if not d:
            return LaurentPoly.zero()
        lo = min(d)
        hi = max(d)
        cs = [0] * (hi - lo + 1)
        for e, c in d.items():
            cs[e - lo] = c
        return LaurentPoly(lo, cs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def min_exp(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no exponents")
        return self.offset

    def max_exp(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no exponents")
        return self.offset + len(self.coeffs) - 1

    def coeff(self, exponent: int) -> int:
        i = exponent - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def items(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) for every nonzero coefficient."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.offset + i, c

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        cs = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            cs[self.offset - lo + i] += c
        for i, c in enumerate(other.coeffs):
            cs[other.offset - lo + i] += c
        return LaurentPoly(lo, cs)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.offset, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        cs = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        cs[i + j] += a * b
        return LaurentPoly(self.offset + other.offset, cs)

    def __pow__(self, h: int) -> "LaurentPoly":
        if h < 0:
            raise ValueError("negative powers are not defined here")
        result = LaurentPoly.one()
        base = self
        while h:
            if h & 1:
                result = result * base
            h >>= 1
            if h:
                base = base * base
        return result

    def substitute_square(self) -> "LaurentPoly":
        """z -> z^2: double every exponent."""
        if self.is_zero():
            return self
        cs = [0] * (2 * len(self.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            cs[2 * i] = c
        return LaurentPoly(2 * self.offset, cs)

    def scale(self, factor: int) -> "LaurentPoly":
        return LaurentPoly(self.offset, tuple(factor * c for c in self.coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"z^{e}")
            else:
                parts.append(f"{c}*z^{e}")
        return " + ".join(parts)


def from_set(a: FiniteIntSet) -> LaurentPoly:
    """Generating function of a finite integer set: coefficient 1 at each member."""
    return LaurentPoly.from_dict({e: 1 for e in a})


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def power(p: LaurentPoly, h: int) -> LaurentPoly:
    return p ** h


def substitute_square(p: LaurentPoly) -> LaurentPoly:
    return p.substitute_square()


def _shifted_accumulate(target: dict[int, int], source: dict[int, int],
                        shift: int, factor: int) -> None:
    for e, v in source.items():
        k = e + shift
        target[k] = target.get(k, 0) + factor * v


def hth_root_01(p: LaurentPoly, h: int) -> FiniteIntSet:
    """Recover the unique finite set A with ``from_set(A) ** h == p``.

    Works by coefficient peeling: the lowest exponent of p must be h times
    the least element, and each successive coefficient residue decides one
    membership bit (it must be 0 or exactly h).  Raises :class:`NoRootError`
    when no 0/1-coefficient root exists, i.e. when p is not the ordered
    representation function of any set at order h.
    """
    if h < 1:
        raise ValueError("order h must be >= 1")
    if p.is_zero():
        raise NoRootError("zero polynomial is not an h-th power of a set")
    if any(c < 0 for c in p.coeffs):
        raise NoRootError("negative coefficient present")
    if h == 1:
        if any(c not in (0, 1) for c in p.coeffs):
            raise NoRootError("coefficients must be 0/1 at order 1")
        return FiniteIntSet(e for e, _ in p.items())

    lo = p.min_exp()
    hi = p.max_exp()
    if lo % h != 0 or p.coeff(lo) != 1:
        raise NoRootError("lowest term is not z^(h*a0) with coefficient 1")
    a0 = lo // h

    target = dict(p.items())
    # powers[j] tracks (prefix generating function)^j, updated per new member
    powers: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(h)]

    def adjoin(n: int) -> None:
        old = [dict(q) for q in powers]
        for j in range(1, h + 1):
            for i in range(1, j + 1):
                _shifted_accumulate(powers[j], old[j - i], i * n, comb(j, i))

    adjoin(a0)
    elements = [a0]
    base = (h - 1) * a0
    for n in range(a0 + 1, hi - base + 1):
        d = base + n
        residue = target.get(d, 0) - powers[h].get(d, 0)
        if residue == 0:
            continue
        if residue != h:
            raise NoRootError(
                f"coefficient residue {residue} at exponent {d} is not 0 or {h}"
            )
        elements.append(n)
        adjoin(n)

    final = {e: c for e, c in powers[h].items() if c}
    if final != target:
        raise NoRootError("candidate root's power does not reproduce the input")
    return FiniteIntSet(elements)
