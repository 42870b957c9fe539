"""Exact half-integers and Laurent polynomials in half-integer powers of t.

Exponents are stored doubled (``twice``) so that every operation stays in
the integers.  Polynomials render as descending terms, e.g.::

    t^1 - 1 + t^-1
    2*t^(3/2) - t^(1/2)

and :func:`parse_poly` reads the same format back.
"""

from __future__ import annotations

import functools
import re
from typing import Iterable, Iterator, Mapping

from .errors import NotSymmetrizable, ZeroPolynomial

__all__ = [
    "HalfInt",
    "LaurentPoly",
    "poly_add",
    "poly_mul_monomial",
    "poly_symmetrize",
    "poly_is_monic",
    "parse_poly",
    "equal_up_to_unit",
]


@functools.total_ordering
class HalfInt:
    """A number of the form k/2 with k an integer."""

    __slots__ = ("twice",)

    def __init__(self, twice: int):
        if not isinstance(twice, int):
            raise TypeError(f"HalfInt needs an integer numerator, got {twice!r}")
        object.__setattr__(self, "twice", twice)

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @classmethod
    def of(cls, value) -> "HalfInt":
        """Coerce an int, a HalfInt, or a string like ``"-3/2"``."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a half-integer")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot make a HalfInt from {value!r}")

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        m = re.fullmatch(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*", text)
        if not m:
            raise ValueError(f"not a half-integer: {text!r}")
        num = int(m.group(1))
        den = int(m.group(2) or 1)
        if den == 1:
            return cls(2 * num)
        if den == 2:
            return cls(num)
        raise ValueError(f"not a half-integer: {text!r}")

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __int__(self) -> int:
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __float__(self) -> float:
        return self.twice / 2

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return HalfInt(self.twice + other.twice)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return HalfInt(self.twice - other.twice)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return HalfInt(other.twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __mul__(self, other):
        # only integer scaling keeps the result a half-integer
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(self.twice * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.twice == other.twice

    def __lt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.twice < other.twice

    def __hash__(self):
        return hash(("HalfInt", self.twice))

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInt(twice={self.twice})"


def _coerce(value) -> HalfInt | None:
    if isinstance(value, HalfInt):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return HalfInt(2 * value)
    return None


class LaurentPoly:
    """Integer Laurent polynomial in t^(1/2), keyed by doubled exponents.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e2, c in items:
            acc[e2] = acc.get(e2, 0) + c
        object.__setattr__(self, "_terms", {e: c for e, c in sorted(acc.items()) if c})

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def monomial(cls, coeff: int, exponent) -> "LaurentPoly":
        return cls({HalfInt.of(exponent).twice: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPoly":
        """Integer-exponent polynomial ``sum coeffs[i] * t^(low + i)``."""
        return cls({2 * (low + i): c for i, c in enumerate(coeffs)})

    @property
    def twice_terms(self) -> dict[int, int]:
        return dict(self._terms)

    def terms(self) -> Iterator[tuple[HalfInt, int]]:
        """Yield ``(exponent, coefficient)`` in increasing exponent order."""
        for e2, c in self._terms.items():
            yield HalfInt(e2), c

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def coefficient(self, exponent) -> int:
        return self._terms.get(HalfInt.of(exponent).twice, 0)

    def max_exponent(self) -> HalfInt:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return HalfInt(max(self._terms))

    def min_exponent(self) -> HalfInt:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return HalfInt(min(self._terms))

    def leading_coefficient(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._terms[max(self._terms)]

    def at_one(self) -> int:
        return sum(self._terms.values())

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / other``; raises ValueError on a remainder."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._terms)
        if not rem:
            return LaurentPoly()
        quot: dict[int, int] = {}
        top_d = max(other._terms)
        lead_d = other._terms[top_d]
        # an exact quotient cannot have a term below this exponent
        floor = min(rem) - min(other._terms)
        while rem:
            top = max(rem)
            c = rem[top]
            shift = top - top_d
            if c % lead_d or shift < floor:
                raise ValueError("polynomial division is not exact")
            q = c // lead_d
            quot[shift] = q
            for e, dc in other._terms.items():
                k = e + shift
                v = rem.get(k, 0) - q * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"


def _format_exponent(e2: int) -> str:
    if e2 % 2 == 0:
        return f"t^{e2 // 2}"
    return f"t^({e2}/2)"


def format_poly(p: LaurentPoly) -> str:
    """Render with descending exponents: ``t^1 - 1 + t^-1``."""
    items = sorted(p.twice_terms.items(), reverse=True)
    if not items:
        return "0"
    out = []
    for i, (e2, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e2 == 0:
            body = str(a)
        elif a == 1:
            body = _format_exponent(e2)
        else:
            body = f"{a}*{_format_exponent(e2)}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TERM_RE = re.compile(
    r"""\s*([+-])?\s*
        (?:
          (\d+)\s*(?:\*\s*t(?:\^(?:\(\s*([+-]?\d+)\s*/\s*2\s*\)|([+-]?\d+)))?)?
        | t(?:\^(?:\(\s*([+-]?\d+)\s*/\s*2\s*\)|([+-]?\d+)))?
        )""",
    re.VERBOSE,
)


def parse_poly(text: str) -> LaurentPoly:
    """Parse the rendering produced by :func:`format_poly`."""
    text = text.strip()
    if text == "0":
        return LaurentPoly()
    pos = 0
    terms: list[tuple[int, int]] = []
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        sign = -1 if m.group(1) == "-" else 1
        if terms and m.group(1) is None:
            raise ValueError(f"missing operator in polynomial {text!r}")
        if m.group(2) is not None:
            coeff = int(m.group(2))
            has_t = "t" in m.group(0)
            half, whole = m.group(3), m.group(4)
        else:
            coeff = 1
            has_t = True
            half, whole = m.group(5), m.group(6)
        if not has_t:
            e2 = 0
        elif half is not None:
            e2 = int(half)
        elif whole is not None:
            e2 = 2 * int(whole)
        else:
            e2 = 2
        terms.append((e2, sign * coeff))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return LaurentPoly(terms)


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul_monomial(p: LaurentPoly, sign: int, shift) -> LaurentPoly:
    """Multiply ``p`` by the unit ``sign * t^shift``."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    s2 = HalfInt.of(shift).twice
    return LaurentPoly({e + s2: sign * c for e, c in p.twice_terms.items()})


def poly_symmetrize(p: LaurentPoly) -> LaurentPoly:
    """Normalize ``p`` up to a unit ``±t^(k/2)``.

    The support is shifted so it is centered at 0, then the sign is fixed:
    ``p(1) > 0`` when ``p(1) != 0``, otherwise the leading coefficient is
    made positive.  Raises NotSymmetrizable if the centered support is not
    closed under negation.
    """
    terms = p.twice_terms
    if not terms:
        return p
    hi, lo = max(terms), min(terms)
    shift = -(hi + lo) // 2
    centered = {e + shift: c for e, c in terms.items()}
    if any(-e not in centered for e in centered):
        raise NotSymmetrizable(f"support of {format_poly(p)} is not symmetric")
    total = sum(centered.values())
    sign = 1
    if total < 0 or (total == 0 and centered[max(centered)] < 0):
        sign = -1
    return LaurentPoly({e: sign * c for e, c in centered.items()})


def _unit_normal(p: LaurentPoly) -> LaurentPoly:
    terms = p.twice_terms
    if not terms:
        return p
    lo = min(terms)
    sign = 1 if terms[max(terms)] > 0 else -1
    return LaurentPoly({e - lo: sign * c for e, c in terms.items()})


def equal_up_to_unit(p: LaurentPoly, q: LaurentPoly) -> bool:
    """True iff ``p = ±t^(k/2) q`` for some integer k."""
    return _unit_normal(p) == _unit_normal(q)


def poly_is_monic(p: LaurentPoly) -> bool:
    """True iff the coefficient of the highest exponent is ±1."""
    if not p:
        raise ZeroPolynomial("monicity is undefined for the zero polynomial")
    return abs(p.leading_coefficient()) == 1
