"""Exact Laurent polynomials in one indeterminate q with integer coefficients.

Polynomials are kept in canonical form: a map from exponent to nonzero
integer coefficient.  Coefficients are Python ints, so arithmetic is exact
at any size and overflow cannot occur silently.

The canonical text form lists terms by strictly decreasing exponent,
writes ``q^e`` for exponents with ``|e| >= 2`` or ``e < 0``, plain ``q``
for exponent 1 and a bare integer for exponent 0.  Unit coefficients
elide the digit except on the constant term.  Examples: ``-q^-3``,
``q^2 - 2 + q^-2``, ``0``.
"""

from __future__ import annotations

import re


class LaurentParseError(ValueError):
    """Raised when a polynomial string is not in canonical form."""


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, pairs=()):
        terms: dict[int, int] = {}
        for exponent, coefficient in pairs:
            if not isinstance(exponent, int) or isinstance(exponent, bool):
                raise TypeError(f"exponent must be an int, got {exponent!r}")
            if not isinstance(coefficient, int) or isinstance(coefficient, bool):
                raise TypeError(f"coefficient must be an int, got {coefficient!r}")
            total = terms.get(exponent, 0) + coefficient
            if total:
                terms[exponent] = total
            else:
                terms.pop(exponent, None)
        self._terms = terms

    @property
    def terms(self) -> dict[int, int]:
        """Exponent -> coefficient map (a defensive copy)."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        result = dict(self._terms)
        for e, c in other._terms.items():
            total = result.get(e, 0) + c
            if total:
                result[e] = total
            else:
                result.pop(e, None)
        return LaurentPoly(result.items())

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly((e, -c) for e, c in self._terms.items())

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        result: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                total = result.get(e, 0) + c1 * c2
                if total:
                    result[e] = total
                else:
                    result.pop(e, None)
        return LaurentPoly(result.items())

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not defined for Laurent polynomials here")
        result = one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mirror(self) -> "LaurentPoly":
        """Substitute q -> q^-1, i.e. negate every exponent."""
        return LaurentPoly((-e, c) for e, c in self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "q" if e == 1 else f"q^{e}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def make(pairs) -> LaurentPoly:
    """Build a polynomial from (exponent, coefficient) pairs.

    Duplicate exponents are summed and zero coefficients dropped; the
    empty list yields the zero polynomial.
    """
    return LaurentPoly(pairs)


def zero() -> LaurentPoly:
    return LaurentPoly()


def one() -> LaurentPoly:
    return LaurentPoly([(0, 1)])


def monomial(exponent: int, coefficient: int = 1) -> LaurentPoly:
    return LaurentPoly([(exponent, coefficient)])


def neg_q_pow(k: int) -> LaurentPoly:
    """(-q)^k, i.e. (-1)^k * q^k, for any integer k."""
    return LaurentPoly([(k, -1 if k % 2 else 1)])


def delta() -> LaurentPoly:
    """The disjoint-circle factor -q^2 - q^-2."""
    return LaurentPoly([(2, -1), (-2, -1)])


_TERM_RE = re.compile(
    r"""^(?P<coeff>\d+)?
        (?P<var>q(\^(?P<exp>-?\d+))?)?$""",
    re.VERBOSE,
)


def parse(text: str) -> LaurentPoly:
    """Parse the canonical text form produced by str().

    Accepts exactly the canonical rendering: terms separated by " + " or
    " - ", optional leading "-".
    """
    s = text.strip()
    if not s:
        raise LaurentParseError("empty polynomial string")
    if s == "0":
        return zero()
    chunks = re.split(r" ([+-]) ", s)
    pairs: list[tuple[int, int]] = []
    sign = 1
    first = chunks[0]
    if first.startswith("-"):
        sign = -1
        first = first[1:]
    pending = [(sign, first)]
    for i in range(1, len(chunks), 2):
        op, term = chunks[i], chunks[i + 1]
        pending.append((1 if op == "+" else -1, term))
    for sign, term in pending:
        m = _TERM_RE.match(term)
        if not m or (m.group("coeff") is None and m.group("var") is None):
            raise LaurentParseError(f"bad term {term!r} in {text!r}")
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        if m.group("var"):
            exponent = int(m.group("exp")) if m.group("exp") else 1
        else:
            exponent = 0
        pairs.append((exponent, sign * coeff))
    poly = LaurentPoly(pairs)
    if str(poly) != text.strip():
        raise LaurentParseError(f"{text!r} is not in canonical form")
    return poly
