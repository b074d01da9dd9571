"""Cantor-normal-form ordinal arithmetic below w^w.

An ordinal is w^e1*c1 + ... + w^em*cm + n with strictly decreasing
exponents e1 > ... > em >= 1, coefficients ci >= 1 and a finite part
n >= 0.  This is exactly what the rank computations need: every rank
that shows up decomposes as "limit plus finite tail", and the tails
stay small.  Values are immutable and totally ordered, so they can be
used as dict keys and sorted directly.

Multiplication is deliberately absent.  The only product ever needed is
doubling, which on lambda+n means 2*(lambda+n) = lambda+2n; see
:func:`double`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Literal


class OrdinalSyntaxError(ValueError):
    """Raised on malformed ordinal text; carries the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    # ((exponent, coefficient), ...) with exponents strictly decreasing, all >= 1
    terms: tuple[tuple[int, int], ...] = ()
    finite: int = 0

    def __post_init__(self) -> None:
        prev = None
        for exp, coeff in self.terms:
            if exp < 1 or coeff < 1:
                raise ValueError(f"bad CNF term w^{exp}*{coeff}")
            if prev is not None and exp >= prev:
                raise ValueError("CNF exponents must strictly decrease")
            prev = exp
        if self.finite < 0:
            raise ValueError("finite part must be >= 0")

    def _key(self) -> tuple:
        return (self.terms, self.finite)

    def __lt__(self, other: "Ordinal") -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._key() < other._key()

    def __str__(self) -> str:
        return format_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal({format_ordinal(self)!r})"

    @property
    def is_zero(self) -> bool:
        return not self.terms and self.finite == 0

    @property
    def is_successor(self) -> bool:
        return self.finite > 0

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and self.finite == 0


ZERO = Ordinal()
ONE_ORD = Ordinal((), 1)
OMEGA_ORD = Ordinal(((1, 1),), 0)


def from_int(n: int) -> Ordinal:
    return Ordinal((), n)


def omega_power(exp: int, coeff: int = 1) -> Ordinal:
    return Ordinal(((exp, coeff),), 0)


def cmp_ordinal(a: Ordinal, b: Ordinal) -> int:
    """Total order on CNF: -1, 0 or 1.  Tuple comparison on the term
    list is the lexicographic CNF order, finite parts break ties."""
    ka, kb = a._key(), b._key()
    return (ka > kb) - (ka < kb)


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal sum a+b (left-absorbing, not commutative: 1+w = w)."""
    if not b.terms:
        return Ordinal(a.terms, a.finite + b.finite)
    lead_exp, lead_coeff = b.terms[0]
    kept = tuple(t for t in a.terms if t[0] > lead_exp)
    if a.terms and len(kept) < len(a.terms) and a.terms[len(kept)][0] == lead_exp:
        merged = (lead_exp, a.terms[len(kept)][1] + lead_coeff)
    else:
        merged = (lead_exp, lead_coeff)
    return Ordinal(kept + (merged,) + b.terms[1:], b.finite)


def split(a: Ordinal) -> tuple[Ordinal, int]:
    """Unique decomposition a = lam + n with lam limit or zero, n finite."""
    return Ordinal(a.terms, 0), a.finite


def double(a: Ordinal) -> Ordinal:
    """2*a in the left-multiplication sense: with a = lam+n this is lam+2n."""
    return Ordinal(a.terms, 2 * a.finite)


def classify(a: Ordinal) -> Literal["zero", "successor", "limit"]:
    if a.is_zero:
        return "zero"
    return "successor" if a.is_successor else "limit"


def succ(a: Ordinal) -> Ordinal:
    return Ordinal(a.terms, a.finite + 1)


def pred_if_successor(a: Ordinal) -> Ordinal:
    if not a.is_successor:
        raise ValueError(f"{a} is not a successor ordinal")
    return Ordinal(a.terms, a.finite - 1)


def sup(ordinals: Iterable[Ordinal]) -> Ordinal:
    """Supremum of a non-empty finite family, i.e. its maximum."""
    items = list(ordinals)
    if not items:
        raise ValueError("sup of an empty family")
    return max(items)


_INT_RE = re.compile(r"\d+")


def parse_ordinal(text: str) -> Ordinal:
    """Parse the additive grammar `atom {"+" atom}` with
    `atom := "w" ["^" INT] ["*" INT] | INT`.

    The denoted value is the left-to-right ordinal sum of the atoms, so
    non-canonical spellings like "w+w^2" are accepted and collapse to
    canonical form.  Exponent 0 is rejected: write the finite part as a
    plain integer.
    """
    pos = 0
    n = len(text)

    def skip_ws() -> None:
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def read_int() -> int:
        nonlocal pos
        m = _INT_RE.match(text, pos)
        if not m:
            raise OrdinalSyntaxError("expected an integer", pos)
        pos = m.end()
        return int(m.group())

    def read_atom() -> Ordinal:
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise OrdinalSyntaxError("expected an ordinal atom", pos)
        if text[pos] == "w":
            pos += 1
            exp = 1
            skip_ws()
            if pos < n and text[pos] == "^":
                pos += 1
                skip_ws()
                at = pos
                exp = read_int()
                if exp == 0:
                    raise OrdinalSyntaxError(
                        "exponent 0 not allowed; write the finite part as an integer", at
                    )
            coeff = 1
            skip_ws()
            if pos < n and text[pos] == "*":
                pos += 1
                skip_ws()
                at = pos
                coeff = read_int()
                if coeff == 0:
                    raise OrdinalSyntaxError("coefficient must be >= 1", at)
            return omega_power(exp, coeff)
        if text[pos].isdigit():
            return from_int(read_int())
        raise OrdinalSyntaxError(f"unexpected character {text[pos]!r}", pos)

    result = read_atom()
    skip_ws()
    while pos < n:
        if text[pos] != "+":
            raise OrdinalSyntaxError(f"unexpected character {text[pos]!r}", pos)
        pos += 1
        result = add(result, read_atom())
        skip_ws()
    return result


def format_ordinal(a: Ordinal) -> str:
    if a.is_zero:
        return "0"
    parts = []
    for exp, coeff in a.terms:
        s = "w" if exp == 1 else f"w^{exp}"
        if coeff != 1:
            s += f"*{coeff}"
        parts.append(s)
    if a.finite:
        parts.append(str(a.finite))
    return "+".join(parts)
