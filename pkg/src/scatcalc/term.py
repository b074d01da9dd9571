"""Syntax of the scattered-function calculus.

Terms denote continuous functions between zero-dimensional separable
metrizable spaces, built from a closed constructor set:

* ``Empty`` and ``One``: the empty function and the identity on a
  singleton.
* ``IdQ`` / ``IdBaire``: the two non-scattered sentinels (identity on
  the rationals and on Baire space).  They are standalone atoms and
  never occur under another constructor.
* ``Glue``: finite disjoint sum on domains and codomains.  Summands
  form a multiset; ``k * t`` in the concrete syntax abbreviates a
  k-fold gluing.
* ``Omega``: countably infinite gluing of one term.
* ``PglSet``: pointed gluing of the constant sequence on the finite
  gluing of the member set, attached at a single accumulation point on
  both sides.
* ``Wedge``: vertical families of repeated pointed gluings sharing one
  codomain basepoint, plus a diagonal of countably many copies of the
  diagonal set's gluing converging to that basepoint.
* ``MinFn(a)`` / ``MaxFn(a)``: atoms for the minimum function among
  ranks >= a (a must be a successor) and the maximum among ranks <= a.

Pointed gluings of non-constant sequences are not representable.  Every
centered function is still covered up to equivalence by ``PglSet``, but
a finitely-supported or monotone non-constant pointed gluing has no
term of its own; callers needing one must pick an equivalent ``PglSet``
form by hand.  Points, spaces and reducing maps are never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from . import ordinal as ord_mod
from .ordinal import Ordinal, OrdinalSyntaxError


class TermSyntaxError(ValueError):
    """Raised on malformed term text; carries the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Term:
    """Base class; all term values are immutable and hashable."""

    __slots__ = ()

    def __str__(self) -> str:
        return format_term(self)


def _cache_hash(cls):
    """Memoize the dataclass hash per instance; terms are deep and get
    hashed constantly by the memo tables."""
    plain = cls.__hash__

    def cached(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = plain(self)
            object.__setattr__(self, "_hash", h)
        return h

    cls.__hash__ = cached
    return cls


@dataclass(frozen=True, repr=False)
class Empty(Term):
    __slots__ = ()

    def __repr__(self) -> str:
        return "Empty()"


@dataclass(frozen=True, repr=False)
class One(Term):
    __slots__ = ()

    def __repr__(self) -> str:
        return "One()"


@dataclass(frozen=True, repr=False)
class IdQ(Term):
    __slots__ = ()

    def __repr__(self) -> str:
        return "IdQ()"


@dataclass(frozen=True, repr=False)
class IdBaire(Term):
    __slots__ = ()

    def __repr__(self) -> str:
        return "IdBaire()"


def _check_inner(t: Term, where: str) -> None:
    if isinstance(t, (IdQ, IdBaire)):
        raise ValueError(f"non-scattered sentinel cannot occur inside {where}")


@_cache_hash
@dataclass(frozen=True, repr=False)
class Glue(Term):
    """Finite multiset gluing.  Summands are kept sorted by the fixed
    syntactic order; nesting is permitted in raw terms and removed by
    normalization."""

    summands: tuple[Term, ...]

    def __init__(self, summands) -> None:
        items = tuple(sorted(summands, key=sort_key))
        for s in items:
            _check_inner(s, "glue")
        object.__setattr__(self, "summands", items)

    def __repr__(self) -> str:
        return f"Glue({list(self.summands)!r})"


@_cache_hash
@dataclass(frozen=True, repr=False)
class Omega(Term):
    body: Term

    def __init__(self, body: Term) -> None:
        _check_inner(body, "omega")
        object.__setattr__(self, "body", body)

    def __repr__(self) -> str:
        return f"Omega({self.body!r})"


@_cache_hash
@dataclass(frozen=True, repr=False)
class PglSet(Term):
    """Pointed gluing of the constant sequence on the gluing of
    ``members`` (a non-empty finite set, stored sorted)."""

    members: tuple[Term, ...]

    def __init__(self, members) -> None:
        items = _sorted_set(members)
        if not items:
            raise ValueError("pgl needs at least one member")
        for m in items:
            _check_inner(m, "pgl")
        object.__setattr__(self, "members", items)

    def __repr__(self) -> str:
        return f"PglSet({list(self.members)!r})"


@_cache_hash
@dataclass(frozen=True, repr=False)
class Wedge(Term):
    """Wedge of vertical set families over a diagonal set.

    ``verticals`` is a non-empty family of pairwise distinct non-empty
    finite sets of terms; the family itself is stored sorted, which is
    harmless because the operation is insensitive to vertical order.
    ``diagonal`` is a finite (possibly empty) set of terms.
    """

    verticals: tuple[tuple[Term, ...], ...]
    diagonal: tuple[Term, ...]

    def __init__(self, verticals, diagonal) -> None:
        vert = tuple(sorted((_sorted_set(v) for v in verticals), key=_family_key))
        if not vert:
            raise ValueError("wedge needs at least one vertical set")
        for v in vert:
            if not v:
                raise ValueError("wedge vertical sets must be non-empty")
            for t in v:
                _check_inner(t, "wedge")
        if len(set(vert)) != len(vert):
            raise ValueError("wedge vertical sets must be pairwise distinct")
        diag = _sorted_set(diagonal)
        for t in diag:
            _check_inner(t, "wedge")
        object.__setattr__(self, "verticals", vert)
        object.__setattr__(self, "diagonal", diag)

    def __repr__(self) -> str:
        return f"Wedge({[list(v) for v in self.verticals]!r}, {list(self.diagonal)!r})"


@_cache_hash
@dataclass(frozen=True, repr=False)
class MinFn(Term):
    """Minimum function among scattered functions of rank >= ``rank``;
    the rank argument must classify as a successor."""

    rank: Ordinal

    def __post_init__(self) -> None:
        if not self.rank.is_successor:
            raise ValueError(f"min() needs a successor rank, got {self.rank}")

    def __repr__(self) -> str:
        return f"MinFn({self.rank!r})"


@_cache_hash
@dataclass(frozen=True, repr=False)
class MaxFn(Term):
    """Maximum function among scattered functions of rank <= ``rank``."""

    rank: Ordinal

    def __repr__(self) -> str:
        return f"MaxFn({self.rank!r})"


EMPTY = Empty()
ONE = One()
ID_Q = IdQ()
ID_BAIRE = IdBaire()


def merged_wedge(verticals, diagonal) -> "Wedge":
    """Wedge constructor that merges duplicate vertical sets.  Rewriting
    can collapse two distinct sets to the same one; a family listing a
    set twice is equivalent for domination to the deduplicated family,
    so the denotations agree."""
    seen: list[tuple[Term, ...]] = []
    for v in verticals:
        key = _sorted_set(v)
        if key not in seen:
            seen.append(key)
    return Wedge(seen, diagonal)


def glue(*summands: Term) -> Glue:
    return Glue(summands)


def copies(n: int, t: Term) -> Glue:
    return Glue((t,) * n)


def pgl(*members: Term) -> PglSet:
    return PglSet(members)


def omega(t: Term) -> Omega:
    return Omega(t)


# ---------------------------------------------------------------------------
# Fixed total order on terms


_VARIANT_ORDER = {
    Empty: 0,
    One: 1,
    IdQ: 2,
    IdBaire: 3,
    MinFn: 4,
    MaxFn: 5,
    Omega: 6,
    Glue: 7,
    PglSet: 8,
    Wedge: 9,
}


def sort_key(t: Term) -> tuple:
    """Stable structural key: variant index first, then components.

    This is an arbitrary but fixed total order used for canonical
    multiset ordering and tie-breaking; it has no semantic content.
    """
    v = _VARIANT_ORDER[type(t)]
    if isinstance(t, (Empty, One, IdQ, IdBaire)):
        return (v,)
    if isinstance(t, (MinFn, MaxFn)):
        return (v, t.rank.terms, t.rank.finite)
    if isinstance(t, Omega):
        return (v, sort_key(t.body))
    if isinstance(t, Glue):
        return (v, len(t.summands), tuple(sort_key(s) for s in t.summands))
    if isinstance(t, PglSet):
        return (v, len(t.members), tuple(sort_key(m) for m in t.members))
    if isinstance(t, Wedge):
        return (
            v,
            tuple(_family_key(f) for f in t.verticals),
            tuple(sort_key(d) for d in t.diagonal),
        )
    raise TypeError(f"not a term: {t!r}")


def _family_key(family: tuple[Term, ...]) -> tuple:
    return (len(family),) + tuple(sort_key(t) for t in family)


def _sorted_set(items) -> tuple[Term, ...]:
    seen = []
    for t in sorted(items, key=sort_key):
        if not seen or seen[-1] != t:
            seen.append(t)
    return tuple(seen)


def syntactic_cmp(a: Term, b: Term) -> int:
    ka, kb = sort_key(a), sort_key(b)
    return (ka > kb) - (ka < kb)


def term_size(t: Term) -> int:
    """Number of constructor nodes (ordinal arguments do not count)."""
    if isinstance(t, (Empty, One, IdQ, IdBaire, MinFn, MaxFn)):
        return 1
    if isinstance(t, Omega):
        return 1 + term_size(t.body)
    if isinstance(t, Glue):
        return 1 + sum(term_size(s) for s in t.summands)
    if isinstance(t, PglSet):
        return 1 + sum(term_size(m) for m in t.members)
    if isinstance(t, Wedge):
        return (
            1
            + sum(term_size(x) for v in t.verticals for x in v)
            + sum(term_size(d) for d in t.diagonal)
        )
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# Concrete syntax


def format_term(t: Term) -> str:
    if isinstance(t, Empty):
        return "empty"
    if isinstance(t, One):
        return "one"
    if isinstance(t, IdQ):
        return "idq"
    if isinstance(t, IdBaire):
        return "idbaire"
    if isinstance(t, MinFn):
        return f"min({ord_mod.format_ordinal(t.rank)})"
    if isinstance(t, MaxFn):
        return f"max({ord_mod.format_ordinal(t.rank)})"
    if isinstance(t, Omega):
        return f"omega({format_term(t.body)})"
    if isinstance(t, Glue):
        ss = t.summands
        if not ss:
            return "0*empty"
        if len(set(ss)) == 1:
            return f"{len(ss)}*{format_term(ss[0])}"
        return "glue(" + ", ".join(format_term(s) for s in ss) + ")"
    if isinstance(t, PglSet):
        return "pgl{" + ", ".join(format_term(m) for m in t.members) + "}"
    if isinstance(t, Wedge):
        vs = ", ".join(_format_set(v) for v in t.verticals)
        return f"wedge({vs} | {_format_set(t.diagonal)})"
    raise TypeError(f"not a term: {t!r}")


def _format_set(items: tuple[Term, ...]) -> str:
    return "{" + ", ".join(format_term(t) for t in items) + "}"


def parse_term(text: str) -> Term:
    """Parse the term grammar; returns the denoted raw term without
    normalizing.  ``INT * term`` denotes an INT-fold gluing."""
    parser = _Parser(text)
    t = parser.parse_term()
    parser.expect_end()
    return t


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, message: str) -> TermSyntaxError:
        return TermSyntaxError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def expect_end(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing input after term")

    def build(self, ctor, at: int, *args):
        try:
            return ctor(*args)
        except ValueError as exc:
            raise TermSyntaxError(str(exc), at) from exc

    def read_word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start : self.pos]

    def read_int(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def read_ordinal_until(self, closer: str) -> Ordinal:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] != closer:
            self.pos += 1
        raw = self.text[start : self.pos]
        try:
            return ord_mod.parse_ordinal(raw.strip())
        except OrdinalSyntaxError as exc:
            raise TermSyntaxError(str(exc), start) from exc

    def parse_term(self) -> Term:
        self.skip_ws()
        if self.pos >= len(self.text):
            raise self.error("expected a term")
        c = self.text[self.pos]
        if c.isdigit():
            at = self.pos
            count = self.read_int()
            self.eat("*")
            body = self.parse_term()
            return self.build(Glue, at, (body,) * count)
        if c == "{" or c == "}":
            raise self.error("a set is not a term here")
        word_start = self.pos
        word = self.read_word()
        if word == "empty":
            return EMPTY
        if word == "one":
            return ONE
        if word == "idq":
            return ID_Q
        if word == "idbaire":
            return ID_BAIRE
        if word == "min" or word == "max":
            self.eat("(")
            rank = self.read_ordinal_until(")")
            self.eat(")")
            try:
                return MinFn(rank) if word == "min" else MaxFn(rank)
            except ValueError as exc:
                raise TermSyntaxError(str(exc), word_start) from exc
        if word == "omega":
            self.eat("(")
            body = self.parse_term()
            self.eat(")")
            return self.build(Omega, word_start, body)
        if word == "glue":
            self.eat("(")
            summands = [self.parse_term()]
            while self.peek() == ",":
                self.eat(",")
                summands.append(self.parse_term())
            self.eat(")")
            return self.build(Glue, word_start, summands)
        if word == "pgl":
            self.eat("{")
            members = [self.parse_term()]
            while self.peek() == ",":
                self.eat(",")
                members.append(self.parse_term())
            self.eat("}")
            return self.build(PglSet, word_start, members)
        if word == "wedge":
            self.eat("(")
            verticals = [self.parse_set()]
            while self.peek() == ",":
                self.eat(",")
                verticals.append(self.parse_set())
            self.eat("|")
            diagonal = self.parse_set()
            self.eat(")")
            try:
                return Wedge(verticals, diagonal)
            except ValueError as exc:
                raise TermSyntaxError(str(exc), word_start) from exc
        raise TermSyntaxError(f"unknown term {word!r}" if word else "expected a term", word_start)

    def parse_set(self) -> list[Term]:
        self.eat("{")
        items: list[Term] = []
        if self.peek() != "}":
            items.append(self.parse_term())
            while self.peek() == ",":
                self.eat(",")
                items.append(self.parse_term())
        self.eat("}")
        return items
