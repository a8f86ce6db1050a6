"""Insertion terms over the generators 1 and 2, rewriting, and normal forms.

Terms denote trees: 2 stands for the two-leaf tree and ``A @n B`` for
"insert B at the n-th leaf of A".  The two associativity rules plus the unit
rule are oriented left to right and normalization decides equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import CalculusError, IndexRangeError, NotNormalError, ParseError
from .trees import LEAF, TWO, Leaf, Tree, Wedge, insert


class ITerm:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class One(ITerm):
    pass


@dataclass(frozen=True, slots=True)
class Two(ITerm):
    pass


@dataclass(frozen=True, slots=True)
class Ins(ITerm):
    left: ITerm
    index: int
    right: ITerm

    def __post_init__(self) -> None:
        bound = arity(self.left)
        if not 1 <= self.index <= bound:
            raise IndexRangeError(
                f"insertion index {self.index} out of range 1..{bound}"
            )


ONE = One()
TWO_TERM = Two()


class Calculus(Enum):
    WITH_UNIT = "with-unit"
    WITHOUT_UNIT = "without-unit"


def arity(term: ITerm) -> int:
    match term:
        case One():
            return 1
        case Two():
            return 2
        case Ins(left, _, right):
            return arity(left) + arity(right) - 1
    raise TypeError(f"not a term: {term!r}")


def contains_one(term: ITerm) -> bool:
    match term:
        case One():
            return True
        case Ins(left, _, right):
            return contains_one(left) or contains_one(right)
    return False


def _require_language(term: ITerm, calculus: Calculus) -> None:
    if calculus is Calculus.WITHOUT_UNIT and contains_one(term):
        raise CalculusError("term contains the unit generator 1")


def eval_v(term: ITerm) -> Tree:
    """The denotation of a term as a tree."""
    match term:
        case One():
            return LEAF
        case Two():
            return TWO
        case Ins(left, n, right):
            return insert(eval_v(left), n, eval_v(right))
    raise TypeError(f"not a term: {term!r}")


def measure_c(term: ITerm) -> int:
    if contains_one(term):
        raise CalculusError("measures are defined only for unit-free terms")
    match term:
        case Two():
            return 2
        case Ins(left, _, right):
            return measure_c(left) * (measure_c(right) + 1)
    raise TypeError(f"not a term: {term!r}")


def measure_s(term: ITerm) -> int:
    if contains_one(term):
        raise CalculusError("measures are defined only for unit-free terms")
    match term:
        case Ins(left, n, right):
            return measure_s(left) + n + measure_s(right)
    return 0


def measure_d(term: ITerm) -> int:
    return measure_c(term) + measure_s(term)


def _unit_redex(term: ITerm) -> bool:
    return isinstance(term, Ins) and (isinstance(term.left, One)
                                      or isinstance(term.right, One))


def _assoc_redex(term: ITerm) -> bool:
    return (isinstance(term, Ins) and isinstance(term.left, Ins)
            and term.left.index <= term.index)


def _is_redex(term: ITerm, calculus: Calculus) -> bool:
    if calculus is Calculus.WITH_UNIT and _unit_redex(term):
        return True
    return _assoc_redex(term)


def _contract(term: Ins, calculus: Calculus) -> ITerm:
    if calculus is Calculus.WITH_UNIT and _unit_redex(term):
        return term.right if isinstance(term.left, One) else term.left
    inner = term.left
    assert isinstance(inner, Ins)
    n, m = inner.index, term.index
    if m < n + arity(inner.right):
        return Ins(inner.left, n, Ins(inner.right, m - n + 1, term.right))
    return Ins(Ins(inner.left, m - arity(inner.right) + 1, term.right), n,
               inner.right)


def rewrite_step(term: ITerm, calculus: Calculus) -> ITerm | None:
    """Contract the leftmost-outermost redex once, or return None if normal."""
    if _is_redex(term, calculus):
        return _contract(term, calculus)  # type: ignore[arg-type]
    if isinstance(term, Ins):
        left = rewrite_step(term.left, calculus)
        if left is not None:
            return Ins(left, term.index, term.right)
        right = rewrite_step(term.right, calculus)
        if right is not None:
            return Ins(term.left, term.index, right)
    return None


def _strip_units(term: ITerm) -> ITerm:
    match term:
        case Ins(left, n, right):
            left = _strip_units(left)
            right = _strip_units(right)
            if isinstance(left, One):
                return right
            if isinstance(right, One):
                return left
            return Ins(left, n, right)
    return term


def normalize(term: ITerm, calculus: Calculus) -> ITerm:
    """The unique irreducible term equal to ``term`` in the calculus.

    With the unit, all occurrences of 1 are erased first; what remains is
    rewritten by the associativity rules alone, which terminate because the
    measure d strictly decreases at each step.
    """
    _require_language(term, calculus)
    if calculus is Calculus.WITH_UNIT:
        term = _strip_units(term)
        if isinstance(term, One):
            return term
    while (step := rewrite_step(term, Calculus.WITHOUT_UNIT)) is not None:
        term = step
    return term


def is_normal(term: ITerm, calculus: Calculus) -> bool:
    if calculus is Calculus.WITH_UNIT and isinstance(term, One):
        return True
    if contains_one(term):
        return False
    return rewrite_step(term, Calculus.WITHOUT_UNIT) is None


class NormalKind(Enum):
    TYPE1 = "type-1"
    TYPE2 = "type-2"
    TYPE3 = "type-3"
    TYPE4 = "type-4"
    UNIT = "unit"


@dataclass(frozen=True, slots=True)
class Classification:
    kind: NormalKind
    a1: ITerm | None = None
    a2: ITerm | None = None


def classify_normal(term: ITerm) -> Classification:
    """Sort a normal term into one of the four shapes (or the bare unit).

    Raises NotNormalError when the term still has a redex.  Every
    redex-free unit-free term matches exactly one shape.
    """
    if isinstance(term, One):
        return Classification(NormalKind.UNIT)
    if not is_normal(term, Calculus.WITH_UNIT):
        raise NotNormalError(f"term {format_iterm(term)} has a redex")
    match term:
        case Two():
            return Classification(NormalKind.TYPE4)
        case Ins(Two(), 1, a1):
            return Classification(NormalKind.TYPE3, a1=a1)
        case Ins(Two(), 2, a2):
            return Classification(NormalKind.TYPE2, a2=a2)
        case Ins(Ins(Two(), 2, a2), 1, a1):
            return Classification(NormalKind.TYPE1, a1=a1, a2=a2)
    raise NotNormalError(f"term {format_iterm(term)} is not of a normal shape")


def equal_terms(a: ITerm, b: ITerm, calculus: Calculus) -> bool:
    """Decide provable equality by comparing normal forms."""
    return normalize(a, calculus) == normalize(b, calculus)


def from_tree(tree: Tree) -> ITerm:
    """The normal term denoting ``tree``; the single leaf maps to 1."""
    return normalize(_embed(tree), Calculus.WITH_UNIT)


def _embed(tree: Tree) -> ITerm:
    match tree:
        case Leaf():
            return ONE
        case Wedge(left, right):
            return Ins(Ins(TWO_TERM, 2, _embed(right)), 1, _embed(left))
    raise TypeError(f"not a tree: {tree!r}")


def format_iterm(term: ITerm) -> str:
    """Canonical text: ``1``, ``2``, or ``(A @n B)``."""
    match term:
        case One():
            return "1"
        case Two():
            return "2"
        case Ins(left, n, right):
            return f"({format_iterm(left)} @{n} {format_iterm(right)})"
    raise TypeError(f"not a term: {term!r}")


def parse_iterm(text: str) -> ITerm:
    term, pos = _parse_iterm_at(text, _skip_ws(text, 0))
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise ParseError(f"unexpected {text[pos]!r} after term", pos)
    return term


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_iterm_at(text: str, pos: int) -> tuple[ITerm, int]:
    if pos >= len(text):
        raise ParseError("unexpected end of input, expected a term", pos)
    ch = text[pos]
    if ch == "1":
        return ONE, pos + 1
    if ch == "2":
        return TWO_TERM, pos + 1
    if ch == "(":
        left, pos = _parse_iterm_at(text, _skip_ws(text, pos + 1))
        pos = _skip_ws(text, pos)
        if pos >= len(text) or text[pos] != "@":
            raise ParseError("expected '@' in insertion", pos)
        at = pos
        pos += 1
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise ParseError("expected an index after '@'", pos)
        index = int(text[start:pos])
        right, pos = _parse_iterm_at(text, _skip_ws(text, pos))
        pos = _skip_ws(text, pos)
        if pos >= len(text) or text[pos] != ")":
            raise ParseError("expected ')'", pos)
        try:
            return Ins(left, index, right), pos + 1
        except IndexRangeError as exc:
            raise ParseError(str(exc), at) from exc
    raise ParseError(f"unexpected {ch!r}, expected '1', '2' or '('", pos)


@lru_cache(maxsize=None)
def all_insertion_terms(n: int) -> tuple[ITerm, ...]:
    """All unit-free terms of arity ``n``, in a fixed order."""
    if n < 2:
        raise ValueError("unit-free terms have arity at least 2")
    if n == 2:
        return (TWO_TERM,)
    out = []
    for k in range(2, n):
        for left in all_insertion_terms(k):
            for right in all_insertion_terms(n + 1 - k):
                out.extend(Ins(left, i, right) for i in range(1, k + 1))
    return tuple(out)


def all_unit_terms(max_nodes: int) -> tuple[ITerm, ...]:
    """All terms (unit allowed) with at most ``max_nodes`` nodes."""
    by_size: dict[int, list[ITerm]] = {1: [ONE, TWO_TERM]}
    for size in range(2, max_nodes + 1):
        bucket: list[ITerm] = []
        for left_size in range(1, size - 1):
            for left in by_size[left_size]:
                for right in by_size[size - 1 - left_size]:
                    bucket.extend(
                        Ins(left, i, right) for i in range(1, arity(left) + 1)
                    )
        by_size[size] = bucket
    return tuple(t for size in sorted(by_size) for t in by_size[size])
