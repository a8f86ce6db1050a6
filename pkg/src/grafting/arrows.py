"""Typed arrow terms for three equational theories.

The theories share one term language: identities, named generator arrows,
binary composition, an insertion operation on arrows, and a tensor on
arrows.  A theory signature fixes the object kind (trees or generator
words), the generator arrows with their endpoint schemas, and which of the
two binary operations is available:

    gamma      trees,  generators g{A,B} / g'{A,B},      insertion only
    assoc      trees,  generators b{A,B,C} / b'{A,B,C},  tensor only
    symstrict  words,  generator  c{A,B},                tensor only

Objects are evaluated eagerly, so endpoints are plain trees or words and
endpoint comparison is structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .errors import ArrowTypeError, IndexRangeError, MatchError, ParseError, TheoryError
from .trees import Tree, Wedge, format_tree, insert, leaf_count, parse_tree

Obj = Union[Tree, str]


class ArrowTerm:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Identity(ArrowTerm):
    obj: Obj


@dataclass(frozen=True, slots=True)
class Generator(ArrowTerm):
    name: str
    params: tuple[Obj, ...]


@dataclass(frozen=True, slots=True)
class Compose(ArrowTerm):
    after: ArrowTerm
    before: ArrowTerm


@dataclass(frozen=True, slots=True)
class InsOp(ArrowTerm):
    left: ArrowTerm
    index: int
    right: ArrowTerm


@dataclass(frozen=True, slots=True)
class TensorOp(ArrowTerm):
    left: ArrowTerm
    right: ArrowTerm


# ---------------------------------------------------------------------------
# Theory signatures


def obj_size(obj: Obj) -> int:
    return len(obj) if isinstance(obj, str) else leaf_count(obj)


def format_obj(obj: Obj) -> str:
    return obj if isinstance(obj, str) else format_tree(obj)


def _gamma_gen(name: str, params: tuple[Obj, ...]) -> tuple[Obj, Obj]:
    a, b = params
    assert isinstance(a, Tree) and isinstance(b, Tree)
    src = insert(a, leaf_count(a), b)
    tgt = insert(b, 1, a)
    return (src, tgt) if name == "g" else (tgt, src)


def _assoc_gen(name: str, params: tuple[Obj, ...]) -> tuple[Obj, Obj]:
    a, b, c = params
    assert isinstance(a, Tree) and isinstance(b, Tree) and isinstance(c, Tree)
    src = Wedge(a, Wedge(b, c))
    tgt = Wedge(Wedge(a, b), c)
    return (src, tgt) if name == "b" else (tgt, src)


def _sym_gen(name: str, params: tuple[Obj, ...]) -> tuple[Obj, Obj]:
    a, b = params
    assert isinstance(a, str) and isinstance(b, str)
    return a + b, b + a


@dataclass(frozen=True)
class TheorySig:
    name: str
    object_kind: str                      # "tree" or "word"
    generators: dict[str, tuple[int, Callable[[str, tuple[Obj, ...]], tuple[Obj, Obj]]]]
    has_insertion: bool
    has_tensor: bool


GAMMA_SIG = TheorySig("gamma", "tree", {"g": (2, _gamma_gen), "g'": (2, _gamma_gen)},
                      has_insertion=True, has_tensor=False)
ASSOC_SIG = TheorySig("assoc", "tree", {"b": (3, _assoc_gen), "b'": (3, _assoc_gen)},
                      has_insertion=False, has_tensor=True)
SYMSTRICT_SIG = TheorySig("symstrict", "word", {"c": (2, _sym_gen)},
                          has_insertion=False, has_tensor=True)

_SIGS = {s.name: s for s in (GAMMA_SIG, ASSOC_SIG, SYMSTRICT_SIG)}


def theory_sig(name: str) -> TheorySig:
    try:
        return _SIGS[name]
    except KeyError:
        raise TheoryError(f"unknown theory {name!r}") from None


def _check_obj(obj: Obj, sig: TheorySig) -> None:
    if sig.object_kind == "tree":
        if not isinstance(obj, Tree):
            raise ArrowTypeError(f"theory {sig.name} expects tree objects")
    else:
        if not isinstance(obj, str) or not obj or not obj.isalpha() or not obj.islower():
            raise ArrowTypeError(f"theory {sig.name} expects nonempty generator words")


# ---------------------------------------------------------------------------
# Typing


def infer_type(term: ArrowTerm, theory: str | TheorySig) -> tuple[Obj, Obj]:
    """Source and target of ``term``, or ArrowTypeError if it is ill-formed."""
    sig = theory_sig(theory) if isinstance(theory, str) else theory
    match term:
        case Identity(obj):
            _check_obj(obj, sig)
            return obj, obj
        case Generator(name, params):
            if name not in sig.generators:
                raise ArrowTypeError(f"theory {sig.name} has no generator {name!r}")
            count, typing = sig.generators[name]
            if len(params) != count:
                raise ArrowTypeError(f"generator {name!r} takes {count} objects")
            for p in params:
                _check_obj(p, sig)
            return typing(name, params)
        case Compose(after, before):
            src_b, tgt_b = infer_type(before, sig)
            src_a, tgt_a = infer_type(after, sig)
            if tgt_b != src_a:
                raise ArrowTypeError(
                    "composition endpoint mismatch: "
                    f"{format_obj(tgt_b)} vs {format_obj(src_a)}"
                )
            return src_b, tgt_a
        case InsOp(left, index, right):
            if not sig.has_insertion:
                raise ArrowTypeError(f"theory {sig.name} has no insertion on arrows")
            src_l, tgt_l = infer_type(left, sig)
            src_r, tgt_r = infer_type(right, sig)
            bound = obj_size(src_l)
            if not 1 <= index <= bound:
                raise IndexRangeError(f"arrow insertion index {index} out of range 1..{bound}")
            assert isinstance(src_l, Tree) and isinstance(tgt_l, Tree)
            assert isinstance(src_r, Tree) and isinstance(tgt_r, Tree)
            return insert(src_l, index, src_r), insert(tgt_l, index, tgt_r)
        case TensorOp(left, right):
            if not sig.has_tensor:
                raise ArrowTypeError(f"theory {sig.name} has no tensor on arrows")
            src_l, tgt_l = infer_type(left, sig)
            src_r, tgt_r = infer_type(right, sig)
            if isinstance(src_l, str):
                assert isinstance(src_r, str) and isinstance(tgt_l, str) and isinstance(tgt_r, str)
                return src_l + src_r, tgt_l + tgt_r
            assert isinstance(src_r, Tree) and isinstance(tgt_l, Tree) and isinstance(tgt_r, Tree)
            return Wedge(src_l, src_r), Wedge(tgt_l, tgt_r)
    raise TypeError(f"not an arrow term: {term!r}")


def source(term: ArrowTerm, theory: str | TheorySig) -> Obj:
    return infer_type(term, theory)[0]


def target(term: ArrowTerm, theory: str | TheorySig) -> Obj:
    return infer_type(term, theory)[1]


# ---------------------------------------------------------------------------
# Positions

Path = tuple[int, ...]


def children(term: ArrowTerm) -> tuple[ArrowTerm, ...]:
    match term:
        case Compose(after, before):
            return (after, before)
        case InsOp(left, _, right) | TensorOp(left, right):
            return (left, right)
    return ()


def subterm_at(term: ArrowTerm, path: Path) -> ArrowTerm:
    for step in path:
        kids = children(term)
        if not 1 <= step <= len(kids):
            raise MatchError(f"position {format_path(path)} does not address a node")
        term = kids[step - 1]
    return term


def replace_at(term: ArrowTerm, path: Path, new: ArrowTerm) -> ArrowTerm:
    if not path:
        return new
    step, rest = path[0], path[1:]
    match term:
        case Compose(after, before):
            if step == 1:
                return Compose(replace_at(after, rest, new), before)
            if step == 2:
                return Compose(after, replace_at(before, rest, new))
        case InsOp(left, index, right):
            if step == 1:
                return InsOp(replace_at(left, rest, new), index, right)
            if step == 2:
                return InsOp(left, index, replace_at(right, rest, new))
        case TensorOp(left, right):
            if step == 1:
                return TensorOp(replace_at(left, rest, new), right)
            if step == 2:
                return TensorOp(left, replace_at(right, rest, new))
    raise MatchError(f"position {format_path(path)} does not address a node")


def format_path(path: Path) -> str:
    return "root" if not path else ".".join(str(p) for p in path)


def parse_path(text: str) -> Path:
    if text == "root":
        return ()
    try:
        path = tuple(int(p) for p in text.split("."))
    except ValueError:
        raise ParseError(f"bad position {text!r}", 0) from None
    if any(p < 1 for p in path):
        raise ParseError(f"bad position {text!r}", 0)
    return path


# ---------------------------------------------------------------------------
# Comparison modulo the category laws


def flatten_composition(term: ArrowTerm) -> list[ArrowTerm]:
    """The factors of a composition chain, outermost target first."""
    if isinstance(term, Compose):
        return flatten_composition(term.after) + flatten_composition(term.before)
    return [term]


def compose_chain(factors: list[ArrowTerm], fallback: Obj) -> ArrowTerm:
    """Right-nested composition of ``factors``; identity on ``fallback`` if empty."""
    if not factors:
        return Identity(fallback)
    out = factors[-1]
    for f in reversed(factors[:-1]):
        out = Compose(f, out)
    return out


def cat_norm(term: ArrowTerm, theory: str | TheorySig) -> ArrowTerm:
    """Normalize modulo the two category laws only.

    Composition chains are flattened and identity factors dropped, at every
    depth.  Two terms are equal up to associativity and units of composition
    iff their normal forms are structurally equal.
    """
    sig = theory_sig(theory) if isinstance(theory, str) else theory

    def norm(t: ArrowTerm) -> ArrowTerm:
        match t:
            case Compose():
                factors = [norm(f) for f in flatten_composition(t)]
                kept = [f for f in factors if not isinstance(f, Identity)]
                return compose_chain(kept, source(t, sig))
            case InsOp(left, index, right):
                return InsOp(norm(left), index, norm(right))
            case TensorOp(left, right):
                return TensorOp(norm(left), norm(right))
        return t

    return norm(term)


# ---------------------------------------------------------------------------
# Text form


def format_arrow(term: ArrowTerm) -> str:
    match term:
        case Identity(obj):
            return f"id{{{format_obj(obj)}}}"
        case Generator(name, params):
            return f"{name}{{{','.join(format_obj(p) for p in params)}}}"
        case Compose(after, before):
            return f"({format_arrow(after)} o {format_arrow(before)})"
        case InsOp(left, index, right):
            return f"({format_arrow(left)} @{index} {format_arrow(right)})"
        case TensorOp(left, right):
            return f"({format_arrow(left)} ^ {format_arrow(right)})"
    raise TypeError(f"not an arrow term: {term!r}")


_GEN_HEADS = ("id", "g'", "g", "b'", "b", "c")


def parse_arrow(text: str, object_kind: str) -> ArrowTerm:
    """Parse the grammar

        Arrow ::= id{Obj} | g{Obj,Obj} | g'{Obj,Obj} | b{Obj,Obj,Obj}
                | b'{Obj,Obj,Obj} | c{Obj,Obj}
                | "(" Arrow "o" Arrow ")" | "(" Arrow "@" INT Arrow ")"
                | "(" Arrow "^" Arrow ")"

    Objects in braces are trees or generator words, per ``object_kind``.
    """
    term, pos = _parse_arrow_at(text, _skip_ws(text, 0), object_kind)
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise ParseError(f"unexpected {text[pos]!r} after arrow term", pos)
    return term


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_obj(text: str, start: int, end: int, object_kind: str) -> Obj:
    body = text[start:end]
    if object_kind == "tree":
        try:
            return parse_tree(body)
        except ParseError as exc:
            raise ParseError(f"bad tree in braces: {exc}", start + exc.offset) from exc
    word = body.strip()
    if not word or not word.isalpha() or not word.islower():
        raise ParseError(f"bad word {word!r} in braces", start)
    return word


def _parse_arrow_at(text: str, pos: int, kind: str) -> tuple[ArrowTerm, int]:
    if pos >= len(text):
        raise ParseError("unexpected end of input, expected an arrow term", pos)
    for head in _GEN_HEADS:
        if text.startswith(head + "{", pos):
            open_brace = pos + len(head)
            close = text.find("}", open_brace)
            if close < 0:
                raise ParseError("missing '}'", open_brace)
            params: list[Obj] = []
            cursor = open_brace + 1
            for piece in text[open_brace + 1:close].split(","):
                params.append(_parse_obj(text, cursor, cursor + len(piece), kind))
                cursor += len(piece) + 1
            if head == "id":
                if len(params) != 1:
                    raise ParseError("id takes one object", open_brace)
                return Identity(params[0]), close + 1
            return Generator(head, tuple(params)), close + 1
    if text[pos] == "(":
        left, pos = _parse_arrow_at(text, _skip_ws(text, pos + 1), kind)
        pos = _skip_ws(text, pos)
        if pos >= len(text):
            raise ParseError("unexpected end of input, expected an operator", pos)
        ch = text[pos]
        if ch == "o":
            right, pos = _parse_arrow_at(text, _skip_ws(text, pos + 1), kind)
            node: ArrowTerm = Compose(left, right)
        elif ch == "^":
            right, pos = _parse_arrow_at(text, _skip_ws(text, pos + 1), kind)
            node = TensorOp(left, right)
        elif ch == "@":
            at = pos
            pos += 1
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if start == pos:
                raise ParseError("expected an index after '@'", pos)
            index = int(text[start:pos])
            right, pos = _parse_arrow_at(text, _skip_ws(text, pos), kind)
            if index < 1:
                raise ParseError("insertion index must be positive", at)
            node = InsOp(left, index, right)
        else:
            raise ParseError(f"unexpected {ch!r}, expected 'o', '^' or '@'", pos)
        pos = _skip_ws(text, pos)
        if pos >= len(text) or text[pos] != ")":
            raise ParseError("expected ')'", pos)
        return node, pos + 1
    raise ParseError(f"unexpected {text[pos]!r} in arrow term", pos)
