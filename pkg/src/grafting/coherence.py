"""Translations between the insertion-style and tensor-style theories.

Both theories share the same objects (trees); each one's generators are
definable in the other.  On the insertion side the associator is a wrapped
instance of the basic swap g{2,2}; on the tensor side, insertion on arrows
is defined by structural recursion.  Because both free categories are
preorders, arrow equality is endpoint equality, which is what
``arrows_equal`` implements.
"""

from __future__ import annotations

from .arrows import (
    ASSOC_SIG, ArrowTerm, Compose, Generator, Identity, InsOp, TensorOp,
    infer_type, obj_size, theory_sig,
)
from .errors import ArrowTypeError, IndexRangeError, TheoryError
from .trees import LEAF, TWO, Leaf, Tree, Wedge, insert, leaf_count

_G22 = Generator("g", (TWO, TWO))
_G22R = Generator("g'", (TWO, TWO))


def b_in_gamma(a: Tree, b: Tree, c: Tree, direction: str = "fwd") -> ArrowTerm:
    """The tensor-side associator as an insertion-side term:
    ((g{2,2} @3 id{C}) @2 id{B}) @1 id{A}."""
    core = _G22 if direction == "fwd" else _G22R
    return InsOp(InsOp(InsOp(core, 3, Identity(c)), 2, Identity(b)), 1, Identity(a))


def wedge_in_gamma(f: ArrowTerm, g: ArrowTerm) -> ArrowTerm:
    """The tensor of two insertion-side arrows: (id{2} @2 g) @1 f."""
    return InsOp(InsOp(Identity(TWO), 2, g), 1, f)


def expand_gamma(a: Tree, b: Tree, direction: str = "fwd") -> ArrowTerm:
    """The swap with endpoints insert(A,|A|,B) -> insert(B,1,A), written with
    identities, g{2,2}, composition and insertion only.

    The recursion peels the first argument down to the two-leaf tree, then
    the second: a left part X splits off as (id @1), a right part Y through
    the degenerate hexagon; symmetrically on the other side.
    """
    if direction == "bwd":
        return reverse_arrow(expand_gamma(a, b, "fwd"))
    if isinstance(a, Leaf):
        return Identity(b)
    if isinstance(b, Leaf):
        return Identity(a)
    if a == TWO and b == TWO:
        return _G22
    if isinstance(a, Wedge):
        x, y = a.left, a.right
        if not isinstance(x, Leaf):
            return InsOp(expand_gamma(Wedge(LEAF, y), b), 1, Identity(x))
        if not isinstance(y, Leaf):
            return Compose(
                InsOp(expand_gamma(TWO, b), 2, Identity(y)),
                InsOp(Identity(TWO), 2, expand_gamma(y, b)),
            )
    assert a == TWO and isinstance(b, Wedge)
    u, v = b.left, b.right
    if isinstance(u, Leaf):
        return InsOp(_G22, 3, Identity(v))
    return Compose(
        InsOp(Identity(Wedge(LEAF, v)), 1, expand_gamma(TWO, u)),
        InsOp(expand_gamma(TWO, Wedge(LEAF, v)), 2, Identity(u)),
    )


def reverse_arrow(term: ArrowTerm) -> ArrowTerm:
    """The formal inverse: swap the two swap generators, reverse compositions."""
    match term:
        case Identity():
            return term
        case Generator("g", params):
            return Generator("g'", params)
        case Generator("g'", params):
            return Generator("g", params)
        case Generator("b", params):
            return Generator("b'", params)
        case Generator("b'", params):
            return Generator("b", params)
        case Compose(after, before):
            return Compose(reverse_arrow(before), reverse_arrow(after))
        case InsOp(left, index, right):
            return InsOp(reverse_arrow(left), index, reverse_arrow(right))
        case TensorOp(left, right):
            return TensorOp(reverse_arrow(left), reverse_arrow(right))
    raise ArrowTypeError(f"cannot reverse {term!r}")


def ins_on_assoc_arrows(f: ArrowTerm, n: int, g: ArrowTerm) -> ArrowTerm:
    """Insertion on tensor-side arrows, by structural recursion.

    Endpoints obey insert: source is insert(src f, n, src g), target is
    insert(tgt f, n, tgt g).
    """
    src_f, _ = infer_type(f, ASSOC_SIG)
    infer_type(g, ASSOC_SIG)
    bound = obj_size(src_f)
    if not 1 <= n <= bound:
        raise IndexRangeError(f"arrow insertion index {n} out of range 1..{bound}")
    if isinstance(g, Identity):
        d = g.obj
        assert isinstance(d, Tree)
        match f:
            case Identity():
                pass  # handled below with general g
            case Generator(name, params):
                a, b, c = params
                assert isinstance(a, Tree) and isinstance(b, Tree) and isinstance(c, Tree)
                if n <= leaf_count(a):
                    a = insert(a, n, d)
                elif n <= leaf_count(a) + leaf_count(b):
                    b = insert(b, n - leaf_count(a), d)
                else:
                    c = insert(c, n - leaf_count(a) - leaf_count(b), d)
                return Generator(name, (a, b, c))
            case Compose(after, before):
                return Compose(ins_on_assoc_arrows(after, n, g),
                               ins_on_assoc_arrows(before, n, g))
            case TensorOp(left, right):
                split = obj_size(infer_type(left, ASSOC_SIG)[0])
                if n <= split:
                    return TensorOp(ins_on_assoc_arrows(left, n, g), right)
                return TensorOp(left, ins_on_assoc_arrows(right, n - split, g))
    if isinstance(f, Identity):
        host = f.obj
        assert isinstance(host, Tree)
        if isinstance(host, Leaf):
            return g
        assert isinstance(host, Wedge)
        split = leaf_count(host.left)
        if n <= split:
            return TensorOp(ins_on_assoc_arrows(Identity(host.left), n, g),
                            Identity(host.right))
        return TensorOp(Identity(host.left),
                        ins_on_assoc_arrows(Identity(host.right), n - split, g))
    src_g, _ = infer_type(g, ASSOC_SIG)
    _, tgt_f = infer_type(f, ASSOC_SIG)
    return Compose(ins_on_assoc_arrows(Identity(tgt_f), n, g),
                   ins_on_assoc_arrows(f, n, Identity(src_g)))


def functor_G(term: ArrowTerm) -> ArrowTerm:
    """Translate a tensor-side arrow term to the insertion side."""
    match term:
        case Identity():
            return term
        case Generator("b", params):
            a, b, c = params
            return b_in_gamma(a, b, c, "fwd")  # type: ignore[arg-type]
        case Generator("b'", params):
            a, b, c = params
            return b_in_gamma(a, b, c, "bwd")  # type: ignore[arg-type]
        case Compose(after, before):
            return Compose(functor_G(after), functor_G(before))
        case TensorOp(left, right):
            return wedge_in_gamma(functor_G(left), functor_G(right))
    raise ArrowTypeError(f"not a tensor-side arrow term: {term!r}")


def functor_F(term: ArrowTerm) -> ArrowTerm:
    """Translate an insertion-side arrow term to the tensor side."""
    match term:
        case Identity():
            return term
        case Generator("g", params):
            a, b = params
            assert isinstance(a, Tree) and isinstance(b, Tree)
            if a == TWO and b == TWO:
                return Generator("b", (LEAF, LEAF, LEAF))
            return functor_F(expand_gamma(a, b, "fwd"))
        case Generator("g'", params):
            a, b = params
            assert isinstance(a, Tree) and isinstance(b, Tree)
            if a == TWO and b == TWO:
                return Generator("b'", (LEAF, LEAF, LEAF))
            return functor_F(expand_gamma(a, b, "bwd"))
        case Compose(after, before):
            return Compose(functor_F(after), functor_F(before))
        case InsOp(left, index, right):
            return ins_on_assoc_arrows(functor_F(left), index, functor_F(right))
    raise ArrowTypeError(f"not an insertion-side arrow term: {term!r}")


def arrows_equal(f: ArrowTerm, g: ArrowTerm, theory: str) -> bool:
    """Equality of arrows by endpoint comparison.

    Sound and complete for the two free preorder theories; the strict
    symmetric theory is not a preorder, so it is rejected here.
    """
    sig = theory_sig(theory)
    if sig.name == "symstrict":
        raise TheoryError("arrow equality by endpoints does not apply to symstrict")
    return infer_type(f, sig) == infer_type(g, sig)


def _first_rotation(tree: Tree) -> tuple[Tree, ArrowTerm] | None:
    """One step toward the left comb: rotate the first (preorder) subtree of
    shape U^(V^W), wrapped in identity tensors; None when already a comb."""
    match tree:
        case Wedge(u, Wedge(v, w)):
            return Wedge(Wedge(u, v), w), Generator("b", (u, v, w))
        case Wedge(left, right):
            step = _first_rotation(left)
            if step is not None:
                rotated, arrow = step
                return Wedge(rotated, right), TensorOp(arrow, Identity(right))
            step = _first_rotation(right)
            if step is not None:
                rotated, arrow = step
                return Wedge(left, rotated), TensorOp(Identity(left), arrow)
    return None


def _comb_path(tree: Tree) -> list[ArrowTerm]:
    arrows = []
    while (step := _first_rotation(tree)) is not None:
        tree, arrow = step
        arrows.append(arrow)
    return arrows


def canonical_arrow(x: Tree, y: Tree) -> ArrowTerm:
    """A tensor-side arrow x -> y through the left-comb tree."""
    if leaf_count(x) != leaf_count(y):
        raise IndexRangeError(
            f"no arrow between trees with {leaf_count(x)} and {leaf_count(y)} leaves"
        )
    down = _comb_path(x)
    up = [reverse_arrow(a) for a in reversed(_comb_path(y))]
    applied = down + up     # in application order, x -> comb -> y
    if not applied:
        return Identity(x)
    out = applied[0]
    for arrow in applied[1:]:
        out = Compose(arrow, out)
    return out
