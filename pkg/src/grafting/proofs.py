"""First-order axiom schemata, positional rewriting, and proof checking.

An axiom clause pairs two patterns over metavariables: arrow variables
(bind whole subterms), object variables (bind trees or words), and index
variables (bind integers, possibly through affine expressions such as
``m - |g| + 1``).  Matching is plain first-order with two twists:

* composition is matched modulo associativity: pattern and term chains
  are flattened and paired factor by factor;
* object patterns of the shape insert(A, n, B) are matched by enumerating
  every decomposition of the concrete tree, in preorder of the grafted
  subtree, so underdetermined matches simply yield several candidates.

A proof script alternates terms with single-axiom steps and is checked
mechanically; consecutive terms are compared modulo the two category laws
(chains flattened, identity factors dropped), which is the only implicit
reasoning the checker performs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Union

from .errors import ArrowTypeError, GraftingError, IndexRangeError, MatchError, ParseError
from .trees import LEAF, Tree, Wedge, decompositions, insert
from .arrows import (
    ArrowTerm, Compose, Generator, Identity, InsOp, Obj, Path, TensorOp, TheorySig,
    cat_norm, compose_chain, flatten_composition, format_arrow, format_path, infer_type,
    obj_size, parse_arrow, parse_path, replace_at, subterm_at, theory_sig,
)

Env = dict[str, object]


# ---------------------------------------------------------------------------
# Patterns

@dataclass(frozen=True)
class IndexExpr:
    """An affine index form: var + const + signed references.

    A reference names another metavariable and contributes its integer value
    when it is an index, and its size |v| when it is an object or an arrow.
    """
    var: str | None = None
    const: int = 0
    sizes: tuple[tuple[int, str], ...] = ()


def ivar(name: str) -> IndexExpr:
    return IndexExpr(var=name)


def iconst(value: int) -> IndexExpr:
    return IndexExpr(const=value)


def isize(name: str) -> IndexExpr:
    return IndexExpr(sizes=((1, name),))


@dataclass(frozen=True)
class OVar:
    name: str


@dataclass(frozen=True)
class OLeafP:
    pass


@dataclass(frozen=True)
class OWedgeP:
    left: "OPattern"
    right: "OPattern"


@dataclass(frozen=True)
class OConcatP:
    left: "OPattern"
    right: "OPattern"


@dataclass(frozen=True)
class OInsP:
    left: "OPattern"
    index: IndexExpr
    right: "OPattern"


OPattern = Union[OVar, OLeafP, OWedgeP, OConcatP, OInsP]


@dataclass(frozen=True)
class PVar:
    name: str


@dataclass(frozen=True)
class PIdentity:
    obj: OPattern


@dataclass(frozen=True)
class PGen:
    name: str
    params: tuple[OPattern, ...]


@dataclass(frozen=True)
class PCompose:
    after: "Pattern"
    before: "Pattern"


@dataclass(frozen=True)
class PInsOp:
    left: "Pattern"
    index: IndexExpr
    right: "Pattern"


@dataclass(frozen=True)
class PTensor:
    left: "Pattern"
    right: "Pattern"


Pattern = Union[PVar, PIdentity, PGen, PCompose, PInsOp, PTensor]


@dataclass(frozen=True)
class Clause:
    lhs: Pattern
    rhs: Pattern
    guard: Callable[[Env, TheorySig], bool] | None = None
    guard_doc: str = ""
    derived: tuple[tuple[str, Callable[[Env, TheorySig], object]], ...] = ()
    free_index: tuple[tuple[str, Callable[[Env, TheorySig], range]], ...] = ()


@dataclass(frozen=True)
class RewriteAxiom:
    name: str
    clauses: tuple[Clause, ...]


def env_size(env: Env, name: str, sig: TheorySig) -> int:
    """The integer a reference contributes: an index value, an object size,
    or the source size of an arrow."""
    value = env[name]
    if isinstance(value, int):
        return value
    if isinstance(value, ArrowTerm):
        return obj_size(infer_type(value, sig)[0])
    return obj_size(value)  # type: ignore[arg-type]


def src_of(name: str) -> Callable[[Env, TheorySig], object]:
    return lambda env, sig: infer_type(env[name], sig)[0]  # type: ignore[arg-type]


def tgt_of(name: str) -> Callable[[Env, TheorySig], object]:
    return lambda env, sig: infer_type(env[name], sig)[1]  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# Matching


def _eval_index(expr: IndexExpr, env: Env, sig: TheorySig) -> int:
    total = expr.const
    if expr.var is not None:
        total += env[expr.var]  # type: ignore[operator]
    for sign, name in expr.sizes:
        total += sign * env_size(env, name, sig)
    return total


def _match_index(expr: IndexExpr, value: int, env: Env, sig: TheorySig) -> Iterator[Env]:
    if expr.var is not None and expr.var not in env:
        if any(name not in env for _, name in expr.sizes):
            return
        solved = value - expr.const
        for sign, name in expr.sizes:
            solved -= sign * env_size(env, name, sig)
        if solved >= 1:
            yield {**env, expr.var: solved}
        return
    if any(name not in env for _, name in expr.sizes):
        return
    if _eval_index(expr, env, sig) == value:
        yield env


def _match_obj(pat: OPattern, obj: Obj, env: Env, sig: TheorySig) -> Iterator[Env]:
    match pat:
        case OVar(name):
            if name in env:
                if env[name] == obj:
                    yield env
            else:
                yield {**env, name: obj}
        case OLeafP():
            if obj == LEAF:
                yield env
        case OWedgeP(left, right):
            if isinstance(obj, Wedge):
                for e1 in _match_obj(left, obj.left, env, sig):
                    yield from _match_obj(right, obj.right, e1, sig)
        case OConcatP(left, right):
            if isinstance(obj, str):
                for cut in range(1, len(obj)):
                    for e1 in _match_obj(left, obj[:cut], env, sig):
                        yield from _match_obj(right, obj[cut:], e1, sig)
        case OInsP(left, index, right):
            if isinstance(obj, Tree):
                for host, n, part in decompositions(obj):
                    for e1 in _match_obj(left, host, env, sig):
                        for e2 in _match_index(index, n, e1, sig):
                            yield from _match_obj(right, part, e2, sig)


def _match(pat: Pattern, term: ArrowTerm, env: Env, sig: TheorySig) -> Iterator[Env]:
    match pat:
        case PVar(name):
            if name in env:
                if env[name] == term:
                    yield env
            else:
                yield {**env, name: term}
        case PIdentity(opat):
            if isinstance(term, Identity):
                yield from _match_obj(opat, term.obj, env, sig)
        case PGen(name, params):
            if isinstance(term, Generator) and term.name == name \
                    and len(term.params) == len(params):
                envs = [env]
                for opat, obj in zip(params, term.params):
                    envs = [e2 for e1 in envs for e2 in _match_obj(opat, obj, e1, sig)]
                yield from envs
        case PCompose():
            pat_factors = _flatten_pattern(pat)
            term_factors = flatten_composition(term)
            if len(pat_factors) == len(term_factors) >= 2:
                envs = [env]
                for p, t in zip(pat_factors, term_factors):
                    envs = [e2 for e1 in envs for e2 in _match(p, t, e1, sig)]
                yield from envs
        case PInsOp(left, index, right):
            if isinstance(term, InsOp):
                for e1 in _match(left, term.left, env, sig):
                    for e2 in _match_index(index, term.index, e1, sig):
                        yield from _match(right, term.right, e2, sig)
        case PTensor(left, right):
            if isinstance(term, TensorOp):
                for e1 in _match(left, term.left, env, sig):
                    yield from _match(right, term.right, e1, sig)


def _flatten_pattern(pat: Pattern) -> list[Pattern]:
    if isinstance(pat, PCompose):
        return _flatten_pattern(pat.after) + _flatten_pattern(pat.before)
    return [pat]


def _with_derived(clause: Clause, env: Env, sig: TheorySig) -> Env | None:
    out = dict(env)
    for name, fn in clause.derived:
        try:
            value = fn(out, sig)
        except GraftingError:
            return None
        if name in out:
            if out[name] != value:
                return None
        else:
            out[name] = value
    return out


def iter_matches(axiom: RewriteAxiom, direction: str, term: ArrowTerm,
                 sig: TheorySig) -> Iterator[tuple[Clause, Env]]:
    """All clause instantiations whose ``direction`` side equals ``term``."""
    if direction not in ("fwd", "bwd"):
        raise MatchError(f"bad direction {direction!r}, expected fwd or bwd")
    for clause in axiom.clauses:
        side = clause.lhs if direction == "fwd" else clause.rhs
        for env in _match(side, term, {}, sig):
            done = _with_derived(clause, env, sig)
            if done is None:
                continue
            for full in _expand_free(clause, done, sig):
                if clause.guard is None or clause.guard(full, sig):
                    yield clause, full


def _expand_free(clause: Clause, env: Env, sig: TheorySig) -> Iterator[Env]:
    missing = [(name, fn) for name, fn in clause.free_index if name not in env]
    if not missing:
        yield env
        return
    name, fn = missing[0]
    for value in fn(env, sig):
        yield from _expand_free(clause, {**env, name: value}, sig)


def match_axiom(axiom: RewriteAxiom, direction: str, term: ArrowTerm,
                sig: TheorySig) -> Env | None:
    """The first matching assignment, or None."""
    for _, env in iter_matches(axiom, direction, term, sig):
        return env
    return None


# ---------------------------------------------------------------------------
# Instantiation and application


def instantiate_obj(pat: OPattern, env: Env, sig: TheorySig) -> Obj:
    match pat:
        case OVar(name):
            return env[name]  # type: ignore[return-value]
        case OLeafP():
            return LEAF
        case OWedgeP(left, right):
            l = instantiate_obj(left, env, sig)
            r = instantiate_obj(right, env, sig)
            assert isinstance(l, Tree) and isinstance(r, Tree)
            return Wedge(l, r)
        case OConcatP(left, right):
            return instantiate_obj(left, env, sig) + instantiate_obj(right, env, sig)  # type: ignore[operator]
        case OInsP(left, index, right):
            l = instantiate_obj(left, env, sig)
            r = instantiate_obj(right, env, sig)
            assert isinstance(l, Tree) and isinstance(r, Tree)
            return insert(l, _eval_index(index, env, sig), r)
    raise TypeError(f"not an object pattern: {pat!r}")


def instantiate(pat: Pattern, env: Env, sig: TheorySig) -> ArrowTerm:
    match pat:
        case PVar(name):
            return env[name]  # type: ignore[return-value]
        case PIdentity(opat):
            return Identity(instantiate_obj(opat, env, sig))
        case PGen(name, params):
            return Generator(name, tuple(instantiate_obj(p, env, sig) for p in params))
        case PCompose(after, before):
            return Compose(instantiate(after, env, sig), instantiate(before, env, sig))
        case PInsOp(left, index, right):
            return InsOp(instantiate(left, env, sig), _eval_index(index, env, sig),
                         instantiate(right, env, sig))
        case PTensor(left, right):
            return TensorOp(instantiate(left, env, sig), instantiate(right, env, sig))
    raise TypeError(f"not a pattern: {pat!r}")


def _rewrites(term: ArrowTerm, axiom: RewriteAxiom, direction: str, path: Path,
              sig: TheorySig) -> Iterator[ArrowTerm]:
    """Whole-term results of applying the axiom at ``path``, all matches."""
    src, tgt = infer_type(term, sig)
    sub = subterm_at(term, path)
    for clause, env in iter_matches(axiom, direction, sub, sig):
        other = clause.rhs if direction == "fwd" else clause.lhs
        try:
            replacement = instantiate(other, env, sig)
            candidate = replace_at(term, path, replacement)
            if infer_type(candidate, sig) != (src, tgt):
                continue
        except (ArrowTypeError, IndexRangeError):
            continue
        yield candidate


def apply_axiom(term: ArrowTerm, axiom: RewriteAxiom, direction: str, path: Path,
                sig: TheorySig) -> ArrowTerm:
    """Rewrite the subterm at ``path`` by the first matching instantiation."""
    for candidate in _rewrites(term, axiom, direction, path, sig):
        return candidate
    raise MatchError(
        f"axiom {axiom.name} ({direction}) does not match at {format_path(path)}"
    )


# ---------------------------------------------------------------------------
# Proof scripts


@dataclass(frozen=True)
class Step:
    axiom: str
    direction: str
    path: Path


@dataclass(frozen=True)
class ProofScript:
    theory: str
    terms: tuple[ArrowTerm, ...]
    steps: tuple[Step, ...]
    name: str = ""
    metadata: Mapping[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    message: str = ""
    step: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_chain(script: ProofScript, axioms: Mapping[str, RewriteAxiom]) -> Verdict:
    """Check a proof script step by step.

    Accepts iff every term type-checks with the endpoints of the first term,
    and each stated axiom application at its stated position turns each term
    into the next one, up to flattening of composition and removal of
    identity factors.
    """
    sig = theory_sig(script.theory)
    if len(script.terms) != len(script.steps) + 1 or not script.terms:
        return Verdict(False, "script must alternate n+1 terms with n steps")
    try:
        endpoints = infer_type(script.terms[0], sig)
    except GraftingError as exc:
        return Verdict(False, f"term 0 does not type-check: {exc}", step=0)
    for i, term in enumerate(script.terms[1:], start=1):
        try:
            if infer_type(term, sig) != endpoints:
                return Verdict(False, f"term {i} changes the chain endpoints", step=i)
        except GraftingError as exc:
            return Verdict(False, f"term {i} does not type-check: {exc}", step=i)
    for i, step in enumerate(script.steps, start=1):
        term, expected = script.terms[i - 1], script.terms[i]
        if step.axiom not in axioms:
            return Verdict(False, f"step {i}: unknown axiom {step.axiom!r}", step=i)
        try:
            wanted = cat_norm(expected, sig)
            matched = False
            for candidate in _rewrites(term, axioms[step.axiom], step.direction,
                                       step.path, sig):
                matched = True
                if cat_norm(candidate, sig) == wanted:
                    break
            else:
                detail = "result differs from the stated term" if matched \
                    else "axiom does not match there"
                return Verdict(
                    False,
                    f"step {i}: {step.axiom} {step.direction} at "
                    f"{format_path(step.path)}: {detail}; expected "
                    f"{format_arrow(expected)}",
                    step=i,
                )
        except MatchError as exc:
            return Verdict(False, f"step {i}: {exc}", step=i)
    return Verdict(True, "accepted")


def derive_script(theory: str, start: ArrowTerm,
                  moves: list[tuple[str, str, Path, ArrowTerm | None]],
                  axioms: Mapping[str, RewriteAxiom], name: str = "",
                  metadata: Mapping[str, str] | None = None) -> ProofScript:
    """Build a script by replaying axiom applications from ``start``.

    Each move is (axiom, direction, path, displayed) where ``displayed``,
    if given, overrides the raw application result and must agree with it
    modulo the category laws.
    """
    sig = theory_sig(theory)
    terms = [start]
    steps = []
    current = start
    for axiom_name, direction, path, displayed in moves:
        if displayed is None:
            result = apply_axiom(current, axioms[axiom_name], direction, path, sig)
        else:
            wanted = cat_norm(displayed, sig)
            for candidate in _rewrites(current, axioms[axiom_name], direction,
                                       path, sig):
                if cat_norm(candidate, sig) == wanted:
                    break
            else:
                raise MatchError(
                    f"no application of {axiom_name} at {format_path(path)} "
                    f"yields the displayed term {format_arrow(displayed)}"
                )
            result = displayed
        steps.append(Step(axiom_name, direction, path))
        terms.append(result)
        current = result
    return ProofScript(theory, tuple(terms), tuple(steps), name=name,
                       metadata=dict(metadata or {}))


# ---------------------------------------------------------------------------
# Proof file format


def format_proof(script: ProofScript) -> str:
    lines = [f"theory {script.theory}"]
    for key in sorted(script.metadata):
        lines.append(f"# {key}: {script.metadata[key]}")
    lines.append(f"term: {format_arrow(script.terms[0])}")
    for step, term in zip(script.steps, script.terms[1:]):
        lines.append(f"step: {step.axiom} {step.direction} at {format_path(step.path)}")
        lines.append(f"term: {format_arrow(term)}")
    return "\n".join(lines) + "\n"


def parse_proof(text: str) -> ProofScript:
    theory = None
    terms: list[ArrowTerm] = []
    steps: list[Step] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if theory is None:
            if not line.startswith("theory "):
                raise ParseError(f"line {lineno}: expected 'theory <name>'", 0)
            theory = line[len("theory "):].strip()
            theory_sig(theory)
            continue
        if line.startswith("term:"):
            if len(terms) != len(steps):
                raise ParseError(f"line {lineno}: term out of turn", 0)
            terms.append(parse_arrow(line[len("term:"):].strip(),
                                     theory_sig(theory).object_kind))
        elif line.startswith("step:"):
            if len(terms) != len(steps) + 1:
                raise ParseError(f"line {lineno}: step out of turn", 0)
            fields = line[len("step:"):].split()
            if len(fields) != 4 or fields[2] != "at" or fields[1] not in ("fwd", "bwd"):
                raise ParseError(
                    f"line {lineno}: expected 'step: <axiom> <fwd|bwd> at <path>'", 0)
            steps.append(Step(fields[0], fields[1], parse_path(fields[3])))
        else:
            raise ParseError(f"line {lineno}: unrecognized line", 0)
    if theory is None:
        raise ParseError("empty proof file", 0)
    if len(terms) != len(steps) + 1:
        raise ParseError("proof file must end with a term", 0)
    return ProofScript(theory, tuple(terms), tuple(steps))
