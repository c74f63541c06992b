"""Herbrand-style expansion trees for prenex formulas and their compilation
into innocent strategies on the matching prenex arena."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .core import STAR, Arena, Polarity
from .strategy import InnocentStrategy


@dataclass(frozen=True)
class Term:
    """A first-order term: a symbol applied to zero or more arguments."""

    symbol: str
    args: tuple[Term, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.symbol
        return f"{self.symbol}({','.join(map(str, self.args))})"

    def symbols(self) -> set[str]:
        out = {self.symbol}
        for a in self.args:
            out |= a.symbols()
        return out

    def contains(self, name: str) -> bool:
        return name in self.symbols()

    def substitute(self, env: Mapping[str, Term]) -> Term:
        if not self.args:
            return env.get(self.symbol, self)
        return Term(self.symbol, tuple(a.substitute(env) for a in self.args))


_TOKEN = re.compile(r"\s*([A-Za-z0-9_'.]+|[(),])")


def parse_term(text: str) -> Term:
    tokens = _TOKEN.findall(text)
    if "".join(tokens) != re.sub(r"\s+", "", text):
        raise ValueError(f"cannot parse term {text!r}")
    pos = 0

    def parse() -> Term:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] in "(),":
            raise ValueError(f"cannot parse term {text!r}")
        sym = tokens[pos]
        pos += 1
        if pos < len(tokens) and tokens[pos] == "(":
            pos += 1
            args = [parse()]
            while pos < len(tokens) and tokens[pos] == ",":
                pos += 1
                args.append(parse())
            if pos >= len(tokens) or tokens[pos] != ")":
                raise ValueError(f"unbalanced parentheses in {text!r}")
            pos += 1
            return Term(sym, tuple(args))
        return Term(sym)

    t = parse()
    if pos != len(tokens):
        raise ValueError(f"trailing input in term {text!r}")
    return t


def as_term(t: Term | str) -> Term:
    return t if isinstance(t, Term) else parse_term(t)


def quantifier_polarity(depth: int) -> Polarity:
    """Which player instantiates the quantifier at ``depth`` (the outermost one is Player's)."""
    return Polarity.P if depth % 2 == 0 else Polarity.O


def prenex_arena(variables: Sequence[str], universe: Iterable[Term | str], name: str = "prenex") -> Arena:
    """``* ⊢ v0:=t``, ``v_i:=t ⊢ v_{i+1}:=t'`` over a finite term universe."""
    terms = sorted({str(as_term(t)) for t in universe})
    moves = {STAR}
    labels: dict[str, Polarity] = {STAR: Polarity.O}
    enabling = set()
    for d, v in enumerate(variables):
        for t in terms:
            m = move_name(v, t)
            moves.add(m)
            labels[m] = quantifier_polarity(d)
            if d == 0:
                enabling.add((STAR, m))
            else:
                for t0 in terms:
                    enabling.add((move_name(variables[d - 1], t0), m))
    return Arena(moves, enabling, labels, {STAR}, name=name)


def move_name(variable: str, term: Term | str) -> str:
    return f"{variable}:={term}"


@dataclass(frozen=True)
class Edge:
    """An edge of the expansion tree: a witness term or an eigenvariable name."""

    label: str
    parent: str | None = None  # label of the parent edge; None for edges at the root


@dataclass(frozen=True)
class ExpansionTree:
    """``edges`` keyed by label; ``ordering`` is a proposed total order of those labels.

    ``owner`` is the player the tree is a strategy for: the quantifiers it
    instantiates carry terms, the others carry eigenvariables.
    """

    variables: tuple[str, ...]
    edges: tuple[Edge, ...]
    ordering: tuple[str, ...]
    owner: Polarity
    terms: Mapping[str, Term]  # witness label -> term it stands for

    @classmethod
    def build(
        cls,
        variables: Sequence[str],
        owner: Polarity | str,
        edges: Iterable[tuple[str, str | None]],
        ordering: Sequence[str],
        terms: Mapping[str, Term | str] | None = None,
    ) -> ExpansionTree:
        terms = dict(terms or {})
        es = tuple(Edge(l, p) for l, p in edges)
        owner = Polarity(owner)
        tree = cls(tuple(variables), es, tuple(ordering), owner, {})
        full = {}
        for e in es:
            if tree.is_witness(e.label):
                full[e.label] = as_term(terms.get(e.label, e.label))
        object.__setattr__(tree, "terms", full)
        return tree

    def edge(self, label: str) -> Edge:
        for e in self.edges:
            if e.label == label:
                return e
        raise KeyError(label)

    def depth(self, label: str) -> int:
        d = 0
        e = self.edge(label)
        while e.parent is not None:
            d += 1
            e = self.edge(e.parent)
        return d

    def is_witness(self, label: str) -> bool:
        return quantifier_polarity(self.depth(label)) is self.owner

    def eigenvariables(self) -> list[str]:
        return [e.label for e in self.edges if not self.is_witness(e.label)]


@dataclass(frozen=True)
class OrderingCheck:
    ok: bool
    condition: int | None = None  # 1: branch order, 2: eigenvariable before use
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_expansion_ordering(t: ExpansionTree) -> OrderingCheck:
    labels = [e.label for e in t.edges]
    if len(set(labels)) != len(labels):
        return OrderingCheck(False, None, "edge labels are not distinct")
    if sorted(t.ordering) != sorted(labels):
        return OrderingCheck(False, None, "the ordering is not a permutation of the edge labels")
    rank = {l: i for i, l in enumerate(t.ordering)}
    for e in t.edges:
        if e.parent is not None and e.parent not in rank:
            return OrderingCheck(False, None, f"edge {e.label} has unknown parent {e.parent}")
    # along a branch the ancestor relation is generated by parent links
    for e in t.edges:
        if e.parent is not None and rank[e.parent] > rank[e.label]:
            return OrderingCheck(False, 1, f"{e.label} is ordered before its ancestor {e.parent}")
    eig = t.eigenvariables()
    for w, term in t.terms.items():
        for a in eig:
            if term.contains(a) and rank[a] > rank[w]:
                return OrderingCheck(False, 2, f"term {w} = {term} uses {a} before it is introduced")
    return OrderingCheck(True)


def expansion_to_strategy(
    t: ExpansionTree,
    universe: Iterable[Term | str],
    arena: Arena | None = None,
    name: str = "",
) -> InnocentStrategy:
    """Compile the linearized tree into a view tree.

    The view of the owner is ``*`` followed by the labels in order: each
    eigenvariable becomes an adversary move answering the move just before
    it, each witness term (with eigenvariables replaced by the adversary's
    answers) answers the move of its parent edge.
    """
    chk = check_expansion_ordering(t)
    if not chk:
        raise ValueError(f"incorrect expansion ordering: {chk.detail}")
    universe = sorted({as_term(u) for u in universe}, key=str)
    if arena is None:
        arena = prenex_arena(t.variables, universe)
    pos = {l: i + 1 for i, l in enumerate(t.ordering)}
    # check the linearization alternates and adversary moves are immediate answers
    for l in t.ordering:
        i = pos[l]
        mover = Polarity.P if i % 2 == 1 else Polarity.O
        if (mover is t.owner) != t.is_witness(l):
            raise ValueError(f"label {l} at position {i} does not alternate with its neighbours")
        if not t.is_witness(l):
            parent = t.edge(l).parent
            expect = 0 if parent is None else pos[parent]
            if expect != i - 1:
                raise ValueError(f"eigenvariable {l} must come right after its parent edge")
    last_witness = max((pos[l] for l in t.ordering if t.is_witness(l)), default=0)
    entries: dict[tuple, tuple] = {}
    var = {l: t.variables[t.depth(l)] for l in t.ordering}
    eig = set(t.eigenvariables())

    def walk(i: int, view: tuple, env: dict[str, Term]) -> None:
        if i > last_witness:
            return
        l = t.ordering[i - 1]
        parent = t.edge(l).parent
        if t.is_witness(l):
            term = t.terms[l].substitute(env)
            if term.symbols() & eig:
                raise ValueError(f"term {l} still mentions an eigenvariable after substitution")
            m = move_name(var[l], term)
            if m not in arena.moves:
                raise ValueError(f"move {m} is not in the arena")
            ans = (m, 0 if parent is None else pos[parent])
            entries[view] = ans
            walk(i + 1, view + (ans,), env)
        else:
            for u in universe:
                walk(i + 1, view + ((move_name(var[l], u), i - 1),), {**env, l: u})

    if t.owner is Polarity.O:
        entries[()] = (STAR, None)
    walk(1, ((STAR, None),), {})
    return InnocentStrategy(arena, t.owner, entries, bound=last_witness + 1, name=name)
