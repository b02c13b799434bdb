"""Finite two-player zero-sum game trees over a totally ordered payoff domain.

Internal nodes are labelled ``"I"`` (Me to move) or ``"Y"`` (You to move).
Leaves are the outcomes. Node ids are preorder indices, root = 0.

Strategies are complete plans: a strategy for a player selects exactly one
child at *every* node that player owns, and keeps every child of the other
player's nodes. Pairs of strategies therefore have a unique outcome.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .syntax import CapExceeded, to_text

__all__ = [
    "ME",
    "YOU",
    "Domain",
    "Node",
    "GameTree",
    "Payoff",
    "Strategy",
    "Solution",
    "InvalidStrategy",
    "ORACLE_CAP",
    "outcome",
    "solve",
    "count_strategies",
    "enumerate_strategies",
    "oracle_values",
    "maxmin_oracle",
    "longest_chain",
    "to_dot",
]

ME, YOU = "I", "Y"
ORACLE_CAP = 4096


@dataclass(frozen=True)
class Domain:
    """A linearly ordered payoff domain with an upward-closed winning set.

    ``key`` must be strictly monotone in the domain's order, so that
    ``a ⪯ b`` iff ``key(a) <= key(b)``.
    """

    name: str
    key: Callable[[Any], Any]
    winning: Callable[[Any], bool]

    def leq(self, a, b) -> bool:
        return self.key(a) <= self.key(b)

    def max(self, values: Iterable):
        return max(values, key=self.key)

    def min(self, values: Iterable):
        return min(values, key=self.key)


@dataclass(frozen=True)
class Node:
    id: int
    label: Optional[str]  # "I", "Y", or None for leaves
    children: Tuple[int, ...]
    role: str = "P"  # "P" or "O"
    formula: Any = None  # game state formula; a Var at leaves

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def caption(self) -> str:
        text = to_text(self.formula) if self.formula is not None else str(self.id)
        return f"{self.role}:{text}"


class GameTree:
    """An immutable game tree with a strict preference order on its leaves.

    ``pref`` holds pairs ``(x, y)`` meaning outcome ``x ≪ y`` (y is preferred
    by Me). It is transitively closed on construction and must be irreflexive.
    """

    def __init__(self, nodes: Sequence[Node], pref: Iterable[Tuple[int, int]] = ()):
        self.nodes: Tuple[Node, ...] = tuple(nodes)
        for idx, node in enumerate(self.nodes):
            if node.id != idx:
                raise ValueError("node ids must equal their position")
            if node.label is None and node.children:
                raise ValueError(f"node {idx} has children but no label")
            if node.label is not None and node.label not in (ME, YOU):
                raise ValueError(f"node {idx} has invalid label {node.label!r}")
            if node.label is not None and not node.children:
                raise ValueError(f"internal node {idx} has no children")
        self.leaves: Tuple[int, ...] = tuple(n.id for n in self.nodes if n.is_leaf)
        leafset = set(self.leaves)
        rel = set(pref)
        for x, y in rel:
            if x not in leafset or y not in leafset:
                raise ValueError(f"preference pair {(x, y)} is not between leaves")
        self.pref: FrozenSet[Tuple[int, int]] = frozenset(_transitive_closure(rel))
        if any(x == y for x, y in self.pref):
            raise ValueError("preference order is not strict (contains a cycle)")

    @property
    def root(self) -> Node:
        return self.nodes[0]

    def __len__(self):
        return len(self.nodes)

    def __getitem__(self, idx: int) -> Node:
        return self.nodes[idx]

    def subtree(self, idx: int) -> List[int]:
        """Ids of all nodes below and including ``idx``, in preorder."""
        out, stack = [], [idx]
        while stack:
            n = stack.pop()
            out.append(n)
            stack.extend(reversed(self.nodes[n].children))
        return out

    def subtree_leaves(self, idx: int) -> List[int]:
        return [n for n in self.subtree(idx) if self.nodes[n].is_leaf]

    @functools.cached_property
    def _above(self) -> Dict[int, List[int]]:
        succ: Dict[int, List[int]] = {leaf: [] for leaf in self.leaves}
        for x, y in self.pref:
            succ[x].append(y)
        return succ

    @functools.cached_property
    def _below(self) -> Dict[int, List[int]]:
        pred: Dict[int, List[int]] = {leaf: [] for leaf in self.leaves}
        for x, y in self.pref:
            pred[y].append(x)
        return pred

    @functools.cached_property
    def chain_up(self) -> Dict[int, int]:
        """Longest ≪-increasing chain length starting at each leaf."""
        return _longest_paths(self.leaves, self._above)

    @functools.cached_property
    def chain_down(self) -> Dict[int, int]:
        """Longest ≫-chain (decreasing in ≪) starting at each leaf."""
        return _longest_paths(self.leaves, self._below)

    @functools.cached_property
    def outcome_table(self) -> Tuple[list, list, List[List[int]]]:
        """All strategy pairs and their outcomes: ``(mine, yours, table)``."""
        mine = enumerate_strategies(self, ME)
        yours = enumerate_strategies(self, YOU)
        table = [[_walk(self, s.chosen, t.chosen) for t in yours] for s in mine]
        return mine, yours, table


def _transitive_closure(rel: set) -> set:
    closed = set(rel)
    succ: Dict[int, set] = {}
    for x, y in closed:
        succ.setdefault(x, set()).add(y)
    changed = True
    while changed:
        changed = False
        for x in list(succ):
            extra = set()
            for y in succ[x]:
                extra |= succ.get(y, set())
            if not extra <= succ[x]:
                succ[x] |= extra
                changed = True
    return {(x, y) for x, ys in succ.items() for y in ys}


def _longest_paths(leaves, succ) -> Dict[int, int]:
    memo: Dict[int, int] = {}

    def visit(x):
        if x not in memo:
            memo[x] = 1 + max((visit(y) for y in succ[x]), default=0)
        return memo[x]

    for leaf in leaves:
        visit(leaf)
    return memo


def longest_chain(tree: GameTree, leaf: int, inverse: bool = False) -> int:
    """Number of leaves on the longest strictly ≪-increasing path from ``leaf``.

    With ``inverse=True`` the path follows ≫ instead.
    """
    table = tree.chain_down if inverse else tree.chain_up
    if leaf not in table:
        raise KeyError(f"node {leaf} is not a leaf")
    return table[leaf]


@dataclass(frozen=True)
class Payoff:
    values: Mapping[int, Any]
    domain: Domain

    def __getitem__(self, leaf: int):
        return self.values[leaf]

    def is_winning(self, leaf: int) -> bool:
        return self.domain.winning(self.values[leaf])


@dataclass(frozen=True)
class Strategy:
    owner: str  # ME or YOU
    chosen: FrozenSet[int]

    def move(self, tree: GameTree, node: int) -> int:
        """The child this strategy selects at one of its owner's nodes."""
        picks = [c for c in tree[node].children if c in self.chosen]
        if len(picks) != 1:
            raise InvalidStrategy(f"strategy does not select a unique child at node {node}")
        return picks[0]


class InvalidStrategy(ValueError):
    pass


def validate_strategy(tree: GameTree, s: Strategy) -> None:
    if s.owner not in (ME, YOU):
        raise InvalidStrategy(f"unknown owner {s.owner!r}")
    if 0 not in s.chosen:
        raise InvalidStrategy("the root must be in every strategy")
    for node in tree.nodes:
        if node.is_leaf:
            continue
        kept = [c for c in node.children if c in s.chosen]
        if node.label == s.owner:
            if len(kept) != 1:
                raise InvalidStrategy(f"node {node.id}: owner must select exactly one child")
        elif len(kept) != len(node.children):
            raise InvalidStrategy(f"node {node.id}: all of the opponent's moves must be kept")


def _walk(tree: GameTree, mine: FrozenSet[int], yours: FrozenSet[int]) -> int:
    node = tree.nodes[0]
    while node.children:
        chosen = mine if node.label == ME else yours
        nxt = [c for c in node.children if c in chosen]
        node = tree.nodes[nxt[0]]
    return node.id


def outcome(tree: GameTree, mine: Strategy, yours: Strategy) -> int:
    """The leaf reached when Me plays ``mine`` and You play ``yours``."""
    if mine.owner != ME or yours.owner != YOU:
        raise InvalidStrategy("expected one strategy for Me and one for You")
    validate_strategy(tree, mine)
    validate_strategy(tree, yours)
    return _walk(tree, mine.chosen, yours.chosen)


def count_strategies(tree: GameTree, owner: str) -> int:
    total = 1
    for node in tree.nodes:
        if node.label == owner:
            total *= len(node.children)
    return total


def enumerate_strategies(tree: GameTree, owner: str, cap: int = ORACLE_CAP) -> List[Strategy]:
    """All deterministic strategies of ``owner``, in a fixed order.

    Choices vary fastest at the last decision node in preorder.
    """
    n = count_strategies(tree, owner)
    if n > cap:
        raise CapExceeded(f"{n} strategies for {owner} exceed the oracle cap of {cap}")
    own = [node for node in tree.nodes if node.label == owner]
    base = {0}
    for node in tree.nodes:
        if node.label is not None and node.label != owner:
            base.update(node.children)
    out = []
    for picks in itertools.product(*(node.children for node in own)):
        out.append(Strategy(owner, frozenset(base.union(picks))))
    return out


@dataclass(frozen=True)
class Solution:
    value: Any
    my_strategy: Strategy
    your_strategy: Strategy
    node_values: Tuple[Any, ...]

    def best_move(self, tree: GameTree, node: int) -> int:
        s = self.my_strategy if tree[node].label == ME else self.your_strategy
        return s.move(tree, node)


def solve(tree: GameTree, payoff: Payoff) -> Solution:
    """Backward induction. Me maximizes and You minimize in the payoff order.

    Among equally good children the leftmost is chosen.
    """
    key = payoff.domain.key
    values: List[Any] = [None] * len(tree)
    picks: Dict[int, int] = {}
    # children always carry larger preorder ids than their parent
    for node in reversed(tree.nodes):
        if node.is_leaf:
            if node.id not in payoff.values:
                raise ValueError(f"leaf {node.id} has no payoff")
            values[node.id] = payoff.values[node.id]
            continue
        best = node.children[0]
        for c in node.children[1:]:
            kc, kb = key(values[c]), key(values[best])
            if (kc > kb) if node.label == ME else (kc < kb):
                best = c
        picks[node.id] = best
        values[node.id] = values[best]

    def plan(owner):
        chosen = {0}
        for node in tree.nodes:
            if node.label is None:
                continue
            if node.label == owner:
                chosen.add(picks[node.id])
            else:
                chosen.update(node.children)
        return Strategy(owner, frozenset(chosen))

    return Solution(values[0], plan(ME), plan(YOU), tuple(values))


def oracle_values(tree: GameTree, payoff: Payoff, cap: int = ORACLE_CAP) -> Tuple[Any, Any]:
    """Literal ``max_σI min_σY`` and ``min_σY max_σI`` over all strategy pairs."""
    if count_strategies(tree, ME) > cap or count_strategies(tree, YOU) > cap:
        raise CapExceeded(f"strategy count exceeds the oracle cap of {cap}")
    dom = payoff.domain
    _, _, table = tree.outcome_table
    vals = [[payoff.values[leaf] for leaf in row] for row in table]
    maxmin = dom.max(dom.min(row) for row in vals)
    minmax = dom.min(dom.max(col) for col in zip(*vals))
    return maxmin, minmax


def maxmin_oracle(tree: GameTree, payoff: Payoff, cap: int = ORACLE_CAP):
    """Game value by exhaustive strategy enumeration; checks maxmin == minmax."""
    maxmin, minmax = oracle_values(tree, payoff, cap)
    if payoff.domain.key(maxmin) != payoff.domain.key(minmax):
        raise RuntimeError(f"maxmin {maxmin!r} differs from minmax {minmax!r}")
    return maxmin


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(tree: GameTree, payoff: Optional[Payoff] = None, fmt: Callable[[Any], str] = str,
           name: str = "game") -> str:
    """Graphviz rendering of a game tree.

    Internal nodes show ``[Q:F]^label``; leaves show their atomic state and,
    given a payoff, its value. The covering pairs of ≪ are dashed edges
    pointing from the less preferred outcome to the more preferred one.
    """
    lines = [f"digraph {name} {{", "  node [shape=box, fontname=monospace];"]
    for node in tree.nodes:
        if node.is_leaf:
            label = _dot_escape(node.caption)
            if payoff is not None:
                label += f"\\npayoff {_dot_escape(fmt(payoff[node.id]))}"
            lines.append(f'  n{node.id} [label="{label}", shape=ellipse];')
        else:
            lines.append(f'  n{node.id} [label="[{_dot_escape(node.caption)}]^{node.label}"];')
    for node in tree.nodes:
        for c in node.children:
            lines.append(f"  n{node.id} -> n{c};")
    for x, y in sorted(_covering_pairs(tree.pref)):
        lines.append(f'  n{x} -> n{y} [style=dashed, constraint=false, color=gray40, label="≪"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _covering_pairs(pref):
    succ: Dict[int, set] = {}
    for x, y in pref:
        succ.setdefault(x, set()).add(y)
    return {(x, y) for x, y in pref if not any(y in succ.get(z, ()) for z in succ[x] if z != y)}
