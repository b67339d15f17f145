"""Exhaustive generators used as ground truth for the counting formulas.

Nothing in this module calls into :mod:`mdtrees.count_tables`; the
censuses it produces are compared against the formulas elsewhere.

Ordered tree shapes are represented by preorder parent sequences: vertex
``i`` (in preorder) has parent ``parents[i] < i`` and ``parents[0] == -1``.
A labeled tree is a shape together with a label for each preorder slot.
"""

import time
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations, product

from mdtrees.tree_domain import (
    OrderedForest,
    OrderedTree,
    RootedUnorderedTree,
    classify_o,
    improper_edge_count,
    is_z_tree,
)

__all__ = [
    "DEFAULT_CAP",
    "EnumerationCapError",
    "EnumerationReport",
    "check_cap",
    "Family",
    "enumerate_decreasing_trees",
    "enumerate_forests",
    "enumerate_ordered_trees",
    "enumerate_rooted_unordered",
    "enumerate_z_trees",
    "ordered_shapes",
    "prufer_to_edges",
    "tabulate_family",
    "tabulate_o",
    "tabulate_o_objects",
    "z_filter_census",
]

DEFAULT_CAP = 7


class EnumerationCapError(ValueError):
    def __init__(self, n, cap):
        super().__init__(f"n={n} exceeds the enumeration cap {cap}")
        self.n = n
        self.cap = cap


class Family(str, Enum):
    O = "O"  # noqa: E741
    Z = "Z"
    F = "F"
    DECREASING = "Decreasing"
    ROOTED_UNORDERED = "RootedUnordered"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        wanted = str(value).lower()
        for member in cls:
            if member.value.lower() == wanted:
                return member
        raise ValueError(f"unknown family {value!r}")


@dataclass
class EnumerationReport:
    family: Family
    n: int
    census: dict
    elapsed: float = field(default=0.0, compare=False)

    @property
    def total(self):
        return sum(self.census.values())

    def to_dict(self):
        return {
            "family": self.family.value,
            "n": self.n,
            "census": {str(k): str(v) for k, v in sorted(self.census.items())},
            "total": str(self.total),
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


def check_cap(n, cap):
    if cap is not None and n > cap:
        raise EnumerationCapError(n, cap)


# -- shapes -------------------------------------------------------------------


def ordered_shapes(m):
    """Yield every ordered tree shape on ``m`` vertices as a preorder parent
    tuple.

    Vertex ``i`` can only hang from a vertex on the path from the root to
    vertex ``i - 1``; the deepest choice is tried first.
    """
    if m < 1:
        raise ValueError("a tree needs at least one vertex")
    parents = [-1]
    path = [0]

    def extend():
        i = len(parents)
        if i == m:
            yield tuple(parents)
            return
        for depth in range(len(path) - 1, -1, -1):
            saved = path[depth + 1:]
            del path[depth + 1:]
            parents.append(path[depth])
            path.append(i)
            yield from extend()
            path.pop()
            parents.pop()
            path.extend(saved)

    yield from extend()


@lru_cache(maxsize=None)
def _shapes(m):
    return tuple(ordered_shapes(m))


def _build(parents, labels):
    kids = [[] for _ in parents]
    for i in range(len(parents) - 1, 0, -1):
        kids[parents[i]].append(i)
    nodes = [None] * len(parents)
    for i in range(len(parents) - 1, -1, -1):
        nodes[i] = OrderedTree(labels[i], tuple(nodes[c] for c in reversed(kids[i])))
    return nodes[0]


# -- ordered trees ------------------------------------------------------------


def enumerate_ordered_trees(labels):
    """Yield every ordered tree on ``labels`` exactly once.

    Shapes come first in :func:`ordered_shapes` order, then label
    assignments in lexicographic permutation order.
    """
    labels = sorted(set(labels))
    if not labels:
        raise ValueError("label set must be nonempty")
    for parents in _shapes(len(labels)):
        for perm in permutations(labels):
            yield _build(parents, perm)


@lru_cache(maxsize=None)
def _scan_ordered(n):
    """One pass over all of O_n on the compact representation.

    Returns ``(o_census, z_census)``: the MD edge count of every tree, and
    the same restricted to trees whose non-MD vertices are all leaves.
    """
    m = n + 1
    o_census = [0] * m
    z_census = [0] * m
    for parents in _shapes(m):
        has_child = [False] * m
        for p in parents[1:]:
            has_child[p] = True
        pairs = tuple(enumerate(parents))[1:]
        for lab in permutations(range(m)):
            in_md = [True] * m
            size = 1
            z_ok = True
            for i, p in pairs:
                if in_md[p] and lab[p] > lab[i]:
                    size += 1
                else:
                    in_md[i] = False
                    if has_child[i]:
                        z_ok = False
            o_census[size - 1] += 1
            if z_ok:
                z_census[size - 1] += 1
    return tuple(o_census), tuple(z_census)


def tabulate_o(n, cap=DEFAULT_CAP):
    """Census of O_n by MD edge count."""
    check_cap(n, cap)
    start = time.perf_counter()
    o_census, _ = _scan_ordered(n)
    return EnumerationReport(Family.O, n, dict(enumerate(o_census)), time.perf_counter() - start)


def tabulate_o_objects(n, cap=DEFAULT_CAP):
    """Census of O_n built from :class:`OrderedTree` objects and
    :func:`classify_o`.  Slower than :func:`tabulate_o`; used to cross-check it."""
    check_cap(n, cap)
    start = time.perf_counter()
    census = dict.fromkeys(range(n + 1), 0)
    for t in enumerate_ordered_trees(range(n + 1)):
        census[classify_o(t)] += 1
    return EnumerationReport(Family.O, n, census, time.perf_counter() - start)


# -- decreasing trees and Z ---------------------------------------------------


class _Node:
    __slots__ = ("label", "kids")

    def __init__(self, label):
        self.label = label
        self.kids = []

    def freeze(self):
        return OrderedTree(self.label, tuple(k.freeze() for k in self.kids))


def _insert_everywhere(nodes, label, allowed):
    """Insert a new child labeled ``label`` at every slot of every node in
    ``allowed``; yield after each insertion and undo it afterwards."""
    new = _Node(label)
    nodes.append(new)
    for node in allowed:
        for slot in range(len(node.kids) + 1):
            node.kids.insert(slot, new)
            yield
            del node.kids[slot]
    nodes.pop()


def _decreasing_skeletons(labels):
    """Yield mutable node lists for every decreasing ordered tree on
    ``labels`` (the root is ``nodes[0]``).  The yielded list is reused."""
    order = sorted(labels, reverse=True)
    nodes = [_Node(order[0])]

    def grow(i):
        if i == len(order):
            yield nodes
            return
        for _ in _insert_everywhere(nodes, order[i], list(nodes)):
            yield from grow(i + 1)

    yield from grow(1)


def enumerate_decreasing_trees(labels):
    """Yield every ordered tree on ``labels`` whose edges all decrease."""
    labels = sorted(set(labels))
    if not labels:
        raise ValueError("label set must be nonempty")
    for nodes in _decreasing_skeletons(labels):
        yield nodes[0].freeze()


def _z_direct(n, k):
    for rest in combinations(range(1, n + 1), k):
        md_labels = (0,) + rest
        leaves = sorted(set(range(n + 1)) - set(md_labels))
        for nodes in _decreasing_skeletons(md_labels):
            md_nodes = list(nodes)

            def hang(j):
                if j == len(leaves):
                    yield md_nodes[0].freeze()
                    return
                leaf = leaves[j]
                hosts = [v for v in md_nodes if v.label < leaf]
                for _ in _insert_everywhere([], leaf, hosts):
                    yield from hang(j + 1)

            yield from hang(0)


def _z_filter(n, k):
    for t in enumerate_ordered_trees(range(n + 1)):
        if is_z_tree(t) == k:
            yield t


def enumerate_z_trees(n, k, mode="direct", cap=DEFAULT_CAP):
    """Yield every tree in Z_{n,k} exactly once.

    ``mode="direct"`` builds decreasing trees on a label set containing 0
    and hangs the remaining labels on them as increasing leaves;
    ``mode="filter"`` screens all of O_n with :func:`is_z_tree`.
    """
    check_cap(n, cap)
    if k < 0 or k > n:
        return iter(())
    if mode == "direct":
        return _z_direct(n, k)
    if mode == "filter":
        return _z_filter(n, k)
    raise ValueError(f"unknown mode {mode!r}")


# -- forests ------------------------------------------------------------------


def enumerate_forests(n, k, cap=DEFAULT_CAP):
    """Yield every forest on ``[1, n]`` of ``k`` ordered trees with unordered
    roots.

    Each forest is read off an ordered tree on ``n + 1`` vertices whose
    root has exactly ``k`` children; the root is then discarded.  With
    ``n == 0`` and ``k == 0`` the single empty forest is produced.
    """
    check_cap(n, cap)
    if k < 0 or k > n:
        return
    if n == 0:
        yield OrderedForest()
        return
    if k == 0:
        return
    shapes = [s for s in _shapes(n + 1) if s.count(0) == k]
    everyone = range(1, n + 1)
    for roots in combinations(everyone, k):
        others = sorted(set(everyone) - set(roots))
        for parents in shapes:
            root_slots = [i for i, p in enumerate(parents) if p == 0]
            other_slots = [i for i, p in enumerate(parents) if p > 0]
            for perm in permutations(others):
                labels = [None] * (n + 1)
                labels[0] = 0
                for slot, r in zip(root_slots, roots):
                    labels[slot] = r
                for slot, v in zip(other_slots, perm):
                    labels[slot] = v
                yield OrderedForest(_build(parents, labels).children)


# -- rooted unordered trees ---------------------------------------------------


def prufer_to_edges(seq, n):
    """Decode a Prüfer sequence over ``1..n`` into the edge list of a labeled
    tree on ``1..n``."""
    if len(seq) != max(n - 2, 0):
        raise ValueError(f"sequence of length {len(seq)} does not describe a tree on {n} vertices")
    if n == 1:
        return []
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(1, n + 1) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(1, n + 1) if degree[x] == 1)
    edges.append((u, w))
    return edges


def _orient(edges, root):
    adjacent = {}
    for a, b in edges:
        adjacent.setdefault(a, []).append(b)
        adjacent.setdefault(b, []).append(a)
    parent = {}
    stack = [root]
    seen = {root}
    while stack:
        v = stack.pop()
        for w in adjacent.get(v, ()):
            if w not in seen:
                seen.add(w)
                parent[w] = v
                stack.append(w)
    return parent


def enumerate_rooted_unordered(n, cap=DEFAULT_CAP):
    """Yield every rooted labeled tree on ``[1, n]`` (``n**(n-1)`` of them):
    each Prüfer sequence, then each choice of root."""
    if n < 1:
        raise ValueError("n must be positive")
    check_cap(n, cap)
    for seq in product(range(1, n + 1), repeat=max(n - 2, 0)):
        edges = prufer_to_edges(seq, n)
        for root in range(1, n + 1):
            yield RootedUnorderedTree.from_parents(root, _orient(edges, root))


# -- censuses -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _z_census(n):
    return tuple(sum(1 for _ in _z_direct(n, k)) for k in range(n + 1))


@lru_cache(maxsize=None)
def _f_census(n):
    if n == 0:
        return {0: 1}
    return {k: sum(1 for _ in enumerate_forests(n, k, cap=None)) for k in range(1, n + 1)}


@lru_cache(maxsize=None)
def _improper_census(n):
    census = [0] * n
    for t in enumerate_rooted_unordered(n, cap=None):
        census[improper_edge_count(t)] += 1
    return tuple(census)


def tabulate_family(family, n, k=None, cap=DEFAULT_CAP):
    """Census of one family at size ``n``.

    The key is the MD edge count for ``O`` and ``Z``, the number of improper
    edges for ``RootedUnordered``, the number of trees for ``F``, and the
    single key ``0`` for ``Decreasing``.  With ``k`` given, the census is
    restricted to that key.
    """
    family = Family.parse(family)
    check_cap(n, cap)
    start = time.perf_counter()
    if family is Family.O:
        census = dict(enumerate(_scan_ordered(n)[0]))
    elif family is Family.Z:
        census = dict(enumerate(_z_census(n)))
    elif family is Family.F:
        census = dict(_f_census(n))
    elif family is Family.DECREASING:
        census = {0: sum(1 for _ in enumerate_decreasing_trees(range(n + 1)))}
    else:
        if n < 1:
            raise ValueError("rooted unordered trees need n >= 1")
        census = dict(enumerate(_improper_census(n)))
    if k is not None:
        census = {k: census.get(k, 0)}
    return EnumerationReport(family, n, census, time.perf_counter() - start)


def z_filter_census(n, cap=DEFAULT_CAP):
    """Z_{n,k} counts for every k, taken by screening all of O_n."""
    check_cap(n, cap)
    return dict(enumerate(_scan_ordered(n)[1]))
