"""Ordered labeled trees, forests and rooted unordered trees.

Text form of an ordered tree::

    tree  := label | label '(' tree (',' tree)* ')'
    label := decimal digits

Whitespace between tokens is ignored.  A forest is its trees joined by
``';'`` with roots in increasing order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "DuplicateLabelError",
    "GraftError",
    "LabelSetError",
    "MdResult",
    "OrderedForest",
    "OrderedTree",
    "RootedUnorderedTree",
    "TreeError",
    "TreeSyntaxError",
    "classify_o",
    "decompose",
    "graft",
    "improper_edge_count",
    "is_z_tree",
    "md_subtree",
    "parse_forest",
    "parse_tree",
    "render_forest",
    "render_tree",
]


class TreeError(ValueError):
    pass


class TreeSyntaxError(TreeError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DuplicateLabelError(TreeError):
    def __init__(self, label):
        super().__init__(f"duplicate label {label}")
        self.label = label


class LabelSetError(TreeError):
    pass


class GraftError(TreeError):
    """Invalid (z_part, y_part) pair.  ``code`` is one of ``ROOT_SET_MISMATCH``,
    ``LABEL_OVERLAP`` or ``Z_SHAPE``."""

    ROOT_SET_MISMATCH = "root-set-mismatch"
    LABEL_OVERLAP = "label-overlap"
    Z_SHAPE = "z-shape"

    def __init__(self, code, message):
        super().__init__(f"{code}: {message}")
        self.code = code


@dataclass(frozen=True)
class OrderedTree:
    label: int
    children: tuple[OrderedTree, ...] = ()

    def __str__(self):
        return render_tree(self)

    def labels(self):
        """All labels in preorder."""
        out = []
        stack = [self]
        while stack:
            node = stack.pop()
            out.append(node.label)
            stack.extend(reversed(node.children))
        return out

    def size(self):
        return len(self.labels())

    def is_leaf(self):
        return not self.children

    def edges(self):
        """``(parent, child)`` label pairs in preorder."""
        out = []
        stack = [self]
        while stack:
            node = stack.pop()
            out.extend((node.label, c.label) for c in node.children)
            stack.extend(reversed(node.children))
        return out

    def validate(self):
        """Raise :class:`DuplicateLabelError` unless labels are distinct."""
        _check_distinct(self.labels())
        return self


def _check_distinct(labels):
    seen = set()
    for label in labels:
        if label in seen:
            raise DuplicateLabelError(label)
        seen.add(label)
    return seen


def _check_prefix(t):
    labels = _check_distinct(t.labels())
    if labels != set(range(len(labels))):
        raise LabelSetError(f"labels {sorted(labels)} are not 0..{len(labels) - 1}")
    return len(labels) - 1


@dataclass(frozen=True)
class OrderedForest:
    trees: tuple[OrderedTree, ...] = ()

    def __post_init__(self):
        trees = tuple(sorted(self.trees, key=lambda t: t.label))
        object.__setattr__(self, "trees", trees)
        roots = [t.label for t in trees]
        if len(set(roots)) != len(roots):
            raise DuplicateLabelError(next(r for r in roots if roots.count(r) > 1))
        _check_distinct(label for t in trees for label in t.labels())

    @property
    def roots(self):
        return tuple(t.label for t in self.trees)

    def labels(self):
        return [label for t in self.trees for label in t.labels()]

    def __len__(self):
        return len(self.trees)

    def __str__(self):
        return render_forest(self)


@dataclass(frozen=True)
class RootedUnorderedTree:
    """Rooted labeled tree with unordered children.

    Children are kept sorted by the smallest label in their subtree, so
    dataclass equality is equality of unordered trees.
    """

    label: int
    children: tuple[RootedUnorderedTree, ...] = ()
    min_label: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        kids = tuple(sorted(self.children, key=lambda c: c.min_label))
        object.__setattr__(self, "children", kids)
        low = min([self.label] + [c.min_label for c in kids])
        object.__setattr__(self, "min_label", low)

    @classmethod
    def from_parents(cls, root, parent):
        """Build from a ``{child: parent}`` map."""
        kids = {}
        for child, par in parent.items():
            kids.setdefault(par, []).append(child)

        def build(v):
            return cls(v, tuple(build(c) for c in kids.get(v, ())))

        return build(root)

    def labels(self):
        out = [self.label]
        for c in self.children:
            out.extend(c.labels())
        return out

    def __str__(self):
        if not self.children:
            return str(self.label)
        return f"{self.label}({','.join(str(c) for c in self.children)})"


# -- text format --------------------------------------------------------------


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        text = self.text
        while self.pos < len(text) and text[self.pos] in " \t\n\r\f\v":
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char):
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise TreeSyntaxError(f"expected {char!r}, found {found!r}", self.pos)
        self.pos += 1

    def label(self):
        self.skip_ws()
        start = self.pos
        text = self.text
        while self.pos < len(text) and text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            found = text[start] if start < len(text) else "end of input"
            raise TreeSyntaxError(f"expected label, found {found!r}", start)
        return int(text[start:self.pos])

    def tree(self):
        label = self.label()
        children = []
        if self.peek() == "(":
            self.pos += 1
            children.append(self.tree())
            while self.peek() == ",":
                self.pos += 1
                children.append(self.tree())
            self.expect(")")
        return OrderedTree(label, tuple(children))

    def end(self):
        if self.peek():
            raise TreeSyntaxError(f"unexpected {self.peek()!r}", self.pos)


def parse_tree(text):
    """Parse the text form of an ordered tree.

    >>> parse_tree("2(0, 1)")
    OrderedTree(label=2, children=(OrderedTree(label=0, children=()), OrderedTree(label=1, children=())))
    """
    parser = _Parser(text)
    tree = parser.tree()
    parser.end()
    return tree.validate()


def parse_forest(text):
    parser = _Parser(text)
    trees = []
    if parser.peek():
        trees.append(parser.tree())
        while parser.peek() == ";":
            parser.pos += 1
            trees.append(parser.tree())
    parser.end()
    roots = [t.label for t in trees]
    if any(a >= b for a, b in zip(roots, roots[1:])):
        raise TreeSyntaxError("forest roots must be strictly increasing", 0)
    return OrderedForest(tuple(trees))


def render_tree(t):
    if not t.children:
        return str(t.label)
    return f"{t.label}({','.join(render_tree(c) for c in t.children)})"


def render_forest(forest):
    return ";".join(render_tree(t) for t in forest.trees)


# -- maximal decreasing subtree -----------------------------------------------


@dataclass(frozen=True)
class MdResult:
    md_vertices: frozenset
    md_edge_count: int
    increasing_leaf_attachments: tuple


def _md_walk(t):
    """Return (MD labels, attachment edges) in preorder, without validation."""
    md = []
    attachments = []
    stack = [t]
    while stack:
        node = stack.pop()
        md.append(node.label)
        for child in node.children:
            if child.label > node.label:
                attachments.append((node.label, child.label))
        stack.extend(c for c in reversed(node.children) if c.label < node.label)
    return md, attachments


def md_subtree(t):
    """Maximal decreasing subtree of ``t``.

    ``increasing_leaf_attachments`` lists every edge leaving the MD subtree,
    in preorder of the parent and left-to-right among siblings.
    """
    t.validate()
    md, attachments = _md_walk(t)
    return MdResult(frozenset(md), len(md) - 1, tuple(attachments))


def classify_o(t):
    """Number of edges of the MD subtree of a tree on ``[0, n]``."""
    _check_prefix(t)
    md, _ = _md_walk(t)
    return len(md) - 1


def _z_shape_k(t):
    """MD edge count if every vertex outside MD is a leaf, else None."""
    md, attachments = _md_walk(t)
    if len(md) + len(attachments) != t.size():
        return None
    return len(md) - 1


def is_z_tree(t):
    """Return k if ``t`` is a decreasing tree with ``k`` edges carrying only
    increasing leaves, otherwise None."""
    _check_prefix(t)
    return _z_shape_k(t)


def decompose(t):
    """Split ``t`` into its MD part with increasing leaves and the forest of
    subtrees hanging from those leaves.

    The attachment children appear in both parts: as leaves of ``z_part``
    and as roots of ``y_part``.
    """
    _check_prefix(t)
    hanging = []

    def cut(node):
        kids = []
        for child in node.children:
            if child.label < node.label:
                kids.append(cut(child))
            else:
                kids.append(OrderedTree(child.label))
                hanging.append(child)
        return OrderedTree(node.label, tuple(kids))

    z_part = cut(t)
    return z_part, OrderedForest(tuple(hanging))


def graft(z_part, y_part):
    """Inverse of :func:`decompose`."""
    z_labels = _check_distinct(z_part.labels())
    if _z_shape_k(z_part) is None:
        raise GraftError(GraftError.Z_SHAPE, "a vertex outside the MD subtree is not a leaf")
    _, attachments = _md_walk(z_part)
    leaves = {child for _, child in attachments}
    roots = set(y_part.roots)
    if roots != leaves:
        raise GraftError(
            GraftError.ROOT_SET_MISMATCH,
            f"forest roots {sorted(roots)} != increasing leaves {sorted(leaves)}",
        )
    overlap = z_labels.intersection(y_part.labels())
    if overlap != roots:
        raise GraftError(
            GraftError.LABEL_OVERLAP,
            f"labels {sorted(overlap - roots)} occur in both parts",
        )
    by_root = {tree.label: tree for tree in y_part.trees}

    def attach(node):
        if node.label in by_root:
            return by_root[node.label]
        return OrderedTree(node.label, tuple(attach(c) for c in node.children))

    return attach(z_part)


# -- improper edges -----------------------------------------------------------


def improper_edge_count(t):
    """Count edges (u, v) where u's label exceeds the smallest label in the
    subtree rooted at v."""
    _check_distinct(t.labels())
    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        for child in node.children:
            if node.label > child.min_label:
                count += 1
            stack.append(child)
    return count
