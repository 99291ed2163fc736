"""Finite posets from box diagrams, the minuscule families, and chain products.

Shapes are stacks of box rows in Cartesian orientation: rows are listed
bottom-to-top as (offset, length) pairs, and the box in row r, column c is
covered by the box immediately above it and the box immediately to its
right, whenever those boxes exist.  The five minuscule families
(rectangles, shifted staircases, propellers, Cayley-Moufang, Freudenthal)
are all built this way from hardcoded diagrams.
"""

import hashlib
import json
from dataclasses import dataclass

from .errors import ParameterError

# Diagrams of the two exceptional posets, rows bottom-to-top.
_CAYLEY_MOUFANG_ROWS = ((0, 5), (2, 3), (3, 3), (3, 5))
_FREUDENTHAL_ROWS = ((0, 6), (3, 3), (4, 3), (4, 5), (4, 5), (7, 2), (8, 1), (8, 1), (8, 1))


class ShapeDiagram:
    """Rows of boxes, bottom-to-top, each row an (offset, length) pair.

    Box (r, c) exists when row r is present and offset_r < c <= offset_r + length_r.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple((int(o), int(l)) for o, l in rows)
        if not rows:
            raise ParameterError("a shape needs at least one row")
        for off, length in rows:
            if length < 1:
                raise ParameterError("every shape row needs length >= 1")
            if off < 0:
                raise ParameterError("row offsets must be nonnegative")
        self.rows = rows

    def boxes(self) -> list[tuple[int, int]]:
        """All boxes (row, col), bottom-to-top then left-to-right."""
        out = []
        for r, (off, length) in enumerate(self.rows):
            out.extend((r, c) for c in range(off + 1, off + length + 1))
        return out

    def __eq__(self, other):
        return isinstance(other, ShapeDiagram) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ShapeDiagram({list(self.rows)})"


class Poset:
    """Immutable finite poset given by its cover relation on elements 0..n-1.

    The cover list must be acyclic and transitively reduced; both are checked
    at construction.  rank(x) is the length of the longest chain with maximum
    x, so rank(x) = 0 exactly for minimal elements.
    """

    __slots__ = (
        "n", "covers", "labels", "family", "shape", "product_of",
        "lower", "upper", "neighbors", "rank", "topo",
        "lower_masks", "down_masks", "_hash",
    )

    def __init__(self, n: int, covers, labels=None, family=None, shape=None, product_of=None):
        n = int(n)
        if n < 0:
            raise ParameterError("element count must be nonnegative")
        covers = tuple(sorted((int(a), int(b)) for a, b in covers))
        for a, b in covers:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise ParameterError(f"cover ({a}, {b}) out of range for {n} elements")
        if len(set(covers)) != len(covers):
            raise ParameterError("duplicate cover relation")
        self.n = n
        self.covers = covers
        self.labels = tuple(labels) if labels is not None else None
        self.family = family
        self.shape = shape
        self.product_of = product_of

        lower = [[] for _ in range(n)]
        upper = [[] for _ in range(n)]
        for a, b in covers:
            lower[b].append(a)
            upper[a].append(b)
        self.lower = tuple(tuple(v) for v in lower)
        self.upper = tuple(tuple(v) for v in upper)
        self.neighbors = tuple(tuple(lo + hi) for lo, hi in zip(self.lower, self.upper))

        self.topo = self._toposort()
        rank = [0] * n
        for x in self.topo:
            rank[x] = max((rank[a] + 1 for a in self.lower[x]), default=0)
        self.rank = tuple(rank)
        self._check_reduced()

        lower_masks = [0] * n
        down_masks = [0] * n
        for x in self.topo:
            m = 1 << x
            for a in self.lower[x]:
                lower_masks[x] |= 1 << a
                m |= down_masks[a]
            down_masks[x] = m
        self.lower_masks = tuple(lower_masks)
        self.down_masks = tuple(down_masks)
        self._hash = hash((n, covers))

    def _toposort(self) -> tuple[int, ...]:
        indeg = [len(v) for v in self.lower]
        ready = sorted(x for x in range(self.n) if indeg[x] == 0)
        import heapq

        heapq.heapify(ready)
        order = []
        while ready:
            x = heapq.heappop(ready)
            order.append(x)
            for y in self.upper[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    heapq.heappush(ready, y)
        if len(order) != self.n:
            raise ParameterError("cover relation contains a cycle")
        return tuple(order)

    def _check_reduced(self):
        # A cover (a, b) is redundant iff b is reachable from some other upper cover of a.
        above = [0] * self.n
        for x in reversed(self.topo):
            m = 0
            for y in self.upper[x]:
                m |= (1 << y) | above[y]
            above[x] = m
        for a, b in self.covers:
            for c in self.upper[a]:
                if c != b and (((1 << c) | above[c]) >> b) & 1:
                    raise ParameterError(f"cover ({a}, {b}) is implied by a longer path")

    @property
    def rk(self) -> int:
        """Length of the longest chain; -1 for the empty poset."""
        return max(self.rank, default=-1)

    def minimal(self) -> list[int]:
        return [x for x in range(self.n) if not self.lower[x]]

    def maximal(self) -> list[int]:
        return [x for x in range(self.n) if not self.upper[x]]

    def __eq__(self, other):
        return isinstance(other, Poset) and self.n == other.n and self.covers == other.covers

    def __hash__(self):
        return self._hash

    def __repr__(self):
        tag = self.family or (f"{len(self.shape.rows)} rows" if self.shape else "custom")
        return f"Poset({self.n} elements, {tag})"

    def to_dict(self) -> dict:
        return {"n": self.n, "covers": [list(c) for c in self.covers]}

    def canonical_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()


def poset_from_shape(shape: ShapeDiagram, family: str | None = None) -> Poset:
    """Poset on a diagram's boxes: each box is covered by the boxes above and to the right."""
    boxes = shape.boxes()
    index = {b: i for i, b in enumerate(boxes)}
    covers = []
    for (r, c), i in index.items():
        if (r, c + 1) in index:
            covers.append((i, index[(r, c + 1)]))
        if (r + 1, c) in index:
            covers.append((i, index[(r + 1, c)]))
    _check_connected(len(boxes), covers)
    return Poset(len(boxes), covers, labels=boxes, family=family, shape=shape)


def _check_connected(n: int, covers) -> None:
    if n == 0:
        return
    adj = [[] for _ in range(n)]
    for a, b in covers:
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        for y in adj[stack.pop()]:
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    if count != n:
        raise ParameterError(f"shape diagram is disconnected ({count} of {n} boxes reachable)")


def propeller(p: int) -> Poset:
    """Two rows of p boxes overlapping in two central columns; 2p elements."""
    if p < 3:
        raise ParameterError(f"propeller needs p >= 3, got {p}")
    return poset_from_shape(ShapeDiagram([(0, p), (p - 2, p)]), family=f"propeller-{p}")


def cayley_moufang() -> Poset:
    """The 16-element exceptional poset."""
    return poset_from_shape(ShapeDiagram(_CAYLEY_MOUFANG_ROWS), family="cayley-moufang")


def freudenthal() -> Poset:
    """The 27-element exceptional poset."""
    return poset_from_shape(ShapeDiagram(_FREUDENTHAL_ROWS), family="freudenthal")


def rectangle(a: int, b: int) -> Poset:
    """The a-by-b grid poset."""
    if a < 1 or b < 1:
        raise ParameterError("rectangle sides must be >= 1")
    return poset_from_shape(ShapeDiagram([(0, b)] * a), family=f"rectangle-{a}x{b}")


def shifted_staircase(s: int) -> Poset:
    """Staircase rows of lengths s, s-1, ..., 1, each shifted one box right."""
    if s < 1:
        raise ParameterError("staircase size must be >= 1")
    return poset_from_shape(ShapeDiagram([(i, s - i) for i in range(s)]), family=f"shifted-staircase-{s}")


def build_minuscule_poset(family: str, *params: int) -> Poset:
    """Dispatch on a family name: propeller, cayley-moufang, freudenthal, rectangle, shifted-staircase."""
    name = family.replace("_", "-").lower()
    if name == "propeller":
        return propeller(*params)
    if name == "cayley-moufang":
        return cayley_moufang()
    if name == "freudenthal":
        return freudenthal()
    if name == "rectangle":
        return rectangle(*params)
    if name == "shifted-staircase":
        return shifted_staircase(*params)
    raise ParameterError(f"unknown poset family {family!r}")


def chain_product(poset: Poset, k: int) -> Poset:
    """Product of a poset with a k-element chain; element (x, i) has index x*k + i."""
    if k < 0:
        raise ParameterError("chain length must be nonnegative")
    if k == 0:
        return Poset(0, [], product_of=(poset, 0))
    n = poset.n
    covers = []
    for x in range(n):
        for i in range(k):
            if i + 1 < k:
                covers.append((x * k + i, x * k + i + 1))
            for y in poset.upper[x]:
                covers.append((x * k + i, y * k + i))
    labels = None
    if poset.labels is not None:
        labels = [(poset.labels[x], i) for x in range(n) for i in range(k)]
    return Poset(n * k, covers, labels=labels, product_of=(poset, k))


def rank_vector(poset: Poset) -> tuple[int, ...]:
    """rank(x) for every element, computed by longest path over covers."""
    return poset.rank


def parse_poset_spec(spec: str) -> Poset:
    """Parse a CLI poset spec: a family name with dash-separated parameters, or a JSON file path.

    Examples: cayley-moufang, freudenthal, propeller-5, rectangle-2x3, shifted-staircase-4.
    """
    text = spec.strip()
    if text.endswith(".json"):
        return load_poset(text)
    name = text.replace("_", "-").lower()
    if name in ("cayley-moufang", "freudenthal"):
        return build_minuscule_poset(name)
    for prefix in ("propeller-", "shifted-staircase-"):
        if name.startswith(prefix):
            try:
                return build_minuscule_poset(prefix[:-1], int(name[len(prefix):]))
            except ValueError as exc:
                raise ParameterError(f"bad poset spec {spec!r}") from exc
    if name.startswith("rectangle-"):
        dims = name[len("rectangle-"):].split("x")
        try:
            a, b = (int(d) for d in dims)
        except ValueError as exc:
            raise ParameterError(f"bad poset spec {spec!r}") from exc
        return rectangle(a, b)
    raise ParameterError(f"unknown poset spec {spec!r}")


def load_poset(path: str) -> Poset:
    """Load a poset from JSON: either {"shape": {"rows": [[off, len], ...]}} or {"covers": [...], "n": n}."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return poset_from_dict(data)


def poset_from_dict(data: dict) -> Poset:
    if "shape" in data:
        return poset_from_shape(ShapeDiagram(data["shape"]["rows"]))
    if "covers" in data:
        if "n" not in data:
            raise ParameterError("cover-list poset input needs an explicit element count 'n'")
        return Poset(data["n"], [tuple(c) for c in data["covers"]])
    raise ParameterError("poset input must contain 'shape' or 'covers'")
