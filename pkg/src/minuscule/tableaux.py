"""Increasing tableaux, K-Bender-Knuth operators, K-promotion, deflation and inflation.

An increasing tableau on a shape poset is a strictly order-preserving
labeling of the elements by integers in 1..m.  The promotion operator is
the composite of the label-swapping involutions rho_1, ..., rho_(m-1);
deflation compresses the label set to an initial segment, producing a
gapless tableau, and inflation reverses that using a binary content vector.

Tableaux are also in bijection with strict chains of order ideals whose
successive differences are antichains; the enumeration of all gapless
tableaux walks paths in that (small) ideal graph, which is how the large
shapes stay tractable.
"""

from collections.abc import Iterator

from .errors import ParameterError, StateCapExceeded, state_cap
from .ideals import _ideal_masks
from .poset import Poset, ShapeDiagram, poset_from_shape


class IncreasingTableau:
    """Strictly order-preserving labeling of a shape poset by 1..m.

    labels[i] is the entry of element i in the poset's canonical indexing
    (bottom-to-top, left-to-right for diagram shapes).  m is the label
    ceiling and may exceed the largest label actually used.
    """

    __slots__ = ("shape", "labels", "m")

    def __init__(self, shape: Poset, labels, m: int, validate: bool = True):
        self.shape = shape
        self.labels = tuple(int(v) for v in labels)
        self.m = int(m)
        if validate:
            self._validate()

    def _validate(self):
        if len(self.labels) != self.shape.n:
            raise ParameterError("label array length must match the shape")
        for v in self.labels:
            if not 1 <= v <= self.m:
                raise ParameterError(f"label {v} outside 1..{self.m}")
        for a, b in self.shape.covers:
            if self.labels[a] >= self.labels[b]:
                raise ParameterError("labels must strictly increase along covers")

    @property
    def m_t(self) -> int:
        """Number of distinct labels used."""
        return len(set(self.labels))

    @property
    def is_gapless(self) -> bool:
        return set(self.labels) == set(range(1, self.m + 1))

    def relabel(self, labels, m: int | None = None) -> "IncreasingTableau":
        return IncreasingTableau(self.shape, labels, self.m if m is None else m, validate=False)

    def __eq__(self, other):
        return (
            isinstance(other, IncreasingTableau)
            and self.m == other.m
            and self.labels == other.labels
            and self.shape == other.shape
        )

    def __hash__(self):
        return hash((self.labels, self.m))

    def __repr__(self):
        return f"IncreasingTableau(m={self.m}, rows={self.to_text()!r})"

    def to_text(self) -> str:
        """Text form: rows bottom-to-top, comma-separated labels, '.' for absent boxes."""
        if self.shape.shape is None:
            raise ParameterError("text form needs a diagram shape")
        lines = []
        i = 0
        for off, length in self.shape.shape.rows:
            cells = ["."] * off + [str(v) for v in self.labels[i : i + length]]
            lines.append(",".join(cells))
            i += length
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str, m: int | None = None) -> "IncreasingTableau":
        """Parse the text form; the ceiling defaults to the largest label."""
        rows = []
        labels = []
        for line in text.strip().splitlines():
            cells = [c.strip() for c in line.strip().split(",")]
            off = 0
            while off < len(cells) and cells[off] == ".":
                off += 1
            try:
                values = [int(c) for c in cells[off:]]
            except ValueError as exc:
                raise ParameterError(f"bad tableau row {line!r}") from exc
            if not values:
                raise ParameterError(f"bad tableau row {line!r}")
            rows.append((off, len(values)))
            labels.extend(values)
        shape = poset_from_shape(ShapeDiagram(rows))
        return cls(shape, labels, max(labels) if m is None else m)


def _swap_sets(labels, i: int, neighbors) -> tuple[list[int], list[int]]:
    # Boxes labeled i / i+1 sitting in singleton components of the
    # {i, i+1} cover-adjacency graph.  Comparable boxes never share a
    # label, so every edge joins an i-box to an (i+1)-box and a component
    # is a singleton exactly when the box has no neighbor with the other label.
    up = []
    dn = []
    for x, v in enumerate(labels):
        if v == i:
            if not any(labels[t] == i + 1 for t in neighbors[x]):
                up.append(x)
        elif v == i + 1:
            if not any(labels[t] == i for t in neighbors[x]):
                dn.append(x)
    return up, dn


def k_bender_knuth(tableau: IncreasingTableau, i: int) -> IncreasingTableau:
    """Swap labels i and i+1 on every singleton component of the {i, i+1} boxes."""
    if not 1 <= i <= tableau.m - 1:
        raise ParameterError(f"operator index {i} outside 1..{tableau.m - 1}")
    labels = list(tableau.labels)
    up, dn = _swap_sets(labels, i, tableau.shape.neighbors)
    for x in up:
        labels[x] = i + 1
    for y in dn:
        labels[y] = i
    return tableau.relabel(labels)


def _promote_labels(labels: list[int], m: int, neighbors) -> None:
    """Apply rho_1 through rho_(m-1) in place."""
    buckets = [[] for _ in range(m + 2)]
    for j, v in enumerate(labels):
        buckets[v].append(j)
    for i in range(1, m):
        a = buckets[i]
        b = buckets[i + 1]
        if not b:
            if a:
                for x in a:
                    labels[x] = i + 1
                buckets[i + 1] = a
                buckets[i] = []
            continue
        if not a:
            for y in b:
                labels[y] = i
            buckets[i] = b
            buckets[i + 1] = []
            continue
        ip1 = i + 1
        up = [x for x in a if not any(labels[t] == ip1 for t in neighbors[x])]
        dn = [y for y in b if not any(labels[t] == i for t in neighbors[y])]
        if up or dn:
            for x in up:
                labels[x] = ip1
            for y in dn:
                labels[y] = i
            buckets[i] = [x for x in a if labels[x] == i] + dn
            buckets[i + 1] = [y for y in b if labels[y] == ip1] + up


def promotion(tableau: IncreasingTableau) -> IncreasingTableau:
    """K-promotion: rho_(m-1) o ... o rho_1; a bijection on tableaux with ceiling m."""
    labels = list(tableau.labels)
    _promote_labels(labels, tableau.m, tableau.shape.neighbors)
    return tableau.relabel(labels)


def content_vector(tableau: IncreasingTableau) -> tuple[int, ...]:
    """Length-m indicator vector of which labels occur."""
    present = set(tableau.labels)
    return tuple(1 if v in present else 0 for v in range(1, tableau.m + 1))


def rotate_left(v: tuple[int, ...]) -> tuple[int, ...]:
    return v[1:] + v[:1] if v else v


def vector_inflation(v: tuple[int, ...], k: int) -> int:
    """Position (1-based) of the k-th one in a binary vector."""
    count = 0
    for pos, bit in enumerate(v, start=1):
        if bit:
            count += 1
            if count == k:
                return pos
    raise ParameterError(f"vector has only {count} ones, needed {k}")


def deflate(tableau: IncreasingTableau) -> IncreasingTableau:
    """Compress the label set to 1..m_t; the result is gapless and deflation is idempotent."""
    present = sorted(set(tableau.labels))
    rank_of = {v: i + 1 for i, v in enumerate(present)}
    return IncreasingTableau(
        tableau.shape, [rank_of[v] for v in tableau.labels], len(present), validate=False
    )


def inflate(gapless: IncreasingTableau, v: tuple[int, ...]) -> IncreasingTableau:
    """Spread a gapless tableau's labels onto the positions of the ones of v."""
    if not gapless.is_gapless:
        raise ParameterError("inflation needs a gapless tableau")
    if sum(v) != gapless.m:
        raise ParameterError(
            f"content vector has {sum(v)} ones but the tableau ceiling is {gapless.m}"
        )
    positions = [pos for pos, bit in enumerate(v, start=1) if bit]
    return IncreasingTableau(
        gapless.shape, [positions[val - 1] for val in gapless.labels], len(v), validate=False
    )


def _up_heights(shape: Poset) -> list[int]:
    # Longest chain strictly upward from each element, in cover steps.
    heights = [0] * shape.n
    for x in reversed(shape.topo):
        heights[x] = max((heights[y] + 1 for y in shape.upper[x]), default=0)
    return heights


def enumerate_increasing(shape: Poset, m: int, cap: int | None = None) -> Iterator[IncreasingTableau]:
    """All increasing tableaux with ceiling m, by backtracking along a linear extension."""
    if m < 0:
        raise ParameterError("ceiling must be nonnegative")
    cap = state_cap(cap)
    n = shape.n
    if n == 0:
        yield IncreasingTableau(shape, (), m, validate=False)
        return
    topo = shape.topo
    lower = shape.lower
    headroom = _up_heights(shape)
    labels = [0] * n
    count = 0

    def rec(i: int) -> Iterator[IncreasingTableau]:
        nonlocal count
        if i == n:
            count += 1
            if count > cap:
                raise StateCapExceeded("too many increasing tableaux", cap)
            yield IncreasingTableau(shape, labels, m, validate=False)
            return
        x = topo[i]
        lo = max((labels[a] for a in lower[x]), default=0) + 1
        hi = m - headroom[x]
        for v in range(lo, hi + 1):
            labels[x] = v
            yield from rec(i + 1)
        labels[x] = 0

    yield from rec(0)


class _IdealGraph:
    """All ideals of a shape with the antichain-step successor relation.

    Gapless tableaux with ceiling m correspond to length-m paths from the
    empty ideal to the full one, where each step adds a nonempty subset of
    the minimal elements of the complement, and the label of a box is the
    index of the step that added it.
    """

    def __init__(self, shape: Poset, cap: int | None = None):
        self.shape = shape
        masks = sorted(_ideal_masks(shape, cap))
        index = {mask: i for i, mask in enumerate(masks)}
        n = shape.n
        lower_masks = shape.lower_masks
        lower = shape.lower
        succ = []
        min_steps = []
        comp_sizes = []
        for mask in masks:
            mins = [
                x for x in range(n)
                if not (mask >> x) & 1 and mask & lower_masks[x] == lower_masks[x]
            ]
            subsets = []
            for s in range(1, 1 << len(mins)):
                add = tuple(mins[t] for t in range(len(mins)) if (s >> t) & 1)
                target = mask
                for x in add:
                    target |= 1 << x
                subsets.append((index[target], add))
            succ.append(tuple(subsets))
            longest = [0] * n
            best = 0
            for x in range(n):
                if not (mask >> x) & 1:
                    longest[x] = 1 + max(
                        (longest[a] for a in lower[x] if not (mask >> a) & 1), default=0
                    )
                    if longest[x] > best:
                        best = longest[x]
            min_steps.append(best)
            comp_sizes.append(n - bin(mask).count("1"))
        self.succ = succ
        self.min_steps = min_steps
        self.comp_sizes = comp_sizes
        self.start = index[0]
        self.full = index[(1 << n) - 1]

    def class_sizes(self) -> dict[int, int]:
        """Number of gapless tableaux per ceiling, by path counting."""
        n = self.shape.n
        paths = {self.start: 1}
        sizes = {}
        for depth in range(1, n + 1):
            nxt: dict[int, int] = {}
            for node, ways in paths.items():
                for target, _ in self.succ[node]:
                    nxt[target] = nxt.get(target, 0) + ways
            if self.full in nxt:
                sizes[depth] = nxt[self.full]
            nxt.pop(self.full, None)
            paths = nxt
        return sizes

    def class_labels(self, target: int) -> list[bytes]:
        """All gapless label arrays with ceiling target, in a fixed search order."""
        out: list[bytes] = []
        labels = bytearray(self.shape.n)
        succ = self.succ
        min_steps = self.min_steps
        comp_sizes = self.comp_sizes
        full = self.full

        def rec(node: int, depth: int) -> None:
            if depth == target:
                if node == full:
                    out.append(bytes(labels))
                return
            remaining = target - depth - 1
            value = depth + 1
            for nxt, added in succ[node]:
                if min_steps[nxt] <= remaining <= comp_sizes[nxt]:
                    for box in added:
                        labels[box] = value
                    rec(nxt, depth + 1)

        rec(self.start, 0)
        return out


def enumerate_gapless(shape: Poset, cap: int | None = None) -> Iterator[IncreasingTableau]:
    """All gapless tableaux of a shape, for every ceiling from rk+1 to the element count."""
    cap = state_cap(cap)
    if shape.n == 0:
        yield IncreasingTableau(shape, (), 0, validate=False)
        return
    graph = _IdealGraph(shape, cap)
    sizes = graph.class_sizes()
    if sum(sizes.values()) > cap:
        raise StateCapExceeded("too many gapless tableaux", cap)
    for m in range(shape.rk + 1, shape.n + 1):
        for labels in graph.class_labels(m):
            yield IncreasingTableau(shape, labels, m, validate=False)
