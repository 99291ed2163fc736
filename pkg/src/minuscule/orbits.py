"""Gapless orbit tables, the inflated-period formula, fixed-point counts, and sieving verdicts.

The promotion action on all tableaux of a shape is controlled by a finite
table: for each ceiling, the gapless tableaux partitioned into promotion
orbits.  Everything downstream (periods of the action, fixed-point counts
of its powers, cyclic sieving verdicts against the plane-partition
generating function) is exact arithmetic over that table.
"""

import json
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from math import comb, gcd, lcm
from pathlib import Path

from .errors import ParameterError, StateCapExceeded, UnsupportedPosetError, state_cap
from .ideals import _ideal_masks
from .poset import Poset, freudenthal, poset_from_dict
from .qpoly import RootOfUnityValue, eval_at_root, plane_partition_gf, q_binomial_at_root
from .tableaux import IncreasingTableau, _IdealGraph, _promote_labels, inflate, promotion, rotate_left

_TABLE_SCHEMA = "minuscule.gapless-table/1"


@dataclass(frozen=True)
class GaplessOrbitRow:
    """One orbit class: ceiling m_t, orbit period, orbit count, and a representative."""

    m_t: int
    period: int
    orbits: int
    rep: tuple[int, ...]


@dataclass(frozen=True)
class GaplessOrbitTable:
    poset: Poset
    rows: tuple[GaplessOrbitRow, ...]
    stable: tuple[int, ...]
    total: int

    def triples(self) -> list[list[int]]:
        return [[r.m_t, r.period, r.orbits] for r in self.rows]

    def to_dict(self) -> dict:
        return {
            "schema": _TABLE_SCHEMA,
            "family": self.poset.family,
            "poset_digest": self.poset.digest(),
            "total": self.total,
            "stable": list(self.stable),
            "rows": [
                {"m_t": r.m_t, "period": r.period, "orbits": r.orbits, "rep": list(r.rep)}
                for r in self.rows
            ],
        }


def _table_from_dict(data: dict, poset: Poset) -> GaplessOrbitTable:
    if data.get("schema") != _TABLE_SCHEMA:
        raise ParameterError(f"unsupported table schema {data.get('schema')!r}")
    if data.get("poset_digest") != poset.digest():
        raise ParameterError("cached table belongs to a different poset")
    rows = tuple(
        GaplessOrbitRow(r["m_t"], r["period"], r["orbits"], tuple(r["rep"]))
        for r in data["rows"]
    )
    table = GaplessOrbitTable(poset, rows, tuple(data["stable"]), data["total"])
    if sum(r.period * r.orbits for r in rows) != table.total:
        raise ParameterError("cached table is inconsistent: orbit sizes do not sum to the total")
    return table


def _partition_class(shape: Poset, m: int, tabs: list[bytes]) -> dict:
    """Split one ceiling's gapless tableaux into promotion orbits.

    Also accumulates, per element, whether the m-fold promotion fixes the
    entry at that element for every tableau of the class (orbit position
    shifts by m mod period, so this is a pairwise comparison inside each
    stored orbit).
    """
    neighbors = shape.neighbors
    index = {t: i for i, t in enumerate(tabs)}
    seen = bytearray(len(tabs))
    counts: dict[int, list] = {}
    stable = list(range(shape.n))
    for start, t0 in enumerate(tabs):
        if seen[start]:
            continue
        orbit = [t0]
        labels = list(t0)
        while True:
            _promote_labels(labels, m, neighbors)
            key = bytes(labels)
            if key == t0:
                break
            orbit.append(key)
        tau = len(orbit)
        for t in orbit:
            seen[index[t]] = 1
        entry = counts.get(tau)
        if entry is None:
            counts[tau] = [1, min(orbit)]
        else:
            entry[0] += 1
        shift = m % tau
        if shift and stable:
            for s in range(tau):
                a = orbit[s]
                b = orbit[(s + shift) % tau]
                if a != b:
                    stable = [x for x in stable if a[x] == b[x]]
    return {
        "m_t": m,
        "size": len(tabs),
        "rows": [(tau, cnt, tuple(rep)) for tau, (cnt, rep) in sorted(counts.items())],
        "stable": stable,
    }


def _class_task(payload: tuple[str, int]) -> dict:
    poset_json, m = payload
    shape = poset_from_dict(json.loads(poset_json))
    graph = _IdealGraph(shape)
    return _partition_class(shape, m, graph.class_labels(m))


def build_gapless_table(poset: Poset, workers: int = 1, cap: int | None = None) -> GaplessOrbitTable:
    """Enumerate every gapless tableau of the shape and partition each ceiling into orbits.

    With workers > 1 the ceilings are distributed over processes; the result
    is identical to the single-process one (asserted by tests).
    """
    cap = state_cap(cap)
    if poset.n == 0:
        raise ParameterError("the empty shape has no orbit table")
    graph = _IdealGraph(poset, cap)
    sizes = graph.class_sizes()
    if sum(sizes.values()) > cap:
        raise StateCapExceeded("too many gapless tableaux", cap)
    order = sorted(sizes, key=lambda m: (-sizes[m], m))
    results: dict[int, dict] = {}
    if workers <= 1:
        for m in order:
            results[m] = _partition_class(poset, m, graph.class_labels(m))
    else:
        payload = poset.canonical_json()
        try:
            ctx = multiprocessing.get_context("fork")
        except ValueError:
            ctx = multiprocessing.get_context()
        with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
            for m, res in zip(order, pool.map(_class_task, [(payload, m) for m in order])):
                results[m] = res
    rows = []
    stable = set(range(poset.n))
    total = 0
    for m in sorted(results):
        res = results[m]
        if res["size"] != sizes[m]:
            raise RuntimeError(
                f"enumeration mismatch at ceiling {m}: {res['size']} found, {sizes[m]} counted"
            )
        total += res["size"]
        stable &= set(res["stable"])
        rows.extend(GaplessOrbitRow(m, tau, cnt, rep) for tau, cnt, rep in res["rows"])
    return GaplessOrbitTable(poset, tuple(rows), tuple(sorted(stable)), total)


def save_table(table: GaplessOrbitTable, path: str | Path) -> None:
    Path(path).write_text(json.dumps(table.to_dict(), indent=1, sort_keys=True) + "\n")


def load_table(path: str | Path, poset: Poset) -> GaplessOrbitTable:
    return _table_from_dict(json.loads(Path(path).read_text()), poset)


def packaged_table(poset: Poset) -> GaplessOrbitTable | None:
    """Table shipped with the package for this exact poset, if any."""
    digest = poset.digest()
    root = resources.files("minuscule").joinpath("data/cache")
    try:
        entries = list(root.iterdir())
    except (FileNotFoundError, NotADirectoryError):
        return None
    for entry in sorted(entries, key=lambda e: e.name):
        if entry.name.endswith(".json"):
            data = json.loads(entry.read_text())
            if data.get("poset_digest") == digest:
                return _table_from_dict(data, poset)
    return None


def load_or_build_table(
    poset: Poset,
    cache_dir: str | Path | None = None,
    workers: int = 1,
    cap: int | None = None,
) -> GaplessOrbitTable:
    """Packaged table, else on-disk cache keyed by poset digest, else a fresh build."""
    table = packaged_table(poset)
    if table is not None:
        return table
    cache_path = None
    if cache_dir is not None:
        cache_path = Path(cache_dir) / f"gapless-{poset.digest()}.json"
        if cache_path.exists():
            return load_table(cache_path, poset)
    table = build_gapless_table(poset, workers=workers, cap=cap)
    if cache_path is not None:
        cache_path.parent.mkdir(parents=True, exist_ok=True)
        save_table(table, cache_path)
    return table


def inflated_period(m: int, m_t: int, tau: int, ell: int) -> int:
    """Promotion period of an inflated tableau: ceiling m, gapless data (m_t, tau), content period ell."""
    if m < 1 or m_t < 1 or tau < 1 or ell < 1:
        raise ParameterError("all arguments must be positive")
    if m % ell:
        raise ParameterError(f"content period {ell} must divide the ceiling {m}")
    if (ell * m_t) % m:
        raise ParameterError(
            f"no content vector of length {m} with {m_t} ones has period {ell}"
        )
    return ell * tau // gcd(ell * m_t // m, tau)


def promote_pair(gapless: IncreasingTableau, v: tuple[int, ...]):
    """Promotion transported through deflation: promote the gapless part iff v starts with 1, rotate v."""
    if not gapless.is_gapless:
        raise ParameterError("pair promotion needs a gapless tableau")
    if sum(v) != gapless.m:
        raise ParameterError("content vector weight must equal the gapless ceiling")
    if v and v[0] == 1:
        return promotion(gapless), rotate_left(v)
    return gapless, rotate_left(v)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _mobius(n: int) -> int:
    mu = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            mu = -mu
        p += 1
    if n > 1:
        mu = -mu
    return mu


def exact_period_vector_count(m: int, n: int, e: int) -> int:
    """Number of binary vectors of length m with n ones and exact rotation period e."""
    if m < 1 or not 0 <= n <= m:
        raise ParameterError("need 0 <= n <= m with m positive")
    if m % e:
        raise ParameterError(f"exact period {e} must divide the length {m}")

    def at_most(ep: int) -> int:
        if (n * ep) % m:
            return 0
        return comb(ep, n * ep // m)

    return sum(_mobius(e // ep) * at_most(ep) for ep in _divisors(e))


def count_fixed(table: GaplessOrbitTable, m: int, j: int) -> int:
    """Number of tableaux with ceiling m whose promotion period divides j.

    Sums, over table rows and admissible content periods e, the count of
    exact-period-e vectors whose inflated period divides j, weighted by the
    row's tableau count.
    """
    if j < 1:
        raise ParameterError("j must be positive")
    total = 0
    for row in table.rows:
        if row.m_t > m:
            continue
        vectors = 0
        for e in _divisors(m):
            if (e * row.m_t) % m:
                continue
            v = exact_period_vector_count(m, row.m_t, e)
            if v and j % inflated_period(m, row.m_t, row.period, e) == 0:
                vectors += v
        total += row.period * row.orbits * vectors
    return total


def count_fixed_qbinomial(table: GaplessOrbitTable, m: int, d: int) -> int:
    """Fixed-count via the q-binomial closed form, for rows whose period divides their ceiling.

    Counts tableaux with ceiling m and period dividing m/d, for d | m; only
    valid when every row with m_t <= m has period dividing m_t (true for the
    Cayley-Moufang poset and the propellers).
    """
    if d < 1 or m % d:
        raise ParameterError(f"d = {d} must divide m = {m}")
    total = 0
    for row in table.rows:
        if row.m_t > m:
            continue
        if row.m_t % row.period:
            raise ParameterError(
                f"row (m_t={row.m_t}, period={row.period}) is outside this formula's hypothesis"
            )
        if (row.m_t // row.period) % d == 0:
            total += row.period * row.orbits * q_binomial_at_root(m, row.m_t, d)
    return total


def _periodic_vector(m: int, n: int, e: int) -> tuple[int, ...]:
    # Ones-block window tiled m/e times: exact rotation period e.
    ones = n * e // m
    window = (1,) * ones + (0,) * (e - ones)
    return window * (m // e)


@dataclass(frozen=True)
class PeriodReport:
    """Order of the promotion action on all ceiling-m tableaux.

    period is the order of the permutation (lcm of all orbit sizes);
    max_orbit is the largest single orbit, and witness is a verified tableau
    attaining it.  The two numbers agree except when some orbit size fails
    to divide the largest one.
    """

    m: int
    period: int
    max_orbit: int
    witness: IncreasingTableau | None


def promotion_order(
    poset: Poset,
    m: int,
    table: GaplessOrbitTable | None = None,
    cache_dir: str | Path | None = None,
    workers: int = 1,
) -> PeriodReport:
    """Order of promotion on all ceiling-m tableaux of the shape, with a maximal-orbit witness.

    Every tableau is an inflation of a table row by a content vector, so the
    realized orbit sizes are the inflated periods over rows and admissible
    exact content periods; the order is their lcm.  The witness's orbit is
    walked to confirm its size.
    """
    if table is None:
        table = load_or_build_table(poset, cache_dir=cache_dir, workers=workers)
    if m < poset.rk + 1:
        raise ParameterError(f"no tableaux of this shape with ceiling {m}")
    attained = []
    order = 1
    for row in table.rows:
        if row.m_t > m:
            continue
        for e in _divisors(m):
            if (e * row.m_t) % m or exact_period_vector_count(m, row.m_t, e) == 0:
                continue
            h = inflated_period(m, row.m_t, row.period, e)
            attained.append((row, e, h))
            order = lcm(order, h)
    max_orbit = max((h for _, _, h in attained), default=1)
    witness = None
    for row, e, h in attained:
        if h == max_orbit:
            rep = IncreasingTableau(poset, row.rep, row.m_t)
            witness = inflate(rep, _periodic_vector(m, row.m_t, e))
            steps = 0
            current = witness
            while True:
                current = promotion(current)
                steps += 1
                if current == witness:
                    break
            if steps != max_orbit:
                raise RuntimeError(
                    f"witness verification failed: orbit size {steps}, expected {max_orbit}"
                )
            break
    return PeriodReport(m, order, max_orbit, witness)


@dataclass(frozen=True)
class CspRecord:
    d: int
    fixed_count: int
    value: RootOfUnityValue
    match: bool


@dataclass(frozen=True)
class CspVerdict:
    poset_family: str
    k: int
    m: int
    order: int
    records: tuple[CspRecord, ...]
    holds: bool
    psi_cross_checked: bool = False

    def to_dict(self) -> dict:
        return {
            "poset": self.poset_family,
            "k": self.k,
            "m": self.m,
            "order": self.order,
            "holds": self.holds,
            "psi_cross_checked": self.psi_cross_checked,
            "records": [
                {
                    "d": r.d,
                    "fixed_count": r.fixed_count,
                    "value": r.value.value,
                    "match": r.match,
                }
                for r in self.records
            ],
        }


def verify_csp(
    poset: Poset,
    k: int,
    table: GaplessOrbitTable | None = None,
    cache_dir: str | Path | None = None,
    workers: int = 1,
    psi_check_cap: int | None = 20_000,
) -> CspVerdict:
    """Exact sieving check: does the generating function evaluate, at every power of a
    primitive root of unity of the action's order, to the matching fixed-point count?

    Fixed points of the d-fold action are counted on the tableau side, with
    ceiling m = k + rk + 1; the polynomial is evaluated exactly at each root,
    and any non-integer value is an automatic mismatch.  When the ideal count
    is at most psi_check_cap, the fixed points are recounted on the rowmotion
    side by brute force and must agree (orbit-multiset equivalence); a
    disagreement is an engine bug, not a sieving failure, and raises.
    """
    if k < 0:
        raise ParameterError("height bound must be nonnegative")
    if poset.family is None:
        raise UnsupportedPosetError("sieving verdicts need the product generating function, so a built-in family")
    if table is None:
        table = load_or_build_table(poset, cache_dir=cache_dir, workers=workers)
    m = k + poset.rk + 1
    order = promotion_order(poset, m, table=table).period
    gf = plane_partition_gf(poset, k)
    summary = None
    if psi_check_cap is not None and gf(1) <= psi_check_cap:
        from .ideals import rowmotion_orbits

        summary = rowmotion_orbits(poset, k, cap=psi_check_cap)
        if summary.order() != order:
            raise RuntimeError(
                f"rowmotion order {summary.order()} disagrees with the tableau side {order}"
            )
    records = []
    for d in range(1, order + 1):
        j = gcd(d, order)
        fixed = count_fixed(table, m, j)
        if summary is not None and summary.fixed_by_power(j) != fixed:
            raise RuntimeError(
                f"rowmotion recount disagrees at d={d}: {summary.fixed_by_power(j)} vs {fixed}"
            )
        value = eval_at_root(gf, order, d)
        records.append(CspRecord(d, fixed, value, value.equals_int(fixed)))
    return CspVerdict(
        poset.family or "custom", k, m, order, tuple(records),
        all(r.match for r in records), summary is not None,
    )


def _is_tree_ideal(poset: Poset, mask: int) -> bool:
    for x in range(poset.n):
        if (mask >> x) & 1:
            if sum(1 for a in poset.lower[x] if (mask >> a) & 1) > 1:
                return False
    return True


def _is_dual_tree_filter(poset: Poset, mask: int) -> bool:
    for x in range(poset.n):
        if (mask >> x) & 1:
            if sum(1 for b in poset.upper[x] if (mask >> b) & 1) > 1:
                return False
    return True


def max_tree_ideal(poset: Poset, cap: int | None = None) -> frozenset[int]:
    """The unique largest order ideal in which every element covers at most one other."""
    trees = [m for m in _ideal_masks(poset, cap) if _is_tree_ideal(poset, m)]
    best = max(trees, key=lambda m: bin(m).count("1"))
    if any(t & best != t for t in trees):
        raise RuntimeError("tree ideals of this poset have no unique maximum")
    return frozenset(x for x in range(poset.n) if (best >> x) & 1)


def max_dual_tree_filter(poset: Poset, cap: int | None = None) -> frozenset[int]:
    """The unique largest order filter in which every element is covered by at most one other."""
    full = (1 << poset.n) - 1
    filters = [full ^ m for m in _ideal_masks(poset, cap)]
    duals = [m for m in filters if _is_dual_tree_filter(poset, m)]
    best = max(duals, key=lambda m: bin(m).count("1"))
    if any(t & best != t for t in duals):
        raise RuntimeError("dual-tree filters of this poset have no unique maximum")
    return frozenset(x for x in range(poset.n) if (best >> x) & 1)


def frame(poset: Poset, cap: int | None = None) -> frozenset[int]:
    """Union of the maximal tree ideal and the maximal dual-tree filter."""
    return max_tree_ideal(poset, cap) | max_dual_tree_filter(poset, cap)


@dataclass(frozen=True)
class FrameReport:
    frame_elements: tuple[int, ...]
    stable_elements: tuple[int, ...]
    match: bool


def frame_check(
    poset: Poset | None = None,
    table: GaplessOrbitTable | None = None,
    cache_dir: str | Path | None = None,
    workers: int = 1,
) -> FrameReport:
    """Compare the structural frame with the set of elements fixed by m-fold promotion
    across every gapless tableau (accumulated during table construction)."""
    if poset is None:
        poset = freudenthal()
    if table is None:
        table = load_or_build_table(poset, cache_dir=cache_dir, workers=workers)
    frame_els = tuple(sorted(frame(poset)))
    stable_els = table.stable
    return FrameReport(frame_els, stable_els, frame_els == stable_els)
