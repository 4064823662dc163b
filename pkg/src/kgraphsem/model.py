"""Presentations of higher-rank graphs and their combinatorial predicates.

A rank-k graph with finitely many vertices is presented by its k coordinate
matrices M1, ..., Mk: square non-negative integer matrices that pairwise
commute, with entry Mi[r][c] counting the color-i edges whose range is
vertices[r] and whose source is vertices[c]. Row = range, column = source,
everywhere. "No sources" means every row of every coordinate matrix is
nonzero. Everything downstream (reachability, hereditary and saturated
closures, cofinality, cycles, condition (L)) is a function of these matrices
alone; edge-level factorization data is deliberately not modeled, since no
verdict computed by this package depends on it. Whether an arbitrary
commuting family with k >= 3 colors is realizable as an actual rank-k graph
is not checked.

An eventually periodic ray presentation covers the one infinite family in
scope: vertices are graded into levels 0, 1, 2, ... with every edge pointing
one level down (range at level l, source at level l+1), the inter-level
blocks repeat with some period after a finite prefix, and the graded
commutation B_i(l) B_j(l+1) = B_j(l) B_i(l+1) replaces matrix commutation.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass, field

from . import linalg
from .errors import InternalCheckError, PresentationError

Matrix = tuple[tuple[int, ...], ...]
Degree = tuple[int, ...]


class Tri(enum.Enum):
    """Three-valued answer for predicates that may be undecidable here."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def _check_entry(value, where: str):
    if isinstance(value, bool) or not isinstance(value, int):
        raise PresentationError(f"{where} is not an integer")
    if value < 0:
        raise PresentationError(f"{where} is negative")


@dataclass(frozen=True)
class KGraphPresentation:
    """Finite vertex list plus k commuting coordinate matrices.

    Construction enforces shapes and entry ranges only; commutation and the
    no-sources condition are reported by validate(), not raised here, so a
    broken input can still be inspected.
    """

    k: int
    vertices: tuple[str, ...]
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise PresentationError("k must be a positive integer")
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise PresentationError("vertex list is empty")
        seen = set()
        for name in self.vertices:
            if not isinstance(name, str):
                raise PresentationError(f"vertex name {name!r} is not a string")
            if name in seen:
                raise PresentationError(f"duplicate vertex name {name!r}")
            seen.add(name)
        mats = tuple(linalg.freeze(m) for m in self.matrices)
        object.__setattr__(self, "matrices", mats)
        if len(mats) != self.k:
            raise PresentationError(
                f"expected {self.k} coordinate matrices, got {len(mats)}"
            )
        n = len(self.vertices)
        for i, mat in enumerate(mats):
            if len(mat) != n:
                raise PresentationError(
                    f"matrix {i + 1} has {len(mat)} rows, expected {n}"
                )
            for r, row in enumerate(mat):
                if len(row) != n:
                    raise PresentationError(
                        f"matrix {i + 1} row for vertex {self.vertices[r]!r} "
                        f"has {len(row)} entries, expected {n}"
                    )
                for c, value in enumerate(row):
                    _check_entry(
                        value,
                        f"matrix {i + 1} entry "
                        f"({self.vertices[r]}, {self.vertices[c]})",
                    )

    @property
    def size(self) -> int:
        return len(self.vertices)

    def index(self, name: str) -> int:
        try:
            return self.vertices.index(name)
        except ValueError:
            raise PresentationError(f"unknown vertex {name!r}") from None


@dataclass(frozen=True)
class StructuralReport:
    """Aggregated graph-level facts; validate() fills only the first block."""

    commuting: bool
    no_sources: bool
    commuting_failure: tuple[int, int] | None = None
    source_failure: tuple[int, str] | None = None
    cofinal: Tri | None = None
    cofinal_counterexample: tuple[str, ...] | None = None
    strongly_connected: bool | None = None
    full_degree_cycle: tuple[str, Degree] | None = None
    condition_L: Tri | None = None
    condition_L_witness: tuple[str, ...] | None = None
    simplicity: Tri | None = None
    simplicity_provenance: tuple[str, ...] = ()
    nontrivial_saturated_hereditary: tuple[str, ...] | None = None

    @property
    def valid(self) -> bool:
        return self.commuting and self.no_sources


@functools.lru_cache(maxsize=None)
def validate(g: KGraphPresentation) -> StructuralReport:
    """Exact commutation and no-sources check, with named first failures."""
    commuting = True
    commuting_failure = None
    for i in range(g.k):
        for j in range(i + 1, g.k):
            if linalg.mat_mul(g.matrices[i], g.matrices[j]) != linalg.mat_mul(
                g.matrices[j], g.matrices[i]
            ):
                if commuting:
                    commuting_failure = (i + 1, j + 1)
                commuting = False
    no_sources = True
    source_failure = None
    for i, mat in enumerate(g.matrices):
        for r, row in enumerate(mat):
            if not any(row):
                if no_sources:
                    source_failure = (i + 1, g.vertices[r])
                no_sources = False
    return StructuralReport(
        commuting=commuting,
        no_sources=no_sources,
        commuting_failure=commuting_failure,
        source_failure=source_failure,
    )


def require_valid(g: KGraphPresentation) -> None:
    report = validate(g)
    if not report.commuting:
        i, j = report.commuting_failure
        raise PresentationError(f"matrices {i} and {j} do not commute")
    if not report.no_sources:
        i, v = report.source_failure
        raise PresentationError(f"matrix {i} has a zero row at vertex {v!r}")


def check_degree(g: KGraphPresentation, n) -> Degree:
    n = tuple(n)
    if len(n) != g.k:
        raise PresentationError(f"degree {n} has length {len(n)}, expected {g.k}")
    for x in n:
        if isinstance(x, bool) or not isinstance(x, int) or x < 0:
            raise PresentationError(f"degree {n} has a non-natural coordinate")
    return n


def degree_matrix(g: KGraphPresentation, n) -> Matrix:
    """The path-count matrix at degree n: the product M1^n1 ... Mk^nk.

    Commutation makes the factor order irrelevant; the fixed order here is a
    convention, not a requirement.
    """
    require_valid(g)
    n = check_degree(g, n)
    out = linalg.identity(g.size)
    for i in range(g.k):
        for _ in range(n[i]):
            out = linalg.mat_mul(out, g.matrices[i])
    return out


# Support bitmasks: bit c of masks[i][r] is set when Mi[r][c] > 0. All
# reachability below runs on these, which is correct for non-negative
# matrices (products cannot cancel).
@functools.lru_cache(maxsize=None)
def _masks(g: KGraphPresentation):
    per_color = tuple(
        tuple(
            sum(1 << c for c, x in enumerate(row) if x > 0) for row in mat
        )
        for mat in g.matrices
    )
    union = tuple(
        functools.reduce(lambda a, b: a | b, (pc[v] for pc in per_color), 0)
        for v in range(g.size)
    )
    return per_color, union


def _reach(g: KGraphPresentation, start_mask: int) -> int:
    _, union = _masks(g)
    seen = start_mask
    frontier = start_mask
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= union[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def _names(g: KGraphPresentation, mask: int) -> tuple[str, ...]:
    return tuple(g.vertices[v] for v in range(g.size) if mask >> v & 1)


def _mask_of(g: KGraphPresentation, subset) -> int:
    mask = 0
    for name in subset:
        mask |= 1 << g.index(name)
    return mask


def union_reach(g: KGraphPresentation, v: str) -> tuple[str, ...]:
    """All vertices reachable from v by paths of any degree, v included."""
    require_valid(g)
    return _names(g, _reach(g, 1 << g.index(v)))


def hereditary_closure(g: KGraphPresentation, subset) -> tuple[str, ...]:
    """Smallest superset closed under taking sources of outgoing edges."""
    require_valid(g)
    return _names(g, _reach(g, _mask_of(g, subset)))


def _saturated_closure_mask(g: KGraphPresentation, mask: int) -> int:
    per_color, _ = _masks(g)
    full = (1 << g.size) - 1
    h = _reach(g, mask)
    while True:
        changed = False
        for v in range(g.size):
            if h >> v & 1:
                continue
            # v is absorbed once all of its color-i sources lie inside, for
            # some single color i.
            if any(per_color[i][v] & ~h == 0 for i in range(g.k)):
                h = _reach(g, h | (1 << v))
                changed = True
        if not changed or h == full:
            return h


def saturated_hereditary_closure(g: KGraphPresentation, subset) -> tuple[str, ...]:
    """Fixed point of alternating heredity and saturation, starting at subset."""
    require_valid(g)
    mask = _mask_of(g, subset)
    if mask == 0:
        return ()
    return _names(g, _saturated_closure_mask(g, mask))


def _direct_cofinal(g: KGraphPresentation, bound: int) -> bool:
    # Bounded form of the definition: for every pair (v, w) some degree
    # n <= (bound, ..., bound) has the whole degree-n shadow of w inside the
    # reach of v. Supports of the degree matrices are built by dynamic
    # programming over the degree lattice.
    per_color, _ = _masks(g)
    size = g.size
    reach_masks = [_reach(g, 1 << v) for v in range(size)]
    supports: dict[Degree, list[int]] = {}
    degrees = list(itertools.product(range(bound + 1), repeat=g.k))
    for n in degrees:
        if not any(n):
            supports[n] = [1 << w for w in range(size)]
            continue
        i = next(idx for idx, x in enumerate(n) if x > 0)
        prev = supports[tuple(x - (1 if idx == i else 0) for idx, x in enumerate(n))]
        cur = []
        for w in range(size):
            acc = 0
            m = prev[w]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                acc |= per_color[i][u]
            cur.append(acc)
        supports[n] = cur
    for v in range(size):
        rv = reach_masks[v]
        for w in range(size):
            if not any(supports[n][w] & ~rv == 0 for n in degrees):
                return False
    return True


def is_cofinal(
    g: KGraphPresentation, direct_bound: int = 6
) -> tuple[Tri, tuple[str, ...] | None]:
    """Cofinality via saturated hereditary closures, cross-checked directly.

    Yes exactly when the saturated hereditary closure of every single vertex
    is the whole vertex set; a No comes with a proper nonempty saturated
    hereditary subset as counterexample. The answer is additionally compared
    with the bounded direct definition (degree coordinates up to
    direct_bound); a disagreement within the bound is an internal error, not
    an input property. The default bound 6 is safe for every presentation
    with at most 6 vertices; pass direct_bound >= the vertex count to keep
    the guarantee on larger inputs.
    """
    require_valid(g)
    full = (1 << g.size) - 1
    answer = Tri.YES
    counterexample = None
    for v in range(g.size):
        closure = _saturated_closure_mask(g, 1 << v)
        if closure != full:
            answer = Tri.NO
            counterexample = _names(g, closure)
            break
    direct = _direct_cofinal(g, direct_bound)
    if direct != (answer is Tri.YES):
        raise InternalCheckError(
            "cofinality checks disagree within the search bound "
            f"(closures say {answer.value}, direct bound {direct_bound} says "
            f"{'yes' if direct else 'no'}); this signals a saturation bug"
        )
    return answer, counterexample


def is_strongly_connected(g: KGraphPresentation) -> bool:
    require_valid(g)
    full = (1 << g.size) - 1
    if _reach(g, 1) != full:
        return False
    per_color, _ = _masks(g)
    # reach along reversed edges
    rev = [0] * g.size
    for v in range(g.size):
        for i in range(g.k):
            m = per_color[i][v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                rev[u] |= 1 << v
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= rev[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def full_degree_cycle(g: KGraphPresentation) -> tuple[str, Degree]:
    """A vertex v and degree n >= (1, ..., 1) with a degree-n cycle at v.

    Found by walking the support digraph of the degree-(1, ..., 1) matrix,
    which has no zero rows on valid input, so the walk always closes up. The
    witness is re-verified by exact multiplication before being returned.
    """
    require_valid(g)
    per_color, _ = _masks(g)
    # support of the all-ones degree matrix, one color at a time
    step = [1 << v for v in range(g.size)]
    for i in range(g.k):
        nxt = []
        for v in range(g.size):
            acc = 0
            m = step[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                acc |= per_color[i][u]
            nxt.append(acc)
        step = nxt
    pos = {0: 0}
    path = [0]
    cur = 0
    while True:
        cur = (step[cur] & -step[cur]).bit_length() - 1  # smallest successor
        if cur in pos:
            length = len(path) - pos[cur]
            break
        pos[cur] = len(path)
        path.append(cur)
    n = (length,) * g.k
    v = g.vertices[cur]
    if degree_matrix(g, n)[cur][cur] <= 0:
        raise InternalCheckError("full-degree cycle witness failed re-verification")
    return v, n


def restrict(g: KGraphPresentation, subset) -> KGraphPresentation:
    """The sub-presentation on a nonempty hereditary vertex subset."""
    require_valid(g)
    mask = _mask_of(g, subset)
    if mask == 0:
        raise PresentationError("cannot restrict to the empty subset")
    per_color, _ = _masks(g)
    for v in range(g.size):
        if not (mask >> v & 1):
            continue
        for i in range(g.k):
            out = per_color[i][v] & ~mask
            if out:
                u = (out & -out).bit_length() - 1
                raise PresentationError(
                    f"subset is not hereditary: color-{i + 1} edge from "
                    f"{g.vertices[v]!r} to {g.vertices[u]!r} leaves it"
                )
    keep = [v for v in range(g.size) if mask >> v & 1]
    sub = KGraphPresentation(
        k=g.k,
        vertices=tuple(g.vertices[v] for v in keep),
        matrices=tuple(
            tuple(tuple(mat[r][c] for c in keep) for r in keep)
            for mat in g.matrices
        ),
    )
    if not validate(sub).valid:
        raise InternalCheckError("restriction of a valid presentation is invalid")
    return sub


def condition_L(
    g: KGraphPresentation,
) -> tuple[Tri, tuple[str, ...] | None]:
    """Cycle-with-entrance test; exact for k = 1, Unknown for k >= 2.

    For one color: the answer is No exactly when the support digraph,
    restricted to vertices of row sum exactly 1, contains a directed cycle
    (such a cycle has no entrance), and that cycle is the witness. With two
    or more colors the coordinate matrices do not determine aperiodicity, so
    the answer is Unknown.
    """
    require_valid(g)
    if g.k != 1:
        return Tri.UNKNOWN, None
    mat = g.matrices[0]
    slim = [v for v in range(g.size) if sum(mat[v]) == 1]
    slim_set = set(slim)
    nxt = {}
    for v in slim:
        target = next(c for c, x in enumerate(mat[v]) if x > 0)
        if target in slim_set:
            nxt[v] = target
    visited: set[int] = set()
    for start in slim:
        if start in visited:
            continue
        order = {}
        cur = start
        while cur in nxt and cur not in order and cur not in visited:
            order[cur] = len(order)
            cur = nxt[cur]
        if cur in order:
            cycle = [w for w, idx in sorted(order.items(), key=lambda p: p[1])]
            cycle = cycle[order[cur]:]
            lead = cycle.index(min(cycle))
            cycle = cycle[lead:] + cycle[:lead]
            return Tri.NO, tuple(g.vertices[w] for w in cycle)
        visited.update(order)
    return Tri.YES, None


def simplicity_status(
    g: KGraphPresentation,
    assume_aperiodic: bool = False,
    direct_bound: int = 6,
) -> tuple[Tri, tuple[str, ...]]:
    """Simplicity of the associated algebra, with a checked/assumed ledger.

    Simple = cofinal plus aperiodic. Aperiodicity is decided exactly for
    k = 1 (condition (L)); for k >= 2 it can only be assumed, and the
    provenance tuple records which facts were checked and which assumed.
    """
    require_valid(g)
    cof, _ = is_cofinal(g, direct_bound)
    condl, witness = condition_L(g)
    prov: list[str] = []
    prov.append(f"cofinality: checked ({cof.value})")
    if g.k == 1:
        if condl is Tri.YES:
            prov.append("aperiodicity: checked (no cycle without entrance)")
        else:
            prov.append(
                "aperiodicity: fails, cycle without entrance through "
                + ", ".join(witness)
            )
        if assume_aperiodic:
            prov.append("assume-aperiodic flag ignored: the k = 1 check is decisive")
    elif assume_aperiodic:
        prov.append("aperiodicity: assumed (user flag, k >= 2)")
    else:
        prov.append("aperiodicity: undetermined (k >= 2, no assumption)")
    if cof is Tri.NO or condl is Tri.NO:
        return Tri.NO, tuple(prov)
    if cof is Tri.YES and (condl is Tri.YES or (g.k >= 2 and assume_aperiodic)):
        return Tri.YES, tuple(prov)
    return Tri.UNKNOWN, tuple(prov)


def structure_report(
    g: KGraphPresentation,
    assume_aperiodic: bool = False,
    direct_bound: int = 6,
) -> StructuralReport:
    """Full structural report for a valid presentation."""
    base = validate(g)
    if not base.valid:
        return base
    cof, cex = is_cofinal(g, direct_bound)
    condl, condl_wit = condition_L(g)
    simp, prov = simplicity_status(g, assume_aperiodic, direct_bound)
    return StructuralReport(
        commuting=True,
        no_sources=True,
        cofinal=cof,
        cofinal_counterexample=cex,
        strongly_connected=is_strongly_connected(g),
        full_degree_cycle=full_degree_cycle(g),
        condition_L=condl,
        condition_L_witness=condl_wit,
        simplicity=simp,
        simplicity_provenance=prov,
        nontrivial_saturated_hereditary=cex,
    )


@dataclass(frozen=True)
class RayPresentation:
    """Graded, eventually periodic presentation of an infinite bridge graph.

    Levels 0 .. L-1 are listed, with L = prefix_length + period; blocks at
    level l map level l (rows, ranges) to level l+1 (columns, sources), and
    beyond the listed window the blocks repeat with the given period, so the
    block following level L-1 is the one at level prefix_length.
    """

    k: int
    level_sizes: tuple[int, ...]
    blocks: tuple[tuple[Matrix, ...], ...]
    prefix_length: int
    period: int

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise PresentationError("k must be a positive integer")
        for name, val in (("prefix_length", self.prefix_length), ("period", self.period)):
            if isinstance(val, bool) or not isinstance(val, int):
                raise PresentationError(f"{name} must be an integer")
        if self.prefix_length < 0:
            raise PresentationError("prefix_length must be non-negative")
        if self.period < 1:
            raise PresentationError("period must be at least 1")
        object.__setattr__(self, "level_sizes", tuple(self.level_sizes))
        levels = self.prefix_length + self.period
        if len(self.level_sizes) != levels:
            raise PresentationError(
                f"expected {levels} level sizes (prefix {self.prefix_length} "
                f"plus period {self.period}), got {len(self.level_sizes)}"
            )
        for l, size in enumerate(self.level_sizes):
            if isinstance(size, bool) or not isinstance(size, int) or size < 1:
                raise PresentationError(f"level {l} size must be a positive integer")
        blocks = tuple(tuple(linalg.freeze(b) for b in color) for color in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if len(blocks) != self.k:
            raise PresentationError(
                f"expected block lists for {self.k} colors, got {len(blocks)}"
            )
        for i, color in enumerate(blocks):
            if len(color) != levels:
                raise PresentationError(
                    f"color {i + 1} lists {len(color)} blocks, expected {levels}"
                )
            for l, block in enumerate(color):
                rows = self.level_sizes[l]
                cols = self.level_size(l + 1)
                if len(block) != rows:
                    raise PresentationError(
                        f"color {i + 1} block at level {l} has {len(block)} rows, "
                        f"expected {rows}"
                    )
                for r, row in enumerate(block):
                    if len(row) != cols:
                        raise PresentationError(
                            f"color {i + 1} block at level {l} row {r} has "
                            f"{len(row)} entries, expected {cols}"
                        )
                    for c, value in enumerate(row):
                        _check_entry(
                            value,
                            f"color {i + 1} block at level {l} entry ({r}, {c})",
                        )

    @property
    def levels(self) -> int:
        return self.prefix_length + self.period

    def level_size(self, l: int) -> int:
        if l < self.levels:
            return self.level_sizes[l]
        return self.level_sizes[self.prefix_length + (l - self.prefix_length) % self.period]

    def block(self, i: int, l: int) -> Matrix:
        if l < self.levels:
            return self.blocks[i][l]
        return self.blocks[i][self.prefix_length + (l - self.prefix_length) % self.period]


@dataclass(frozen=True)
class RayReport:
    commuting: bool
    no_sources: bool
    cofinal: Tri
    commuting_failure: tuple[int, int, int] | None = None
    source_failure: tuple[int, int, int] | None = None

    @property
    def valid(self) -> bool:
        return self.commuting and self.no_sources


def validate_ray(r: RayPresentation) -> RayReport:
    """Graded commutation, no-sources, and a sufficient cofinality check.

    Commutation B_i(l) B_j(l+1) = B_j(l) B_i(l+1) is checked for every level
    of the listed window, including the wrap from the last listed level back
    into the period. Cofinality is only certified by the sufficient
    condition that every block entry is strictly positive; otherwise it is
    reported Unknown.
    """
    commuting = True
    commuting_failure = None
    for l in range(r.levels):
        for i in range(r.k):
            for j in range(i + 1, r.k):
                left = linalg.mat_mul(r.block(i, l), r.block(j, l + 1))
                right = linalg.mat_mul(r.block(j, l), r.block(i, l + 1))
                if left != right:
                    if commuting:
                        commuting_failure = (i + 1, j + 1, l)
                    commuting = False
    no_sources = True
    source_failure = None
    for i in range(r.k):
        for l in range(r.levels):
            for row_idx, row in enumerate(r.block(i, l)):
                if not any(row):
                    if no_sources:
                        source_failure = (i + 1, l, row_idx)
                    no_sources = False
    all_positive = all(
        value > 0
        for i in range(r.k)
        for l in range(r.levels)
        for row in r.block(i, l)
        for value in row
    )
    return RayReport(
        commuting=commuting,
        no_sources=no_sources,
        cofinal=Tri.YES if all_positive else Tri.UNKNOWN,
        commuting_failure=commuting_failure,
        source_failure=source_failure,
    )


def require_valid_ray(r: RayPresentation) -> RayReport:
    report = validate_ray(r)
    if not report.commuting:
        i, j, l = report.commuting_failure
        raise PresentationError(
            f"graded commutation fails for colors {i} and {j} at level {l}"
        )
    if not report.no_sources:
        i, l, row = report.source_failure
        raise PresentationError(
            f"color {i} block at level {l} has a zero row (index {row})"
        )
    return report
