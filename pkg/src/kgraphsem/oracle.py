"""Bounded brute-force model of the type semigroup, with replayable proofs.

The semigroup identifies vertex vectors x and y when some pair of shifts
matches them (A^t_p x = A^t_q y) and closes that relation under addition.
This module computes the restriction of that congruence to a finite box
{f : f(v) <= N}, bounding the shift degrees by M. The truncation loses
completeness in one direction only: every merge the table performs is
backed by a chain of exact identities (and can be replayed), while vectors
the table keeps apart may still be identified outside the box. All queries
are therefore sound-or-Unknown, never falsely negative in the "merged"
direction.

Determinism: vectors are ranked with the first vertex least significant,
degree vectors scan in lexicographic order, and all sweeps follow rank
order, so a table build is reproducible bit for bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import classify, linalg, model
from .errors import InternalCheckError, PresentationError, ResourceLimitError
from .model import KGraphPresentation, Tri


@dataclass(frozen=True)
class Box:
    """Finite window: entries bounded by max_entry, degrees by max_degree."""

    max_entry: int = 6
    max_degree: int = 4

    def __post_init__(self):
        for name in ("max_entry", "max_degree"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise PresentationError(f"{name} must be a positive integer")


def _degrees(k: int, bound: int):
    return list(itertools.product(range(bound + 1), repeat=k))


def _shift(mat: linalg.Matrix, x: tuple[int, ...]) -> tuple[int, ...]:
    # (M^t x)(u) = sum over w of M[w][u] x(w)
    return tuple(
        sum(mat[w][u] * x[w] for w in range(len(x))) for u in range(len(x))
    )


def _images(g: KGraphPresentation, x: tuple[int, ...], degrees):
    # shift images A^t_p x for every p in the list, by dynamic programming
    # over the degree lattice (degrees must be downward closed and in lex
    # order, so each predecessor is already present)
    img = {}
    for p in degrees:
        if not any(p):
            img[p] = x
            continue
        i = next(idx for idx, c in enumerate(p) if c > 0)
        prev = img[tuple(c - (1 if idx == i else 0) for idx, c in enumerate(p))]
        img[p] = _shift(g.matrices[i], prev)
    return img


def sim_related(g: KGraphPresentation, x, y, max_degree: int):
    """Least (p, q) with A^t_p x = A^t_q y and coordinates <= max_degree.

    "Least" is lexicographic on the concatenation of p and q. Returns None
    when no pair within the bound matches; that is not a proof of
    inequivalence, only of absence within the bound.
    """
    model.require_valid(g)
    x = _check_vector(g, x)
    y = _check_vector(g, y)
    degrees = _degrees(g.k, max_degree)
    ix = _images(g, x, degrees)
    iy = _images(g, y, degrees)
    for p in degrees:
        for q in degrees:
            if ix[p] == iy[q]:
                return p, q
    return None


def _check_vector(g: KGraphPresentation, x) -> tuple[int, ...]:
    x = tuple(x)
    if len(x) != g.size:
        raise PresentationError(
            f"vector has {len(x)} entries for {g.size} vertices"
        )
    for v, val in zip(g.vertices, x):
        if isinstance(val, bool) or not isinstance(val, int) or val < 0:
            raise PresentationError(f"vector entry at {v!r} is not a natural")
    return x


class ClassTable:
    """Union-find over the box universe, saturated under Sim and Add moves.

    Every union is recorded as an edge carrying its move:
      ("sim", p, q): the endpoint vectors satisfy A^t_p a = A^t_q b exactly;
      ("add", z):    the endpoints are a = a0 + z, b = b0 + z for a pair
                     (a0, b0) already merged when the edge was recorded.
    Edges are timestamped by position, so verify_all can replay the entire
    construction and confirm each add edge cites only earlier history.
    """

    def __init__(self, g: KGraphPresentation, box: Box, universe_cap: int):
        self.g = g
        self.box = box
        self.base = box.max_entry + 1
        size = 1
        for _ in range(g.size):
            size *= self.base
            if size > universe_cap:
                raise ResourceLimitError(
                    f"box universe exceeds the cap of {universe_cap} vectors"
                )
        self.universe_size = size
        self._parent = list(range(size))
        self._edges: list[tuple[int, int, tuple]] = []
        self._adj: dict[int, list[tuple[int, int]]] | None = None

    # plain union-find; the proof forest lives in _edges, not in _parent
    def _find(self, a: int) -> int:
        p = self._parent
        root = a
        while p[root] != root:
            root = p[root]
        while p[a] != root:
            p[a], a = root, p[a]
        return root

    def _union(self, a: int, b: int, move: tuple) -> bool:
        ra, rb = self._find(a), self._find(b)
        if ra == rb:
            return False
        self._parent[max(ra, rb)] = min(ra, rb)
        self._edges.append((a, b, move))
        return True

    def vector_at(self, rank: int) -> tuple[int, ...]:
        if not 0 <= rank < self.universe_size:
            raise PresentationError(f"rank {rank} outside the universe")
        out = []
        for _ in range(self.g.size):
            out.append(rank % self.base)
            rank //= self.base
        return tuple(out)

    def rank_of(self, x) -> int:
        x = _check_vector(self.g, x)
        rank = 0
        for val in reversed(x):
            if val > self.box.max_entry:
                raise PresentationError(
                    f"vector {x} lies outside the box (entry {val} > "
                    f"{self.box.max_entry})"
                )
            rank = rank * self.base + val
        return rank

    def contains(self, x) -> bool:
        x = _check_vector(self.g, x)
        return all(val <= self.box.max_entry for val in x)

    def same_class(self, x, y) -> bool:
        return self._find(self.rank_of(x)) == self._find(self.rank_of(y))

    def classes(self) -> tuple[tuple[int, ...], ...]:
        """All classes as sorted rank tuples, ordered by smallest member."""
        groups: dict[int, list[int]] = {}
        for r in range(self.universe_size):
            groups.setdefault(self._find(r), []).append(r)
        return tuple(
            tuple(members) for _, members in sorted(groups.items())
        )

    def class_count(self) -> int:
        return sum(1 for r in range(self.universe_size) if self._find(r) == r)

    def witness_chain(self, x, y) -> list[tuple]:
        """Oriented move chain from x to y, re-verified step by step.

        Each step is (from_vector, to_vector, move) with the move oriented
        along the chain; sim moves swap (p, q) when walked backwards.
        """
        a, b = self.rank_of(x), self.rank_of(y)
        if self._find(a) != self._find(b):
            raise PresentationError("vectors are not table-equal")
        if a == b:
            return []
        if self._adj is None:
            adj: dict[int, list[tuple[int, int]]] = {}
            for idx, (u, w, _) in enumerate(self._edges):
                adj.setdefault(u, []).append((w, idx))
                adj.setdefault(w, []).append((u, idx))
            self._adj = adj
        prev: dict[int, tuple[int, int]] = {a: (-1, -1)}
        frontier = [a]
        while frontier and b not in prev:
            nxt = []
            for u in frontier:
                for w, idx in self._adj.get(u, ()):
                    if w not in prev:
                        prev[w] = (u, idx)
                        nxt.append(w)
            frontier = nxt
        if b not in prev:
            raise InternalCheckError("proof forest is missing a recorded merge")
        path = []
        cur = b
        while cur != a:
            u, idx = prev[cur]
            path.append((u, cur, idx))
            cur = u
        path.reverse()
        chain = []
        for u, w, idx in path:
            ea, eb, move = self._edges[idx]
            vu, vw = self.vector_at(u), self.vector_at(w)
            if move[0] == "sim":
                p, q = move[1], move[2]
                if u != ea:
                    p, q = q, p
                if self._apply(p, vu) != self._apply(q, vw):
                    raise InternalCheckError("sim step fails to replay")
                chain.append((vu, vw, ("sim", p, q)))
            else:
                z = move[1]
                au = linalg.vec_sub(vu, z)
                aw = linalg.vec_sub(vw, z)
                if min(au) < 0 or min(aw) < 0 or not self.same_class(au, aw):
                    raise InternalCheckError("add step fails to replay")
                chain.append((vu, vw, ("add", z)))
        return chain

    def _apply(self, p, x):
        for i, c in enumerate(p):
            for _ in range(c):
                x = _shift(self.g.matrices[i], x)
        return x

    def verify_all(self) -> None:
        """Replay the entire build in timestamp order on a fresh union-find.

        Sim edges must recheck as exact shift identities; add edges must
        cite a pair already connected by earlier edges alone. The replayed
        partition must match the live one exactly.
        """
        parent = list(range(self.universe_size))

        def find(a):
            root = a
            while parent[root] != root:
                root = parent[root]
            while parent[a] != root:
                parent[a], a = root, parent[a]
            return root

        for a, b, move in self._edges:
            va, vb = self.vector_at(a), self.vector_at(b)
            if move[0] == "sim":
                if self._apply(move[1], va) != self._apply(move[2], vb):
                    raise InternalCheckError("recorded sim move is not an identity")
            else:
                z = move[1]
                ya = linalg.vec_sub(va, z)
                yb = linalg.vec_sub(vb, z)
                if min(ya) < 0 or min(yb) < 0:
                    raise InternalCheckError("recorded add move leaves the box")
                if find(self.rank_of(ya)) != find(self.rank_of(yb)):
                    raise InternalCheckError(
                        "recorded add move cites a pair not yet merged"
                    )
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        live_root = {}
        for r in range(self.universe_size):
            lr, vr = self._find(r), find(r)
            if lr in live_root:
                if live_root[lr] != vr:
                    raise InternalCheckError("replayed partition differs from table")
            else:
                live_root[lr] = vr
        if len(set(live_root.values())) != len(live_root):
            raise InternalCheckError("replayed partition differs from table")


def build_class_table(
    g: KGraphPresentation, box: Box = Box(), universe_cap: int = 2_000_000
) -> ClassTable:
    """Saturate the box under Sim moves, then under in-box Add moves.

    Sim phase: every vector's shift images for all degrees up to the bound
    are bucketed; vectors meeting in a bucket are merged with the witnessing
    degree pair. The relation is a property of the vectors alone, so one
    pass is complete for the bound.

    Add phase: unit vectors suffice, because the box is downward closed
    (x + z in the box forces every intermediate x + z' with z' <= z into
    the box, and z is a sum of units). Per class and per vertex, the least
    member acts as anchor and every other member merges against it shifted
    by one unit; passes repeat until nothing changes.
    """
    model.require_valid(g)
    table = ClassTable(g, box, universe_cap)
    degrees = _degrees(g.k, box.max_degree)
    buckets: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}
    for rank in range(table.universe_size):
        vec = table.vector_at(rank)
        img = _images(g, vec, degrees)
        for p in degrees:
            key = img[p]
            if key in buckets:
                owner, owner_p = buckets[key]
                if owner != rank:
                    table._union(rank, owner, ("sim", p, owner_p))
            else:
                buckets[key] = (rank, p)
    del buckets
    n = g.size
    while True:
        changed = False
        for v in range(n):
            step = table.base ** v
            anchor: dict[int, int] = {}
            for rank in range(table.universe_size):
                if (rank // step) % table.base >= table.box.max_entry:
                    continue  # no headroom at v
                root = table._find(rank)
                if root not in anchor:
                    anchor[root] = rank
                    continue
                a = anchor[root]
                z = tuple(1 if j == v else 0 for j in range(n))
                if table._union(a + step, rank + step, ("add", z)):
                    changed = True
        if not changed:
            break
    return table


def approx_le(g: KGraphPresentation, table: ClassTable, x, y):
    """Order probe: least x' in the box with x + x' table-equal to y.

    Returns the witness vector or None. None means no witness inside the
    box, not a disproof of the inequality.
    """
    x = _check_vector(g, x)
    y = _check_vector(g, y)
    if not table.contains(x) or not table.contains(y):
        raise PresentationError("order probe arguments must lie in the box")
    ry = table._find(table.rank_of(y))
    for rank in range(table.universe_size):
        xp = table.vector_at(rank)
        s = linalg.vec_add(x, xp)
        if any(val > table.box.max_entry for val in s):
            continue
        if table._find(table.rank_of(s)) == ry:
            return xp
    return None


def detect_properly_infinite(g: KGraphPresentation, table: ClassTable, x):
    """Probe for 2x <= x; the definition of a properly infinite class.

    Returns the order witness or None (Unknown). When 2x leaves the box the
    probe cannot run and the answer is None as well.
    """
    x = _check_vector(g, x)
    if not any(x):
        raise PresentationError("proper infiniteness concerns nonzero classes")
    if not table.contains(x):
        raise PresentationError("probe argument must lie in the box")
    two_x = linalg.vec_add(x, x)
    if any(val > table.box.max_entry for val in two_x):
        return None
    return approx_le(g, table, two_x, x)


@dataclass(frozen=True)
class ConicalAudit:
    passed: bool
    offender: tuple[int, ...] | None = None


def conical_audit(table: ClassTable) -> ConicalAudit:
    """Check that the zero class is the singleton {0}.

    This is the sharpest form of conicality visible to the table: it rules
    out any nonzero x, y with x + y table-equal to zero. A failure is
    reported, not raised; it would indicate a table bug, and tests assert
    it never occurs.
    """
    zero_root = table._find(0)
    for rank in range(1, table.universe_size):
        if table._find(rank) == zero_root:
            return ConicalAudit(passed=False, offender=table.vector_at(rank))
    return ConicalAudit(passed=True)


def refinement_search(
    g: KGraphPresentation,
    table: ClassTable,
    a,
    b,
    c,
    d,
    budget: int = 200_000,
):
    """Search for a refinement matrix of a + b = c + d over table classes.

    Returns (x, y, z, t) with a = x + y, b = z + t, c = x + z, d = y + t,
    all equalities as table classes, or None when the budget runs out.
    Diagonal solutions are tried first, then a rank-ordered search.
    """
    vecs = [_check_vector(g, v) for v in (a, b, c, d)]
    a, b, c, d = vecs
    for v in vecs:
        if not table.contains(v):
            raise PresentationError("refinement arguments must lie in the box")
    ab = linalg.vec_add(a, b)
    cd = linalg.vec_add(c, d)
    if not table.contains(ab) or not table.same_class(ab, cd):
        raise PresentationError(
            "refinement needs a + b and c + d table-equal inside the box"
        )
    zero = (0,) * g.size
    if table.same_class(a, c) and table.same_class(b, d):
        return a, zero, zero, b
    if table.same_class(a, d) and table.same_class(b, c):
        return zero, a, b, zero
    spent = 0
    in_box = table.contains
    for rx in range(table.universe_size):
        x = table.vector_at(rx)
        for ry in range(table.universe_size):
            y = table.vector_at(ry)
            spent += 1
            if spent > budget:
                return None
            s = linalg.vec_add(x, y)
            if not in_box(s) or not table.same_class(s, a):
                continue
            for rz in range(table.universe_size):
                z = table.vector_at(rz)
                spent += 1
                if spent > budget:
                    return None
                xz = linalg.vec_add(x, z)
                if not in_box(xz) or not table.same_class(xz, c):
                    continue
                for rt in range(table.universe_size):
                    t = table.vector_at(rt)
                    spent += 1
                    if spent > budget:
                        return None
                    zt = linalg.vec_add(z, t)
                    yt = linalg.vec_add(y, t)
                    if not in_box(zt) or not in_box(yt):
                        continue
                    if table.same_class(zt, b) and table.same_class(yt, d):
                        return x, y, z, t
    return None


@dataclass(frozen=True)
class OracleCrossCheck:
    status: str  # "consistent" or "box-too-small"
    mode: str  # "properly-infinite-probes" or "level-structure"
    details: tuple[str, ...]


def oracle_cross_check(
    g: KGraphPresentation, box: Box = Box(), universe_cap: int = 2_000_000
) -> OracleCrossCheck:
    """Confront the closed-form verdict with brute-force evidence.

    Purely infinite verdicts must be witnessed by 2x <= x for every unit
    vector class, or the box is reported too small. Stably finite verdicts
    (always a copy of the naturals here) must see the reduced component's
    classes coincide with its l1-norm levels; a class mixing two norms
    would refute the verdict and raises, a split level only means the
    degree bound was too small. The zero class is audited along the way.
    """
    model.require_valid(g)
    cof, _ = model.is_cofinal(g)
    if cof is not Tri.YES:
        raise PresentationError("cross-check applies to cofinal presentations")
    verdict = classify.classify_semigroup(g)
    if verdict.verdict is classify.SemigroupVerdictKind.PURELY_INFINITE:
        table = build_class_table(g, box, universe_cap)
        audit = conical_audit(table)
        if not audit.passed:
            raise InternalCheckError(
                f"zero class contains {audit.offender}; table construction bug"
            )
        details = []
        missing = 0
        for v in range(g.size):
            unit = tuple(1 if j == v else 0 for j in range(g.size))
            witness = detect_properly_infinite(g, table, unit)
            if witness is None:
                missing += 1
                details.append(
                    f"no in-box witness that the class of the unit at "
                    f"{g.vertices[v]!r} is properly infinite"
                )
            else:
                details.append(
                    f"unit at {g.vertices[v]!r}: properly infinite with "
                    f"order witness {witness}"
                )
        return OracleCrossCheck(
            status="box-too-small" if missing else "consistent",
            mode="properly-infinite-probes",
            details=tuple(details),
        )
    if verdict.verdict is not classify.SemigroupVerdictKind.STABLY_FINITE:
        raise InternalCheckError("cofinal classification returned no verdict")
    v, _ = model.full_degree_cycle(g)
    reduced = model.restrict(g, model.hereditary_closure(g, (v,)))
    table = build_class_table(reduced, box, universe_cap)
    audit = conical_audit(table)
    if not audit.passed:
        raise InternalCheckError(
            f"zero class contains {audit.offender}; table construction bug"
        )
    per_level: dict[int, int] = {}
    for cls in table.classes():
        norms = {sum(table.vector_at(r)) for r in cls}
        if len(norms) > 1:
            raise InternalCheckError(
                "a table class mixes two l1 norms on a one-edge-per-color "
                "reduction; this refutes the stably finite verdict"
            )
        norm = norms.pop()
        per_level[norm] = per_level.get(norm, 0) + 1
    split = [lvl for lvl, count in sorted(per_level.items()) if count > 1]
    if split:
        return OracleCrossCheck(
            status="box-too-small",
            mode="level-structure",
            details=tuple(
                f"l1 level {lvl} splits into {per_level[lvl]} classes"
                for lvl in split
            ),
        )
    return OracleCrossCheck(
        status="consistent",
        mode="level-structure",
        details=(
            f"classes on the reduction to {reduced.vertices} are exactly "
            f"the l1 levels 0..{reduced.size * box.max_entry}",
        ),
    )
