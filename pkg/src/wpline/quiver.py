"""Quivers without loops or 2-cycles, their mutation, isomorphism and search.

Two independent mutation implementations are kept deliberately: the
skew-symmetric exchange-matrix formula and the literal three-step graph
rewriting (compose paths through the vertex, reverse incident arrows, cancel
2-cycles).  The test suite cross-checks them on fixtures and on a thousand
random quivers.

Isomorphism is exact multigraph isomorphism ignoring labels, by backtracking
over degree-compatible assignments.  The canonical key used to deduplicate
breadth-first search states is the lexicographically least adjacency matrix
over all permutations compatible with an iterated degree-refinement
colouring; the colouring is isomorphism-invariant, so equal keys mean
isomorphic quivers and conversely.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass


@dataclass(frozen=True)
class Quiver:
    """Vertices with ids and labels; `mult[i][j]` arrows from slot i to slot j."""

    vertices: tuple[tuple[int, str], ...]
    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.vertices)
        ids = [v for v, _ in self.vertices]
        if len(set(ids)) != n:
            raise ValueError("duplicate vertex ids")
        if len(self.mult) != n or any(len(row) != n for row in self.mult):
            raise ValueError("multiplicity matrix shape does not match vertices")
        for i in range(n):
            if self.mult[i][i] != 0:
                raise ValueError(f"loop at vertex id {ids[i]}")
            for j in range(n):
                if self.mult[i][j] < 0:
                    raise ValueError("negative arrow multiplicity")
                if i < j and self.mult[i][j] and self.mult[j][i]:
                    raise ValueError(f"2-cycle between vertex ids {ids[i]} and {ids[j]}")

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_arrows(
        cls,
        vertices: list[tuple[int, str]],
        arrows: list[tuple[int, int]] | list[tuple[int, int, int]],
    ) -> "Quiver":
        index = {v: k for k, (v, _) in enumerate(vertices)}
        n = len(vertices)
        m = [[0] * n for _ in range(n)]
        for arrow in arrows:
            src, dst, *rest = arrow
            mult = rest[0] if rest else 1
            m[index[src]][index[dst]] += mult
        return cls(tuple(vertices), tuple(tuple(row) for row in m))

    # -- basic data -----------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.vertices)

    def slot(self, vertex_id: int) -> int:
        for k, (v, _) in enumerate(self.vertices):
            if v == vertex_id:
                return k
        raise KeyError(f"unknown vertex id {vertex_id}")

    def label(self, vertex_id: int) -> str:
        return self.vertices[self.slot(vertex_id)][1]

    def exchange_matrix(self) -> tuple[tuple[int, ...], ...]:
        """b[i][j] = mult[i][j] - mult[j][i]; skew-symmetric."""
        n = self.n
        return tuple(
            tuple(self.mult[i][j] - self.mult[j][i] for j in range(n)) for i in range(n)
        )

    def arrows(self) -> list[tuple[int, int, int]]:
        out = []
        for i, (vi, _) in enumerate(self.vertices):
            for j, (vj, _) in enumerate(self.vertices):
                if self.mult[i][j]:
                    out.append((vi, vj, self.mult[i][j]))
        return sorted(out)

    def arrow_count(self) -> int:
        return sum(sum(row) for row in self.mult)

    # -- JSON schema ------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vertices": [{"id": v, "label": lab} for v, lab in self.vertices],
            "arrows": [
                {"from": a, "to": b, "mult": m} for a, b, m in self.arrows()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Quiver":
        if not isinstance(data, dict):
            raise ValueError("quiver JSON must be an object")
        try:
            vertices = [(int(v["id"]), str(v.get("label", ""))) for v in data["vertices"]]
            arrows = [
                (int(a["from"]), int(a["to"]), int(a.get("mult", 1)))
                for a in data["arrows"]
            ]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed quiver JSON: {exc}") from exc
        known = {v for v, _ in vertices}
        for a, b, _ in arrows:
            if a not in known or b not in known:
                raise ValueError(f"arrow endpoint {a}->{b} references an unknown vertex")
        return cls.from_arrows(vertices, arrows)


# -- mutation ------------------------------------------------------------------


def mutate(q: Quiver, vertex_id: int) -> Quiver:
    """Exchange-matrix mutation at a vertex; involutive, invariant-preserving."""
    k = q.slot(vertex_id)
    b = q.exchange_matrix()
    n = q.n
    new_b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                new_b[i][j] = -b[i][j]
            else:
                bik, bkj = b[i][k], b[k][j]
                new_b[i][j] = b[i][j] + (abs(bik) * bkj + bik * abs(bkj)) // 2
    mult = tuple(tuple(max(v, 0) for v in row) for row in new_b)
    return Quiver(q.vertices, mult)


def mutate_via_rules(q: Quiver, vertex_id: int) -> Quiver:
    """Graph-rewriting mutation: compose through the vertex, reverse, cancel.

    For every path j -> k -> l through the mutated vertex k, add mult(j,k)
    times mult(k,l) arrows j -> l; reverse all arrows at k; then remove a
    maximal family of 2-cycles.  Independent of `mutate` by construction.
    """
    k = q.slot(vertex_id)
    n = q.n
    m = [list(row) for row in q.mult]
    for j in range(n):
        for l in range(n):
            if j != k and l != k and j != l:
                m[j][l] += q.mult[j][k] * q.mult[k][l]
    for t in range(n):
        m[k][t], m[t][k] = m[t][k], m[k][t]
    for i in range(n):
        for j in range(i + 1, n):
            cancel = min(m[i][j], m[j][i])
            if cancel:
                m[i][j] -= cancel
                m[j][i] -= cancel
    return Quiver(q.vertices, tuple(tuple(row) for row in m))


def apply_sequence(q: Quiver, seq: list[int]) -> Quiver:
    for v in seq:
        q = mutate(q, v)
    return q


# -- isomorphism -----------------------------------------------------------------


def _degree_colours(q: Quiver, rounds: int | None = None) -> list[tuple]:
    """Iterated degree refinement; colours are isomorphism-invariant."""
    n = q.n
    colours: list[tuple] = [
        (
            tuple(sorted(q.mult[i][j] for j in range(n) if q.mult[i][j])),
            tuple(sorted(q.mult[j][i] for j in range(n) if q.mult[j][i])),
        )
        for i in range(n)
    ]
    for _ in range(rounds if rounds is not None else n):
        refined = [
            (
                colours[i],
                tuple(sorted((q.mult[i][j], colours[j]) for j in range(n) if q.mult[i][j])),
                tuple(sorted((q.mult[j][i], colours[j]) for j in range(n) if q.mult[j][i])),
            )
            for i in range(n)
        ]
        if len(set(refined)) == len(set(colours)):
            colours = refined
            break
        colours = refined
    return colours


def is_isomorphic(q1: Quiver, q2: Quiver) -> dict[int, int] | None:
    """Exact multigraph isomorphism ignoring labels; returns an id bijection."""
    if q1.n != q2.n or q1.arrow_count() != q2.arrow_count():
        return None
    c1 = _degree_colours(q1)
    c2 = _degree_colours(q2)
    if sorted(c1) != sorted(c2):
        return None
    n = q1.n
    candidates = [[j for j in range(n) if c2[j] == c1[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: len(candidates[i]))
    assignment: dict[int, int] = {}
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        i = order[pos]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for i2, j2 in assignment.items():
                if q1.mult[i][i2] != q2.mult[j][j2] or q1.mult[i2][i] != q2.mult[j2][j]:
                    ok = False
                    break
            if ok:
                assignment[i] = j
                used[j] = True
                if extend(pos + 1):
                    return True
                del assignment[i]
                used[j] = False
        return False

    if not extend(0):
        return None
    return {q1.ids[i]: q2.ids[j] for i, j in assignment.items()}


_CANONICAL_PERM_CAP = 400_000


def canonical_key(q: Quiver) -> tuple:
    """Hashable key equal exactly on isomorphic quivers.

    Vertices are partitioned by refined colours; positions are allotted to
    colour classes in sorted colour order, and the adjacency matrix is
    minimized over class-respecting permutations.  Any isomorphism maps
    colour classes onto colour classes, so the minimum is invariant, and the
    minimized matrix reconstructs the quiver up to isomorphism.
    """
    colours = _degree_colours(q)
    classes: dict[tuple, list[int]] = {}
    for i, col in enumerate(colours):
        classes.setdefault(col, []).append(i)
    ordered = [classes[col] for col in sorted(classes)]
    total = 1
    for cl in ordered:
        for f in range(2, len(cl) + 1):
            total *= f
        if total > _CANONICAL_PERM_CAP:
            raise ValueError("quiver too symmetric for canonical-form search")
    signature = tuple(sorted((col, len(cls_)) for col, cls_ in classes.items()))
    best: tuple | None = None
    for perm_parts in itertools.product(*(itertools.permutations(cl) for cl in ordered)):
        perm = [i for part in perm_parts for i in part]
        matrix = tuple(tuple(q.mult[a][b] for b in perm) for a in perm)
        if best is None or matrix < best:
            best = matrix
    return (signature, best)


# -- breadth-first search over the mutation class ----------------------------------


def search(qs: Quiver, qt: Quiver, max_depth: int) -> list[int] | None:
    """Shortest mutation sequence from qs to something isomorphic to qt.

    States are deduplicated by canonical key, so the walk ranges over the
    mutation class modulo isomorphism.  Vertices are tried in ascending id
    order, which makes the returned sequence the lexicographically least
    among the shortest ones.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    target = canonical_key(qt)
    start_key = canonical_key(qs)
    if start_key == target:
        return []
    seen = {start_key}
    frontier: deque[tuple[Quiver, list[int], int]] = deque([(qs, [], 0)])
    vertex_order = sorted(qs.ids)
    while frontier:
        quiver, seq, depth = frontier.popleft()
        if depth >= max_depth:
            continue
        for v in vertex_order:
            nxt = mutate(quiver, v)
            key = canonical_key(nxt)
            if key in seen:
                continue
            path = seq + [v]
            if key == target:
                return path
            seen.add(key)
            frontier.append((nxt, path, depth + 1))
    return None
