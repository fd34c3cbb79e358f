"""Power-residue Cayley graphs GP(k, q) on the additive group of GF(q).

The connection set is the subgroup of nonzero k-th powers, so there is an
arc u -> v exactly when v - u is a k-th power. Adjacency stays implicit
(a membership test through the discrete log); only the numeric eigenvalue
oracle ever materializes a matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fields import FieldElement, FiniteField
from .numbertheory import divisors, v2


class GPGraph:
    """The graph GP(k, q): vertices GF(q), arcs u -> v iff v - u is a k-th power."""

    def __init__(self, field: FiniteField, k_raw: int):
        if k_raw < 1:
            raise ValueError(f"k = {k_raw} must be positive")
        q = field.q
        k = math.gcd(k_raw, q - 1)
        n = (q - 1) // k
        connection = tuple(field.power_residue_indices(k))
        assert len(connection) == n

        # the valuation rule and membership of -1 must agree on directedness
        directed_by_valuation = q % 2 == 1 and v2(k) == v2(q - 1) > 0
        minus_one = field.index_neg(1)
        directed_by_membership = minus_one not in set(connection)
        assert directed_by_valuation == directed_by_membership

        self.field = field
        self.k_raw = k_raw
        self.k = k
        self.n = n
        self.connection = connection
        self.connection_set = frozenset(connection)
        self.directed = directed_by_valuation

        if self.directed:
            neg = {field.index_neg(r) for r in connection}
            assert not (neg & self.connection_set), "directed connection sets are antisymmetric"

        self._components: ComponentDecomposition | None = None
        self._components_bfs_checked = False
        self._spectrum = None  # filled lazily by spectra.spectrum

    def connection_elements(self) -> list[FieldElement]:
        return [FieldElement(self.field, i) for i in self.connection]

    def has_arc(self, u, v) -> bool:
        ui = self.field.element(u).index
        vi = self.field.element(v).index
        diff = self.field.index_sub(vi, ui)
        return diff != 0 and self.field.log[diff] % self.k == 0

    def symmetric_connection(self) -> tuple[int, ...]:
        """Connection set of the underlying undirected graph (k-th powers and their negatives)."""
        if not self.directed:
            return self.connection
        sym = set(self.connection)
        sym.update(self.field.index_neg(r) for r in self.connection)
        return tuple(sorted(sym))

    def __repr__(self):
        shape = "directed" if self.directed else "undirected"
        return f"GPGraph(k={self.k}, q={self.field.q}, n={self.n}, {shape})"


def build_graph(field: FiniteField, k_raw: int) -> GPGraph:
    return GPGraph(field, k_raw)


# ---------------------------------------------------------------------------
# traversal helpers

def bfs_distances(field: FiniteField, connection, root: int = 0) -> np.ndarray:
    """BFS distances from a root over arcs u -> u + r, r in connection; -1 if unreached."""
    q = field.q
    conn = np.asarray(connection, dtype=np.int64)
    dist = np.full(q, -1, dtype=np.int64)
    dist[root] = 0
    frontier = np.array([root], dtype=np.int64)
    d = 0
    while frontier.size:
        nbrs = np.unique(field.add_outer(frontier, conn).ravel())
        nbrs = nbrs[dist[nbrs] < 0]
        d += 1
        dist[nbrs] = d
        frontier = nbrs
    return dist


def _component_labels(graph: GPGraph) -> tuple[np.ndarray, list[int]]:
    """Weak-component label per vertex plus one root per component."""
    field = graph.field
    sym = graph.symmetric_connection()
    labels = np.full(field.q, -1, dtype=np.int64)
    roots = []
    for start in range(field.q):
        if labels[start] >= 0:
            continue
        dist = bfs_distances(field, sym, root=start)
        members = dist >= 0
        assert not (members & (labels >= 0)).any()
        labels[members] = len(roots)
        roots.append(start)
    return labels, roots


@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components: `count` copies of GP(component_k, component_q)."""

    a: int               # ord of p modulo n; the graph is connected iff a = m
    count: int           # p^(m - a)
    component_k: int     # (p^a - 1) / n
    component_q: int     # p^a


def component_structure(graph: GPGraph) -> ComponentDecomposition:
    """Component structure from the order of p modulo n (no traversal)."""
    if graph._components is not None:
        return graph._components
    field = graph.field
    p, m, n = field.p, field.m, graph.n
    a = 1
    while (p ** a - 1) % n != 0:
        a += 1
    assert a <= m and m % a == 0
    dec = ComponentDecomposition(
        a=a,
        count=p ** (m - a),
        component_k=(p ** a - 1) // n,
        component_q=p ** a,
    )
    graph._components = dec
    return dec


def components(graph: GPGraph) -> ComponentDecomposition:
    """Connected-component structure, cross-checked by an explicit BFS count."""
    dec = component_structure(graph)
    if not graph._components_bfs_checked:
        _, roots = _component_labels(graph)
        assert len(roots) == dec.count, \
            f"BFS found {len(roots)} components, formula says {dec.count}"
        graph._components_bfs_checked = True
    return dec


def symmetrize(graph: GPGraph) -> GPGraph:
    """The underlying undirected graph; for a directed graph this is GP(k/2, q)."""
    if not graph.directed:
        return graph
    half = build_graph(graph.field, graph.k // 2)
    assert set(graph.symmetric_connection()) == half.connection_set
    return half


# ---------------------------------------------------------------------------
# period (gcd of directed cycle lengths)

def _undirected_is_bipartite(graph: GPGraph) -> bool:
    field = graph.field
    conn = np.asarray(graph.connection, dtype=np.int64)
    seen = np.zeros(field.q, dtype=bool)
    for start in range(field.q):
        if seen[start]:
            continue
        dist = bfs_distances(field, graph.connection, root=start)
        members = np.nonzero(dist >= 0)[0]
        seen[members] = True
        color = dist[members] & 1
        ends = field.add_outer(members, conn)
        if (dist[ends] % 2 == color[:, None]).any():
            return False
    return True


def period(graph: GPGraph) -> int:
    """Gcd of directed cycle lengths; undirected graphs count each edge as an arc pair.

    The computation is structural (BFS level differences within strongly
    connected components); the result is asserted against the closed form:
    1 always, except GP(q-1, q) which has period p for odd q and 2 for even q.
    """
    field = graph.field
    q, p = field.q, field.p
    if graph.directed:
        conn = np.asarray(graph.connection, dtype=np.int64)
        back = np.asarray(sorted(field.index_neg(r) for r in graph.connection), dtype=np.int64)
        labels, roots = _component_labels(graph)
        d = 0
        for comp_id, root in enumerate(roots):
            fwd = bfs_distances(field, graph.connection, root=root)
            members = np.nonzero(labels == comp_id)[0]
            assert (fwd[members] >= 0).all(), "component is not strongly connected (forward)"
            bwd = bfs_distances(field, tuple(back), root=root)
            assert (bwd[members] >= 0).all(), "component is not strongly connected (backward)"
            ends = field.add_outer(members, conn)
            diffs = fwd[members][:, None] + 1 - fwd[ends]
            d = int(np.gcd(int(np.gcd.reduce(np.abs(diffs).ravel())), d))
        result = d
        expected = p if graph.k == q - 1 else 1
    else:
        result = 2 if _undirected_is_bipartite(graph) else 1
        expected = 2 if (p == 2 and graph.k == q - 1) else 1
    assert result == expected, f"period {result} disagrees with closed form {expected}"
    return result


# ---------------------------------------------------------------------------
# structural classification

COMPLETE_UNION = "complete-union"
PALEY_UNION = "paley-union"
CYCLE_UNION = "cycle-union"
K2_UNION = "k2-union"
HAMMING = "hamming"
SEMIPRIMITIVE = "semiprimitive"
GENERIC = "generic"


@dataclass(frozen=True)
class StructureLabel:
    kind: str
    copies: int = 1
    part: int | None = None      # vertex count of one component (union kinds)
    directed: bool = False
    hamming_b: int | None = None
    hamming_q: int | None = None
    component_k: int | None = None  # generic disconnected: copies of GP(component_k, part)

    def render(self) -> str:
        if self.kind == COMPLETE_UNION:
            body = f"K({self.part})"
        elif self.kind == PALEY_UNION:
            body = f"{'dP' if self.directed else 'P'}({self.part})"
        elif self.kind == CYCLE_UNION:
            body = f"{'dC' if self.directed else 'C'}({self.part})"
        elif self.kind == K2_UNION:
            body = "K(2)"
        elif self.kind == HAMMING:
            base = f"H({self.hamming_b},{self.hamming_q})"
            return base + (f"=L({self.hamming_q},{self.hamming_q})" if self.hamming_b == 2 else "")
        elif self.kind == GENERIC and self.copies > 1:
            body = f"GP({self.component_k},{self.part})"
        else:
            return self.kind
        return body if self.copies == 1 else f"{self.copies}x{body}"


def classify_structure(graph: GPGraph) -> StructureLabel:
    """First matching label in a fixed precedence order (deterministic reports)."""
    field = graph.field
    q, p, m, k = field.q, field.p, field.m, graph.k
    dec = component_structure(graph)
    pa = p ** dec.a

    if k * (pa - 1) == q - 1:
        return StructureLabel(COMPLETE_UNION, copies=dec.count, part=pa)
    if k * (pa - 1) == 2 * (q - 1):
        return StructureLabel(PALEY_UNION, copies=dec.count, part=pa, directed=graph.directed)
    if q % 2 == 1 and k in (q - 1, (q - 1) // 2):
        return StructureLabel(CYCLE_UNION, copies=q // p, part=p, directed=graph.directed)
    if q % 2 == 0 and k == q - 1:
        return StructureLabel(K2_UNION, copies=q // 2)
    for b in divisors(m):
        if b < 2:
            continue
        q0 = p ** (m // b)
        if k * b * (q0 - 1) == q - 1 and (q - 1) % (q0 - 1) == 0 \
                and ((q - 1) // (q0 - 1)) % b == 0 and dec.count == 1:
            return StructureLabel(HAMMING, hamming_b=b, hamming_q=q0)
    if _is_semiprimitive(p, m, k, q):
        return StructureLabel(SEMIPRIMITIVE)
    return StructureLabel(GENERIC, copies=dec.count, part=pa, directed=graph.directed,
                          component_k=dec.component_k)


def _is_semiprimitive(p: int, m: int, k: int, q: int) -> bool:
    if k == 2:
        return q % 4 == 1
    if k > 2 and m % 2 == 0:
        if k == p ** (m // 2) + 1:
            return False
        return any((p ** t + 1) % k == 0 for t in divisors(m // 2))
    return False
