"""Exact spectra of GP-graphs via additive character sums.

Every eigenvalue of GP(k, q) lies in Z[zeta_p]: the principal one is the
regularity degree n = (q-1)/k and the rest are the k period sums
eta_i = sum of zeta^trace(x) over the coset omega^i * <omega^k>.
The spectrum is assembled exactly, classified exactly, and can be
cross-checked against a dense floating-point eigensolver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .cyclotomic import CyclotomicInteger, ValueClass
from .errors import IndexOutOfRange, NotDirected, SizeBudgetExceeded
from .fields import FiniteField
from .graphs import GPGraph, build_graph, component_structure

ORACLE_SIZE_LIMIT = 512


class Nature(IntEnum):
    """Nature of a whole spectrum; the order is the fixed report sort order."""

    INTEGRAL = 0
    REAL_NONINTEGRAL = 1
    COMPLEX = 2

    def render(self) -> str:
        return {0: "integral", 1: "real-nonintegral", 2: "complex"}[self.value]


@dataclass(frozen=True)
class SpectrumReport:
    q: int
    k: int
    n: int
    eigenvalues: tuple[tuple[CyclotomicInteger, int], ...]  # (value, multiplicity)
    nature: Nature
    mu: int
    principal_multiplicity: int


def _eigen_sort_key(value: CyclotomicInteger):
    z = value.embed()
    return (-round(z.real, 9), round(z.imag, 9), value.coeffs)


def nature_for(p: int, m: int, k: int) -> Nature:
    """Arithmetic nature of GP(k, p^m) from divisibility alone."""
    q = p ** m
    k = math.gcd(k, q - 1)
    if p == 2 or ((q - 1) // (p - 1)) % k == 0:
        return Nature.INTEGRAL
    if ((q - 1) // 2) % k == 0:
        return Nature.REAL_NONINTEGRAL
    return Nature.COMPLEX


def nature_arithmetic(graph: GPGraph) -> Nature:
    return nature_for(graph.field.p, graph.field.m, graph.k)


def _trace_of_exp(field: FiniteField) -> list[int]:
    trace = field.trace_table
    return [trace[idx] for idx in field.exp]


def _coset_period(tr_exp: list[int], p: int, k: int, i: int, q1: int) -> CyclotomicInteger:
    hist = [0] * p
    for e in range(i, q1, k):
        hist[tr_exp[e]] += 1
    return CyclotomicInteger(p, hist)


def gaussian_period(field: FiniteField, k: int, i: int) -> CyclotomicInteger:
    """The period sum over the coset omega^i * <omega^k>, exactly in Z[zeta_p]."""
    if (field.q - 1) % k != 0:
        raise ValueError(f"k = {k} does not divide q - 1 = {field.q - 1}")
    if not 0 <= i < k:
        raise IndexOutOfRange(f"coset index {i} outside [0, {k})")
    return _coset_period(_trace_of_exp(field), field.p, k, i, field.q - 1)


def _nature_from_values(values) -> Nature:
    worst = Nature.INTEGRAL
    for v in values:
        c = v.classify()
        if c is ValueClass.NONREAL:
            return Nature.COMPLEX
        if c is ValueClass.REAL_IRRATIONAL:
            worst = Nature.REAL_NONINTEGRAL
    return worst


def spectrum(graph: GPGraph) -> SpectrumReport:
    """The exact eigenvalue multiset of GP(k, q).

    Connected graphs use the coset shortcut (k period sums, multiplicity n
    each); disconnected ones sum per character, one n-term sum for each of
    the q additive characters.
    """
    if graph._spectrum is not None:
        return graph._spectrum
    field = graph.field
    q, p, k, n = field.q, field.p, graph.k, graph.n
    q1 = q - 1
    tr_exp = _trace_of_exp(field)

    counts: dict[CyclotomicInteger, int] = {}
    principal = CyclotomicInteger.from_int(p, n)
    counts[principal] = 1
    dec = component_structure(graph)
    if dec.count == 1:
        for i in range(k):
            eta = _coset_period(tr_exp, p, k, i, q1)
            counts[eta] = counts.get(eta, 0) + n
    else:
        for e0 in range(q1):
            hist = [0] * p
            for j in range(n):
                hist[tr_exp[(e0 + k * j) % q1]] += 1
            lam = CyclotomicInteger(p, hist)
            counts[lam] = counts.get(lam, 0) + 1

    assert sum(counts.values()) == q
    assert counts[principal] == dec.count, "principal multiplicity must match component count"
    # trace-zero check at histogram level: n copies of every non-principal
    # character value plus the principal n (each coset is hit by n characters)
    total_hist = [0] * p
    for e in range(q1):
        total_hist[tr_exp[e]] += n
    total_hist[0] += n
    assert CyclotomicInteger(p, total_hist).is_zero(), \
        "a loop-free adjacency matrix has trace zero"

    nature = _nature_from_values(counts)
    assert nature == nature_arithmetic(graph), "eigenvalue nature must match the arithmetic rule"

    ordered = tuple(sorted(counts.items(), key=lambda item: _eigen_sort_key(item[0])))
    report = SpectrumReport(
        q=q, k=k, n=n,
        eigenvalues=ordered,
        nature=nature,
        mu=len(ordered),
        principal_multiplicity=counts[principal],
    )
    graph._spectrum = report
    return report


def mu(graph: GPGraph) -> int:
    """Number of distinct eigenvalues."""
    return spectrum(graph).mu


def verify_2re(field: FiniteField, k: int) -> bool:
    """Check that the symmetrized spectrum is {lam + conj(lam)} of the directed one."""
    graph = build_graph(field, k)
    if not graph.directed:
        raise NotDirected(f"GP({graph.k},{field.q}) is undirected")
    doubled: dict[CyclotomicInteger, int] = {}
    for value, mult in spectrum(graph).eigenvalues:
        s = value + value.conjugate()
        doubled[s] = doubled.get(s, 0) + mult
    half = dict(spectrum(build_graph(field, graph.k // 2)).eigenvalues)
    return doubled == half


@dataclass(frozen=True)
class PaleyUnionDigraph:
    """A directed graph that is a disjoint union of directed Paley graphs."""

    copies: int
    part: int  # vertex count p^a of each directed Paley component

    def describe(self) -> str:
        return f"{self.copies} copies of directed Paley on {self.part} vertices"


def detect_three_ev_digraph(graph: GPGraph) -> PaleyUnionDigraph | None:
    """Detect the only directed GP-graphs with exactly three eigenvalues.

    These are unions of directed Paley graphs: k = 2(q-1)/(p^a - 1) with
    p^a = 3 (mod 4). The detection is asserted to coincide with mu = 3, and
    every directed graph is asserted to satisfy mu >= 3.
    """
    if not graph.directed:
        raise NotDirected(f"GP({graph.k},{graph.field.q}) is undirected")
    field = graph.field
    dec = component_structure(graph)
    pa = field.p ** dec.a
    found = None
    if pa % 4 == 3 and graph.k * (pa - 1) == 2 * (field.q - 1):
        found = PaleyUnionDigraph(copies=dec.count, part=pa)
    m = mu(graph)
    assert m >= 3, "directed GP-graphs always have at least three eigenvalues"
    assert (found is not None) == (m == 3)
    return found


def srg_parameters(graph: GPGraph) -> tuple[int, int, int, int] | None:
    """Strong-regularity parameters (v, r, e, d), when the graph is one.

    Present exactly for connected undirected graphs with three eigenvalues.
    The common-neighbor counts are measured on one adjacent and one
    non-adjacent pair and checked against (v-r-1)d = r(r-e-1).
    """
    if graph.directed or component_structure(graph).count > 1 or mu(graph) != 3:
        return None
    field = graph.field
    q, n = field.q, graph.n
    nbrs0 = set(graph.connection)
    v_adj = graph.connection[0]
    nbrs_adj = {field.index_add(v_adj, r) for r in graph.connection}
    e = len(nbrs0 & nbrs_adj)
    w = next(i for i in range(1, q) if i not in nbrs0)
    nbrs_non = {field.index_add(w, r) for r in graph.connection}
    d = len(nbrs0 & nbrs_non)
    assert (q - n - 1) * d == n * (n - e - 1)
    return (q, n, e, d)


def boundary_spectrum(graph: GPGraph) -> tuple[CyclotomicInteger, ...]:
    """Eigenvalues of maximum modulus n, decided exactly via lam * conj(lam) = n^2."""
    p, n = graph.field.p, graph.n
    n_squared = CyclotomicInteger.from_int(p, n * n)
    out = [value for value, _ in spectrum(graph).eigenvalues
           if value * value.conjugate() == n_squared]
    return tuple(sorted(out, key=_eigen_sort_key))


def numeric_oracle_check(graph: GPGraph, tolerance: float = 1e-8) -> bool:
    """Compare the exact spectrum against a dense floating-point eigensolver.

    Both eigenvalue lists are sorted by (real, imaginary) and paired off;
    the check passes when every pair is within the tolerance.
    """
    field = graph.field
    q = field.q
    if q > ORACLE_SIZE_LIMIT:
        raise SizeBudgetExceeded(f"q = {q} exceeds the dense-matrix limit {ORACLE_SIZE_LIMIT}")
    adj = np.zeros((q, q), dtype=np.float64)
    vertices = np.arange(q, dtype=np.int64)
    for r in graph.connection:
        heads = field.add_outer(vertices, np.array([r], dtype=np.int64)).ravel()
        adj[vertices, heads] = 1.0
    numeric = np.linalg.eigvals(adj)

    exact: list[complex] = []
    for value, mult in spectrum(graph).eigenvalues:
        exact.extend([value.embed()] * mult)

    def key(z):
        return (round(z.real, 6), round(z.imag, 6), z.real, z.imag)

    exact.sort(key=key)
    numeric = sorted((complex(z) for z in numeric), key=key)
    return all(abs(a - b) <= tolerance for a, b in zip(exact, numeric))
