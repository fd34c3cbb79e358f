"""Waring-type numbers over finite fields, computed as graph diameters.

g(k, q) is the least s with every field element a sum of s k-th powers;
it exists exactly when GP(k, q) is connected and then equals its diameter,
which by vertex-transitivity is the forward eccentricity of 0. The signed
variant w(k, q) allows minus signs on the terms and is the diameter of the
symmetrized graph; for directed GP(k, q) it collapses to g(k/2, q).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NotPrime, NumberDoesNotExist, PreconditionViolated
from .fields import DEFAULT_SIZE_BUDGET, FieldElement, FiniteField, build_field
from .graphs import bfs_distances, build_graph, component_structure, symmetrize
from .numbertheory import is_prime


@dataclass(frozen=True)
class WaringResult:
    exists: bool
    g: int | None
    w: int | None
    reason_if_absent: str | None


def _eccentricity(field: FiniteField, connection) -> int | None:
    dist = bfs_distances(field, connection)
    if (dist < 0).any():
        return None
    return int(dist.max())


def waring_g(field: FiniteField, k: int) -> int | None:
    """g(k, q), or None when GP(k, q) is disconnected."""
    return _eccentricity(field, build_graph(field, k).connection)


def waring_w(field: FiniteField, k: int) -> int | None:
    """w(k, q), or None when absent.

    Computed two independent ways that are asserted to agree: the BFS
    diameter of the symmetrized graph, and the reduction to g (g(k, q)
    undirected, g(k/2, q) directed).
    """
    graph = build_graph(field, k)
    g_value = waring_g(field, graph.k)
    if g_value is None:
        return None
    by_diameter = _eccentricity(field, symmetrize(graph).connection)
    by_formula = g_value if not graph.directed else waring_g(field, graph.k // 2)
    assert by_diameter == by_formula, (
        f"w({graph.k},{field.q}): diameter {by_diameter} != formula {by_formula}")
    return by_diameter


def waring_result(field: FiniteField, k: int) -> WaringResult:
    graph = build_graph(field, k)
    g_value = waring_g(field, graph.k)
    if g_value is None:
        dec = component_structure(graph)
        return WaringResult(False, None, None,
                            f"GP({graph.k},{field.q}) splits into {dec.count} components")
    return WaringResult(True, g_value, waring_w(field, graph.k), None)


def witness(field: FiniteField, k: int, target, signed: bool) -> list[tuple[int, FieldElement]]:
    """A shortest representation of target as a (possibly signed) sum of k-th powers.

    Returns (sign, x) pairs with target = sum of sign * x^k; the length is
    the BFS distance of the target, so the longest witness over all targets
    has length g(k, q) (unsigned) or w(k, q) (signed).
    """
    graph = build_graph(field, k)
    target_idx = field.element(target).index
    steps = {r: 1 for r in graph.connection}
    if signed:
        for r in graph.connection:
            steps.setdefault(field.index_neg(r), -1)

    parents: dict[int, tuple[int, int]] = {0: (-1, 0)}  # vertex -> (previous, step element)
    queue = deque([0])
    while queue and target_idx not in parents:
        u = queue.popleft()
        for r in steps:
            v = field.index_add(u, r)
            if v not in parents:
                parents[v] = (u, r)
                queue.append(v)
    if target_idx not in parents:
        name = "w" if signed else "g"
        raise NumberDoesNotExist(f"{name}({graph.k},{field.q}) does not exist: "
                                 f"target {target_idx} is unreachable")

    out: list[tuple[int, FieldElement]] = []
    v = target_idx
    while v != 0:
        u, r = parents[v]
        sign = steps[r]
        residue = r if sign == 1 else field.index_neg(r)
        e = field.log[residue]
        assert e % graph.k == 0, "step elements are k-th powers"
        out.append((sign, FieldElement(field, field.exp[e // graph.k])))
        v = u
    out.reverse()
    return out


def is_primitive_divisor(c: int, p: int, a: int) -> bool:
    """c divides p^a - 1 but no earlier p^t - 1."""
    if c < 1 or (p ** a - 1) % c != 0:
        return False
    return all((p ** t - 1) % c != 0 for t in range(1, a))


def verify_reduction(p: int, a: int, b: int, c: int,
                     size_budget: int = DEFAULT_SIZE_BUDGET) -> bool:
    """Check w((p^(ab)-1)/(bc), p^(ab)) = b * w((p^a-1)/c, p^a) by two BFS runs.

    Requires the primitive-divisor preconditions c | p^a - 1 (and no earlier
    p^t - 1) and bc | p^(ab) - 1 (likewise), which also guarantee both
    numbers exist.
    """
    if not is_prime(p):
        raise NotPrime(f"p = {p} is not prime")
    if not is_primitive_divisor(c, p, a):
        raise PreconditionViolated(
            f"c = {c} is not a primitive divisor of {p}^{a} - 1 = {p ** a - 1}")
    if not is_primitive_divisor(b * c, p, a * b):
        raise PreconditionViolated(
            f"bc = {b * c} is not a primitive divisor of {p}^{a * b} - 1 = {p ** (a * b) - 1}")
    big = build_field(p, a * b, size_budget=size_budget)
    small = build_field(p, a, size_budget=size_budget)
    lhs = waring_w(big, (p ** (a * b) - 1) // (b * c))
    rhs = waring_w(small, (p ** a - 1) // c)
    assert lhs is not None and rhs is not None
    return lhs == b * rhs
