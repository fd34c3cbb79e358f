"""Counting and constructing GP-graphs with integral spectrum.

The per-field census follows from the divisor structure of q - 1 and of
(q - 1)/(p - 1); the family enumerators realize the arithmetic criteria
(subfield divisors, semiprimitive divisors, totient powers, cyclotomic
polynomial values) together with the tower construction that lifts any
integral graph over GF(q) to one over every GF(q^a).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import HypothesisViolated, NotPrimePower
from .numbertheory import divisors, factorize, is_prime, prime_power, v2
from .spectra import Nature, nature_for


@dataclass(frozen=True)
class FieldCensus:
    q: int
    sigma: int                 # number of divisors of q - 1, = number of GP-graphs
    n_complex: int
    n_real: int                # undirected graphs (includes the integral ones)
    n_integral: int
    n_real_nonintegral: int


def census(q: int) -> FieldCensus:
    """Counts of GP-graphs over GF(q) by spectrum nature.

    Computed from factorizations and cross-checked against classifying
    every divisor k of q - 1 arithmetically.
    """
    pm = prime_power(q)
    if pm is None:
        raise NotPrimePower(f"q = {q} is not a prime power")
    p, m = pm

    sigma = 1
    odd_part_sigma = 1
    for prime, e in factorize(q - 1).items():
        sigma *= e + 1
        if prime != 2:
            odd_part_sigma *= e + 1
    n_complex = odd_part_sigma if q % 2 == 1 else 0
    n_integral = 1
    for e in factorize((q - 1) // (p - 1)).values():
        n_integral *= e + 1
    n_real = sigma - n_complex
    n_real_nonintegral = n_real - n_integral

    if q % 2 == 1:
        assert sigma == (v2(q - 1) + 1) * n_complex
        assert n_real == v2(q - 1) * n_complex

    by_nature = {nature: 0 for nature in Nature}
    for k in divisors(q - 1):
        by_nature[nature_for(p, m, k)] += 1
    assert by_nature[Nature.COMPLEX] == n_complex
    assert by_nature[Nature.INTEGRAL] == n_integral
    assert by_nature[Nature.REAL_NONINTEGRAL] == n_real_nonintegral

    return FieldCensus(q, sigma, n_complex, n_real, n_integral, n_real_nonintegral)


# ---------------------------------------------------------------------------
# integrality criteria

def integrality_reasons(p: int, m: int, k: int) -> list[str]:
    """All satisfied integrality criteria for GP(k, p^m).

    MasterDivisibility is the exact criterion k | (q-1)/(p-1); the others
    are sufficient conditions, so whenever any of them holds the master
    criterion is asserted to hold as well.
    """
    q = p ** m
    if (q - 1) % k != 0:
        raise ValueError(f"k = {k} does not divide q - 1 = {q - 1}")
    reasons: list[str] = []
    if math.gcd(k, p - 1) == 1:
        reasons.append("CoprimePMinus1")
    if p % k == 1 % k and m % k == 0:
        reasons.append("BPlusCongruence")
    if (p + 1) % k == 0 and m % 2 == 0:
        reasons.append("CMinusCongruence")
    for d in divisors(m):
        if d > 1 and _cyclotomic_value(d, p) % k == 0:
            reasons.append(f"CyclotomicDivisor({d})")
    master = ((q - 1) // (p - 1)) % k == 0
    if master:
        reasons.append("MasterDivisibility")
    assert master or not reasons, "every sufficient criterion must imply the master divisibility"
    return reasons


# ---------------------------------------------------------------------------
# cyclotomic polynomials over Z (dense integer coefficients, constant first)

def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return tuple(out)


def _poly_divexact(num: tuple[int, ...], den: tuple[int, ...]) -> tuple[int, ...]:
    """Exact division of integer polynomials with monic divisor."""
    assert den[-1] == 1
    work = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = work[i + len(den) - 1]
        out[i] = c
        if c:
            for j, dc in enumerate(den):
                work[i + j] -= c * dc
    assert not any(work), "division was not exact"
    return tuple(out)


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> tuple[int, ...]:
    """Coefficients of the d-th cyclotomic polynomial, constant term first."""
    if d < 1:
        raise ValueError(f"d = {d} must be positive")
    num = tuple([-1] + [0] * (d - 1) + [1])  # x^d - 1
    den = (1,)
    for dd in divisors(d):
        if dd < d:
            den = _poly_mul(den, cyclotomic_poly(dd))
    return _poly_divexact(num, den)


def _cyclotomic_value(d: int, x: int) -> int:
    value = 0
    for c in reversed(cyclotomic_poly(d)):
        value = value * x + c
    return value


# ---------------------------------------------------------------------------
# family enumerators

SUBFIELD_DIVISOR = "SubfieldDivisor"
SEMIPRIMITIVE_DIVISOR = "SemiprimitiveDivisor"
TOTIENT_POWER = "TotientPower"
CYCLOTOMIC_VALUE = "CyclotomicValue"
TOWER = "Tower"
FAMILY_KINDS = (SUBFIELD_DIVISOR, SEMIPRIMITIVE_DIVISOR, TOTIENT_POWER, CYCLOTOMIC_VALUE, TOWER)


@dataclass(frozen=True)
class FamilyDescriptor:
    """One integral family.

    SubfieldDivisor: k | p - 1, fields p^(k*t).
    SemiprimitiveDivisor: k | p + 1, fields p^(2*t).
    TotientPower: k odd with gcd(k, p(p-1)) = 1, fields p^(phi(k)*t).
    CyclotomicValue: k = Phi_d(p) for d > 1, fields p^(d*t).
    Tower: lifts the integral base GP(k, p^d) to GP(k*(q^a-1)/(q-1), q^a).
    """

    kind: str
    p: int
    k: int | None = None
    d: int | None = None


def _totient(k: int) -> int:
    out = k
    for prime in factorize(k):
        out -= out // prime
    return out


def enumerate_family(descriptor: FamilyDescriptor, max_q: int) -> Iterator[tuple[int, int]]:
    """Emit the family's (k, q) pairs with q <= max_q, in increasing q.

    Hypotheses are checked up front (HypothesisViolated names the failure)
    and every emitted pair is asserted integral by the arithmetic rule.
    """
    p, kind = descriptor.p, descriptor.kind
    if kind not in FAMILY_KINDS:
        raise HypothesisViolated(f"unknown family kind {kind!r}")
    if not is_prime(p):
        raise HypothesisViolated(f"p = {p} is not prime")

    if kind == SUBFIELD_DIVISOR:
        k = _require_k(descriptor)
        if (p - 1) % k != 0:
            raise HypothesisViolated(f"k = {k} does not divide p - 1 = {p - 1}")
        pairs = ((k, k * t) for t in _naturals())
    elif kind == SEMIPRIMITIVE_DIVISOR:
        k = _require_k(descriptor)
        if (p + 1) % k != 0:
            raise HypothesisViolated(f"k = {k} does not divide p + 1 = {p + 1}")
        pairs = ((k, 2 * t) for t in _naturals())
    elif kind == TOTIENT_POWER:
        k = _require_k(descriptor)
        if k % 2 == 0:
            raise HypothesisViolated(f"k = {k} must be odd")
        if math.gcd(k, p * (p - 1)) != 1:
            raise HypothesisViolated(f"gcd({k}, p(p-1)) = {math.gcd(k, p * (p - 1))} != 1")
        phi = _totient(k)
        pairs = ((k, phi * t) for t in _naturals())
    elif kind == CYCLOTOMIC_VALUE:
        if descriptor.d is None or descriptor.d < 2:
            raise HypothesisViolated("CyclotomicValue needs d >= 2")
        k = _cyclotomic_value(descriptor.d, p)
        pairs = ((k, descriptor.d * t) for t in _naturals())
    else:  # TOWER
        k = _require_k(descriptor)
        if descriptor.d is None or descriptor.d < 1:
            raise HypothesisViolated("Tower needs d >= 1 (the base field is GF(p^d))")
        base_q = p ** descriptor.d
        if (base_q - 1) % k != 0:
            raise HypothesisViolated(f"base k = {k} does not divide q - 1 = {base_q - 1}")
        if nature_for(p, descriptor.d, k) is not Nature.INTEGRAL:
            raise HypothesisViolated(f"tower base GP({k},{base_q}) is not integral")
        pairs = ((k * (base_q ** a - 1) // (base_q - 1), descriptor.d * a) for a in _naturals())

    for k_out, m_out in pairs:
        q_out = p ** m_out
        if q_out > max_q:
            return
        assert (q_out - 1) % k_out == 0
        assert nature_for(p, m_out, k_out) is Nature.INTEGRAL
        yield k_out, q_out


def _require_k(descriptor: FamilyDescriptor) -> int:
    if descriptor.k is None or descriptor.k < 1:
        raise HypothesisViolated(f"{descriptor.kind} needs a positive k")
    return descriptor.k


def _naturals() -> Iterator[int]:
    t = 1
    while True:
        yield t
        t += 1
