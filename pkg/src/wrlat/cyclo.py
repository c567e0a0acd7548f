"""Cyclotomic integers and the Gram matrices of embedded principal ideals.

Elements of Z[zeta_k] are integer coefficient vectors on the power basis
1, zeta, ..., zeta^(phi(k)-1); products are reduced modulo the k-th
cyclotomic polynomial.  Traces of root powers come from the closed-form
Ramanujan sum mu(k/gcd(j,k)) * phi(k) / phi(k/gcd(j,k)), and the inner
product of the Minkowski embedding is half the trace of u * conj(v).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .arith import Rational, euler_phi, mobius
from .errors import InvariantViolation
from .svp import GramMatrix, enumerate_shortest


def _poly_divmod(num, den):
    """Quotient and remainder of integer polynomials, divisor monic.

    Coefficient lists are ordered low degree first.
    """
    num = list(num)
    dn = len(den) - 1
    if len(num) <= dn:
        return [], num
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    return q, num[:dn]


def cyclotomic_poly(k: int) -> tuple[int, ...]:
    """Coefficients of the k-th cyclotomic polynomial, low degree first.

    Built by exact division: x^d - 1 divided by the polynomials of the
    proper divisors of d, for each divisor d of k in turn.
    """
    if k < 1:
        raise ValueError("k must be positive")
    cache: dict[int, list[int]] = {}
    for d in range(1, k + 1):
        if k % d:
            continue
        num = [-1] + [0] * (d - 1) + [1]
        for e, pe in cache.items():
            if d % e == 0:
                num, rem = _poly_divmod(num, pe)
                if any(rem):
                    raise ArithmeticError("cyclotomic division left a remainder")
        cache[d] = num
    return tuple(cache[k])


@dataclass(frozen=True)
class CycloField:
    """Degree, defining polynomial and trace table of Q(zeta_k)."""

    k: int
    phi: int
    poly: tuple[int, ...]
    trace_table: tuple[int, ...]


def cyclo_field(k: int) -> CycloField:
    if k < 3:
        raise ValueError("k must be at least 3")
    poly = cyclotomic_poly(k)
    phi = len(poly) - 1
    table = []
    for j in range(k):
        g = math.gcd(j, k)
        m = k // g
        mu = mobius(m)
        table.append(0 if mu == 0 else mu * (euler_phi(k) // euler_phi(m)))
    return CycloField(k, phi, poly, tuple(table))


@dataclass(frozen=True)
class CycloElement:
    """Integer combination of 1, zeta, ..., zeta^(phi-1)."""

    coeffs: tuple[int, ...]
    fld: CycloField

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __mul__(self, other: "CycloElement") -> "CycloElement":
        if self.fld.k != other.fld.k:
            raise ValueError("mismatched cyclotomic fields")
        a, b = self.coeffs, other.coeffs
        conv = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        return element(self.fld, conv)

    def conj(self) -> "CycloElement":
        """Complex conjugation zeta -> zeta^(k-1)."""
        k = self.fld.k
        acc = [0] * k
        for i, c in enumerate(self.coeffs):
            acc[(k - i) % k] += c
        return element(self.fld, acc)

    def times_zeta(self) -> "CycloElement":
        return element(self.fld, (0,) + self.coeffs)

    def trace(self) -> int:
        return sum(c * t for c, t in zip(self.coeffs, self.fld.trace_table))


def element(F: CycloField, coeffs) -> CycloElement:
    """Element from a coefficient list of any length, reduced mod the polynomial."""
    _, rem = _poly_divmod(list(coeffs), list(F.poly))
    rem = rem + [0] * (F.phi - len(rem))
    return CycloElement(tuple(rem), F)


def zeta_power(F: CycloField, j: int) -> CycloElement:
    j %= F.k
    return element(F, [0] * j + [1])


def gram_principal(F: CycloField, x: CycloElement) -> GramMatrix:
    """Gram matrix of the ideal lattice generated by x, basis x*zeta^i.

    Entry (i, j) is Tr(x*zeta^i * conj(x*zeta^j)) / 2, exact in half-integers.
    """
    if x.is_zero:
        raise ValueError("zero element generates no lattice")
    us = [x]
    for _ in range(F.phi - 1):
        us.append(us[-1].times_zeta())
    vs = [u.conj() for u in us]
    n = F.phi
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            val = Fraction((us[i] * vs[j]).trace(), 2)
            rows[i][j] = val
            rows[j][i] = val
    return GramMatrix(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class CycloTheoremReport:
    k: int
    phi: int
    minimum: Rational
    expected: Rational
    n_minimal: int
    expected_count: int
    wr: bool

    @property
    def passed(self) -> bool:
        return self.minimum == self.expected and self.n_minimal == self.expected_count and self.wr


def verify_cyclotomic_theorem(F: CycloField) -> CycloTheoremReport:
    """Check the full ring of integers: minimum phi(k)/2, minimal vectors the
    embedded roots of unity (k of them for even k, 2k for odd k), well-rounded."""
    rep = enumerate_shortest(gram_principal(F, element(F, [1])))
    vecs = set(rep.vectors)
    for j in range(F.k):
        w = zeta_power(F, j).coeffs
        if w not in vecs or tuple(-c for c in w) not in vecs:
            raise InvariantViolation(f"root of unity zeta^{j} missing from the minimal set (k={F.k})")
    expected_count = F.k if F.k % 2 == 0 else 2 * F.k
    return CycloTheoremReport(
        F.k,
        F.phi,
        rep.minimum,
        Fraction(F.phi, 2),
        len(rep.vectors),
        expected_count,
        rep.span_rank == F.phi,
    )


def _form_value(G: GramMatrix, c) -> Fraction:
    n = G.n
    total = Fraction(0)
    for i in range(n):
        if c[i]:
            row = G.entries[i]
            for j in range(n):
                if c[j]:
                    total += row[j] * c[i] * c[j]
    return total


def verify_principal_ideal_wr(F: CycloField, x: CycloElement, rng=None, trials: int = 100) -> bool:
    """Well-roundedness of the lattice of the principal ideal (x).

    Also spot-checks rotation invariance: multiplying the ring coordinate
    vector by zeta leaves the quadratic form value unchanged, exactly.
    """
    if x.is_zero:
        raise ValueError("zero element generates no lattice")
    G = gram_principal(F, x)
    rng = rng if rng is not None else random.Random(20210)
    for _ in range(trials):
        w = element(F, [rng.randint(-9, 9) for _ in range(F.phi)])
        rotated = w.times_zeta()
        if _form_value(G, rotated.coeffs) != _form_value(G, w.coeffs):
            raise InvariantViolation(f"rotation by zeta changed a vector length (k={F.k})")
    return enumerate_shortest(G).span_rank == F.phi
