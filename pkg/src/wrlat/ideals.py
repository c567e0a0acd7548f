"""Ideals of quadratic orders in canonical two-generator form (a, b + g*delta).

A triple (a, b, g) spans the Z-module a*Z + (b + g*delta)*Z.  The module is an
ideal of Z[delta] exactly when 0 <= b < a, 0 < g <= a, g | a, g | b and
g*a | N(b + g*delta); the ideal then has norm a*g.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import DeltaKind, QuadInt, QuadOrder, norm_xy


@dataclass(frozen=True)
class IdealTriple:
    a: int
    b: int
    g: int
    order: QuadOrder

    def __post_init__(self):
        if self.a < 1 or self.g < 1 or self.b < 0:
            raise ValueError("triple entries must satisfy a >= 1, g >= 1, b >= 0")

    @property
    def second_generator(self) -> QuadInt:
        return QuadInt(self.b, self.g, self.order)


def triple_violation(t: IdealTriple) -> str | None:
    """Reason the triple fails to span an ideal, or None if it is valid."""
    if not t.b < t.a:
        return "b out of range [0, a)"
    if not t.g <= t.a:
        return "g out of range (0, a]"
    if t.a % t.g:
        return "g does not divide a"
    if t.b % t.g:
        return "g does not divide b"
    if t.second_generator.norm() % (t.g * t.a):
        return "g*a does not divide N(b + g*delta)"
    return None


def validate_triple(t: IdealTriple) -> bool:
    return triple_violation(t) is None


def ideal_norm(t: IdealTriple) -> int:
    """Index of the ideal in its order, equal to a*g for valid triples."""
    reason = triple_violation(t)
    if reason:
        raise ValueError(f"invalid ideal triple: {reason}")
    return t.a * t.g


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(d, r, s) with r*a + s*b = d = gcd(a, b)."""
    r0, s0, r1, s1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if a < 0:
        return -a, -r0, -s0
    return a, r0, s0


def hnf_from_generators(u: QuadInt, v: QuadInt | None = None) -> IdealTriple:
    """Canonical triple of the ideal generated by u (and v if given).

    The ideal is the Z-span of u, v, delta*u, delta*v; column reduction of
    those four vectors yields the unique basis (a, b + g*delta).
    """
    order = u.order
    if v is None:
        v = QuadInt(0, 0, order)
    u._require_same_order(v)
    if u.is_zero and v.is_zero:
        raise ValueError("zero ideal has no canonical triple")
    delta = QuadInt(0, 1, order)
    cols = []
    for w in (u, v, u * delta, v * delta):
        if not w.is_zero:
            cols.append((w.x, w.y))
    # fold every column into the pivot (b_x over g_y); leftovers have y = 0
    b_x, g_y = 0, 0
    xs = []
    for x, y in cols:
        if y == 0:
            xs.append(x)
        elif g_y == 0:
            b_x, g_y = x, y
        else:
            d, r, s = _egcd(g_y, y)
            xs.append((y // d) * b_x - (g_y // d) * x)
            b_x, g_y = r * b_x + s * x, d
    if g_y < 0:
        b_x, g_y = -b_x, -g_y
    a = 0
    for x in xs:
        a = math.gcd(a, x)
    if a == 0 or g_y == 0:
        raise ValueError("generators do not span a rank-2 module")
    t = IdealTriple(a, b_x % a, g_y, order)
    reason = triple_violation(t)
    if reason:
        # closure under delta makes this unreachable for genuine generators
        raise ValueError(f"generators produced an invalid triple: {reason}")
    return t


def principal_ideal(gen: QuadInt) -> IdealTriple:
    """Canonical triple of the principal ideal generated by a nonzero element."""
    return hnf_from_generators(gen)


def enumerate_ideals(order: QuadOrder, norm_bound: int) -> list[IdealTriple]:
    """Every valid triple with a*g <= norm_bound, sorted by (norm, a, b, g)."""
    if norm_bound < 1:
        raise ValueError("norm bound must be at least 1")
    half = order.delta_kind is DeltaKind.HALF_ONE_MINUS_SQRT_D
    D = order.D
    c = (1 - D) // 4 if half else 0
    out = []
    g = 1
    while g * g <= norm_bound:
        gg = g * g
        for a in range(g, norm_bound // g + 1, g):
            ga = g * a
            if half:
                for b in range(0, a, g):
                    if (b * b + b * g + gg * c) % ga == 0:
                        out.append(IdealTriple(a, b, g, order))
            else:
                for b in range(0, a, g):
                    if (b * b - D * gg) % ga == 0:
                        out.append(IdealTriple(a, b, g, order))
        g += 1
    out.sort(key=lambda t: (t.a * t.g, t.a, t.b, t.g))
    return out
