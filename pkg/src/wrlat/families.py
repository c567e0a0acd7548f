"""Two one-parameter families of well-rounded ideal lattices.

Both are indexed by odd t.  The imaginary family lives in the order of
radicand -(3t^2 + 8t + 4) with ideal (t+1, (t-1)/2, 1) and norm form
a^2*m^2 + a(a-1)*m*n + a^2*n^2 for a = t + 1.  The real family lives in
radicand t^2 - 4 with ideal (t+2, (t+1)/2, 1); after reduction its form is
t(t+2)*m^2 + 4(t+2)*m*n + t(t+2)*n^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arith import QuadOrder, is_prime, is_squarefree
from .errors import InvariantViolation
from .ideals import IdealTriple
from .planar import BinaryForm, form_from_ideal, gauss_reduce


class FamilyKind(str, Enum):
    IMAGINARY = "imaginary"
    REAL = "real"


@dataclass(frozen=True)
class FamilyInstance:
    t: int
    D: int
    triple: IdealTriple
    closed_form: BinaryForm
    p_prime: bool       # is t + 2 prime
    squarefree: bool    # is |D| squarefree


def imaginary_instance(t: int) -> FamilyInstance:
    """Family member for odd t >= 1; the ideal has norm a = t + 1."""
    if t < 1 or t % 2 == 0:
        raise ValueError("t must be odd and >= 1")
    disc = 3 * t * t + 8 * t + 4
    a = t + 1
    order = QuadOrder(-disc)
    triple = IdealTriple(a, (t - 1) // 2, 1, order)
    form = BinaryForm(a * a, a * (a - 1), a * a)
    return FamilyInstance(t, -disc, triple, form, is_prime(t + 2), is_squarefree(disc))


def real_instance(t: int) -> FamilyInstance:
    """Family member for odd t >= 5; the ideal has norm a = t + 2."""
    if t < 5 or t % 2 == 0:
        raise ValueError("t must be odd and >= 5")
    disc = t * t - 4
    a = t + 2
    order = QuadOrder(disc)
    triple = IdealTriple(a, (t + 1) // 2, 1, order)
    form = BinaryForm(t * a, 4 * a, t * a)
    return FamilyInstance(t, disc, triple, form, is_prime(t + 2), is_squarefree(disc))


def family_stream(kind, t_max: int, require_squarefree: bool = False) -> list[FamilyInstance]:
    """Instances for every valid odd t <= t_max, cross-checked on the way out.

    Each closed form must agree with the form computed from the ideal triple:
    directly in the imaginary case, after reduction in the real case.
    """
    kind = FamilyKind(kind)
    build = imaginary_instance if kind is FamilyKind.IMAGINARY else real_instance
    start = 1 if kind is FamilyKind.IMAGINARY else 5
    out = []
    for t in range(start, t_max + 1, 2):
        inst = build(t)
        if require_squarefree and not inst.squarefree:
            continue
        canon = form_from_ideal(inst.triple)
        if kind is FamilyKind.REAL:
            canon = gauss_reduce(canon)[0]
        if canon.coeffs() != inst.closed_form.coeffs():
            raise InvariantViolation(
                f"closed form mismatch at t={t}: {canon.coeffs()} != {inst.closed_form.coeffs()}"
            )
        out.append(inst)
    return out
