"""CM-types on an embedding set, induced types on the full group, and the
Hodge-grading bookkeeping.

A CM-type picks one point out of each conjugate pair; it is stored as a
bit mask over the canonical point order, so set algebra is mask algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .errors import CapExceeded, NotACMType
from .groups import EmbeddingSet, GroupTable, bits, mask_of


@dataclass(frozen=True)
class CMType:
    carrier: EmbeddingSet
    members: int  # bit mask over points

    def contains(self, s: int) -> bool:
        return bool((self.members >> s) & 1)

    @property
    def points(self) -> tuple[int, ...]:
        return tuple(bits(self.members))


@dataclass(frozen=True)
class RegularCMType:
    """A CM-type on the group itself (the regular embedding set), stored as
    a bit mask over group elements."""

    group: GroupTable
    members: int

    def contains(self, t: int) -> bool:
        return bool((self.members >> t) & 1)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(bits(self.members))


def validate_cm_type(carrier: EmbeddingSet, members: int | Iterable[int]) -> CMType:
    """Check the defining partition condition: each conjugate pair
    contributes exactly one member.  Raises ``NotACMType`` with the first
    offending point as witness."""
    mask = members if isinstance(members, int) else mask_of(members)
    if mask >> carrier.size:
        raise NotACMType("member index out of range")
    for s in range(carrier.size):
        inside = (mask >> s) & 1
        partner_inside = (mask >> carrier.conj[s]) & 1
        if inside == partner_inside:
            where = "in" if inside else "out"
            raise NotACMType(
                f"point {s} and its conjugate {carrier.conj[s]} are both {where}",
                witness=s,
            )
    return CMType(carrier, mask)


def conjugate_pairs(carrier: EmbeddingSet) -> list[tuple[int, int]]:
    """Conjugate pairs (s, conj s) with s < conj s, sorted by s."""
    return [(s, carrier.conj[s]) for s in range(carrier.size) if s < carrier.conj[s]]


def enumerate_cm_types(carrier: EmbeddingSet, cap: int = 20) -> Iterator[CMType]:
    """All 2^(m/2) CM-types, as a binary counter over the conjugate pairs
    (first pair most significant; bit 0 picks the smaller point).

    Streams lazily; raises ``CapExceeded`` up front if m/2 exceeds ``cap``.
    """
    pairs = conjugate_pairs(carrier)
    g = len(pairs)
    if g > cap:
        raise CapExceeded(f"{g} conjugate pairs exceeds the cap of {cap}")
    for code in range(1 << g):
        mask = 0
        for i, (lo, hi) in enumerate(pairs):
            bit = (code >> (g - 1 - i)) & 1
            mask |= 1 << (hi if bit else lo)
        yield CMType(carrier, mask)


def induced_type(phi: CMType, s: int) -> RegularCMType:
    """The CM-type on the full group induced at the point s: t is a member
    iff the translate of s by t lies in phi."""
    carrier = phi.carrier
    group = carrier.parent
    if not 0 <= s < carrier.size:
        raise NotACMType(f"point {s} out of range")
    members = 0
    for t in group.elements():
        if phi.contains(carrier.action[t][s]):
            members |= 1 << t
    return RegularCMType(group, members)


def translate_type(phi: CMType, t: int) -> CMType:
    """Pointwise image of phi under left translation by t; stays a CM-type."""
    return CMType(phi.carrier, phi.carrier.translate_mask(t, phi.members))


def conjugate_type(phi: CMType) -> CMType:
    return CMType(phi.carrier, phi.carrier.conj_mask(phi.members))


def hodge_numbers(carrier: EmbeddingSet, phi: CMType, r: int) -> dict[tuple[int, int], int]:
    """Counts of size-r point subsets by intersection pattern with phi:
    (p, q) maps to the number of subsets meeting phi in p points and its
    conjugate in q = r - p points.

    With |phi| = m/2 the choices inside and outside phi are independent,
    so the count is a product of binomials; the row sum is C(m, r).
    """
    m = carrier.size
    g = m // 2
    if not 0 <= r <= m:
        raise ValueError(f"degree {r} outside 0..{m}")
    table: dict[tuple[int, int], int] = {}
    for p in range(max(0, r - g), min(r, g) + 1):
        q = r - p
        table[(p, q)] = comb(g, p) * comb(g, q)
    return table
