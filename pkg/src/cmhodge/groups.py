"""Finite groups as explicit multiplication tables, and the coset spaces they act on.

Element and point indices are 0-based everywhere.  Groups are small
(order <= 64), so every structural check is done by a direct exhaustive
loop rather than anything clever.  All values are immutable after
construction; everything here is a pure function.

Convention: only left cosets and left actions are used anywhere.  The
composite "t after s" is ``action[t][s]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BadInvolution, IotaInSubgroup, NotAGroup, NotASubgroup


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its full multiplication table, together with
    a distinguished central involution ``iota`` playing the role of complex
    conjugation."""

    order: int
    mult: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    iota: int

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)


def build_group(order: int, mult_table: Iterable[Iterable[int]], iota_index: int) -> GroupTable:
    """Validate a multiplication table and wrap it as a ``GroupTable``.

    The identity and inverse tables are derived, not supplied.  Raises
    ``NotAGroup`` (with a witness) if the table is not a group, and
    ``BadInvolution`` if ``iota_index`` is not a central involution
    distinct from the identity.
    """
    n = int(order)
    if n <= 0:
        raise NotAGroup(f"order must be positive, got {order}")
    mult = tuple(tuple(int(x) for x in row) for row in mult_table)
    if len(mult) != n or any(len(row) != n for row in mult):
        raise NotAGroup(f"multiplication table is not {n}x{n}")
    for a in range(n):
        for b in range(n):
            if not 0 <= mult[a][b] < n:
                raise NotAGroup(f"entry mult[{a}][{b}] = {mult[a][b]} out of range", (a, b))

    identity = None
    for e in range(n):
        if all(mult[e][g] == g and mult[g][e] == g for g in range(n)):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no two-sided identity element")

    inverse = [-1] * n
    for g in range(n):
        for h in range(n):
            if mult[g][h] == identity and mult[h][g] == identity:
                inverse[g] = h
                break
        else:
            raise NotAGroup(f"element {g} has no inverse", (g,))

    for a in range(n):
        for b in range(n):
            ab = mult[a][b]
            for c in range(n):
                if mult[ab][c] != mult[a][mult[b][c]]:
                    raise NotAGroup(
                        f"associativity fails at ({a},{b},{c})", (a, b, c)
                    )

    iota = int(iota_index)
    if not 0 <= iota < n:
        raise BadInvolution(f"iota index {iota} out of range")
    if iota == identity:
        raise BadInvolution("iota equals the identity")
    if mult[iota][iota] != identity:
        raise BadInvolution(f"iota has order > 2: iota*iota = {mult[iota][iota]}")
    for g in range(n):
        if mult[iota][g] != mult[g][iota]:
            raise BadInvolution(f"iota is not central: fails to commute with {g}")

    return GroupTable(n, mult, identity, tuple(inverse), iota)


@dataclass(frozen=True)
class CosetSpace:
    """Left cosets of a subgroup, with the left translation action and the
    conjugation involution (translation by iota).

    Points are indexed 0..m-1 in canonical order: each coset is stored as
    its sorted element tuple and cosets are ordered by minimal
    representative, so indices are reproducible across runs.
    """

    parent: GroupTable
    subgroup: tuple[int, ...]
    points: tuple[tuple[int, ...], ...]
    action: tuple[tuple[int, ...], ...]  # action[t][point] -> point
    conj: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.points)


def coset_space(group: GroupTable, subgroup_elements: Iterable[int]) -> CosetSpace:
    """Build the space of left cosets gH with its translation action.

    Raises ``NotASubgroup`` if the elements do not form a subgroup and
    ``IotaInSubgroup`` if iota lies in it (conjugation would then fix a
    point, which no CM-algebra allows).
    """
    n = group.order
    elems = sorted({int(x) for x in subgroup_elements})
    if any(not 0 <= x < n for x in elems):
        raise NotASubgroup(f"subgroup element out of range in {elems}")
    if group.identity not in elems:
        raise NotASubgroup("subgroup does not contain the identity")
    in_h = set(elems)
    for a in elems:
        if group.inv(a) not in in_h:
            raise NotASubgroup(f"not closed under inverse at {a}", (a,))
        for b in elems:
            if group.mul(a, b) not in in_h:
                raise NotASubgroup(f"not closed under multiplication at ({a},{b})", (a, b))
    if group.iota in in_h:
        raise IotaInSubgroup(f"iota = {group.iota} lies in the subgroup {elems}")

    elem_to_point: dict[int, int] = {}
    cosets: list[tuple[int, ...]] = []
    for g in range(n):
        if g in elem_to_point:
            continue
        coset = tuple(sorted(group.mul(g, h) for h in elems))
        idx = len(cosets)
        cosets.append(coset)
        for x in coset:
            elem_to_point[x] = idx
    # reorder by minimal representative (first element of the sorted tuple)
    order = sorted(range(len(cosets)), key=lambda i: cosets[i])
    points = tuple(cosets[i] for i in order)
    relabel = {old: new for new, old in enumerate(order)}
    elem_to_point = {x: relabel[i] for x, i in elem_to_point.items()}

    m = len(points)
    action = tuple(
        tuple(elem_to_point[group.mul(t, coset[0])] for coset in points)
        for t in range(n)
    )
    conj = action[group.iota]
    for s in range(m):
        assert conj[s] != s and conj[conj[s]] == s
    return CosetSpace(group, tuple(elems), points, action, tuple(conj))


@dataclass(frozen=True)
class EmbeddingSet:
    """Disjoint union of coset spaces: the set of embeddings of a product
    of CM-fields, with the global group action and conjugation."""

    parent: GroupTable
    factors: tuple[CosetSpace, ...]
    size: int
    action: tuple[tuple[int, ...], ...]  # n x m
    conj: tuple[int, ...]
    factor_of: tuple[int, ...]

    @property
    def all_mask(self) -> int:
        return (1 << self.size) - 1

    def translate_point(self, t: int, s: int) -> int:
        return self.action[t][s]

    def translate_mask(self, t: int, mask: int) -> int:
        """Elementwise image of a point set under left translation by t.

        This is the single shared translation helper: both CM-types and
        monomials go through it, so the two uses cannot drift apart.
        """
        row = self.action[t]
        out = 0
        for s in bits(mask):
            out |= 1 << row[s]
        return out

    def conj_mask(self, mask: int) -> int:
        out = 0
        for s in bits(mask):
            out |= 1 << self.conj[s]
        return out


def embedding_set(group: GroupTable, subgroups: Iterable[Iterable[int]]) -> EmbeddingSet:
    """Disjoint union of the coset spaces of the given subgroups, with
    deterministic global indices (factor order, then coset order)."""
    factors = tuple(coset_space(group, h) for h in subgroups)
    if not factors:
        raise NotASubgroup("at least one factor is required")
    n = group.order
    sizes = [f.size for f in factors]
    m = sum(sizes)
    offsets = []
    off = 0
    for sz in sizes:
        offsets.append(off)
        off += sz
    action = tuple(
        tuple(
            offsets[k] + factors[k].action[t][s]
            for k in range(len(factors))
            for s in range(sizes[k])
        )
        for t in range(n)
    )
    conj = tuple(
        offsets[k] + factors[k].conj[s]
        for k in range(len(factors))
        for s in range(sizes[k])
    )
    factor_of = tuple(k for k in range(len(factors)) for _ in range(sizes[k]))
    assert m % 2 == 0
    return EmbeddingSet(group, factors, m, action, conj, factor_of)
