"""Exact integer-lattice view of a CM-type: the matrix of its Galois
translates, its rank over Q, and a reduced linear system that decides
validity with fewer dot products.

All arithmetic is exact (integer fraction-free elimination for ranks,
``fractions.Fraction`` for the reduced system).  No floating point:
validity is an integer statement and any epsilon would be a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cmtypes import CMType
from .groups import bits


@dataclass(frozen=True)
class OrbitMatrix:
    """Distinct 0/1 characteristic rows of the translates of phi, in
    ascending mask order.  Every row r satisfies r + (r . conj) = 1 since a
    translate of a CM-type is a CM-type; the row count divides |G|."""

    rows: tuple[tuple[int, ...], ...]
    ncols: int


def orbit_matrix(phi: CMType) -> OrbitMatrix:
    carrier = phi.carrier
    masks = sorted({carrier.translate_mask(t, phi.members) for t in carrier.parent.elements()})
    rows = tuple(
        tuple((mask >> s) & 1 for s in range(carrier.size)) for mask in masks
    )
    return OrbitMatrix(rows, carrier.size)


def _rank_bareiss(rows: list[list[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integers."""
    m = [row[:] for row in rows]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (pv * m[r][c] - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def lattice_rank(matrix: OrbitMatrix) -> int:
    return _rank_bareiss([list(r) for r in matrix.rows])


def lattice_rank_with_ones(matrix: OrbitMatrix) -> int:
    """Rank after adjoining the all-ones vector (the weight direction)."""
    rows = [list(r) for r in matrix.rows]
    rows.append([1] * matrix.ncols)
    return _rank_bareiss(rows)


def is_rank_maximal(matrix: OrbitMatrix) -> bool:
    # the rows live in an affine set whose direction space has dim ncols/2,
    # so the rank can never exceed ncols/2 + 1
    return lattice_rank(matrix) == matrix.ncols // 2 + 1


@dataclass(frozen=True)
class ValiditySystem:
    """A maximal independent subset of the translate rows, with the target
    value each basis row must attain on a valid monomial.

    Soundness: every row is a rational combination of basis rows whose
    coefficients sum to 1 (all rows have the same dot with the all-ones
    vector), so hitting the targets on the basis forces the full system.
    """

    ncols: int
    p: int
    basis: tuple[tuple[int, ...], ...]
    targets: tuple[Fraction, ...]


def reduced_validity_system(phi: CMType, p: int) -> ValiditySystem:
    matrix = orbit_matrix(phi)
    half = matrix.ncols // 2
    basis: list[tuple[int, ...]] = []
    echelon: list[list[Fraction]] = []
    pivots: list[int] = []
    for row in matrix.rows:
        v = [Fraction(x) for x in row]
        for piv_row, piv_col in zip(echelon, pivots):
            if v[piv_col] != 0:
                f = v[piv_col] / piv_row[piv_col]
                for c in range(matrix.ncols):
                    v[c] -= f * piv_row[c]
        lead = next((c for c in range(matrix.ncols) if v[c] != 0), None)
        if lead is not None:
            echelon.append(v)
            pivots.append(lead)
            basis.append(row)
    targets = tuple(Fraction(p * sum(b), half) for b in basis)
    return ValiditySystem(matrix.ncols, p, tuple(basis), targets)


def check_via_system(system: ValiditySystem, delta: int, p: int) -> bool:
    """Exact rational check of a size-2p subset against the reduced system;
    must agree with the direct validity test on every input."""
    if p != system.p or delta.bit_count() != 2 * p:
        return False
    for row, target in zip(system.basis, system.targets):
        if Fraction(sum(row[s] for s in bits(delta))) != target:
            return False
    return True
