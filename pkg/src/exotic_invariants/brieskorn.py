"""Invariants of Brieskorn-Pham singularities x0^a0 + ... + xn^an.

All numeric output is exact: integers for lattice data, Fractions for the
spectrum and the Gorenstein parameter.  The distinguished-basis
intersection rule is applied exactly as stated for the defining tensor
decomposition: the pairing of two basis vectors is the product of the
single-variable pairings when the index tuples are comparable
componentwise, and zero otherwise.  (For incomparable tuples this differs
from the multiplicative Euler form of the tensor category; no correction
is applied.)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from math import lcm

from .errors import IndexOutOfRange, InvalidSize, OutOfFamily
from .snf import IntMatrix

FAMILY_RANGE = range(1, 29)


@dataclass(frozen=True)
class BrieskornPham:
    """Exponent vector of an isolated singularity sum(x_i^{a_i})."""

    exponents: tuple

    def __post_init__(self):
        if len(self.exponents) < 1:
            raise ValueError("need at least one exponent")
        if any(a < 2 for a in self.exponents):
            raise ValueError("exponents must all be >= 2")

    @classmethod
    def of(cls, *exponents: int) -> "BrieskornPham":
        return cls(tuple(int(a) for a in exponents))

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.exponents) + ")"


@dataclass(frozen=True)
class MilnorLattice:
    """Middle homology with the intersection form in a distinguished basis."""

    index_set: tuple
    gram: IntMatrix

    def __post_init__(self):
        n = len(self.index_set)
        if self.gram.rows != n or self.gram.cols != n:
            raise ValueError("gram matrix must be square of the basis size")
        if any(self.gram[i, i] != 2 for i in range(n)):
            raise ValueError("vanishing cycles have self-intersection 2")

    @property
    def rank(self) -> int:
        return len(self.index_set)


@dataclass(frozen=True)
class Spectrum:
    """Sorted multiset of rational singularity exponents."""

    values: tuple

    def __post_init__(self):
        if any(self.values[i] > self.values[i + 1] for i in range(len(self.values) - 1)):
            raise ValueError("spectrum values must be sorted")

    @property
    def minimum(self) -> Fraction:
        return self.values[0]

    def __len__(self):
        return len(self.values)


class CanonicalType(str, Enum):
    FANO = "Fano"
    CALABI_YAU = "CalabiYau"
    GENERAL_TYPE = "GeneralType"


def milnor_number_and_basis(bp: BrieskornPham):
    """Milnor number and the monomial basis of the Milnor algebra.

    The basis is every exponent tuple (k_0, ..., k_n) with
    0 <= k_i <= a_i - 2, in lexicographic order; the Milnor number is the
    product of (a_i - 1).
    """
    basis = list(product(*(range(a - 1) for a in bp.exponents)))
    return len(basis), basis


def milnor_number(bp: BrieskornPham) -> int:
    mu = 1
    for a in bp.exponents:
        mu *= a - 1
    return mu


def a_lattice(n: int) -> IntMatrix:
    """Gram matrix of the rank-n chain lattice: 2 on the diagonal, -1 on
    the first off-diagonals."""
    if n < 1:
        raise InvalidSize(f"lattice rank must be >= 1, got {n}")
    return IntMatrix.from_rows(
        [
            [2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)]
            for i in range(n)
        ]
    )


def _chain_pairing(a: int, b: int) -> int:
    if a == b:
        return 2
    if abs(a - b) == 1:
        return -1
    return 0


def milnor_lattice(bp: BrieskornPham) -> MilnorLattice:
    """Distinguished-basis lattice of the full singularity.

    Index tuples run over 1 <= i_m <= a_m - 1 in lexicographic order.  For
    i < j the pairing is the product over factors of the single-variable
    pairings when i_m <= j_m holds in every slot, zero otherwise; the
    diagonal is 2 and the matrix is completed by symmetry.
    """
    index_set = tuple(product(*(range(1, a) for a in bp.exponents)))
    size = len(index_set)
    rows = [[0] * size for _ in range(size)]
    for r in range(size):
        rows[r][r] = 2
        for s in range(r + 1, size):
            i, j = index_set[r], index_set[s]
            if all(im <= jm for im, jm in zip(i, j)):
                val = 1
                for im, jm in zip(i, j):
                    val *= _chain_pairing(im, jm)
            else:
                val = 0
            rows[r][s] = rows[s][r] = val
    return MilnorLattice(index_set, IntMatrix.from_rows(rows))


def spectrum(bp: BrieskornPham) -> Spectrum:
    """Multiset of weights sum((k_i + 1) / a_i) over the monomial basis.

    The least element is sum(1 / a_i), attained at the constant monomial.
    """
    _, basis = milnor_number_and_basis(bp)
    values = sorted(
        sum((Fraction(k + 1, a) for k, a in zip(tup, bp.exponents)), Fraction(0))
        for tup in basis
    )
    return Spectrum(tuple(values))


def weights_and_degree(bp: BrieskornPham):
    """(ell, weights): ell = lcm of the exponents, w_i = ell / a_i.

    These grade the coordinate ring so the defining polynomial is weighted
    homogeneous of degree ell.
    """
    ell = lcm(*bp.exponents)
    return ell, tuple(ell // a for a in bp.exponents)


def canonical_type(bp: BrieskornPham):
    """(type, Gorenstein parameter) from s = sum(1 / a_i).

    s > 1 is Fano, s = 1 Calabi-Yau, s < 1 general type; the Gorenstein
    parameter is s - 1 as an exact rational.
    """
    s = sum((Fraction(1, a) for a in bp.exponents), Fraction(0))
    if s > 1:
        kind = CanonicalType.FANO
    elif s == 1:
        kind = CanonicalType.CALABI_YAU
    else:
        kind = CanonicalType.GENERAL_TYPE
    return kind, s - 1


def milnor_family(k: int) -> BrieskornPham:
    """Member k of the exotic-sphere link family (6k-1, 3, 2, 2, 2)."""
    if k not in FAMILY_RANGE:
        raise OutOfFamily(f"family index must be in 1..28, got {k}")
    return BrieskornPham.of(6 * k - 1, 3, 2, 2, 2)


def in_sphere_link_family(bp: BrieskornPham) -> bool:
    """True when the link of bp is one of the 28 homotopy-7-sphere links."""
    e = bp.exponents
    return (
        len(e) == 5
        and e[1:] == (3, 2, 2, 2)
        and e[0] % 6 == 5
        and (e[0] + 1) // 6 in FAMILY_RANGE
    )


def category_hom_dims(a: int, i: int, j: int) -> dict:
    """Morphism-space dimensions by degree between objects i, j of the
    rank-a directed chain category.

    hom(C_i, C_i) is one-dimensional in degree 0, hom(C_i, C_{i+1}) is
    one-dimensional in degree 1, and every other pair has no morphisms.
    """
    if not (1 <= i <= a and 1 <= j <= a):
        raise IndexOutOfRange(f"objects run 1..{a}, got ({i}, {j})")
    if i == j:
        return {0: 1}
    if j == i + 1:
        return {1: 1}
    return {}


def hom_dims_product(*factors: dict) -> dict:
    """Degreewise convolution of hom-dimension tables, as in a tensor
    product of chain categories."""
    out = {0: 1}
    for table in factors:
        nxt = {}
        for d1, n1 in out.items():
            for d2, n2 in table.items():
                nxt[d1 + d2] = nxt.get(d1 + d2, 0) + n1 * n2
        out = nxt
    return out


def chain_euler_matrix(n: int) -> IntMatrix:
    """Matrix of alternating-sum hom dimensions chi(i, j) for the rank-n
    chain category; its symmetrization recovers a_lattice(n)."""
    if n < 1:
        raise InvalidSize(f"need n >= 1, got {n}")
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            dims = category_hom_dims(n, i, j)
            row.append(sum((-1) ** d * c for d, c in dims.items()))
        rows.append(row)
    return IntMatrix.from_rows(rows)
