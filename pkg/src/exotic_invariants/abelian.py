"""Finitely generated abelian groups and graded collections of them.

A group is stored in its canonical shape: a free rank plus a torsion chain
d1 | d2 | ... with every d >= 2.  Arbitrary lists of cyclic orders are
normalized through the Smith normal form of the corresponding diagonal
matrix, so structural equality of the stored data is group isomorphism.

>>> AbelianGroup.from_orders(0, [2, 3]) == AbelianGroup.from_orders(0, [6])
True
>>> print(cokernel_group(IntMatrix.from_diagonal([4, 6])))
C2 x C12
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .snf import IntMatrix, smith_normal_form


def divisibility_chain(orders) -> tuple:
    """Normalize cyclic orders (all >= 2) to a chain d1 | d2 | ... .

    Repeated gcd/lcm exchanges on non-dividing pairs: exactly the Smith
    reduction of the diagonal matrix, without the unimodular bookkeeping.
    The SNF route gives the same answer and the tests cross-check the two.
    """
    vals = [int(d) for d in orders]
    if any(d < 2 for d in vals):
        raise ValueError("chain normalization expects orders >= 2")
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                a, b = vals[i], vals[j]
                if b % a != 0:
                    g = gcd(a, b)
                    vals[i], vals[j] = g, a * b // g
                    changed = True
    return tuple(sorted(d for d in vals if d >= 2))


@dataclass(frozen=True)
class AbelianGroup:
    """free_rank copies of Z plus cyclic factors in a divisibility chain."""

    free_rank: int
    torsion: tuple

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        chain = self.torsion
        if any(d < 2 for d in chain):
            raise ValueError("torsion orders must be >= 2")
        if any(chain[i + 1] % chain[i] != 0 for i in range(len(chain) - 1)):
            raise ValueError(f"torsion {chain} is not a divisibility chain")

    @classmethod
    def from_orders(cls, free_rank: int, orders=()) -> "AbelianGroup":
        """Build from arbitrary cyclic orders (0 means a Z summand).

        >>> AbelianGroup.from_orders(0, [4, 6]).torsion
        (2, 12)
        """
        orders = [int(d) for d in orders]
        free_rank += sum(1 for d in orders if d == 0)
        finite = [abs(d) for d in orders if d != 0 and abs(d) != 1]
        return cls(free_rank, divisibility_chain(finite))

    @classmethod
    def free(cls, rank: int) -> "AbelianGroup":
        return cls(rank, ())

    @classmethod
    def cyclic(cls, order: int) -> "AbelianGroup":
        """Z for order 0, trivial for order +-1, Z/|order| otherwise."""
        return cls.from_orders(0, [order])

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self):
        """Number of elements, or None for infinite groups."""
        if self.free_rank > 0:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_orders(
            self.free_rank + other.free_rank, self.torsion + other.torsion
        )

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"C{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "0"


TRIVIAL = AbelianGroup(0, ())
Z = AbelianGroup(1, ())


def group_equal(a: AbelianGroup, b: AbelianGroup) -> bool:
    """Structural equality of normalized groups (i.e. isomorphism)."""
    return a.free_rank == b.free_rank and a.torsion == b.torsion


def cokernel_group(M: IntMatrix) -> AbelianGroup:
    """Z^rows modulo the column span of M.

    >>> print(cokernel_group(IntMatrix.from_rows([[6]])))
    C6
    >>> print(cokernel_group(IntMatrix.from_rows([[0]])))
    Z
    """
    _, d, _ = smith_normal_form(M)
    diag = d.diagonal()
    r = sum(1 for x in diag if x != 0)
    return AbelianGroup(M.rows - r, tuple(x for x in diag if x >= 2))


def kernel_group(M: IntMatrix) -> AbelianGroup:
    """Kernel of M acting on Z^cols; always free."""
    _, d, _ = smith_normal_form(M)
    r = sum(1 for x in d.diagonal() if x != 0)
    return AbelianGroup.free(M.cols - r)


def tensor_and_tor(a: AbelianGroup, b: AbelianGroup):
    """(a tensor b, Tor(a, b)), extended additively over the summands.

    The cyclic rules are Z (x) G = G, Z/p (x) Z/q = Z/gcd(p,q),
    Tor(Z, G) = 0 and Tor(Z/p, Z/q) = Z/gcd(p,q).

    >>> t, tor = tensor_and_tor(AbelianGroup.cyclic(4), AbelianGroup.cyclic(6))
    >>> print(t, "|", tor)
    C2 | C2
    """
    tensor_orders = []
    tensor_orders.extend(list(b.torsion) * a.free_rank)
    tensor_orders.extend(list(a.torsion) * b.free_rank)
    tor_orders = []
    for p in a.torsion:
        for q in b.torsion:
            g = gcd(p, q)
            tensor_orders.append(g)
            tor_orders.append(g)
    tensor = AbelianGroup.from_orders(a.free_rank * b.free_rank, tensor_orders)
    tor = AbelianGroup.from_orders(0, tor_orders)
    return tensor, tor


class GradedGroups:
    """A finite map degree -> AbelianGroup; absent degrees are trivial.

    Trivial groups are never stored, so two instances are equal exactly
    when they describe the same graded object.
    """

    def __init__(self, groups=None):
        data = {}
        for degree, group in dict(groups or {}).items():
            degree = int(degree)
            if degree < 0:
                raise ValueError("degrees must be nonnegative")
            if not group.is_trivial:
                data[degree] = group
        self._groups = dict(sorted(data.items()))

    def __getitem__(self, degree: int) -> AbelianGroup:
        return self._groups.get(degree, TRIVIAL)

    def degrees(self):
        return list(self._groups)

    def items(self):
        return list(self._groups.items())

    def __eq__(self, other):
        if not isinstance(other, GradedGroups):
            return NotImplemented
        return self._groups == other._groups

    def __hash__(self):
        return hash(tuple(self._groups.items()))

    def __repr__(self):
        body = ", ".join(f"{d}: {g}" for d, g in self._groups.items())
        return f"GradedGroups({{{body}}})"


SPHERE_CIRCLE = GradedGroups({0: Z, 1: Z})  # H*(S^1)
POINT = GradedGroups({0: Z})


def sphere_cohomology(n: int) -> GradedGroups:
    """H*(S^n); the circle and the point come out right as n = 1, 0 edge cases."""
    if n < 0:
        raise ValueError("sphere dimension must be nonnegative")
    if n == 0:
        return GradedGroups({0: AbelianGroup.free(2)})
    return GradedGroups({0: Z, n: Z})


def kunneth(a: GradedGroups, b: GradedGroups) -> GradedGroups:
    """Graded groups of a product space from those of the factors.

    Degree n collects the tensor terms of total degree n and the Tor terms
    of total degree n - 1.

    >>> k = kunneth(sphere_cohomology(7), sphere_cohomology(1))
    >>> k.degrees()
    [0, 1, 7, 8]
    """
    out = {}
    for p, ap in a.items():
        for q, bq in b.items():
            tensor, tor = tensor_and_tor(ap, bq)
            if not tensor.is_trivial:
                n = p + q
                out[n] = out.get(n, TRIVIAL).direct_sum(tensor)
            if not tor.is_trivial:
                n = p + q + 1
                out[n] = out.get(n, TRIVIAL).direct_sum(tor)
    return GradedGroups(out)
