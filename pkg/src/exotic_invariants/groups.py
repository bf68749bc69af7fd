"""Finite cyclic models for the homotopy-sphere groups and the circle
representation arithmetic on singularity links.

The group of smooth structures on the 7-sphere under connected sum is
cyclic of order 28; the group of homotopy products with a circle under
fiberwise regluing is modeled the same way.  Both live over a shared
GroupConfig so the order and the bilinear coefficient stay configurable:
any bilinear pairing into a cyclic group is multiplication by a constant,
and no single constant satisfies every constraint one might want to
impose on it, so it is configuration rather than a baked-in value.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .brieskorn import milnor_family, weights_and_degree
from .errors import ConfigMismatch, InvalidRep, OutOfFamily, Unreachable


@dataclass(frozen=True)
class GroupConfig:
    """Cyclic order N and the coefficient c of the bilinear pairing."""

    order: int = 28
    coeff: int = 1

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("group order must be >= 1")

    @property
    def coeff_coprime(self) -> bool:
        return gcd(self.coeff, self.order) == 1


DEFAULT_CONFIG = GroupConfig()


@dataclass(frozen=True)
class Theta7Element:
    """A diffeomorphism class of homotopy 7-spheres, as a residue mod N."""

    residue: int
    config: GroupConfig = DEFAULT_CONFIG

    def __post_init__(self):
        if not 0 <= self.residue < self.config.order:
            raise ValueError(f"residue {self.residue} outside 0..{self.config.order - 1}")


@dataclass(frozen=True)
class Sigma8Element:
    """A diffeomorphism class of homotopy S^7 x S^1 products, mod N."""

    residue: int
    config: GroupConfig = DEFAULT_CONFIG

    def __post_init__(self):
        if not 0 <= self.residue < self.config.order:
            raise ValueError(f"residue {self.residue} outside 0..{self.config.order - 1}")


@dataclass(frozen=True)
class RepClass:
    """An equivalence class of circle representations q -> lambda^l q."""

    exponent: int


def theta7(value: int, config: GroupConfig = DEFAULT_CONFIG) -> Theta7Element:
    return Theta7Element(value % config.order, config)


def sigma8(value: int, config: GroupConfig = DEFAULT_CONFIG) -> Sigma8Element:
    return Sigma8Element(value % config.order, config)


def sigma33(m: int, n: int, config: GroupConfig = DEFAULT_CONFIG) -> Theta7Element:
    """Bilinear pairing of two clutching exponents into the sphere group:
    (m, n) -> m*n*c mod N."""
    return theta7(m * n * config.coeff, config)


def sigma_tilde8(m: int, n: int, l: int, config: GroupConfig = DEFAULT_CONFIG) -> Sigma8Element:
    """Trilinear extension picking up a circle winding: m*n*l*c mod N."""
    return sigma8(m * n * l * config.coeff, config)


def compose(x, y):
    """Group law (connected sum / regluing): residue addition mod N.

    Both arguments must be of the same kind and carry the same config.
    """
    if type(x) is not type(y) or x.config != y.config:
        raise ConfigMismatch(f"cannot compose {x!r} with {y!r}")
    return type(x)((x.residue + y.residue) % x.config.order, x.config)


def de_sapio_steps(start: Theta7Element, step: Theta7Element, target: Theta7Element) -> int:
    """Least l >= 0 with start + l*step = target, by scanning l in [0, N).

    N is at most 28 in practice, so the scan is the honest algorithm.
    """
    if start.config != step.config or step.config != target.config:
        raise ConfigMismatch("mismatched group configurations")
    n = start.config.order
    for l in range(n):
        if (start.residue + l * step.residue) % n == target.residue:
            return l
    raise Unreachable(
        f"{target.residue} not reachable from {start.residue} by steps of {step.residue} mod {n}"
    )


def fano_moduli_compose(r1: RepClass, r2: RepClass) -> RepClass:
    """Pointwise product of characters adds exponents."""
    return RepClass(r1.exponent + r2.exponent)


def is_orbifold_rep(r: RepClass) -> bool:
    """Whether the quotient by the representation is an orbifold: the fixed
    set of q -> lambda^l q is all of the circle exactly when l = 0."""
    return r.exponent != 0


@dataclass(frozen=True)
class LinkIsotropy:
    """Isotropy data of one coordinate support on a link: the finite part
    Z_b from the weighted action and the Z_l factor from the circle rep."""

    support: tuple
    b: int
    isotropy: tuple


def family_weights(k: int) -> tuple:
    """Circle-action weight vector on the k-th link:
    (6, 2(6k-1), 3(6k-1), 3(6k-1), 3(6k-1))."""
    if not 1 <= k <= 28:
        raise OutOfFamily(f"family index must be in 1..28, got {k}")
    ell, weights = weights_and_degree(milnor_family(k))
    assert ell == 6 * (6 * k - 1)
    return weights


def link_isotropies(k: int, l: int) -> list:
    """Isotropy types of the torus action on link k twisted by q -> lambda^l q.

    One entry per admissible coordinate support (at least two nonzero
    coordinates; a single nonzero coordinate cannot lie on the link), with
    b the gcd of the weights over the support.  Repeated and non-coprime
    weights do occur, so b > 1 supports are genuinely present.
    """
    if not 1 <= k <= 28:
        raise OutOfFamily(f"family index must be in 1..28, got {k}")
    if l < 1:
        raise InvalidRep(f"representation exponent must be >= 1, got {l}")
    weights = family_weights(k)
    out = []
    for size in range(2, len(weights) + 1):
        for support in combinations(range(len(weights)), size):
            b = gcd(*(weights[i] for i in support))
            out.append(LinkIsotropy(support, b, (b, l)))
    return out
