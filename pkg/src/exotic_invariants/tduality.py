"""Spherical T-dual pairs of flux-carrying 3-sphere bundles.

A fluxed bundle is a bundle together with an integer class in H^7 of its
total space (always infinite cyclic here).  Two distinct duality rules are
exposed because they genuinely differ: the principal rule swaps the bundle
class and the flux, changing the Euler class, while the general rule keeps
the Euler class fixed and swaps the first clutching exponent with the
flux.  Nothing in the source material reconciles the two on their common
domain, so no reconciliation is invented.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abelian import AbelianGroup
from .bundles import MilnorBundle, canonical_form
from .errors import DegenerateInput, NotPrincipal


@dataclass(frozen=True)
class FluxedBundle:
    bundle: MilnorBundle
    flux: int

    def __str__(self):
        return f"({self.bundle}, [{self.flux}])"


def euler_preserving_dual(fb: FluxedBundle) -> FluxedBundle:
    """(M(m, k-m), [j]) -> (M(j, k-j), [m]) with k the Euler class.

    Involutive on the nose: applying it twice returns the input.
    """
    k = fb.bundle.euler
    j = fb.flux
    return FluxedBundle(MilnorBundle(j, k - j), fb.bundle.m)


def principal_dual(fb: FluxedBundle) -> FluxedBundle:
    """(M(m, 0), [j]) -> (M(0, -j), [m]); defined for principal bundles only.

    The input is first brought to M(m, 0) shape through canonical_form's
    mirror identification M(0, n) = M(-n, 0).  Over a 4-dimensional base
    the dual flux is uniquely determined, with no correction term.
    """
    b = fb.bundle
    if not b.is_principal:
        raise NotPrincipal(f"{b} has m*n != 0")
    m = b.m if b.n == 0 else -b.n
    return FluxedBundle(MilnorBundle(0, -fb.flux), m)


def correspondence_h7(m: int, j: int) -> AbelianGroup:
    """H^7 of the fiber product of the dual pair classified by m and j.

    Equals Z plus a cyclic factor of order gcd(|m|, |j|).
    """
    if m == 0 and j == 0:
        raise DegenerateInput("correspondence space needs m, j not both zero")
    return AbelianGroup.from_orders(1, [gcd(abs(m), abs(j))])


def lifted_flux(m: int, j: int) -> int:
    """Common pullback of the two fluxes to the correspondence space.

    Both fluxes lift to j*m / gcd(|j|, |m|) on the free part of H^7, which
    is the consistency condition making the pair an honest dual pair.
    """
    if m == 0 and j == 0:
        raise DegenerateInput("lifted flux needs m, j not both zero")
    return (j * m) // gcd(abs(j), abs(m))


def dual_pair_summary(fb: FluxedBundle) -> dict:
    """Both duals of a fluxed bundle, plus correspondence data when defined.

    Convenience aggregation used by the command-line front end.
    """
    dual = euler_preserving_dual(fb)
    out = {
        "input": fb,
        "euler_preserving": dual,
        "canonical_input": FluxedBundle(canonical_form(fb.bundle), fb.flux),
        "principal": None,
    }
    if fb.bundle.is_principal:
        out["principal"] = principal_dual(fb)
    m, j = fb.bundle.m, fb.flux
    if m != 0 or j != 0:
        out["correspondence_h7"] = correspondence_h7(m, j)
        out["lifted_flux"] = lifted_flux(m, j)
    return out
