"""Characteristic-class calculus: duals, line-bundle twists, Euler classes.

The Euler class of the sphere bundle carrying the degree-one holomorphic
maps is the top Chern class of the twisted complement bundle over the
(1, n)-flag: the rank-m complement pulled back from the Grassmannian,
dualized, and tensored by the degree-2 line class x.  For n = 2 this
collapses to the closed form d/dx sum_{i+j=m+1} x^i y^j.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graded_poly import GradedPolynomial, generators
from .quotient_ring import PresentedGradedRing
from .spaces import hol1_base_ring, pullback_images


@dataclass(frozen=True)
class BundleClass:
    """A complex vector bundle remembered by rank and total Chern class."""

    rank: int
    total_chern: GradedPolynomial

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        gens = self.total_chern.gens
        if self.total_chern.homogeneous_component(0) != GradedPolynomial.constant(gens, 1):
            raise ValueError("total Chern class must start with 1")
        if any(d % 2 for d in self.total_chern.degrees()):
            raise ValueError("total Chern class must live in even degrees")
        if self.total_chern.degree > 2 * self.rank:
            raise ValueError("Chern classes above degree 2*rank")

    def chern(self, k: int) -> GradedPolynomial:
        return self.total_chern.homogeneous_component(2 * k)

    def euler_class(self) -> GradedPolynomial:
        """Top Chern class c_rank."""
        return self.chern(self.rank)


def dual(B: BundleClass) -> BundleClass:
    """c_k of the dual bundle is (-1)^k c_k."""
    total = GradedPolynomial.zero(B.total_chern.gens)
    for k in range(B.rank + 1):
        sign = -1 if k % 2 else 1
        total = total + sign * B.chern(k)
    return BundleClass(B.rank, total)


def tensor_line(B: BundleClass, line_class: GradedPolynomial) -> BundleClass:
    """Chern classes of E (x) L for a line bundle L with c_1(L) = line_class.

    Splitting principle: c_k(E(x)L) = sum_j C(rank-j, k-j) l^(k-j) c_j(E).
    """
    if line_class.gens != B.total_chern.gens:
        raise ValueError("line class over a different generator list")
    if line_class and (not line_class.is_homogeneous() or line_class.degree != 2):
        raise ValueError("line class must be homogeneous of degree 2")
    r = B.rank
    total = GradedPolynomial.zero(line_class.gens)
    for k in range(r + 1):
        ck = GradedPolynomial.zero(line_class.gens)
        for j in range(k + 1):
            ck = ck + comb(r - j, k - j) * (line_class ** (k - j)) * B.chern(j)
        total = total + ck
    return BundleClass(r, total)


def complement_pullback(n: int, m: int) -> BundleClass:
    """The rank-m complement bundle over the Grassmannian, pulled back to the
    (1, n)-flag and written in the eliminated generators x, y_i."""
    _, _, zs = pullback_images(n, m)
    gens = zs[0].gens if zs else hol1_base_ring(n, m).generators
    total = GradedPolynomial.constant(gens, 1)
    for z in zs:
        total = total + z
    return BundleClass(m, total)


def euler_class_hol1(n: int, m: int) -> GradedPolynomial:
    """Euler class of the sphere bundle of degree-one maps into Gr(n,m).

    Computed as the top Chern class of (pullback complement)^dual tensored
    with the degree-2 class x, inside the flag ring generators; homogeneous
    of degree 2m.
    """
    B = dual(complement_pullback(n, m))
    x = GradedPolynomial.generator(B.total_chern.gens, "x")
    e = tensor_line(B, x).euler_class()
    assert not e or (e.is_homogeneous() and e.degree == 2 * m)
    return e


def euler_closed_form_g2(m: int) -> GradedPolynomial:
    """d/dx of sum_{i+j=m+1} x^i y^j, the closed form of the n = 2 Euler
    class before any ring reduction."""
    if m < 1:
        raise ValueError("need m >= 1")
    gens = generators([("x", 2), ("y", 2)])
    x = GradedPolynomial.generator(gens, "x")
    y = GradedPolynomial.generator(gens, "y")
    total = GradedPolynomial.zero(gens)
    for i in range(m + 2):
        total = total + x**i * y ** (m + 1 - i)
    return total.partial_derivative("x")


def whitney_defect(ring: PresentedGradedRing, B: BundleClass,
                   complement: BundleClass) -> list[tuple[int, ...]]:
    """Reduced coordinates of the positive-degree parts of c(B)c(complement).

    All must vanish when the two bundles sum to a trivial bundle; used as a
    consistency check of the relation bookkeeping.
    """
    product = B.total_chern * complement.total_chern - 1
    out = []
    for d, component in product.homogeneous_components().items():
        if d <= ring.truncation_degree:
            out.append(ring.reduce(component, degree=d))
    return out
