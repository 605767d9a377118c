"""Gysin-sequence solver for sphere bundles over evenly graded bases.

For a bundle with fiber S^(2r-1) over a base whose cohomology is torsion
free and concentrated in even degrees, the long exact sequence splits into
short exact sequences, so the total space has

    H^{2i}   = coker( cup e : H^{2i-2r}(B) -> H^{2i}(B) )
    H^{2i+1} = ker  ( cup e : H^{2i+2-2r}(B) -> H^{2i+2}(B) )

with e the Euler class.  Everything is exact integer arithmetic; the tables
carry free rank and invariant-factor torsion per degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .char_classes import euler_class_hol1
from .exact_linalg import AbelianGroup
from .graded_poly import GradedPolynomial
from .quotient_ring import PresentedGradedRing
from .spaces import hol1_base_ring, projective_space_ring


class GysinError(RuntimeError):
    """The base ring violates a precondition of the split Gysin sequence."""


@dataclass(frozen=True)
class CohomologyTable:
    """Integral cohomology groups by degree; absent degrees are trivial."""

    groups: Mapping[int, AbelianGroup]
    space_label: str
    params: tuple[int, int] | None = None
    manifold_dimension: int | None = None

    def group(self, degree: int) -> AbelianGroup:
        return self.groups.get(degree, AbelianGroup(0))

    def betti(self, degree: int) -> int:
        return self.group(degree).free_rank

    def betti_numbers(self) -> dict[int, int]:
        return {d: g.free_rank for d, g in sorted(self.groups.items()) if g.free_rank}

    def total_rank(self) -> int:
        return sum(g.free_rank for g in self.groups.values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * g.free_rank for d, g in self.groups.items())

    def poincare_coefficients(self) -> tuple[int, ...]:
        top = max((d for d, g in self.groups.items() if g.free_rank), default=0)
        return tuple(self.betti(d) for d in range(top + 1))

    def nonzero_degrees(self) -> list[int]:
        return sorted(d for d, g in self.groups.items() if not g.is_trivial)


@dataclass(frozen=True)
class DualityReport:
    """Poincare-duality checks for a closed oriented odd-dimensional manifold."""

    dimension: int
    betti_symmetric: bool
    torsion_dual: bool
    euler_characteristic_zero: bool
    failures: tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return self.betti_symmetric and self.torsion_dual and self.euler_characteristic_zero


def sphere_bundle_cohomology(
    base: PresentedGradedRing,
    euler: GradedPolynomial,
    r: int,
    space_label: str = "sphere bundle",
    params: tuple[int, int] | None = None,
    manifold_dimension: int | None = None,
) -> CohomologyTable:
    """Cohomology of the total space of an S^(2r-1)-bundle with Euler class
    ``euler`` over ``base``.

    The base ring must be truncated at its top nonzero degree and be torsion
    free in every degree (checked here); the Euler class must be homogeneous
    of degree 2r.
    """
    if r < 1:
        raise GysinError("fiber sphere must be S^(2r-1) with r >= 1")
    if euler.gens != base.generators:
        raise GysinError("Euler class does not live in the base ring")
    if euler and (not euler.is_homogeneous() or euler.degree != 2 * r):
        raise GysinError(f"Euler class must be homogeneous of degree {2 * r}")
    if any(g.degree % 2 for g in base.generators):
        raise GysinError("base ring must be evenly graded")
    top = base.truncation_degree
    for d in range(0, top + 1, 2):
        if base.graded_piece(d).torsion:
            raise GysinError(f"base ring has torsion in degree {d}")

    def rank(d: int) -> int:
        if d < 0 or d > top:
            return 0
        return base.graded_piece(d).free_rank

    groups: dict[int, AbelianGroup] = {}
    for even in range(0, top + 1, 2):
        src = even - 2 * r
        if src < 0 or rank(src) == 0:
            g = AbelianGroup(rank(even))
        else:
            piece = base.multiplication_quotient(euler, src, even)
            g = AbelianGroup(piece.free_rank, piece.torsion)
        if not g.is_trivial:
            groups[even] = g
    for odd in range(1, top + 2 * r, 2):
        src = odd + 1 - 2 * r
        if rank(src) == 0:
            continue
        dst = odd + 1
        if dst > top or rank(dst) == 0:
            free = rank(src)
        else:
            # rank of the image = growth of the relation lattice when the
            # image of multiplication by e is added to it.
            quotient = base.multiplication_quotient(euler, src, dst)
            image_rank = quotient.lattice_rank - base.graded_piece(dst).lattice_rank
            free = rank(src) - image_rank
        if free:
            groups[odd] = AbelianGroup(free)
    if manifold_dimension is not None:
        beyond = [d for d in groups if d > manifold_dimension]
        if beyond:
            raise GysinError(
                f"nontrivial groups above the manifold dimension: {beyond}"
            )
    return CohomologyTable(groups, space_label, params, manifold_dimension)


def hol1_table(n: int, m: int) -> CohomologyTable:
    """Integral cohomology of the space of degree-one holomorphic maps
    P^1 -> Gr(n,m): the S^(2m-1)-bundle over the (1,n)-flag with the twisted
    complement's Euler class."""
    if n < 1 or m < 1:
        raise ValueError("need n, m >= 1")
    base = hol1_base_ring(n, m)
    e = euler_class_hol1(n, m)
    dimension = 2 * n * (m + 1) + 2 * m - 3
    return sphere_bundle_cohomology(
        base,
        e,
        r=m,
        space_label=f"Hol_1(Gr({n},{m}))",
        params=(n, m),
        manifold_dimension=dimension,
    )


def rat1_table(n: int, m: int) -> CohomologyTable:
    """Integral cohomology of the based maps: the S^(2m-1)-bundle over
    P^(n-1) whose Euler class (+-u)^m dies because m >= n."""
    if n < 1:
        raise ValueError("need n >= 1")
    if m < n:
        raise ValueError("rat1 needs n <= m")
    base = projective_space_ring(n - 1)
    euler = GradedPolynomial.zero(base.generators)
    dimension = 2 * (n + m) - 3
    return sphere_bundle_cohomology(
        base,
        euler,
        r=m,
        space_label=f"Rat_1(Gr({n},{m}))",
        params=(n, m),
        manifold_dimension=dimension,
    )


def verify_duality(table: CohomologyTable) -> DualityReport:
    """Check b_i = b_{d-i}, torsion H^i = torsion H^{d-i+1}, and chi = 0."""
    d = table.manifold_dimension
    if d is None:
        raise ValueError("table has no manifold dimension")
    failures: list[str] = []
    betti_ok = True
    for i in range(d + 1):
        if table.betti(i) != table.betti(d - i):
            betti_ok = False
            failures.append(f"b_{i}={table.betti(i)} != b_{d - i}={table.betti(d - i)}")
    torsion_ok = True
    for i in range(d + 2):
        left = table.group(i).torsion
        right = table.group(d - i + 1).torsion if 0 <= d - i + 1 else ()
        if left != right:
            torsion_ok = False
            failures.append(
                f"torsion H^{i}={list(left)} != torsion H^{d - i + 1}={list(right)}"
            )
    chi = table.euler_characteristic()
    chi_ok = chi == 0
    if not chi_ok:
        failures.append(f"euler characteristic {chi} != 0")
    return DualityReport(
        dimension=d,
        betti_symmetric=betti_ok,
        torsion_dual=torsion_ok,
        euler_characteristic_zero=chi_ok,
        failures=tuple(failures),
    )
