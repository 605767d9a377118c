"""Catalog of cohomology-ring presentations.

Grassmannians and partial flag manifolds U(N)/U(a1)x...xU(ak) are presented
the way the classifying-space description gives them: one Chern-class
generator per block index, with the relations cut out by the positive-degree
components of the product of the block total classes,

    (1 + c(1)_1 + ... + c(1)_a1) ... (1 + c(k)_1 + ... + c(k)_ak) = 1.

The catalog also provides the eliminated presentations in which the last
block's classes are rewritten in the remaining generators (for Grassmannians
this is the classical Z[c_1..c_n]/(rho_1..rho_n) form), and the pullback data
for the projections of the (1, n)-flag used by the linear-maps bundle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graded_poly import GeneratorSpec, GradedPolynomial, generators
from .quotient_ring import PresentedGradedRing


@dataclass(frozen=True)
class FlagSpec:
    """Block sizes (a1, ..., ak) of a partial flag manifold."""

    blocks: tuple[int, ...]

    def __post_init__(self):
        if len(self.blocks) < 1:
            raise ValueError("need at least one block")
        if any(a < 1 for a in self.blocks):
            raise ValueError("block sizes must be positive")

    @property
    def total(self) -> int:
        return sum(self.blocks)

    @property
    def complex_dimension(self) -> int:
        dim = 0
        for i, a in enumerate(self.blocks):
            for b in self.blocks[i + 1:]:
                dim += a * b
        return dim


def _block_names(blocks: Sequence[int]) -> list[list[str]]:
    return [[f"c{j + 1}_{i + 1}" for i in range(a)] for j, a in enumerate(blocks)]


def _flag_generators(blocks, names):
    if names is None:
        names = _block_names(blocks)
    if len(names) != len(blocks) or any(len(ns) != a for ns, a in zip(names, blocks)):
        raise ValueError("names must match the block structure")
    spec = []
    for ns in names:
        for i, name in enumerate(ns):
            spec.append((name, 2 * (i + 1)))
    return generators(spec), names


def _block_total_classes(gens, names):
    """Total Chern class 1 + c_1 + ... + c_a of each block, as polynomials."""
    totals = []
    for ns in names:
        total = GradedPolynomial.constant(gens, 1)
        for name in ns:
            total = total + GradedPolynomial.generator(gens, name)
        totals.append(total)
    return totals


def complement_classes(elementary: Sequence[GradedPolynomial], count: int,
                       gens=None) -> list[GradedPolynomial]:
    """Classes h_1..h_count of the complementary bundle.

    Given the graded components e_1, e_2, ... of a total class, solve
    (1 + e_1 + e_2 + ...)(1 + h_1 + h_2 + ...) = 1 degree by degree:
    h_k = -(e_1 h_{k-1} + e_2 h_{k-2} + ... + e_k).
    """
    elementary = list(elementary)
    if gens is None:
        if not elementary:
            raise ValueError("need a generator context for an empty class list")
        gens = elementary[0].gens
    h = [GradedPolynomial.constant(gens, 1)]
    for k in range(1, count + 1):
        acc = GradedPolynomial.zero(gens)
        for j in range(1, k + 1):
            if j <= len(elementary):
                acc = acc + elementary[j - 1] * h[k - j]
        h.append(-acc)
    return h[1:]


def partial_flag_ring(spec: FlagSpec | Sequence[int], truncation_degree=None,
                      names=None) -> PresentedGradedRing:
    """Full presentation of H*(U(N)/U(a1)x...xU(ak)) over Z."""
    if not isinstance(spec, FlagSpec):
        spec = FlagSpec(tuple(spec))
    gens, names = _flag_generators(spec.blocks, names)
    totals = _block_total_classes(gens, names)
    product = GradedPolynomial.constant(gens, 1)
    for total in totals:
        product = product * total
    relation = product - 1
    if truncation_degree is None:
        truncation_degree = 2 * spec.complex_dimension
    return PresentedGradedRing(gens, [relation] if relation else [], truncation_degree)


def flag_ring_reduced(spec: FlagSpec | Sequence[int], truncation_degree=None,
                      names=None) -> PresentedGradedRing:
    """The same flag ring with the last block's classes eliminated.

    Presents H* on the generators of blocks 1..k-1 only; the relations are
    the classes h_{a_k+1}, ..., h_N of the (rank a_k) complement, which must
    vanish.  Far fewer monomials per degree than the full presentation.
    """
    if not isinstance(spec, FlagSpec):
        spec = FlagSpec(tuple(spec))
    blocks = spec.blocks
    kept = blocks[:-1]
    if names is None:
        names = _block_names(blocks)[:-1]
    gens, names = _flag_generators(kept, names) if kept else (generators([]), [])
    if kept:
        totals = _block_total_classes(gens, names)
        product = GradedPolynomial.constant(gens, 1)
        for total in totals:
            product = product * total
        elementary = [
            product.homogeneous_component(2 * j) for j in range(1, sum(kept) + 1)
        ]
    else:
        elementary = []
    last = blocks[-1]
    h = complement_classes(elementary, spec.total, gens=gens)
    relations = [h[k - 1] for k in range(last + 1, spec.total + 1) if h[k - 1]]
    if truncation_degree is None:
        truncation_degree = 2 * spec.complex_dimension
    return PresentedGradedRing(gens, relations, truncation_degree)


def grassmannian_ring(n: int, m: int, truncation_degree=None) -> PresentedGradedRing:
    """Two-block presentation of H*(Gr(n,m)) on c_1..c_n and cb_1..cb_m."""
    if n < 1 or m < 1:
        raise ValueError("need n, m >= 1")
    names = [[f"c{i + 1}" for i in range(n)], [f"cb{j + 1}" for j in range(m)]]
    return partial_flag_ring(FlagSpec((n, m)), truncation_degree, names)


def grassmannian_reduced_presentation(n: int, m: int,
                                      truncation_degree=None) -> PresentedGradedRing:
    """H*(Gr(n,m)) = Z[c_1..c_n]/(rho_1..rho_n) with the cb's eliminated.

    rho_i is the degree-2(m+i) class of the eliminated complement, deg
    rho_i = 2m + 2i; for n = 2 these match the closed binomial formula
    sum over p1 + 2 p2 = m + i of (-1)^(p1+p2) C(p1+p2, p1) c1^p1 c2^p2.
    """
    if n < 1 or m < 1:
        raise ValueError("need n, m >= 1")
    names = [[f"c{i + 1}" for i in range(n)]]
    return flag_ring_reduced(FlagSpec((n, m)), truncation_degree, names)


def projective_space_ring(m: int, truncation_degree=None) -> PresentedGradedRing:
    """H*(P^m) = Z[u]/(u^{m+1})."""
    if m < 0:
        raise ValueError("need m >= 0")
    if m == 0:
        return PresentedGradedRing(generators([]), [], 0)
    gens = generators([("u", 2)])
    u = GradedPolynomial.generator(gens, "u")
    if truncation_degree is None:
        truncation_degree = 2 * m
    return PresentedGradedRing(gens, [u ** (m + 1)], truncation_degree)


# -- the (1, n)-flag underlying the space of linear maps ---------------------

def hol1_blocks(n: int, m: int) -> FlagSpec:
    """Blocks of Fl(1,n) in C^(n+m); the middle block drops out for n = 1."""
    if n < 1 or m < 1:
        raise ValueError("need n, m >= 1")
    if n == 1:
        return FlagSpec((1, m))
    return FlagSpec((1, n - 1, m))


def hol1_generator_names(n: int) -> list[list[str]]:
    if n == 1:
        return [["x"]]
    if n == 2:
        return [["x"], ["y"]]
    return [["x"], [f"y{i + 1}" for i in range(n - 1)]]


def hol1_base_ring(n: int, m: int, full: bool = False) -> PresentedGradedRing:
    """Ring of the flag manifold that carries the linear-maps sphere bundle.

    By default the last block (the rank-m complement) is eliminated, leaving
    the generators x (from the line) and y_i (from the rank n-1 block); the
    full three-block presentation is available with full=True.
    """
    spec = hol1_blocks(n, m)
    names = hol1_generator_names(n)
    if full:
        z_names = [f"z{j + 1}" for j in range(m)]
        return partial_flag_ring(spec, names=names + [z_names])
    return flag_ring_reduced(spec, names=names)


def pullback_images(n: int, m: int):
    """Cohomology effect of the two projections of Fl(1,n)(C^(n+m)).

    Returns (p1_image, p2_c_images, p2_cbar_images) in the eliminated flag
    ring generators: the line projection sends the degree-2 generator to x;
    the Grassmannian projection sends c_k to the degree-2k component of
    (1+x)(1+y_1+...+y_{n-1}) and cb_k to the eliminated complement class z_k.
    """
    ring = hol1_base_ring(n, m)
    gens = ring.generators
    x = GradedPolynomial.generator(gens, "x")
    block2 = GradedPolynomial.constant(gens, 1)
    for g in gens[1:]:
        block2 = block2 + GradedPolynomial.generator(gens, g.name)
    total = (GradedPolynomial.constant(gens, 1) + x) * block2
    p2_c_images = [total.homogeneous_component(2 * k) for k in range(1, n + 1)]
    p2_cbar_images = complement_classes(p2_c_images, m, gens=gens)
    return x, p2_c_images, p2_cbar_images


# -- CLI space grammar --------------------------------------------------------

@dataclass(frozen=True)
class SpaceSpec:
    """Parsed "gr n m" / "flag a1 ... ak" / "proj m" space name."""

    kind: str
    params: tuple[int, ...]

    @property
    def label(self) -> str:
        if self.kind == "gr":
            return f"Gr({self.params[0]},{self.params[1]})"
        if self.kind == "proj":
            return f"P^{self.params[0]}"
        return "Fl(" + ",".join(str(a) for a in self.params) + ")"


def parse_space(tokens: Sequence[str]) -> SpaceSpec:
    if not tokens:
        raise ValueError("missing space name: expected 'gr n m', 'flag a1 a2 ...', or 'proj m'")
    kind, *rest = tokens
    try:
        params = tuple(int(t) for t in rest)
    except ValueError:
        raise ValueError(f"non-integer space parameters: {rest}") from None
    if kind == "gr":
        if len(params) != 2 or params[0] < 1 or params[1] < 1:
            raise ValueError("'gr' expects two positive integers")
    elif kind == "proj":
        if len(params) != 1 or params[0] < 0:
            raise ValueError("'proj' expects one nonnegative integer")
    elif kind == "flag":
        if not params or any(a < 1 for a in params):
            raise ValueError("'flag' expects positive block sizes")
    else:
        raise ValueError(f"unknown space kind {kind!r}")
    return SpaceSpec(kind, params)


def space_ring(spec: SpaceSpec, reduced: bool = False,
               truncation_degree=None) -> PresentedGradedRing:
    if spec.kind == "gr":
        n, m = spec.params
        if reduced:
            return grassmannian_reduced_presentation(n, m, truncation_degree)
        return grassmannian_ring(n, m, truncation_degree)
    if spec.kind == "proj":
        return projective_space_ring(spec.params[0], truncation_degree)
    flag = FlagSpec(spec.params)
    if reduced:
        return flag_ring_reduced(flag, truncation_degree)
    return partial_flag_ring(flag, truncation_degree)
