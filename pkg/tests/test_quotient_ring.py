import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holcoh.exact_linalg import smith_normal_form
from holcoh.graded_poly import GradedPolynomial, generators, variables
from holcoh.quotient_ring import (
    PresentedGradedRing,
    TorsionError,
    poincare_string,
)
from oracles import count_monomials, gaussian_binomial


def fl124_ring(names=("x", "y", "z1", "z2")):
    """Baum presentation of the (1,1,2) flag manifold in C^4."""
    gens = generators([(names[0], 2), (names[1], 2), (names[2], 2), (names[3], 4)])
    x, y, z1, z2 = variables(gens)
    rel = (1 + x) * (1 + y) * (1 + z1 + z2) - 1
    return PresentedGradedRing(gens, [rel], truncation_degree=10)


def fl124_reduced_ring():
    """The same ring with z1, z2 eliminated by hand."""
    gens = generators([("x", 2), ("y", 2)])
    x, y = variables(gens)
    r1 = x**3 + x**2 * y + x * y**2 + y**3
    r2 = x**3 * y + x**2 * y**2 + x * y**3
    return PresentedGradedRing(gens, [r1, r2], truncation_degree=10)


def euler_class_g22(ring):
    x = ring.gen("x")
    y = ring.gen("y")
    return 3 * x**2 + 2 * x * y + y**2


def mono(ring, **exps):
    p = ring.one()
    for name, k in exps.items():
        p = p * ring.gen(name) ** k
    return p


def test_degree_zero_basis():
    ring = fl124_ring()
    basis = ring.degree_basis(0)
    assert basis.basis_monomials == ((0, 0, 0, 0),)
    assert basis.torsion_report == ()


def test_fl124_degree_bases_match_paper():
    ring = fl124_ring()
    # Ranks 1,2,3,3,2,1 in degrees 0..10.
    assert ring.poincare_polynomial() == (1, 0, 2, 0, 3, 0, 3, 0, 2, 0, 1)
    names = [g.name for g in ring.generators]

    def pretty(basis):
        out = []
        for exps in basis.basis_monomials:
            out.append("".join(n * e for n, e in zip(names, exps)))
        return out

    assert pretty(ring.degree_basis(2)) == ["x", "y"]
    assert pretty(ring.degree_basis(4)) == ["xx", "xy", "yy"]
    assert pretty(ring.degree_basis(6)) == ["xxx", "xxy", "xyy"]
    assert pretty(ring.degree_basis(10)) == ["xxxyy"]


def test_fl124_reductions_match_paper():
    ring = fl124_ring()
    x, y = ring.gen("x"), ring.gen("y")
    # y^3 = -x^3 - x^2 y - x y^2
    assert ring.reduce(y**3) == ring.reduce(-(x**3) - x**2 * y - x * y**2)
    # x^4 = y^4 = 0 and x^2 y^2 = -x^3 y - x y^3
    assert ring.reduce(x**4) == (0, 0)
    assert ring.reduce(y**4) == (0, 0)
    assert ring.reduce(x**2 * y**2) == ring.reduce(-(x**3) * y - x * y**3)
    # z-eliminations from the total-class relation
    z1 = ring.gen("z1")
    assert ring.reduce(z1) == ring.reduce(-x - y)


def test_reduce_is_linear_and_kills_relations():
    ring = fl124_ring()
    x, y = ring.gen("x"), ring.gen("y")
    for rel in ring.relations:
        d = rel.degree
        assert ring.reduce(rel) == (0,) * ring.degree_basis(d).rank
        if d + 2 <= ring.truncation_degree:
            assert all(v == 0 for v in ring.reduce(rel * x))
    with pytest.raises(ValueError):
        ring.reduce(1 + x)


def test_reduce_chi_of_y_squared():
    # chi(y^2) = -3 x^3 y - x y^3 up to the relation x^2y^2 = -x^3y - xy^3.
    ring = fl124_ring()
    x, y = ring.gen("x"), ring.gen("y")
    chi_y2 = euler_class_g22(ring) * y**2
    assert ring.reduce(chi_y2) == ring.reduce(-3 * x**3 * y - x * y**3)


def test_multiplication_matrix_paper_columns():
    ring = fl124_ring()
    e = euler_class_g22(ring)
    m = ring.multiplication_matrix(e, 2)
    # Source basis (x, y), target basis (x^3, x^2 y, x y^2).
    assert m.rows == 3 and m.cols == 2
    assert [m[i, 0] for i in range(3)] == [3, 2, 1]
    assert [m[i, 1] for i in range(3)] == [-1, 2, 1]
    assert smith_normal_form(m).invariant_factors == (1, 4)


def test_multiplication_matrix_degree_four():
    ring = fl124_ring()
    e = euler_class_g22(ring)
    m = ring.multiplication_matrix(e, 4)
    assert m.rows == 2 and m.cols == 3
    assert smith_normal_form(m).invariant_factors == (1, 4)


def test_multiplication_by_one_is_identity():
    ring = fl124_ring()
    m = ring.multiplication_matrix(ring.one(), 6)
    assert m.rows == m.cols == 3
    assert all(m[i, j] == (1 if i == j else 0) for i in range(3) for j in range(3))


def test_multiplication_by_zero_needs_degree():
    ring = fl124_ring()
    z = ring.zero()
    with pytest.raises(ValueError):
        ring.multiplication_matrix(z, 2)
    m = ring.multiplication_matrix(z, 2, codomain_degree=6)
    assert m.rows == 3 and m.cols == 2
    assert all(x == 0 for row in m.entries for x in row)


def test_poincare_string():
    ring = fl124_ring()
    assert poincare_string(ring.poincare_polynomial()) == "1+2t^2+3t^4+3t^6+2t^8+t^10"


def test_reduced_presentation_agrees():
    full = fl124_ring()
    reduced = fl124_reduced_ring()
    assert reduced.poincare_polynomial() == full.poincare_polynomial()
    # Same multiplication invariants through both presentations.
    for d in (2, 4):
        a = full.multiplication_matrix(euler_class_g22(full), d)
        b = reduced.multiplication_matrix(euler_class_g22(reduced), d)
        assert (
            smith_normal_form(a).invariant_factors
            == smith_normal_form(b).invariant_factors
        )


def test_gr22_reduced_formule_presentation_is_free():
    gens = generators([("c1", 2), ("c2", 4)])
    c1, c2 = variables(gens)
    ring = PresentedGradedRing(
        gens,
        [c1**3 - 2 * c1 * c2, c1**4 - 3 * c1**2 * c2 + c2**2],
        truncation_degree=8,
    )
    assert ring.poincare_polynomial() == (1, 0, 1, 0, 2, 0, 1, 0, 1)
    # 2 c1 c2 stands in for c1^3; c2^2 and c1^4 collapse onto c1^2 c2.
    assert ring.reduce(c1**3) == ring.reduce(2 * c1 * c2)
    assert ring.reduce(c2**2) == ring.reduce(c1**2 * c2)
    assert ring.reduce(c1**4) == ring.reduce(2 * c1**2 * c2)


def test_gr22_printed_pair_shows_degree8_torsion():
    # The pair (c1^3 - 2 c1 c2, c1^4 - 2 c2^2) generates a strictly smaller
    # ideal over Z: degree 8 picks up a Z_2.
    gens = generators([("c1", 2), ("c2", 4)])
    c1, c2 = variables(gens)
    ring = PresentedGradedRing(
        gens, [c1**3 - 2 * c1 * c2, c1**4 - 2 * c2**2], truncation_degree=8
    )
    basis8 = ring.degree_basis(8)
    assert basis8.torsion_report == (2,)
    assert basis8.free_rank == 1
    with pytest.raises(TorsionError):
        ring.poincare_polynomial()


def test_pure_torsion_ring():
    gens = generators([("a", 2)])
    (a,) = variables(gens)
    ring = PresentedGradedRing(gens, [2 * a], truncation_degree=4)
    basis = ring.degree_basis(2)
    assert basis.torsion_report == (2,)
    assert basis.free_rank == 0
    with pytest.raises(TorsionError):
        ring.reduce(a)


def test_constant_relation_rejected():
    gens = generators([("a", 2)])
    (a,) = variables(gens)
    with pytest.raises(ValueError):
        PresentedGradedRing(gens, [a + 1], truncation_degree=4)


def test_inhomogeneous_relation_split():
    gens = generators([("a", 2), ("b", 4)])
    a, b = variables(gens)
    ring = PresentedGradedRing(gens, [a + b + a * b], truncation_degree=8)
    degrees = sorted(rel.degree for rel in ring.relations)
    assert degrees == [2, 4, 6]


def test_degree_bounds_checked():
    ring = fl124_ring()
    with pytest.raises(ValueError):
        ring.degree_basis(12)
    with pytest.raises(ValueError):
        ring.degree_basis(-2)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32))
def test_invariants_stable_under_generator_shuffle(seed):
    rng = random.Random(seed)
    names = [("x", 2), ("y", 2), ("z1", 2), ("z2", 4)]
    order = list(range(4))
    rng.shuffle(order)
    shuffled = [names[i] for i in order]
    gens = generators(shuffled)
    x = GradedPolynomial.generator(gens, "x")
    y = GradedPolynomial.generator(gens, "y")
    z1 = GradedPolynomial.generator(gens, "z1")
    z2 = GradedPolynomial.generator(gens, "z2")
    rel = (1 + x) * (1 + y) * (1 + z1 + z2) - 1
    shuffled_ring = PresentedGradedRing(gens, [rel], truncation_degree=10)
    reference = fl124_ring()
    assert shuffled_ring.poincare_polynomial() == reference.poincare_polynomial()
    e_s = 3 * x**2 + 2 * x * y + y**2
    for d in (2, 4, 6):
        a = shuffled_ring.multiplication_matrix(e_s, d)
        b = reference.multiplication_matrix(euler_class_g22(reference), d)
        assert (
            smith_normal_form(a).invariant_factors
            == smith_normal_form(b).invariant_factors
        )


def test_empty_generator_ring_is_point():
    ring = PresentedGradedRing((), [], truncation_degree=0)
    assert ring.poincare_polynomial() == (1,)
    assert ring.degree_basis(0).basis_monomials == ((),)


def test_gaussian_binomial_oracle_selftest():
    # [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
    assert gaussian_binomial(4, 2) == [1, 1, 2, 1, 1]
    assert count_monomials([2, 2], 4) == 3
