"""Presented graded rings over Z: degree-by-degree bases and cup products.

A ring is given by even-degree generators, homogeneous relations, and a
truncation degree.  Each graded piece is the free module on the degree-d
monomials modulo the lattice spanned by all (monomial x relation) products of
degree d; that quotient is computed by exact integer elimination, never by
Groebner bases.

Basis choice is deterministic: the elimination prefers to remove the
lex-smallest monomials (with unit pivots), so the surviving basis consists of
the lex-largest monomials whenever possible.  This reproduces bases like
{x^3, x^2 y, x y^2} with y^3 expressed in terms of them.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .exact_linalg import IntMatrix, hermite_normal_form, smith_normal_form, xgcd
from .graded_poly import (
    Exponents,
    GeneratorSpec,
    GradedPolynomial,
    monomial_degree,
    monomials_of_degree,
)


class TorsionError(RuntimeError):
    """A graded piece that was expected to be a free Z-module is not."""


class PresentationError(RuntimeError):
    """The presentation admits no monomial basis in some degree."""


@dataclass(frozen=True)
class DegreeBasis:
    """Chosen free basis of one graded piece, plus the reduction map.

    ``reduction`` sends every degree-d exponent tuple to its coordinate
    vector over ``basis_monomials``.  When ``torsion_report`` is nonempty the
    graded piece is Z^(len(basis) - len(report)) plus the listed cyclic
    factors, the monomials are merely generators, and no reduction map is
    provided.
    """

    degree: int
    basis_monomials: tuple[Exponents, ...]
    reduction: Mapping[Exponents, tuple[int, ...]]
    torsion_report: tuple[int, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.basis_monomials)

    @property
    def free_rank(self) -> int:
        return len(self.basis_monomials) - len(self.torsion_report)


def _sub_scaled(row: dict[int, int], c: int, other: dict[int, int]):
    # row -= c * other, in place
    for k, v in other.items():
        nv = row.get(k, 0) - c * v
        if nv:
            row[k] = nv
        else:
            row.pop(k, None)


@dataclass(frozen=True)
class GradedPiece:
    """Isomorphism type of one graded piece: free rank plus torsion chain."""

    degree: int
    free_rank: int
    torsion: tuple[int, ...]
    lattice_rank: int

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion


class PresentedGradedRing:
    """Generators + homogeneous relations + truncation degree."""

    def __init__(
        self,
        generators: Sequence[GeneratorSpec],
        relations: Iterable[GradedPolynomial],
        truncation_degree: int,
    ):
        self.generators = tuple(generators)
        if truncation_degree < 0:
            raise ValueError("truncation degree must be nonnegative")
        self.truncation_degree = truncation_degree
        split: list[GradedPolynomial] = []
        for rel in relations:
            if rel.gens != self.generators:
                raise ValueError("relation over a different generator list")
            for d, component in rel.homogeneous_components().items():
                if d == 0:
                    raise ValueError("relation has a nonzero constant term")
                split.append(component)
        self.relations = tuple(split)
        self._basis_cache: dict[int, DegreeBasis] = {}
        self._piece_cache: dict[int, GradedPiece] = {}
        self._lock = threading.Lock()

    # -- elements ------------------------------------------------------------

    def zero(self) -> GradedPolynomial:
        return GradedPolynomial.zero(self.generators)

    def one(self) -> GradedPolynomial:
        return GradedPolynomial.constant(self.generators, 1)

    def gen(self, name: str) -> GradedPolynomial:
        return GradedPolynomial.generator(self.generators, name)

    # -- graded pieces ---------------------------------------------------------

    def degree_basis(self, d: int) -> DegreeBasis:
        if d < 0 or d > self.truncation_degree:
            raise ValueError(f"degree {d} outside [0, {self.truncation_degree}]")
        with self._lock:
            cached = self._basis_cache.get(d)
        if cached is not None:
            return cached
        result = self._compute_degree_basis(d)
        with self._lock:
            return self._basis_cache.setdefault(d, result)

    def graded_piece(self, d: int) -> GradedPiece:
        """Isomorphism type of the degree-d piece, free rank plus torsion.

        Works straight off the relation lattice, so it never depends on a
        monomial basis existing (degree_basis can fail to pick one while the
        group itself is perfectly well defined).
        """
        if d < 0 or d > self.truncation_degree:
            raise ValueError(f"degree {d} outside [0, {self.truncation_degree}]")
        with self._lock:
            cached = self._piece_cache.get(d)
        if cached is not None:
            return cached
        mons = monomials_of_degree(self.generators, d)
        pos_of = {m: i for i, m in enumerate(mons[::-1])}
        pivots, factors = self._select_pivots(self._relation_rows(d, pos_of), len(mons), d)
        piece = GradedPiece(
            degree=d,
            free_rank=len(mons) - len(pivots) - len(factors),
            torsion=tuple(f for f in factors if f > 1),
            lattice_rank=len(pivots) + len(factors),
        )
        with self._lock:
            return self._piece_cache.setdefault(d, piece)

    def multiplication_quotient(self, e: GradedPolynomial, source_degree: int,
                                target_degree: int) -> GradedPiece:
        """Group data of (degree-target piece) / image of multiplication by e.

        Presents Z^{target monomials} modulo the target relation lattice
        together with every product e * (source monomial); since the source
        monomials span the source piece, this is exactly the cokernel of the
        cup product, no choice of basis required.
        """
        if e.gens != self.generators:
            raise ValueError("class over a different generator list")
        if e and (not e.is_homogeneous() or source_degree + e.degree != target_degree):
            raise ValueError("degree mismatch in multiplication quotient")
        if target_degree < 0 or target_degree > self.truncation_degree:
            raise ValueError("target degree out of range")
        mons = monomials_of_degree(self.generators, target_degree)
        pos_of = {m: i for i, m in enumerate(mons[::-1])}

        def rows():
            yield from self._relation_rows(target_degree, pos_of)
            if not e:
                return
            items = list(e.terms.items())
            for mult in monomials_of_degree(self.generators, source_degree):
                row: dict[int, int] = {}
                for mexp, c in items:
                    p = pos_of[tuple(a + b for a, b in zip(mexp, mult))]
                    nv = row.get(p, 0) + c
                    if nv:
                        row[p] = nv
                    else:
                        del row[p]
                if row:
                    yield row

        pivots, factors = self._select_pivots(rows(), len(mons), target_degree)
        return GradedPiece(
            degree=target_degree,
            free_rank=len(mons) - len(pivots) - len(factors),
            torsion=tuple(f for f in factors if f > 1),
            lattice_rank=len(pivots) + len(factors),
        )

    def _relation_rows(self, d: int, pos_of: Mapping[Exponents, int]):
        gens = self.generators
        for rel in self.relations:
            e = rel.degree
            if e > d:
                continue
            items = list(rel.terms.items())
            for mult in monomials_of_degree(gens, d - e):
                row: dict[int, int] = {}
                for mexp, c in items:
                    p = pos_of[tuple(a + b for a, b in zip(mexp, mult))]
                    nv = row.get(p, 0) + c
                    if nv:
                        row[p] = nv
                    else:
                        del row[p]
                if row:
                    yield row

    def _compute_degree_basis(self, d: int) -> DegreeBasis:
        mons_desc = monomials_of_degree(self.generators, d)
        # Positions run over monomials in ascending order, so "min(row)" is
        # the lex-smallest monomial in the row: that is what gets eliminated.
        mons_asc = mons_desc[::-1]
        pos_of = {m: i for i, m in enumerate(mons_asc)}
        t = len(mons_asc)

        pivot_rows, factors = self._echelon(self._relation_rows(d, pos_of), d)
        if any(f == 1 for f in factors):
            raise PresentationError(f"degree {d}: quotient admits no monomial basis")

        basis_positions = [i for i in range(t) if i not in pivot_rows]
        basis_monomials = tuple(mons_asc[i] for i in reversed(basis_positions))

        if factors:
            # The graded piece is not free: keep the generating monomials and
            # the invariant factors; no reduction map exists.
            return DegreeBasis(d, basis_monomials, {}, factors)

        # Pivot rows are fully reduced: apart from the unit at the pivot
        # position they only mention basis positions, so they are literally
        # the reduction map.
        column_of = {pos: j for j, pos in enumerate(reversed(basis_positions))}
        rank = len(basis_positions)
        reduction: dict[Exponents, tuple[int, ...]] = {}
        for i, mono in enumerate(mons_asc):
            vec = [0] * rank
            if i in column_of:
                vec[column_of[i]] = 1
            else:
                for q, v in pivot_rows[i].items():
                    if q != i:
                        vec[column_of[q]] = -v
            reduction[mono] = tuple(vec)
        return DegreeBasis(d, basis_monomials, reduction)

    def _select_pivots(self, rows, t: int, d: int):
        pivots, factors = self._echelon(rows, d, need_rows=False)
        return set(pivots), factors

    def _echelon(self, rows, d: int, need_rows: bool = True):
        """Fully reduced sparse echelon of an integer row lattice.

        Unit pivots are preferred at the lex-smallest monomial; a pivot row
        keeps coefficient 1 at its own position and entries at non-pivot
        positions only (entries at newly created pivot positions are cleared
        eagerly).  That full-reduction invariant is what keeps coefficients
        small: substituting a pivot never introduces another pivot column,
        so reductions cannot chain.

        Rows whose leading coefficient is >= 2 wait in a stash keyed by
        leading position and are merged by extended gcd on collision; a
        mining sweep promotes stash rows that contain a unit entry anywhere
        (this is how c1^3 - 2 c1 c2 eliminates c1^3 while keeping c1 c2).
        The stash rows that survive determine the invariant factors of the
        non-free part.

        Returns (pivot rows keyed by position, leftover invariant factors).
        """
        pivots: dict[int, dict[int, int]] = {}
        stash: dict[int, dict[int, int]] = {}
        work: list[dict[int, int]] = []

        def clear_pivot_columns(row):
            while True:
                hits = [q for q in row if q in pivots]
                if not hits:
                    return row
                for q in hits:
                    c = row.get(q)
                    if c:
                        _sub_scaled(row, c, pivots[q])

        def install_pivot(p, row, sweep_pivots=True):
            pivots[p] = row
            if sweep_pivots:
                for other in pivots.values():
                    if other is not row and p in other:
                        _sub_scaled(other, other[p], row)
            displaced = []
            for key in sorted(stash):
                other = stash[key]
                if p not in other:
                    continue
                _sub_scaled(other, other[p], row)
                if not other or min(other) != key:
                    displaced.append(key)
            for key in displaced:
                other = stash.pop(key)
                if other:
                    work.append(other)

        def settle(row):
            row = clear_pivot_columns(row)
            while row:
                p = min(row)
                held = stash.get(p)
                if held is None:
                    c = row[p]
                    if c == 1 or c == -1:
                        if c == -1:
                            row = {k: -v for k, v in row.items()}
                        install_pivot(p, row)
                    else:
                        if c < 0:
                            row = {k: -v for k, v in row.items()}
                        stash[p] = row
                    return
                a, b = held[p], row[p]
                if b % a == 0:
                    _sub_scaled(row, b // a, held)
                    continue
                x, y, g = xgcd(a, b)
                ag, bg = a // g, b // g
                merged: dict[int, int] = {}
                newrow: dict[int, int] = {}
                for k in held.keys() | row.keys():
                    u, v = held.get(k, 0), row.get(k, 0)
                    mv = x * u + y * v
                    nv = -bg * u + ag * v
                    if mv:
                        merged[k] = mv
                    if nv:
                        newrow[k] = nv
                del stash[p]
                if g == 1:
                    install_pivot(p, merged)
                    row = clear_pivot_columns(newrow)
                else:
                    stash[p] = merged
                    row = newrow

        for row in rows:
            work.append(row)
            while work:
                settle(work.pop())

        # Mine the stash for rows hiding a unit entry away from the leading
        # position.  The pool is recut to canonical dense HNF on every round,
        # which keeps coefficients reduced instead of letting repeated gcd
        # combinations compound them.
        pool = [stash[p] for p in sorted(stash)]
        stash.clear()
        while pool:
            cols = sorted({q for row in pool for q in row})
            dense = [[row.get(q, 0) for q in cols] for row in pool]
            pool = []
            for hrow in hermite_normal_form(dense, len(cols)):
                sparse = {cols[j]: v for j, v in enumerate(hrow) if v}
                if sparse:
                    pool.append(sparse)
            found = None
            for idx, row in enumerate(pool):
                units = sorted(q for q, v in row.items() if v == 1 or v == -1)
                if units:
                    found = (idx, units[0])
                    break
            if found is None:
                break
            idx, q = found
            row = pool.pop(idx)
            if row[q] == -1:
                row = {k: -v for k, v in row.items()}
            # Mined rows can be dense with large entries; only fold them into
            # the other pivot rows when the reduction map is actually wanted.
            install_pivot(q, row, sweep_pivots=need_rows)
            survivors = []
            for other in pool:
                c = other.get(q)
                if c:
                    _sub_scaled(other, c, row)
                if other:
                    survivors.append(other)
            pool = survivors

        factors: tuple[int, ...] = ()
        if pool:
            cols = sorted({q for row in pool for q in row})
            mat = IntMatrix.from_rows(
                [[row.get(q, 0) for q in cols] for row in pool], cols=len(cols)
            )
            factors = smith_normal_form(mat).invariant_factors
        return pivots, factors

    # -- operations -------------------------------------------------------------

    def reduce(self, p: GradedPolynomial, degree: int | None = None) -> tuple[int, ...]:
        """Coordinates of a homogeneous polynomial over its degree basis."""
        if p.gens != self.generators:
            raise ValueError("polynomial over a different generator list")
        if not p.is_homogeneous():
            raise ValueError("cannot reduce an inhomogeneous polynomial")
        if p:
            d = p.degree
            if degree is not None and degree != d:
                raise ValueError("degree mismatch")
        elif degree is None:
            raise ValueError("the zero polynomial needs an explicit degree")
        else:
            d = degree
        basis = self.degree_basis(d)
        if basis.torsion_report:
            raise TorsionError(f"degree {d} is not a free module: {basis.torsion_report}")
        vec = [0] * basis.rank
        for e, c in p.terms.items():
            coords = basis.reduction[e]
            for j, x in enumerate(coords):
                if x:
                    vec[j] += c * x
        return tuple(vec)

    def multiplication_matrix(
        self,
        e: GradedPolynomial,
        d: int,
        codomain_degree: int | None = None,
    ) -> IntMatrix:
        """Matrix of cup product by ``e`` from degree d to degree d + deg e.

        Columns are the reduced images of the degree-d basis monomials.  For
        e = 0 the codomain degree must be passed explicitly.
        """
        if e.gens != self.generators:
            raise ValueError("class over a different generator list")
        if not e.is_homogeneous():
            raise ValueError("multiplication class must be homogeneous")
        if e:
            target = d + e.degree
            if codomain_degree is not None and codomain_degree != target:
                raise ValueError("codomain degree mismatch")
        elif codomain_degree is None:
            raise ValueError("zero class needs an explicit codomain degree")
        else:
            target = codomain_degree
        source = self.degree_basis(d)
        if source.torsion_report:
            raise TorsionError(f"degree {d} is not a free module")
        target_basis = self.degree_basis(target)
        if target_basis.torsion_report:
            raise TorsionError(f"degree {target} is not a free module")
        columns = []
        for mono in source.basis_monomials:
            image = e * GradedPolynomial.monomial(self.generators, mono)
            columns.append(self.reduce(image, degree=target))
        rows = tuple(
            tuple(col[i] for col in columns) for i in range(target_basis.rank)
        )
        return IntMatrix(target_basis.rank, source.rank, rows)

    def poincare_polynomial(self) -> tuple[int, ...]:
        """Rank of each graded piece, indexed by degree 0..truncation."""
        coeffs = []
        for d in range(self.truncation_degree + 1):
            if d % 2 == 1:
                coeffs.append(0)
                continue
            piece = self.graded_piece(d)
            if piece.torsion:
                raise TorsionError(
                    f"degree {d} has torsion {piece.torsion}; "
                    "wrong presentation or truncation"
                )
            coeffs.append(piece.free_rank)
        return tuple(coeffs)

    def is_torsion_free(self) -> bool:
        try:
            self.poincare_polynomial()
        except TorsionError:
            return False
        return True


def poincare_string(coeffs: Sequence[int], var: str = "t") -> str:
    """Render rank coefficients as ``1+2t^2+3t^4+...`` (no spaces)."""
    pieces = []
    for d, c in enumerate(coeffs):
        if c == 0:
            continue
        if d == 0:
            pieces.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            power = var if d == 1 else f"{var}^{d}"
            pieces.append(f"{head}{power}")
    return "+".join(pieces) if pieces else "0"
