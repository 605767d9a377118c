"""Commutative integer polynomials with even cohomological grading.

Generators carry even degrees (deg c_i = 2i, deg x = 2, ...), so every ring
in sight is honestly commutative and no sign bookkeeping is needed.  A
polynomial stores a map {exponent tuple -> nonzero int}; values are immutable
and hashable.  The canonical term order is graded lexicographic over the
declared generator order: within one degree, lex-larger exponent vectors come
first (x^2 > xy > y^2); across degrees, lower degree first (1 + c1 + c2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class GeneratorSpec:
    """A ring generator: a name and a positive even cohomological degree."""

    name: str
    degree: int

    def __post_init__(self):
        if not self.name:
            raise ValueError("generator needs a name")
        if self.degree < 2 or self.degree % 2 != 0:
            raise ValueError(f"generator degree must be even and >= 2, got {self.degree}")


def monomial_degree(gens: tuple[GeneratorSpec, ...], exps: Exponents) -> int:
    return sum(e * g.degree for e, g in zip(exps, gens))


def monomials_of_degree(gens: tuple[GeneratorSpec, ...], d: int) -> list[Exponents]:
    """All exponent tuples of cohomological degree exactly d, lex-descending."""
    if d < 0:
        return []
    out: list[Exponents] = []

    def rec(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == len(gens):
            if remaining == 0:
                out.append(prefix)
            return
        step = gens[i].degree
        if i == len(gens) - 1:
            if remaining % step == 0:
                out.append(prefix + (remaining // step,))
            return
        for e in range(remaining // step, -1, -1):
            rec(i + 1, remaining - e * step, prefix + (e,))

    rec(0, d, ())
    return out


class GradedPolynomial:
    """Immutable multivariate polynomial over Z with even-graded generators."""

    __slots__ = ("gens", "terms", "_hash")

    def __init__(self, gens: tuple[GeneratorSpec, ...], terms: Mapping[Exponents, int]):
        object.__setattr__(self, "gens", tuple(gens))
        clean = {e: int(c) for e, c in terms.items() if c != 0}
        for e in clean:
            if len(e) != len(self.gens):
                raise ValueError("exponent tuple length does not match generator list")
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, gens) -> "GradedPolynomial":
        return cls(tuple(gens), {})

    @classmethod
    def constant(cls, gens, c: int) -> "GradedPolynomial":
        gens = tuple(gens)
        return cls(gens, {(0,) * len(gens): c} if c else {})

    @classmethod
    def generator(cls, gens, name: str) -> "GradedPolynomial":
        gens = tuple(gens)
        for i, g in enumerate(gens):
            if g.name == name:
                exps = tuple(1 if j == i else 0 for j in range(len(gens)))
                return cls(gens, {exps: 1})
        raise KeyError(f"unknown generator {name!r}")

    @classmethod
    def monomial(cls, gens, exps: Iterable[int], c: int = 1) -> "GradedPolynomial":
        return cls(tuple(gens), {tuple(int(e) for e in exps): c})

    # -- structure ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedPolynomial)
            and self.gens == other.gens
            and self.terms == other.terms
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.gens, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def degrees(self) -> set[int]:
        return {monomial_degree(self.gens, e) for e in self.terms}

    @property
    def degree(self) -> int:
        """Top cohomological degree; 0 for the zero polynomial."""
        return max(self.degrees(), default=0)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_component(self, d: int) -> "GradedPolynomial":
        return GradedPolynomial(
            self.gens,
            {e: c for e, c in self.terms.items() if monomial_degree(self.gens, e) == d},
        )

    def homogeneous_components(self) -> dict[int, "GradedPolynomial"]:
        out: dict[int, dict[Exponents, int]] = {}
        for e, c in self.terms.items():
            out.setdefault(monomial_degree(self.gens, e), {})[e] = c
        return {d: GradedPolynomial(self.gens, t) for d, t in sorted(out.items())}

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "GradedPolynomial"):
        if self.gens != other.gens:
            raise ValueError("polynomials over different generator lists")

    def __add__(self, other):
        if isinstance(other, int):
            other = GradedPolynomial.constant(self.gens, other)
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return GradedPolynomial(self.gens, terms)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial(self.gens, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = GradedPolynomial.constant(self.gens, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedPolynomial(self.gens, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        terms: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return GradedPolynomial(self.gens, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = GradedPolynomial.constant(self.gens, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def partial_derivative(self, name: str) -> "GradedPolynomial":
        """Formal termwise power-rule derivative with respect to a generator."""
        idx = next((i for i, g in enumerate(self.gens) if g.name == name), None)
        if idx is None:
            raise KeyError(f"unknown generator {name!r}")
        terms: dict[Exponents, int] = {}
        for e, c in self.terms.items():
            if e[idx] == 0:
                continue
            de = tuple(x - 1 if i == idx else x for i, x in enumerate(e))
            terms[de] = terms.get(de, 0) + c * e[idx]
        return GradedPolynomial(self.gens, terms)

    def substitute(self, images: Mapping[str, "GradedPolynomial"]) -> "GradedPolynomial":
        """Replace every generator by its image (all images over one context)."""
        contexts = {p.gens for p in images.values()}
        if len(contexts) != 1:
            raise ValueError("all substitution images must share a generator list")
        target = next(iter(contexts))
        missing = [g.name for g in self.gens if g.name not in images]
        if missing:
            raise KeyError(f"no image given for generators {missing}")
        result = GradedPolynomial.zero(target)
        for e, c in self.terms.items():
            term = GradedPolynomial.constant(target, c)
            for g, k in zip(self.gens, e):
                if k:
                    term = term * images[g.name] ** k
            result = result + term
        return result

    def extended_to(self, gens: tuple[GeneratorSpec, ...]) -> "GradedPolynomial":
        """View this polynomial in a larger context matching generators by name."""
        gens = tuple(gens)
        positions = []
        names = [g.name for g in gens]
        for g in self.gens:
            if g.name not in names:
                raise KeyError(f"generator {g.name!r} missing from target context")
            j = names.index(g.name)
            if gens[j].degree != g.degree:
                raise ValueError(f"generator {g.name!r} changes degree")
            positions.append(j)
        terms: dict[Exponents, int] = {}
        for e, c in self.terms.items():
            out = [0] * len(gens)
            for pos, k in zip(positions, e):
                out[pos] = k
            terms[tuple(out)] = c
        return GradedPolynomial(gens, terms)

    # -- presentation --------------------------------------------------------

    def sorted_terms(self) -> Iterator[tuple[Exponents, int]]:
        """Terms by ascending degree, lex-descending within a degree."""
        key = lambda item: (monomial_degree(self.gens, item[0]), tuple(-x for x in item[0]))
        return iter(sorted(self.terms.items(), key=key))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        compact = all(len(g.name) == 1 for g in self.gens)
        pieces = []
        for e, c in self.sorted_terms():
            factors = []
            for g, k in zip(self.gens, e):
                if k == 0:
                    continue
                factors.append(g.name if k == 1 else f"{g.name}^{k}")
            mono = ("" if compact else "*").join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}" if compact else f"{abs(c)}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"GradedPolynomial({self})"


def generators(spec: Iterable[tuple[str, int]]) -> tuple[GeneratorSpec, ...]:
    return tuple(GeneratorSpec(name, degree) for name, degree in spec)


def variables(gens: tuple[GeneratorSpec, ...]) -> list[GradedPolynomial]:
    """The generators as polynomials, in declared order."""
    return [GradedPolynomial.generator(gens, g.name) for g in gens]


def product(polys: Iterable[GradedPolynomial], gens=None) -> GradedPolynomial:
    polys = list(polys)
    if not polys:
        if gens is None:
            raise ValueError("empty product needs an explicit generator list")
        return GradedPolynomial.constant(gens, 1)
    result = polys[0]
    for p in polys[1:]:
        result = result * p
    return result
