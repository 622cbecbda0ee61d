"""Exact lattice cones, their duals, and the chart/fan family of (P^1)^n.

Everything in this module runs on integers and `fractions.Fraction`; no
floating point enters any predicate. Cone operations are implemented for
simplicial cones (linearly independent generator sets), which covers the
signed orthants that make up the fan of an n-fold product of projective
lines together with their images under lattice automorphisms.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

MAX_FACTORS = 16

IntVector = tuple[int, ...]


class NonSimplicialCone(ValueError):
    """Generator set is linearly dependent where independence is required."""


class NotFullDimensional(ValueError):
    """Cone does not span its ambient lattice."""


def _as_int_vector(vec: Sequence[int], dimension: int) -> IntVector:
    v = tuple(vec)
    if len(v) != dimension:
        raise ValueError(f"expected a vector of length {dimension}, got {v!r}")
    for coord in v:
        if isinstance(coord, bool) or not isinstance(coord, int):
            raise ValueError(f"lattice coordinates must be exact integers, got {coord!r}")
    return v


def primitive_vector(vec: Sequence) -> IntVector:
    """Scale a nonzero rational vector by a positive factor to coprime integers.

    The direction is preserved: no sign normalization is applied.
    """
    fracs = [Fraction(c) for c in vec]
    if all(f == 0 for f in fracs):
        raise ValueError("the zero vector has no primitive form")
    denom = lcm(*(f.denominator for f in fracs))
    ints = [int(f * denom) for f in fracs]
    g = gcd(*(abs(i) for i in ints))
    return tuple(i // g for i in ints)


@dataclass(frozen=True)
class Cone:
    """Convex cone of nonnegative combinations of integer generators.

    Duplicate generators and zero vectors are pruned at construction; the
    zero cone is the instance whose generator tuple is empty.
    """

    dimension: int
    generators: tuple[IntVector, ...]

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError("dimension must be at least 1")
        zero = (0,) * self.dimension
        cleaned: list[IntVector] = []
        for gen in self.generators:
            v = _as_int_vector(gen, self.dimension)
            if v != zero and v not in cleaned:
                cleaned.append(v)
        object.__setattr__(self, "generators", tuple(cleaned))

    @property
    def primitive_generators(self) -> frozenset[IntVector]:
        """Generator directions reduced to coprime integer vectors."""
        return frozenset(primitive_vector(g) for g in self.generators)


@dataclass(frozen=True)
class Polytope:
    """Lattice polytope given by its vertex list (deduplicated, order kept)."""

    dimension: int
    vertices: tuple[IntVector, ...]

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError("dimension must be at least 1")
        cleaned: list[IntVector] = []
        for vert in self.vertices:
            v = _as_int_vector(vert, self.dimension)
            if v not in cleaned:
                cleaned.append(v)
        if not cleaned:
            raise ValueError("a polytope needs at least one vertex")
        object.__setattr__(self, "vertices", tuple(cleaned))


@dataclass(frozen=True)
class LaurentSupport:
    """Exponent vectors carrying nonzero coefficients of a Laurent polynomial."""

    dimension: int
    exponents: tuple[IntVector, ...]

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError("dimension must be at least 1")
        cleaned: list[IntVector] = []
        for exp in self.exponents:
            v = _as_int_vector(exp, self.dimension)
            if v not in cleaned:
                cleaned.append(v)
        object.__setattr__(self, "exponents", tuple(cleaned))


@dataclass(frozen=True)
class Chart:
    """Affine coordinate patch on a product of projective lines.

    signs[k] = +1 keeps the k-th coordinate z_{k+1}; -1 swaps in its
    reciprocal.
    """

    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        signs = tuple(self.signs)
        if not signs:
            raise ValueError("a chart needs at least one factor")
        if any(s not in (1, -1) for s in signs):
            raise ValueError("chart signs must be +1 or -1")
        object.__setattr__(self, "signs", signs)

    def tokens(self) -> tuple[str, ...]:
        """Coordinate tokens, e.g. ('z1', 'z2^-1')."""
        return tuple(f"z{k + 1}" if s == 1 else f"z{k + 1}^-1"
                     for k, s in enumerate(self.signs))

    def label(self) -> str:
        return "(" + ", ".join(self.tokens()) + ")"


@dataclass(frozen=True)
class Fan:
    """Rays plus maximal cones; here always the orthant fan of (P^1)^n."""

    dimension: int
    rays: tuple[IntVector, ...]
    maximal_cones: tuple[Cone, ...]

    def __post_init__(self) -> None:
        rays = tuple(_as_int_vector(r, self.dimension) for r in self.rays)
        if len(set(rays)) != len(rays):
            raise ValueError("rays must be distinct")
        ray_set = set(rays)
        seen: set[frozenset[IntVector]] = set()
        for cone in self.maximal_cones:
            if cone.dimension != self.dimension:
                raise ValueError("maximal cone dimension mismatch")
            if len(cone.generators) != self.dimension:
                raise ValueError("maximal cones must have one generator per dimension")
            if not set(cone.generators) <= ray_set:
                raise ValueError("maximal cone generators must be rays of the fan")
            if not is_simplicial(cone):
                # independence also gives strong convexity for these cones
                raise ValueError("maximal cones must be simplicial")
            key = frozenset(cone.generators)
            if key in seen:
                raise ValueError("maximal cones must be pairwise distinct")
            seen.add(key)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "maximal_cones", tuple(self.maximal_cones))


# ---------------------------------------------------------------------------
# exact linear algebra on small integer matrices


def _int_rank(rows: Sequence[IntVector]) -> int:
    """Rank over the rationals of an integer matrix, by fraction-free elimination."""
    if not rows:
        return 0
    m = [list(r) for r in rows]
    cols = len(m[0])
    row = 0
    for col in range(cols):
        pivot = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        for r in range(row + 1, len(m)):
            if m[r][col] != 0:
                factor, lead = m[r][col], m[row][col]
                m[r] = [lead * m[r][c] - factor * m[row][c] for c in range(cols)]
        row += 1
        if row == len(m):
            break
    return row


def _int_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, exact divisions)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _solve_square(generators: Sequence[IntVector], point: IntVector) -> list[Fraction]:
    """Cramer solve of sum_j c_j * g_j = point for d independent generators."""
    d = len(point)
    base = [[generators[j][i] for j in range(d)] for i in range(d)]
    det = _int_det(base)
    if det == 0:
        raise NonSimplicialCone("generators are linearly dependent")
    coeffs = []
    for j in range(d):
        replaced = [row[:] for row in base]
        for i in range(d):
            replaced[i][j] = point[i]
        coeffs.append(Fraction(_int_det(replaced), det))
    return coeffs


def _solve_rectangular(generators: Sequence[IntVector],
                       point: IntVector) -> list[Fraction] | None:
    """Exact solve for k < d independent generators; None if point leaves the span."""
    k, d = len(generators), len(point)
    rows = [[Fraction(generators[j][i]) for j in range(k)] + [Fraction(point[i])]
            for i in range(d)]
    rank = 0
    for col in range(k):
        pivot = next((r for r in range(rank, d) if rows[r][col] != 0), None)
        if pivot is None:
            raise NonSimplicialCone("generators are linearly dependent")
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [x / lead for x in rows[rank]]
        for r in range(d):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    for r in range(rank, d):
        if rows[r][k] != 0:
            return None
    return [rows[j][k] for j in range(k)]


def _invert_rows(rows: Sequence[IntVector]) -> list[list[Fraction]]:
    """Exact inverse of a square integer matrix given by its rows."""
    d = len(rows)
    aug = [[Fraction(rows[i][j]) for j in range(d)]
           + [Fraction(1 if k == i else 0) for k in range(d)] for i in range(d)]
    for col in range(d):
        pivot = next((r for r in range(col, d) if aug[r][col] != 0), None)
        if pivot is None:
            raise NonSimplicialCone("generators are linearly dependent")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for r in range(d):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[d:] for row in aug]


# ---------------------------------------------------------------------------
# cone predicates


def is_simplicial(cone: Cone) -> bool:
    """True when the generators are linearly independent over the rationals.

    The zero cone (no generators) counts as simplicial.
    """
    gens = cone.generators
    if not gens:
        return True
    if len(gens) > cone.dimension:
        return False
    return _int_rank(gens) == len(gens)


def is_strongly_convex(cone: Cone) -> bool:
    """True when the cone contains no line through the origin.

    For simplicial cones this is exactly linear independence of the
    generators, which is the implemented criterion; dependent generator
    sets therefore report False.
    """
    return is_simplicial(cone)


def cone_contains(cone: Cone, point: Sequence[int]) -> bool:
    """Exact membership: point is a nonnegative rational combination of the generators.

    Only simplicial cones are supported; dependent generator sets raise
    `NonSimplicialCone`.
    """
    p = _as_int_vector(point, cone.dimension)
    gens = cone.generators
    if not gens:
        return all(c == 0 for c in p)
    if len(gens) > cone.dimension:
        raise NonSimplicialCone("more generators than the dimension allows")
    if len(gens) == cone.dimension:
        coeffs = _solve_square(gens, p)
    else:
        maybe = _solve_rectangular(gens, p)
        if maybe is None:
            return False
        coeffs = maybe
    return all(c >= 0 for c in coeffs)


def dual_cone(cone: Cone) -> Cone:
    """Dual cone {u : <u, v> >= 0 for all v in the cone}, for full-dimensional simplicial input.

    With generators as the rows of V, the dual is generated by the columns
    of V^-1 (the rows of the inverse transpose), each cleared to a primitive
    integer vector with its direction preserved.
    """
    gens = cone.generators
    d = cone.dimension
    if not is_simplicial(cone):
        raise NonSimplicialCone("dual_cone requires linearly independent generators")
    if len(gens) != d:
        raise NotFullDimensional(
            f"dual_cone requires {d} generators spanning the space, got {len(gens)}")
    inverse = _invert_rows(gens)
    duals = tuple(primitive_vector(tuple(inverse[i][k] for i in range(d)))
                  for k in range(d))
    return Cone(d, duals)


def support_in_cone(support: LaurentSupport, cone: Cone) -> bool:
    """Whether every exponent of the support lies in the cone.

    This is membership of the monomials in the cone's coordinate algebra;
    the empty support passes vacuously.
    """
    if support.dimension != cone.dimension:
        raise ValueError("support and cone dimensions differ")
    return all(cone_contains(cone, e) for e in support.exponents)


# ---------------------------------------------------------------------------
# the (P^1)^n family


def _check_factor_count(n: int) -> None:
    if not 1 <= n <= MAX_FACTORS:
        raise ValueError(f"factor count must lie in 1..{MAX_FACTORS}")


def _sign_patterns(n: int) -> Iterable[tuple[int, ...]]:
    # all-positive first, then single inversions in slot order, then pairs
    # in lexicographic slot order, and so on
    for count in range(n + 1):
        for inverted in itertools.combinations(range(n), count):
            pattern = [1] * n
            for slot in inverted:
                pattern[slot] = -1
            yield tuple(pattern)


def product_p1_charts(n: int) -> list[Chart]:
    """All 2^n affine charts of the n-fold product of projective lines."""
    _check_factor_count(n)
    return [Chart(signs) for signs in _sign_patterns(n)]


def orthant_cone(signs: Sequence[int]) -> Cone:
    """Signed orthant spanned by {signs[k] * e_k}."""
    d = len(signs)
    gens = tuple(tuple(signs[k] if i == k else 0 for i in range(d))
                 for k in range(d))
    return Cone(d, gens)


def product_p1_fan(n: int) -> Fan:
    """Orthant fan of (P^1)^n: rays {+-e_k}, one maximal cone per chart.

    Maximal cones are listed in the same order as `product_p1_charts`, so
    chart k and cone k share a sign pattern.
    """
    _check_factor_count(n)
    plus = tuple(tuple(1 if i == k else 0 for i in range(n)) for k in range(n))
    minus = tuple(tuple(-1 if i == k else 0 for i in range(n)) for k in range(n))
    cones = tuple(orthant_cone(signs) for signs in _sign_patterns(n))
    return Fan(n, plus + minus, cones)


def moment_polytope(n: int) -> Polytope:
    """Moment polytope of (P^1)^n: the unit n-cube with vertices {0,1}^n."""
    _check_factor_count(n)
    verts = tuple(tuple((x >> (n - 1 - k)) & 1 for k in range(n))
                  for x in range(1 << n))
    return Polytope(n, verts)


# ---------------------------------------------------------------------------
# text serialization


def fan_to_text(fan: Fan) -> str:
    """`dim=<n>` header, `ray <ints>` lines, then `cone <ray indices>` lines."""
    lines = [f"dim={fan.dimension}"]
    for ray in fan.rays:
        lines.append("ray " + " ".join(str(c) for c in ray))
    ray_index = {ray: i for i, ray in enumerate(fan.rays)}
    for cone in fan.maximal_cones:
        lines.append("cone " + " ".join(str(ray_index[g]) for g in cone.generators))
    return "\n".join(lines) + "\n"


def polytope_to_text(polytope: Polytope) -> str:
    """`dim=<n>` header followed by `vertex <ints>` lines."""
    lines = [f"dim={polytope.dimension}"]
    for vert in polytope.vertices:
        lines.append("vertex " + " ".join(str(c) for c in vert))
    return "\n".join(lines) + "\n"
