"""Multiplicity lattices and their square fundamental cells.

The multiples of a nonzero g in Z[i] form a square sublattice with basis
(g, i*g).  A fundamental cell is the closed square spanned by those two side
vectors at a base vertex of the sublattice; its Euclidean area equals
norm(g).  Point counts are brute-force scans with exact integer half-plane
predicates (no floating point), so the area/interior/boundary identity
A = I + B/2 - 1 can be asserted with equality.
"""

from dataclasses import dataclass, field
from math import gcd as int_gcd

from . import kernels
from .gaussian import GaussianInt, I, ZERO, divides, norm


@dataclass(frozen=True)
class MultiplicityLattice:
    """The sublattice {w * generator : w in Z[i]} of Z x iZ."""

    generator: GaussianInt

    def __post_init__(self):
        if self.generator.is_zero:
            raise ValueError("multiplicity lattice needs a nonzero generator")

    @property
    def basis(self) -> tuple[GaussianInt, GaussianInt]:
        return (self.generator, I * self.generator)

    def contains(self, z: GaussianInt) -> bool:
        return contains(self, z)

    def fundamental_domain(self, base_vertex: GaussianInt = ZERO) -> "FundamentalDomain":
        return FundamentalDomain(self.generator, base_vertex)


@dataclass(frozen=True)
class FundamentalDomain:
    """Closed square cell of the lattice of multiples of `generator`, with
    side vectors (generator, i*generator) hanging off `base_vertex`."""

    generator: GaussianInt
    base_vertex: GaussianInt = field(default=ZERO)

    def __post_init__(self):
        if self.generator.is_zero:
            raise ValueError("fundamental domain needs a nonzero generator")
        if not divides(self.generator, self.base_vertex):
            raise ValueError("base vertex must lie on the multiplicity lattice")

    @property
    def side_vectors(self) -> tuple[GaussianInt, GaussianInt]:
        return (self.generator, I * self.generator)

    @property
    def vertices(self) -> tuple[GaussianInt, ...]:
        g, ig = self.side_vectors
        b = self.base_vertex
        return (b, b + g, b + g + ig, b + ig)

    @property
    def area(self) -> int:
        return norm(self.generator)


@dataclass(frozen=True)
class PickReport:
    """Exact area / interior / boundary counts for one cell."""

    area: int
    interior: int
    boundary: int

    @property
    def holds(self) -> bool:
        # A = I + B/2 - 1, compared doubled so it stays in integers.
        return 2 * self.area == 2 * self.interior + self.boundary - 2


def contains(lattice: MultiplicityLattice, z: GaussianInt) -> bool:
    """Membership via the basis representation: z = s*g + t*(i*g) has an
    integer solution iff both scaled coordinates vanish mod norm(g)."""
    g = lattice.generator
    n = g.norm()
    s_scaled = z.re * g.re + z.im * g.im
    t_scaled = z.im * g.re - z.re * g.im
    return s_scaled % n == 0 and t_scaled % n == 0


def count_interior_points(domain: FundamentalDomain) -> int:
    """Lattice points strictly inside the cell, by bounding-box scan."""
    g, b = domain.generator, domain.base_vertex
    interior, _ = kernels.domain_point_counts(g.re, g.im, b.re, b.im)
    return interior


def count_boundary_points(domain: FundamentalDomain) -> int:
    """Lattice points on the closed cell boundary, vertices counted once."""
    g, b = domain.generator, domain.base_vertex
    _, boundary = kernels.domain_point_counts(g.re, g.im, b.re, b.im)
    return boundary


def pick_identity_check(domain: FundamentalDomain) -> PickReport:
    """Exact (A, I, B) for the cell; .holds flags A = I + B/2 - 1."""
    g, b = domain.generator, domain.base_vertex
    interior, boundary = kernels.domain_point_counts(g.re, g.im, b.re, b.im)
    return PickReport(area=domain.area, interior=interior, boundary=boundary)


def is_primitive_segment(p1: GaussianInt, p2: GaussianInt) -> bool:
    """True iff the closed segment from p1 to p2 carries no lattice point
    besides its endpoints, i.e. gcd(|dx|, |dy|) = 1."""
    if p1 == p2:
        raise ValueError("segment endpoints must differ")
    return int_gcd(abs(p2.re - p1.re), abs(p2.im - p1.im)) == 1
