"""Lattice polytopes and vertex matrices used by the realization constructions."""
from __future__ import annotations

from fractions import Fraction

from .exact import as_rational
from .wedge import Polytope4


def e(*idx: int) -> tuple[int, int, int, int]:
    """Sum of standard basis vectors ``e_i`` (1-based); ``e()`` is the origin."""
    return tuple(1 if k in idx else 0 for k in range(1, 5))


def segment(u, v) -> Polytope4:
    return Polytope4([u, v])


# The three segments pairing up {1,2,3,4}.
D12_34 = segment(e(1, 2), e(3, 4))
D13_24 = segment(e(1, 3), e(2, 4))
D14_23 = segment(e(1, 4), e(2, 3))

# Symmetric-case generators: P, Q, R wedged against D12_34 give
# (4,2,2,2,2,4), (2,2,0,0,2,2) and (2,2,2,2,2,2).
P = D13_24.minkowski(D14_23)
Q = D13_24
R = segment(e(1), e(2)).minkowski(segment(e(3), e(4)))

# R_kl wedged against D12_34 is the all-ones vector with a zero at kl.
# For kl = 23 the fourth vertex pair is (e1, e4); the pair (e3, e4) would
# give (2,1,1,1,1,0) instead.
R_BLOCKS: dict[tuple[int, int], Polytope4] = {
    (1, 2): Polytope4([e(1, 2), e(3, 4), e(1), e()]),
    (1, 3): Polytope4([e(1, 2), e(3, 4), e(2), e(4)]),
    (1, 4): Polytope4([e(1, 2), e(3, 4), e(2), e(3)]),
    (2, 3): Polytope4([e(1, 2), e(3, 4), e(1), e(4)]),
    (2, 4): Polytope4([e(1, 2), e(3, 4), e(1), e(3)]),
    (3, 4): Polytope4([e(1, 2), e(3, 4), e(3), e()]),
}

# Lattice polytopes A with A∧A equal to each canonical degenerate vector.
A_BLOCKS: dict[tuple[int, ...], Polytope4] = {
    (1, 1, 1, 1, 1, 0): Polytope4([e(1, 2), e(3), e(4)]),          # A2
    (1, 1, 0, 1, 0, 0): Polytope4([e(), e(1, 2, 3), e(4)]),        # A3
    (0, 1, 1, 1, 1, 0): Polytope4([e(), e(1, 2), e(3, 4)]),        # A4
    (1, 1, 1, 0, 0, 0): Polytope4([e(2), e(3), e(4)]),             # A5
    (1, 1, 0, 0, 0, 0): Polytope4([e(), e(2, 3), e(4)]),           # A6
    (1, 0, 0, 0, 0, 0): Polytope4([e(), e(3), e(4)]),              # A7
}

# Lattice polytope with projection areas (2,2,2,2,2,8), twice (1,1,1,1,1,4).
BOUNDARY_EXAMPLE = Polytope4([(2, 0, 0, 0), (0, 2, 0, 0), (2, 2, 0, 0),
                              e(3), e(4), e(3, 4)])

# Vertex matrices of the boundary family: A(c) = conv(columns of L + c M).
L_MATRIX = (
    (0, -1, 0, -1, -1, 0, 0, 0, 1, 1, 1, 0, 0, -1, 1, 0),
    (0, -1, 0, 1, 1, 0, 0, 0, 1, 1, -1, 0, 0, -1, -1, 0),
    (1, 0, -1, 0, 0, -1, -1, 1, 0, 0, 0, 1, -1, 0, 0, 1),
    (1, 0, -1, 0, 0, 1, 1, 1, 0, 0, 0, -1, -1, 0, 0, -1),
)
M_MATRIX = (
    (0, 0, 0, 0, 1, 0, -1, -1, -1, 0, 0, 1, 1, 1, -1, 0),
    (-2, 0, 0, -2, -1, 0, -1, -1, -1, -2, 0, -1, -1, -1, -1, -2),
    (0, 0, 0, 0, -1, 0, 1, -1, -1, 0, 0, -1, 1, 1, 1, 0),
    (-2, 0, 0, 0, -1, -2, -1, -1, -1, -2, -2, -1, -1, -1, -1, 0),
)
# Facet normal directions of the boundary family (up to sign).
N_MATRIX = (
    (1, 1, 1, 1, 0, 0, 0, 0, -1, -1, -1, -1, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, -1, -1, -1, -1),
    (1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0),
    (0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1),
)


def columns(matrix) -> list[tuple[int, ...]]:
    return [tuple(row[k] for row in matrix) for k in range(len(matrix[0]))]


def boundary_family_support(c) -> tuple[Fraction, ...]:
    """Offsets ``a_i`` with ``A(c) = {x : <x, N_i> >= a_i}``, indexed like the columns of N."""
    c = as_rational(c)
    return tuple(-x for x in (1, 1, 1, 1, 1, 1 + 2 * c, 1 + 2 * c, 1,
                              1, 1 + 2 * c, 1, 1 - 2 * c, 1, 1, 1 - 2 * c, 1 - 2 * c))


def boundary_family(c) -> Polytope4:
    """The polytope spanned by the columns of ``L + c M``."""
    c = as_rational(c)
    return Polytope4(tuple(l + c * m for l, m in zip(lc, mc))
                     for lc, mc in zip(columns(L_MATRIX), columns(M_MATRIX)))
