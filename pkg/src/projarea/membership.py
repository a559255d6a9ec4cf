"""Decision procedures for the triangle-inequality regions T2 and T1.

A wedge vector ``p`` pairs its entries into three products
``a = p12 p34``, ``b = p13 p24``, ``c = p14 p23``. It lies in T2 when
``sqrt(a), sqrt(b), sqrt(c)`` satisfy all three triangle inequalities, and in
T1 when ``a, b, c`` themselves do.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import NonIntegerInput, NotApplicable
from .exact import EQUAL, LESS, SymMatrix, cmp_sqrt_sum, sign
from .wedge import (
    PAIRS,
    PermutedScaling,
    WedgeVector,
    act,
    complement,
    equivalent_over_q,
    symmetric_products,
)


class Region(str, enum.Enum):
    T2 = "T2"
    T1 = "T1"


class Status(str, enum.Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


class Constraint(NamedTuple):
    """A single defining constraint, 1-based.

    ``kind == "entry"``: ``indices`` is a pair ``(i, j)`` naming ``p_ij >= 0``.
    ``kind == "triangle"``: ``indices`` is ``(i, j, k, l)`` naming
    ``f(p_ij p_kl) + f(p_ik p_jl) >= f(p_il p_jk)`` where ``f`` is the square
    root for T2 and the identity for T1.
    """

    kind: str
    indices: tuple[int, ...]

    def describe(self, region: Region = Region.T2) -> str:
        if self.kind == "entry":
            i, j = self.indices
            return f"p{i}{j} >= 0"
        i, j, k, l = self.indices
        terms = [f"p{min(x, y)}{max(x, y)}*p{min(z, w)}{max(z, w)}"
                 for (x, y), (z, w) in (((i, j), (k, l)), ((i, k), (j, l)), ((i, l), (j, k)))]
        if region == Region.T2:
            terms = [f"sqrt({t})" for t in terms]
        return f"{terms[0]} + {terms[1]} >= {terms[2]}"


# The triangle constraint whose right-hand side is each symmetric product:
# index 0 of the triple is p12 p34, 1 is p13 p24, 2 is p14 p23.
TRIANGLES: tuple[tuple[int, Constraint], ...] = (
    (2, Constraint("triangle", (1, 2, 3, 4))),
    (1, Constraint("triangle", (1, 2, 4, 3))),
    (0, Constraint("triangle", (1, 3, 4, 2))),
)


@dataclass(frozen=True)
class MembershipVerdict:
    region: Region
    status: Status
    constraint: Constraint | None = None

    @property
    def witness(self) -> str:
        if self.constraint is None:
            return ""
        verb = "violated" if self.status == Status.OUTSIDE else "tight"
        return f"{verb}: {self.constraint.describe(self.region)}"

    @property
    def inside(self) -> bool:
        return self.status != Status.OUTSIDE


def evaluate_constraint(p: Sequence, region: Region, constraint: Constraint) -> int:
    """Return ``GREATER`` if ``constraint`` holds strictly, ``EQUAL`` if tight, ``LESS`` if violated."""
    p = WedgeVector.of(p)
    if constraint.kind == "entry":
        i, j = constraint.indices
        return sign(p.entry(i - 1, j - 1))
    products = symmetric_products(p)
    rhs = next(k for k, c in TRIANGLES if c == constraint)
    x, y = (products[k] for k in range(3) if k != rhs)
    z = products[rhs]
    if region == Region.T2:
        if min(x, y, z) < 0:
            return LESS
        return cmp_sqrt_sum(x, y, z)
    return sign(x + y - z)


def _membership(p: Sequence, region: Region) -> MembershipVerdict:
    p = WedgeVector.of(p)
    for k, (i, j) in enumerate(PAIRS):
        if p[k] < 0:
            return MembershipVerdict(region, Status.OUTSIDE, Constraint("entry", (i + 1, j + 1)))
    tight = None
    for _, c in TRIANGLES:
        r = evaluate_constraint(p, region, c)
        if r == LESS:
            return MembershipVerdict(region, Status.OUTSIDE, c)
        if r == EQUAL and tight is None:
            tight = c
    if tight is None:
        zero = next((k for k in range(6) if p[k] == 0), None)
        if zero is not None:
            i, j = PAIRS[zero]
            tight = Constraint("entry", (i + 1, j + 1))
    if tight is not None:
        return MembershipVerdict(region, Status.BOUNDARY, tight)
    return MembershipVerdict(region, Status.INTERIOR)


def t2_membership(p: Sequence) -> MembershipVerdict:
    """Interior, boundary or outside for the square-root triangle region.

    Any zero entry puts a vector on the boundary, even when all three
    triangle inequalities are strict.
    """
    return _membership(p, Region.T2)


def t1_membership(p: Sequence) -> MembershipVerdict:
    return _membership(p, Region.T1)


def lorentz_matrix(p: Sequence) -> SymMatrix:
    """Zero-diagonal symmetric matrix with ``(i, j)`` entry ``p_ij``."""
    p = WedgeVector.of(p)
    return SymMatrix([[0 if i == j else p.entry(i, j) for j in range(4)] for i in range(4)])


ZERO_REPRESENTATIVES: tuple[WedgeVector, ...] = tuple(WedgeVector.of(v) for v in (
    (1, 1, 1, 1, 1, 0),
    (1, 1, 0, 1, 0, 0),
    (0, 1, 1, 1, 1, 0),
    (1, 1, 1, 0, 0, 0),
    (1, 1, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0),
))


@dataclass(frozen=True)
class ZeroOrbitClass:
    representative: WedgeVector
    witness: PermutedScaling | None


def _representative_for(p: WedgeVector) -> WedgeVector:
    products = symmetric_products(p)
    nonzero = sum(p.support())
    if sum(1 for x in products if x == 0) == 1:
        # One matching product vanishes and the other two agree.
        return ZERO_REPRESENTATIVES[0] if nonzero == 5 else ZERO_REPRESENTATIVES[2]
    # Every matching has a zero, so the support graph has no two disjoint edges.
    edges = [PAIRS[k] for k in range(6) if p[k] != 0]
    if len(edges) == 3:
        shared = set(edges[0]) & set(edges[1]) & set(edges[2])
        return ZERO_REPRESENTATIVES[3] if shared else ZERO_REPRESENTATIVES[1]
    return ZERO_REPRESENTATIVES[4] if len(edges) == 2 else ZERO_REPRESENTATIVES[5]


def classify_zero_orbit(p: Sequence) -> ZeroOrbitClass:
    """Canonical representative of a degenerate vector together with a rational witness.

    Returns ``ZeroOrbitClass(rep, g)`` with ``act(g, rep) == p``. The zero
    vector is its own class and carries no witness.
    """
    p = WedgeVector.of(p)
    if all(p.support()):
        raise NotApplicable("vector has no zero entry")
    if t2_membership(p).status == Status.OUTSIDE:
        raise NotApplicable("vector is outside T2")
    if not any(p.support()):
        raise NotApplicable("the zero vector has no degenerate orbit representative")
    rep = _representative_for(p)
    g = equivalent_over_q(rep, p)
    if g is None:
        from .errors import CertificateError

        raise CertificateError(f"no rational witness from {tuple(rep)} to {tuple(map(str, p))}")
    return ZeroOrbitClass(rep, g)


def z_obstruction(p: Sequence) -> list[tuple[int, int, int, int]]:
    """Quadruples ``(i, j, k, l)`` with ``p_ij > 0`` and ``p_kl > p_ik p_jl + p_il p_jk``.

    This is a necessary condition for integral realizability only: an empty
    list rules out this obstruction and nothing more.
    """
    p = WedgeVector.of(p)
    if any(x.denominator != 1 for x in p):
        raise NonIntegerInput(f"integer entries required, got {tuple(map(str, p))}")
    if not p.is_nonnegative():
        raise NonIntegerInput("entries must be nonnegative integers")
    flagged = []
    for i, j in PAIRS:
        k, l = complement(i, j)
        if p.entry(i, j) > 0 and p.entry(k, l) > p.entry(i, k) * p.entry(j, l) + p.entry(i, l) * p.entry(j, k):
            flagged.append((i + 1, j + 1, k + 1, l + 1))
    return flagged


# --- seeded samplers -------------------------------------------------------

STRATA = ("interior", "boundary", "zero-entry")


def _rand_rational(rng: random.Random, lo, hi, max_den: int = 12) -> Fraction:
    """A rational in ``[lo, hi]`` with denominator at most ``max_den``."""
    lo, hi = Fraction(lo), Fraction(hi)
    den = rng.randint(1, max_den)
    a = -((-lo * den) // 1)  # ceil
    b = (hi * den) // 1
    if a > b:
        return lo
    return Fraction(rng.randint(int(a), int(b)), den)


def _random_group_element(rng: random.Random) -> PermutedScaling:
    choices = [Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(3, 2), Fraction(2)]
    sigma = list(range(4))
    rng.shuffle(sigma)
    return PermutedScaling(rng.choice(choices), [rng.choice(choices) for _ in range(4)], sigma)


def _split(rng: random.Random, product: Fraction, bound: Fraction) -> tuple[Fraction, Fraction]:
    """Positive ``(x, product / x)`` with both factors at most ``bound``."""
    lo = max(product / bound, Fraction(1, 12))
    x = _rand_rational(rng, lo, bound)
    if x < lo or x <= 0:
        x = lo
    return x, product / x


def _sample_interior(rng, bound) -> WedgeVector:
    while True:
        p = WedgeVector(*(_rand_rational(rng, Fraction(1, 12), bound) for _ in range(6)))
        if t2_membership(p).status == Status.INTERIOR:
            return p


def _sample_boundary(rng, bound) -> WedgeVector:
    while True:
        alpha = _rand_rational(rng, Fraction(1, 6), bound / 2)
        beta = _rand_rational(rng, Fraction(1, 6), bound / 2)
        products = [alpha * alpha, beta * beta, (alpha + beta) ** 2]
        if products[2] > bound * bound:
            continue
        rng.shuffle(products)
        entries = [Fraction(0)] * 6
        for (x, y), prod in zip(((0, 5), (1, 4), (2, 3)), products):
            entries[x], entries[y] = _split(rng, prod, bound)
        p = WedgeVector(*entries)
        if max(p) <= bound and t2_membership(p).status == Status.BOUNDARY:
            return p


def _sample_zero_entry(rng, bound) -> WedgeVector:
    while True:
        rep = rng.choice(ZERO_REPRESENTATIVES)
        p = act(_random_group_element(rng), rep)
        if max(p) <= bound:
            return p


def sample_t2(seed: int, count: int, stratum: str, bound=10) -> list[WedgeVector]:
    """Deterministic rational samples from one stratum of T2, entries at most ``bound``.

    ``interior`` draws by rejection, ``boundary`` solves a tight triangle
    equation with square products, ``zero-entry`` moves a canonical
    degenerate vector by a random group element.
    """
    if stratum not in STRATA:
        raise ValueError(f"unknown stratum {stratum!r}; expected one of {STRATA}")
    if count < 0:
        raise ValueError("count must be nonnegative")
    rng = random.Random(f"{stratum}:{seed}")
    bound = Fraction(bound)
    draw = {"interior": _sample_interior, "boundary": _sample_boundary,
            "zero-entry": _sample_zero_entry}[stratum]
    return [draw(rng, bound) for _ in range(count)]


__all__ = [
    "Constraint", "MembershipVerdict", "Region", "Status", "ZeroOrbitClass", "ZERO_REPRESENTATIVES",
    "STRATA", "classify_zero_orbit", "evaluate_constraint", "lorentz_matrix", "sample_t2",
    "t1_membership", "t2_membership", "z_obstruction",
]
