"""Four-dimensional polytopes and their projection mixed-area vectors.

Index convention: ``p_ij`` is the mixed area of the two projections that
*delete* coordinates ``i`` and ``j`` and keep the complementary pair. Entries
are always ordered ``(p12, p13, p14, p23, p24, p34)``.

Pairs in the public API are 1-based, as in ``project(A, (1, 2))``; internal
helpers work with 0-based coordinates.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import BadIndexPair, NegativeEntry
from .exact import as_rational, is_rational_square
from .polygon import ConvexPolygon, clear_denominators, hull, hull_indices, mixed_area

# 0-based coordinate pairs in wedge-vector order.
PAIRS: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
PAIR_INDEX: dict[tuple[int, int], int] = {}
for _k, (_i, _j) in enumerate(PAIRS):
    PAIR_INDEX[_i, _j] = PAIR_INDEX[_j, _i] = _k
# The three perfect matchings of {0,1,2,3}, as index pairs into the wedge vector:
# (p12, p34), (p13, p24), (p14, p23).
MATCHINGS: tuple[tuple[int, int], ...] = ((0, 5), (1, 4), (2, 3))


def complement(i: int, j: int) -> tuple[int, int]:
    k, l = (m for m in range(4) if m not in (i, j))
    return k, l


class WedgeVector(NamedTuple):
    p12: Fraction
    p13: Fraction
    p14: Fraction
    p23: Fraction
    p24: Fraction
    p34: Fraction

    @classmethod
    def of(cls, *values) -> "WedgeVector":
        """Build from six values or a single iterable/comma-separated string."""
        if len(values) == 1:
            (v,) = values
            if isinstance(v, str):
                v = v.split(",")
            values = tuple(v)
        if len(values) != 6:
            from .errors import ParseError

            raise ParseError(f"a wedge vector has 6 entries, got {len(values)}")
        return cls(*(as_rational(x) for x in values))

    @classmethod
    def zero(cls) -> "WedgeVector":
        return cls(*([Fraction(0)] * 6))

    def entry(self, i: int, j: int) -> Fraction:
        """Entry for 0-based coordinates ``i != j``."""
        return self[PAIR_INDEX[i, j]]

    def plus(self, other: Sequence) -> "WedgeVector":
        return WedgeVector(*(a + as_rational(b) for a, b in zip(self, other)))

    def minus(self, other: Sequence) -> "WedgeVector":
        return WedgeVector(*(a - as_rational(b) for a, b in zip(self, other)))

    def scaled(self, t) -> "WedgeVector":
        t = as_rational(t)
        return WedgeVector(*(t * a for a in self))

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self)

    def support(self) -> tuple[bool, ...]:
        return tuple(x != 0 for x in self)


class SymmetricTriple(NamedTuple):
    a: Fraction  # p12 * p34
    b: Fraction  # p13 * p24
    c: Fraction  # p14 * p23


def symmetric_products(p: Sequence) -> SymmetricTriple:
    p = WedgeVector.of(p) if not isinstance(p, WedgeVector) else p
    return SymmetricTriple(*(p[x] * p[y] for x, y in MATCHINGS))


Point4 = tuple[Fraction, Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class Polytope4:
    """Convex hull of a finite, deduplicated set of points in Q^4.

    Generators are kept sorted so equal generator sets compare equal. No 4D
    hull is ever computed; the generator list need not be minimal.
    """

    generators: tuple[Point4, ...]

    def __init__(self, points: Iterable[Sequence]):
        pts = []
        for p in points:
            if len(p) != 4:
                raise ValueError(f"expected a point in Q^4, got {p!r}")
            pts.append(tuple(as_rational(x) for x in p))
        if not pts:
            from .errors import EmptyInput

            raise EmptyInput("a polytope needs at least one generator")
        pts.sort()
        unique = [pts[0]]
        for p in pts[1:]:
            if p != unique[-1]:
                unique.append(p)
        object.__setattr__(self, "generators", tuple(unique))

    @classmethod
    def point(cls, p: Sequence = (0, 0, 0, 0)) -> "Polytope4":
        return cls([p])

    def __len__(self) -> int:
        return len(self.generators)

    def minkowski(self, other: "Polytope4") -> "Polytope4":
        return Polytope4(tuple(a + b for a, b in zip(x, y))
                         for x in self.generators for y in other.generators)

    def scaled(self, t) -> "Polytope4":
        t = as_rational(t)
        return Polytope4(tuple(t * a for a in x) for x in self.generators)

    def translated(self, v: Sequence) -> "Polytope4":
        v = [as_rational(a) for a in v]
        return Polytope4(tuple(a + b for a, b in zip(x, v)) for x in self.generators)

    def map_coordinates(self, sigma: Sequence[int], c: Sequence) -> "Polytope4":
        """Send ``x`` to ``x'`` with ``x'_i = x_{sigma^-1(i)} / c_i`` (0-based sigma)."""
        inv = [0] * 4
        for m, s in enumerate(sigma):
            inv[s] = m
        c = [as_rational(v) for v in c]
        return Polytope4(tuple(x[inv[i]] / c[i] for i in range(4)) for x in self.generators)


def minkowski_all(bodies: Iterable[Polytope4], reduce: bool = False) -> Polytope4:
    """Minkowski sum of several bodies, optionally shadow-reducing after each step."""
    acc = Polytope4.point()
    for body in bodies:
        acc = acc.minkowski(body)
        if reduce:
            acc = shadow_reduce(acc)
    return acc


def _check_pair(pair: Sequence[int]) -> tuple[int, int]:
    try:
        i, j = (int(x) for x in pair)
    except (TypeError, ValueError) as exc:
        raise BadIndexPair(f"bad index pair {pair!r}") from exc
    if not 1 <= i < j <= 4:
        raise BadIndexPair(f"index pair must satisfy 1 <= i < j <= 4, got {pair!r}")
    return i - 1, j - 1


def _project0(a: Polytope4, i: int, j: int) -> ConvexPolygon:
    k, l = complement(i, j)
    return hull((x[k], x[l]) for x in a.generators)


def project(a: Polytope4, pair: Sequence[int]) -> ConvexPolygon:
    """Image of ``a`` under the projection deleting coordinates ``pair`` (1-based)."""
    i, j = _check_pair(pair)
    return _project0(a, i, j)


def wedge(a: Polytope4, b: Polytope4) -> WedgeVector:
    """The vector of mixed areas of the six coordinate projections."""
    return WedgeVector(*(mixed_area(_project0(a, i, j), _project0(b, i, j)) for i, j in PAIRS))


def shadow_reduce(a: Polytope4) -> Polytope4:
    """Keep only generators that map to a vertex of some coordinate projection.

    The result may be a smaller body than ``a``, but all six projections, and
    therefore every wedge against any other body, are unchanged. Because
    projections commute with Minkowski sums, reduction can be applied after
    every step of an iterated sum.
    """
    _, ints = clear_denominators(a.generators)
    keep = set()
    for i, j in PAIRS:
        k, l = complement(i, j)
        verts = set(hull_indices([(x[k], x[l]) for x in ints]))
        for idx, x in enumerate(ints):
            key = (x[k], x[l])
            if key in verts:
                verts.discard(key)
                keep.add(idx)
    return Polytope4(a.generators[idx] for idx in sorted(keep))


@dataclass(frozen=True)
class PermutedScaling:
    """Element ``(lam, c1..c4, sigma)`` of ``Q_{>0} x Q_{>0}^4 x| S_4``.

    ``sigma`` is stored 0-based: ``sigma[m]`` is the image of coordinate ``m``.
    Acting on a wedge vector first relabels indices by ``sigma`` and then
    multiplies entry ``ij`` by ``lam * c_i * c_j``.
    """

    lam: Fraction
    c: tuple[Fraction, Fraction, Fraction, Fraction]
    sigma: tuple[int, int, int, int] = (0, 1, 2, 3)

    def __init__(self, lam=1, c=(1, 1, 1, 1), sigma=(0, 1, 2, 3)):
        lam = as_rational(lam)
        c = tuple(as_rational(x) for x in c)
        sigma = tuple(int(s) for s in sigma)
        if lam <= 0 or len(c) != 4 or any(x <= 0 for x in c):
            raise ValueError("lambda and all c_i must be positive")
        if sorted(sigma) != [0, 1, 2, 3]:
            raise ValueError(f"not a permutation of 0..3: {sigma!r}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "sigma", sigma)

    @classmethod
    def identity(cls) -> "PermutedScaling":
        return cls()

    @classmethod
    def permutation(cls, sigma: Sequence[int]) -> "PermutedScaling":
        return cls(1, (1, 1, 1, 1), sigma)

    def __mul__(self, other: "PermutedScaling") -> "PermutedScaling":
        """Composition: ``act(g * h, p) == act(g, act(h, p))``."""
        inv = self.inverse_sigma()
        c = tuple(self.c[i] * other.c[inv[i]] for i in range(4))
        sigma = tuple(self.sigma[other.sigma[m]] for m in range(4))
        return PermutedScaling(self.lam * other.lam, c, sigma)

    def inverse_sigma(self) -> tuple[int, ...]:
        inv = [0] * 4
        for m, s in enumerate(self.sigma):
            inv[s] = m
        return tuple(inv)

    def inverse(self) -> "PermutedScaling":
        c = tuple(1 / self.c[self.sigma[m]] for m in range(4))
        return PermutedScaling(1 / self.lam, c, self.inverse_sigma())

    def is_identity(self) -> bool:
        return self == PermutedScaling.identity()


def act(g: PermutedScaling, p: Sequence) -> WedgeVector:
    p = p if isinstance(p, WedgeVector) else WedgeVector.of(p)
    inv = g.inverse_sigma()
    return WedgeVector(*(g.lam * g.c[i] * g.c[j] * p.entry(inv[i], inv[j]) for i, j in PAIRS))


def act_on_pair(g: PermutedScaling, a: Polytope4, b: Polytope4) -> tuple[Polytope4, Polytope4]:
    """Bodies ``(A', B')`` with ``wedge(A', B') == act(g, wedge(A, B))``."""
    a2 = a.map_coordinates(g.sigma, g.c)
    b2 = b.map_coordinates(g.sigma, g.c)
    h = g.lam * g.c[0] * g.c[1] * g.c[2] * g.c[3]
    return a2, b2.scaled(h)


def _require_nonnegative(*vectors: WedgeVector) -> None:
    for v in vectors:
        if not v.is_nonnegative():
            raise NegativeEntry(f"negative entry in {tuple(map(str, v))}")


def _solve_scaling(ratios: dict[tuple[int, int], Fraction]) -> tuple[Fraction, list[Fraction]] | None:
    """Find rational ``lam, c`` with ``ratios[i, j] == lam * c_i * c_j`` on every given edge.

    Works component by component on the graph of given edges. A component with
    a triangle pins ``lam * c_root**2``; the first such component fixes ``lam``
    and later ones need a rational square root. Bipartite components absorb
    ``lam`` into one colour class, so ``c_root = 1`` loses no generality.
    """
    adj = {v: [] for v in range(4)}
    for i, j in ratios:
        adj[i].append(j)
        adj[j].append(i)

    def r(i, j):
        return ratios[(i, j)] if (i, j) in ratios else ratios[(j, i)]

    seen: set[int] = set()
    components = []
    for v in range(4):
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        components.append(sorted(comp))

    lam = None
    roots = []
    for comp in components:
        tri = next(((i, j, k) for i, j, k in itertools.combinations(comp, 3)
                    if j in adj[i] and k in adj[i] and k in adj[j]), None)
        if tri is None:
            roots.append((comp[0], None))
        else:
            i, j, k = tri
            roots.append((i, r(i, j) * r(i, k) / r(j, k)))
    for _, s in roots:
        if s is not None:
            lam = s
            break
    if lam is None:
        # No triangle: lam is free, so take the first ratio and keep c near 1.
        lam = next((ratios[e] for e in sorted(ratios)), Fraction(1))

    c: list[Fraction | None] = [None] * 4
    for root, s in roots:
        if s is None:
            c[root] = Fraction(1)
        else:
            cr = is_rational_square(s / lam)
            if cr is None:
                return None
            c[root] = cr
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w in adj[u]:
                if c[w] is None:
                    c[w] = r(u, w) / (lam * c[u])
                    queue.append(w)
    if any(x is None or x <= 0 for x in c):
        return None
    for (i, j), val in ratios.items():
        if lam * c[i] * c[j] != val:
            return None
    return lam, c


def equivalent_over_q(p: Sequence, q: Sequence) -> PermutedScaling | None:
    """A rational group element ``g`` with ``act(g, p) == q``, or ``None``.

    Permutations are tried in lexicographic order and the first witness wins.
    """
    p, q = WedgeVector.of(p), WedgeVector.of(q)
    _require_nonnegative(p, q)
    if sum(p.support()) != sum(q.support()):
        return None
    if not any(p.support()):
        return PermutedScaling.identity() if not any(q.support()) else None
    for sigma in itertools.permutations(range(4)):
        perm = PermutedScaling.permutation(sigma)
        sp = act(perm, p)
        if sp.support() != q.support():
            continue
        ratios = {PAIRS[k]: q[k] / sp[k] for k in range(6) if sp[k] != 0}
        solved = _solve_scaling(ratios)
        if solved is None:
            continue
        lam, c = solved
        g = PermutedScaling(lam, c, sigma)
        if act(g, p) == q:
            return g
    return None


def equivalent_over_r(p: Sequence, q: Sequence) -> bool:
    """Whether some real group element carries ``p`` to ``q``.

    For strictly positive vectors this is proportionality of the symmetric
    triples up to reordering. In general, real equivalence of ``p`` and ``q``
    is rational equivalence of their entrywise squares: the squared system
    only ever asks for square roots of squares.
    """
    p, q = WedgeVector.of(p), WedgeVector.of(q)
    _require_nonnegative(p, q)
    if all(p.support()) and all(q.support()):
        tp, tq = symmetric_products(p), symmetric_products(q)
        for perm in itertools.permutations(range(3)):
            t = [tp[m] for m in perm]
            k = tq[0] / t[0]
            if all(tq[m] == k * t[m] for m in range(3)):
                return True
        return False
    p2 = WedgeVector(*(x * x for x in p))
    q2 = WedgeVector(*(x * x for x in q))
    return equivalent_over_q(p2, q2) is not None
