"""Explicit polytope witnesses for admissible wedge vectors.

Pair realizations ``wedge(A, B) == p`` are exact over the rationals for
every rational ``p`` in T2. Self realizations ``wedge(A, A) ~ p`` use
dyadic vertices and report an exactly computed residual.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from . import blocks
from .errors import (
    CertificateError,
    NotAllPositive,
    NotInterior,
    NotOnBoundary,
    OutsideT2,
    SLessThanOne,
    ToleranceNotPositive,
)
from .exact import as_rational, is_rational_square
from .membership import Status, classify_zero_orbit, t2_membership
from .wedge import (
    PermutedScaling,
    Polytope4,
    WedgeVector,
    act,
    act_on_pair,
    minkowski_all,
    symmetric_products,
    wedge,
)


@dataclass(frozen=True)
class PairCertificate:
    target: WedgeVector
    A: Polytope4
    B: Polytope4
    recomputed: WedgeVector
    path: str
    exact: bool = True

    def verify(self) -> bool:
        return wedge(self.A, self.B) == self.target == self.recomputed


@dataclass(frozen=True)
class SelfCertificate:
    """``A`` has dyadic vertices and ``recomputed == wedge(A, A)`` exactly.

    ``residual`` is the largest relative entrywise deviation of
    ``recomputed`` from ``proportionality * target`` (from ``target`` itself
    when no factor is recorded).
    """

    target: WedgeVector
    A: Polytope4
    recomputed: WedgeVector
    residual: Fraction
    proportionality: Fraction | None = None
    exact: bool = False
    bits: int = 0

    def reference(self) -> WedgeVector:
        if self.proportionality is None:
            return self.target
        return self.target.scaled(self.proportionality)


def relative_residual(value: Sequence[Fraction], target: Sequence[Fraction]) -> Fraction:
    """``max |value - target| / |target|``, falling back to absolute error at zero targets."""
    worst = Fraction(0)
    for v, t in zip(value, target):
        err = abs(v - t) if t == 0 else abs(v - t) / abs(t)
        worst = max(worst, err)
    return worst


def _certify(target: WedgeVector, a: Polytope4, b: Polytope4, path: str) -> PairCertificate:
    got = wedge(a, b)
    if got != target:
        raise CertificateError(
            f"{path} construction gave {tuple(map(str, got))}, wanted {tuple(map(str, target))}")
    return PairCertificate(target, a, b, got, path)


def realize_pair(p: Sequence) -> PairCertificate:
    """Exact rational bodies ``A, B`` with ``wedge(A, B) == p``."""
    p = WedgeVector.of(p)
    verdict = t2_membership(p)
    if verdict.status == Status.OUTSIDE:
        raise OutsideT2(f"{tuple(map(str, p))} is outside T2 ({verdict.witness})")
    if not all(p.support()):
        return realize_zero_entry(p)
    if verdict.status == Status.BOUNDARY:
        return realize_boundary_positive(p)
    return realize_interior(p)


def realize_zero_entry(p: Sequence) -> PairCertificate:
    p = WedgeVector.of(p)
    if not any(p.support()):
        origin = Polytope4.point()
        return _certify(p, origin, origin, "zero-entry")
    cls = classify_zero_orbit(p)
    base = blocks.A_BLOCKS[tuple(int(x) for x in cls.representative)]
    a, b = act_on_pair(cls.witness, base, base)
    return _certify(p, a, b, "zero-entry")


def _sorting_permutation(s: WedgeVector) -> PermutedScaling:
    """A permutation making a symmetric vector satisfy ``s12 >= s13 >= s14``."""
    for sigma in itertools.permutations(range(4)):
        g = PermutedScaling.permutation(sigma)
        t = act(g, s)
        if t.p12 >= t.p13 >= t.p14:
            return g
    raise CertificateError("no sorting permutation")  # pragma: no cover


def _symmetric_pair(r: WedgeVector, extra: Sequence[tuple[Fraction, Polytope4]] = ()) -> tuple[Polytope4, Polytope4]:
    """Bodies with ``wedge = r + sum(c * wedge(R, D12|34))`` for sorted symmetric ``r``."""
    r1, r2, r3 = r.p12, r.p13, r.p14
    terms = [((r1 - r2) / 2, blocks.P), ((r2 - r3) / 2, blocks.Q), ((r2 + r3 - r1) / 2, blocks.R)]
    terms.extend(extra)
    bodies = [body.scaled(t) for t, body in terms if t != 0]
    return minkowski_all(bodies, reduce=True), blocks.D12_34


def realize_boundary_positive(p: Sequence) -> PairCertificate:
    """Exact pair for a boundary point with all entries positive.

    After scaling ``p14 = p23 = 1`` the tight triangle identity forces both
    remaining products to be rational squares, so a rational group element
    makes the vector symmetric and the symmetric construction applies.
    """
    p = WedgeVector.of(p)
    if not all(x > 0 for x in p):
        raise NotAllPositive("every entry must be positive")
    status = t2_membership(p).status
    if status != Status.BOUNDARY:
        raise NotOnBoundary(f"{tuple(map(str, p))} is {status.value}, not Boundary")

    g1 = PermutedScaling(1, (1, 1, 1 / p.p23, 1 / p.p14))
    q = act(g1, p)
    a, b, _ = symmetric_products(q)
    ra, rb = is_rational_square(a), is_rational_square(b)
    if ra is None or rb is None:
        raise CertificateError(f"tight boundary point with irrational root: {tuple(map(str, p))}")
    c = (ra * rb, q.p13 * ra, q.p12 * rb, q.p12 * q.p13)
    g2 = PermutedScaling(1 / (c[0] * c[3]), c)
    s = act(g2, q)
    g3 = _sorting_permutation(s)
    r = act(g3, s)
    g = g3 * g2 * g1
    a_body, b_body = _symmetric_pair(r)
    a_body, b_body = act_on_pair(g.inverse(), a_body, b_body)
    return _certify(p, a_body, b_body, "boundary")


def _sqrt_rel(q: Fraction, bits: int) -> Fraction:
    """Dyadic approximation of ``sqrt(q)`` with about ``bits`` significant bits."""
    n, d = q.numerator, q.denominator
    shift = max(0, (d.bit_length() - n.bit_length()) // 2 + 1)
    from .exact import dyadic_sqrt

    return dyadic_sqrt(q, bits + shift) or Fraction(1, 1 << (bits + shift))


def _approx_symmetrizer(p: WedgeVector, bits: int) -> PermutedScaling:
    """Rational approximation of the scaling that makes ``p`` symmetric."""
    p12, p13, p14, p23, p24, p34 = p
    total = p12 * p13 * p14 * p23 * p24 * p34
    c = (_sqrt_rel(p23 * p24 * p34, bits), _sqrt_rel(p13 * p14 * p34, bits),
         _sqrt_rel(p12 * p14 * p24, bits), _sqrt_rel(p12 * p13 * p23, bits))
    return PermutedScaling(1 / _sqrt_rel(total, bits), c)


def _sorting_for_products(p: WedgeVector) -> PermutedScaling:
    """A permutation after which ``p12 p34 >= p13 p24 >= p14 p23``."""
    for sigma in itertools.permutations(range(4)):
        g = PermutedScaling.permutation(sigma)
        a, b, c = symmetric_products(act(g, p))
        if a >= b >= c:
            return g
    raise CertificateError("no sorting permutation")  # pragma: no cover


MAX_BITS = 1 << 14


def realize_interior(p: Sequence) -> PairCertificate:
    """Exact pair for an interior point by a dyadic precision-escalation loop.

    Each round moves ``p`` to an almost symmetric ``p'`` with a rational
    group element, subtracts a symmetric ``r`` just below it, and writes the
    small remainder as a positive combination of ``wedge(R_kl, D12|34)``.
    """
    p = WedgeVector.of(p)
    status = t2_membership(p).status
    if status != Status.INTERIOR:
        raise NotInterior(f"{tuple(map(str, p))} is {status.value}, not Interior")
    perm = _sorting_for_products(p)
    ps = act(perm, p)
    bits = 16
    while bits <= MAX_BITS:
        g = _approx_symmetrizer(ps, bits) * perm
        q = act(g, p)
        scale = max(q)
        eps = scale / (1 << (bits // 2))
        r1 = min(q.p12, q.p34) - eps
        r2 = min(min(q.p13, q.p24) - eps, r1)
        r3 = min(min(q.p14, q.p23) - eps, r2)
        r = WedgeVector.of(r1, r2, r3, r3, r2, r1)
        v = q.minus(r)
        coeffs = [sum(v) / 5 - x for x in v]
        if r3 > 0 and r2 + r3 >= r1 and all(x > 0 for x in coeffs):
            extra = list(zip(coeffs, blocks.R_BLOCKS.values()))
            a_body, b_body = _symmetric_pair(r, extra)
            a_body, b_body = act_on_pair(g.inverse(), a_body, b_body)
            return _certify(p, a_body, b_body, "interior")
        bits *= 2
    raise CertificateError(f"precision loop did not converge for {tuple(map(str, p))}")


# --- self realizations ------------------------------------------------------

def _zonotope(x, y, z) -> list[tuple]:
    """Vertices of ``x D12|34 + y D13|24 + z D14|23`` as mpmath tuples."""
    segs = [(x, blocks.D12_34), (y, blocks.D13_24), (z, blocks.D14_23)]
    pts = []
    for choice in itertools.product(*(s.generators for _, s in segs)):
        pts.append(tuple(sum(t * mpmath.mpf(int(pt[i])) for (t, _), pt in zip(segs, choice))
                         for i in range(4)))
    return pts


def _snap(x, bits: int) -> Fraction:
    return Fraction(int(mpmath.nint(x * mpmath.mpf(2) ** bits)), 1 << bits)


def realize_self_interior(p: Sequence, tolerance=Fraction(1, 10 ** 9)) -> SelfCertificate:
    """A dyadic polytope ``A`` with ``wedge(A, A)`` within ``tolerance`` of ``p``.

    The symmetric target is realized by a three-segment zonotope, which is
    then pulled back by the real scaling that symmetrized ``p``.
    """
    p = WedgeVector.of(p)
    tol = as_rational(tolerance)
    if tol <= 0:
        raise ToleranceNotPositive("tolerance must be positive")
    status = t2_membership(p).status
    if status != Status.INTERIOR:
        raise NotInterior(f"{tuple(map(str, p))} is {status.value}, not Interior")
    perm = _sorting_for_products(p)
    ps = act(perm, p)
    sigma = perm.sigma
    bits = 32
    while bits <= MAX_BITS:
        with mpmath.workprec(bits + 64):
            v = [mpmath.mpf(x.numerator) / x.denominator for x in ps]
            p12, p13, p14, p23, p24, p34 = v
            q1, q2, q3 = (mpmath.sqrt(p12 * p34), mpmath.sqrt(p13 * p24), mpmath.sqrt(p14 * p23))
            a, b, d = q1 - q2, q2 - q3, (q2 + q3 - q1) / 2
            u, vv, w = (a + b + d) / 4, (a + d) / 4, d / 4
            x, y, z = mpmath.sqrt(u * vv / w), mpmath.sqrt(u * w / vv), mpmath.sqrt(vv * w / u)
            lam = 1 / mpmath.sqrt(p12 * p13 * p14 * p23 * p24 * p34)
            c = (mpmath.sqrt(p23 * p24 * p34), mpmath.sqrt(p13 * p14 * p34),
                 mpmath.sqrt(p12 * p14 * p24), mpmath.sqrt(p12 * p13 * p23))
            # Undo the symmetrizer (lam, c) and then the sorting permutation.
            h = 1 / mpmath.sqrt(lam * c[0] * c[1] * c[2] * c[3])
            inv = [0] * 4
            for m, s in enumerate(sigma):
                inv[s] = m
            pts = []
            for pt in _zonotope(x, y, z):
                unscaled = [h * pt[i] * c[i] for i in range(4)]
                pts.append(tuple(_snap(unscaled[sigma[m]], bits) for m in range(4)))
        body = Polytope4(pts)
        got = wedge(body, body)
        res = relative_residual(got, p)
        if res <= tol:
            return SelfCertificate(p, body, got, res, None, res == 0, bits)
        bits *= 2
    raise CertificateError("self realization did not reach the requested tolerance")


def boundary_target(s) -> WedgeVector:
    s = as_rational(s)
    return WedgeVector.of(s + 1, s, 1, 1, s, s + 1)


def realize_self_boundary(s, tolerance=Fraction(1, 10 ** 9), rescale: bool = False) -> SelfCertificate:
    """Self realization of the boundary vector ``(s+1, s, 1, 1, s, s+1)``.

    The body is ``conv(L + cM)`` with ``c = sqrt(1 - 1/s)``, whose wedge is
    ``4/s`` times the target. That factor is reported as ``proportionality``;
    with ``rescale=True`` the body is instead shrunk by a dyadic
    approximation of ``sqrt(s)/2`` and compared with the target directly.
    """
    s = as_rational(s)
    tol = as_rational(tolerance)
    if s < 1:
        raise SLessThanOne(f"s must be at least 1, got {s}")
    if tol <= 0:
        raise ToleranceNotPositive("tolerance must be positive")
    target = boundary_target(s)
    factor = 4 / s
    c_exact = is_rational_square(1 - 1 / s)
    if c_exact is not None and not rescale:
        body = blocks.boundary_family(c_exact)
        got = wedge(body, body)
        if got != target.scaled(factor):
            raise CertificateError(f"boundary family mismatch at c = {c_exact}")
        return SelfCertificate(target, body, got, Fraction(0), factor, True, 0)
    bits = 32
    while bits <= MAX_BITS:
        with mpmath.workprec(bits + 64):
            one_minus = 1 - 1 / (mpmath.mpf(s.numerator) / s.denominator)
            c = c_exact if c_exact is not None else _snap(mpmath.sqrt(one_minus), bits)
            body = blocks.boundary_family(c)
            if rescale:
                body = body.scaled(_snap(mpmath.sqrt(mpmath.mpf(s.numerator) / s.denominator) / 2, bits))
        got = wedge(body, body)
        ref = target if rescale else target.scaled(factor)
        res = relative_residual(got, ref)
        if res <= tol:
            return SelfCertificate(target, body, got, res, None if rescale else factor, res == 0, bits)
        bits *= 2
    raise CertificateError("boundary self realization did not reach the requested tolerance")
