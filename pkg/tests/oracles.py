"""Independent reference implementations used only by the tests.

None of these share code with the package: hulls are brute force, mixed
areas come from support functions, inertia from the characteristic
polynomial, surds from high-precision floats.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import mpmath
import sympy


def brute_hull_edges(points):
    """Directed counterclockwise hull edges ``(a, b)`` of a planar point set."""
    pts = sorted(set((Fraction(x), Fraction(y)) for x, y in points))
    edges = []
    for a, b in itertools.permutations(pts, 2):
        ok = True
        for p in pts:
            cr = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
            if cr < 0:
                ok = False
                break
            if cr == 0:
                # collinear points must lie on the closed segment [a, b]
                t = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])
                if t < 0 or t > (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2:
                    ok = False
                    break
        if ok:
            edges.append((a, b))
    return edges


def brute_hull_vertices(points):
    pts = set((Fraction(x), Fraction(y)) for x, y in points)
    if len(pts) == 1:
        return sorted(pts)
    return sorted({a for a, _ in brute_hull_edges(points)})


def support(points, n):
    return max(x * n[0] + y * n[1] for x, y in points)


def oracle_mixed_area(p_pts, q_pts):
    """Normalized mixed area as a sum of support values over the edges of Q."""
    p_pts = [(Fraction(x), Fraction(y)) for x, y in p_pts]
    total = Fraction(0)
    for a, b in brute_hull_edges(q_pts):
        n = (b[1] - a[1], a[0] - b[0])  # outward normal, length |b - a|
        total += support(p_pts, n)
    # For a segment Q both directions appear, giving length times width of P.
    return total


def oracle_area(points):
    """Twice the Lebesgue area via the brute hull and the shoelace formula."""
    total = Fraction(0)
    for a, b in brute_hull_edges(points):
        total += a[0] * b[1] - a[1] * b[0]
    return total


PAIRS_1B = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


def oracle_wedge(a_pts, b_pts):
    out = []
    for i, j in PAIRS_1B:
        k, l = (m for m in range(4) if m not in (i - 1, j - 1))
        pa = [(x[k], x[l]) for x in a_pts]
        pb = [(x[k], x[l]) for x in b_pts]
        out.append(oracle_mixed_area(pa, pb))
    return tuple(out)


def oracle_inertia(rows):
    """Counts of positive, negative and zero eigenvalues, exactly.

    The characteristic polynomial of a real symmetric matrix is real-rooted,
    so Descartes' rule of signs counts its positive roots exactly.
    """
    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x
                       for x in row] for row in rows])
    n = m.shape[0]
    lam = sympy.Symbol("t")
    poly = sympy.Poly(m.charpoly(lam).as_expr(), lam)
    coeffs = poly.all_coeffs()
    zero = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        zero += 1

    def changes(cs):
        signs = [c > 0 for c in cs if c != 0]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    plus = changes(coeffs)
    deg = len(coeffs) - 1
    neg_coeffs = [c * (-1) ** (deg - k) for k, c in enumerate(coeffs)]
    minus = changes(neg_coeffs)
    assert plus + minus + zero == n
    return plus, minus, zero


def oracle_det(rows):
    m = sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in row]
                      for row in rows])
    d = m.det()
    return Fraction(int(d.p), int(d.q))


def oracle_cmp_sqrt_sum(a, b, c, prec=400):
    """Sign of sqrt(a)+sqrt(b)-sqrt(c) at high precision, or None if too close to call."""
    with mpmath.workprec(prec):
        f = lambda q: mpmath.mpf(q.numerator) / q.denominator
        d = mpmath.sqrt(f(Fraction(a))) + mpmath.sqrt(f(Fraction(b))) - mpmath.sqrt(f(Fraction(c)))
        if abs(d) < mpmath.mpf(2) ** (-prec // 2):
            return None
        return 1 if d > 0 else -1
