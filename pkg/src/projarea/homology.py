"""Surface classes in products of projective spaces and in Gr(k, n).

Classes in the cohomology of ``(P^1)^4`` live in the ring
``Q[H1..H4] / (H1^2, .., H4^2)``, whose monomials are square-free and are
indexed here by 4-bit masks (bit ``i`` stands for ``H_{i+1}``).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import sympy

from .errors import CertificateError, DimensionMismatch, IllFormed, RangeError
from .exact import SymMatrix, as_rational, inertia, is_lorentzian
from .membership import Status, t1_membership, t2_membership
from .wedge import PAIRS, WedgeVector, _require_nonnegative, complement


def _mask(*indices: int) -> int:
    """Bitmask of 0-based variable indices."""
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class CohoClass:
    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable = (0,) * 16):
        coeffs = tuple(as_rational(x) for x in coefficients)
        if len(coeffs) != 16:
            raise ValueError("a class has 16 coefficients")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def one(cls) -> "CohoClass":
        return cls([1] + [0] * 15)

    @classmethod
    def divisor(cls, a: Sequence) -> "CohoClass":
        """The degree-one class ``sum a_i H_i``."""
        coeffs = [Fraction(0)] * 16
        for i, x in enumerate(a):
            coeffs[_mask(i)] = as_rational(x)
        return cls(coeffs)

    @classmethod
    def monomial(cls, indices: Sequence[int], coeff=1) -> "CohoClass":
        """``coeff * H_i H_j ...`` for 1-based ``indices``."""
        coeffs = [Fraction(0)] * 16
        coeffs[_mask(*(i - 1 for i in indices))] = as_rational(coeff)
        return cls(coeffs)

    def __getitem__(self, indices: Sequence[int]) -> Fraction:
        return self.coefficients[_mask(*(i - 1 for i in indices))]

    def __add__(self, other: "CohoClass") -> "CohoClass":
        return CohoClass(a + b for a, b in zip(self.coefficients, other.coefficients))

    def scaled(self, t) -> "CohoClass":
        t = as_rational(t)
        return CohoClass(t * a for a in self.coefficients)

    def is_zero(self) -> bool:
        return not any(self.coefficients)


def coho_mul(u: CohoClass, v: CohoClass) -> CohoClass:
    """Product in the ring where every ``H_i`` squares to zero."""
    out = [Fraction(0)] * 16
    for m1, x in enumerate(u.coefficients):
        if not x:
            continue
        for m2, y in enumerate(v.coefficients):
            if y and not m1 & m2:
                out[m1 | m2] += x * y
    return CohoClass(out)


def eta_of_wedge(p: Sequence) -> CohoClass:
    """Degree-two class of a wedge vector.

    The entry ``p_ij`` of a wedge vector records the projection that deletes
    coordinates ``i`` and ``j``; dually it multiplies the monomial in the
    *other* two variables. So ``p12`` is the coefficient of ``H3 H4`` and
    ``q_ij = p_kl`` for ``{k, l}`` complementary to ``{i, j}``. Every other
    function in this module speaks ``p`` and goes through here.
    """
    p = WedgeVector.of(p)
    coeffs = [Fraction(0)] * 16
    for idx, (i, j) in enumerate(PAIRS):
        coeffs[_mask(*complement(i, j))] = p[idx]
    return CohoClass(coeffs)


def _q_matrix(p: WedgeVector) -> list[list[Fraction]]:
    """``q[i][j]``: coefficient of ``H_i H_j`` in ``eta_of_wedge(p)`` (0-based)."""
    eta = eta_of_wedge(p)
    q = [[Fraction(0)] * 4 for _ in range(4)]
    for i, j in PAIRS:
        q[i][j] = q[j][i] = eta.coefficients[_mask(i, j)]
    return q


@dataclass(frozen=True)
class CIFactorization:
    """``mu * eta(p) == (sum a_i H_i) * (sum b_i H_i)`` with ``a, b >= 0``."""

    mu: Fraction
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    branch: str

    def product(self) -> CohoClass:
        return coho_mul(CohoClass.divisor(self.a), CohoClass.divisor(self.b))

    def verify(self, p: Sequence) -> bool:
        return (self.mu > 0 and all(x >= 0 for x in self.a + self.b)
                and self.product() == eta_of_wedge(p).scaled(self.mu))


def _vec(entries: dict[int, Fraction]) -> tuple[Fraction, ...]:
    return tuple(entries.get(m, Fraction(0)) for m in range(4))


def _star(q, l: int) -> CIFactorization:
    i, j, k = (m for m in range(4) if m != l)

    def cross(x, y, z, w):
        # q_{xy|zw} = q_xz q_yw + q_xw q_yz - q_xy q_zw
        return q[x][z] * q[y][w] + q[x][w] * q[y][z] - q[x][y] * q[z][w]

    mu = 2 * q[i][l] * q[j][l] * q[k][l]
    a = _vec({i: q[i][l], j: q[j][l], k: q[k][l]})
    b = _vec({i: cross(i, l, j, k) * q[i][l], j: cross(j, l, i, k) * q[j][l],
              k: cross(k, l, i, j) * q[k][l], l: mu})
    return CIFactorization(mu, a, b, f"star at H{l + 1}")


def _within_triangle(q, l: int) -> CIFactorization | None:
    """Support avoids ``H_l``: ``q_ij (q_ij H_iH_j + q_ik H_iH_k + q_jk H_jH_k)``."""
    others = [m for m in range(4) if m != l]
    for i in others:
        for j in others:
            if i < j and q[i][j] != 0:
                (k,) = (m for m in others if m not in (i, j))
                a = _vec({i: q[i][j], k: q[j][k]})
                b = _vec({j: q[i][j], k: q[i][k]})
                return CIFactorization(q[i][j], a, b, f"no H{l + 1}")
    return None


def _zero_matching(q) -> CIFactorization | None:
    """Support is a 4-cycle missing the matching ``ij|kl``."""
    for i, j in PAIRS:
        k, l = complement(i, j)
        if q[i][j] == 0 and q[k][l] == 0 and q[i][k] != 0:
            a = _vec({i: q[i][k], j: q[j][k]})
            b = _vec({k: q[i][k], l: q[i][l]})
            return CIFactorization(q[i][k], a, b, f"zero matching {i + 1}{j + 1}|{k + 1}{l + 1}")
    return None


def ci_certificate(p: Sequence) -> CIFactorization | None:
    """A complete-intersection factorization of a multiple of ``eta(p)``, or ``None``.

    ``None`` is returned exactly when ``p`` violates a product triangle
    inequality. Branches are tried in a fixed order: a variable ``H_l`` with
    all three ``q_il`` positive (``l = 4, 3, 2, 1``), then support missing a
    variable, then support a 4-cycle, then the zero class.
    """
    p = WedgeVector.of(p)
    _require_nonnegative(p)
    if t1_membership(p).status == Status.OUTSIDE:
        return None
    q = _q_matrix(p)
    cert = None
    for l in (3, 2, 1, 0):
        if all(q[l][m] != 0 for m in range(4) if m != l):
            cert = _star(q, l)
            break
    if cert is None:
        isolated = next((l for l in range(4) if all(q[l][m] == 0 for m in range(4) if m != l)), None)
        if isolated is not None:
            cert = _within_triangle(q, isolated)
    if cert is None:
        cert = _zero_matching(q)
    if cert is None and not any(p):
        cert = CIFactorization(Fraction(1), (Fraction(0),) * 4, (Fraction(0),) * 4, "zero class")
    if cert is None or not cert.verify(p):
        raise CertificateError(f"no verified factorization for {tuple(map(str, p))}")
    return cert


# --- rational realizability ---------------------------------------------------

@dataclass(frozen=True)
class Realizability:
    realizable: bool
    detail: str = ""
    certificate: object | None = None


def q_realizable_p14(p: Sequence, with_certificate: bool = False) -> Realizability:
    """Rational realizability of ``eta(p)`` in ``(P^1)^4``: membership in T2.

    With ``with_certificate`` a pair of rational polytopes whose wedge is
    ``p`` is attached when the class is realizable.
    """
    p = WedgeVector.of(p)
    verdict = t2_membership(p)
    if verdict.status == Status.OUTSIDE:
        return Realizability(False, verdict.witness)
    cert = None
    if with_certificate:
        from .realize import realize_pair

        cert = realize_pair(p)
    return Realizability(True, verdict.status.value, cert)


@dataclass(frozen=True)
class PmClass:
    """A surface class in ``P^{m_1} x .. x P^{m_n}`` via its intersection matrix."""

    dims: tuple[int, ...]
    matrix: SymMatrix

    def __init__(self, dims: Sequence[int], matrix):
        dims = tuple(int(m) for m in dims)
        if any(m < 1 for m in dims):
            raise IllFormed("every factor needs dimension at least 1")
        matrix = matrix if isinstance(matrix, SymMatrix) else SymMatrix(matrix)
        if matrix.n != len(dims):
            raise DimensionMismatch(f"{len(dims)} factors but a {matrix.n}x{matrix.n} matrix")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "matrix", matrix)


def q_realizable_pm(c: PmClass) -> Realizability:
    """Realizable over Q iff the matrix is Lorentzian (after a well-formedness check)."""
    for i, m in enumerate(c.dims):
        if m == 1 and c.matrix[i, i] != 0:
            raise IllFormed(f"H{i + 1}^2 = 0 forces a zero diagonal entry at {i + 1}")
    sig = inertia(c.matrix)
    ok = is_lorentzian(c.matrix)
    return Realizability(ok, f"inertia {tuple(sig)}")


# --- Grassmannians -------------------------------------------------------------

def _check_grass(k: int, n: int, a1: int, a2: int) -> None:
    if not 2 <= k <= n - 2:
        raise RangeError(f"need 2 <= k <= n - 2, got k={k}, n={n}")
    if a1 < 0 or a2 < 0:
        raise RangeError("a1 and a2 must be nonnegative")


def grass_realizable(k: int, n: int, a1: int, a2: int) -> bool:
    """Integral realizability of ``a1 [S1] + a2 [S2]`` in ``Gr(k, n)``."""
    _check_grass(k, n, a1, a2)
    if k == 2 and n == 4:
        return (a1 > 0 and a2 > 0) or (a1, a2) in ((1, 0), (0, 1))
    if k == 2:
        return a2 > 0 or (a1, a2) == (1, 0)
    if k == n - 2:
        return a1 > 0 or (a1, a2) == (0, 1)
    return (a1, a2) != (0, 0)


def distinct_root_count(poly: sympy.Poly) -> int:
    """Number of distinct complex roots, read off the square-free part."""
    if poly.is_zero:
        raise ValueError("the zero polynomial has infinitely many roots")
    return poly.sqf_part().degree()


def _surface_counts(a1: int, a2: int, c: Sequence[Fraction]) -> tuple[int, int]:
    """Intersection counts of the explicit surface with two general Schubert cycles."""
    x = sympy.Symbol("x")
    c1, c2, c3, c4 = (sympy.Rational(v.numerator, v.denominator) for v in c)
    # Perpendicular to c: the y-equation is linear with coefficient c3 != 0.
    first = sympy.Poly(c1 + c3 * x ** a1 + c4 * x ** a2, x, domain="QQ")
    # Containing c: the y-equation is linear with coefficient c2 != 0.
    second = sympy.Poly(c1 * x ** a2 + c2 * x - c4, x, domain="QQ")
    return distinct_root_count(first), distinct_root_count(second)


def grass_witness_check(a1: int, a2: int, trials: int = 5, seed: int = 0) -> bool:
    """Monte-Carlo check that the explicit surface meets the Schubert cycles ``a1`` and ``a2`` times.

    Coefficients are random nonzero rationals. A trial that misses is retried
    once with fresh coefficients, since bad choices form a proper Zariski-closed
    set.
    """
    if not a1 >= a2 >= 1:
        raise RangeError(f"need a1 >= a2 >= 1, got ({a1}, {a2})")
    rng = random.Random(seed)

    def draw() -> list[Fraction]:
        return [Fraction(rng.choice([-1, 1]) * rng.randint(1, 50), rng.randint(1, 50))
                for _ in range(4)]

    for _ in range(trials):
        if _surface_counts(a1, a2, draw()) == (a1, a2):
            continue
        if _surface_counts(a1, a2, draw()) != (a1, a2):
            return False
    return True
