"""Exact arithmetic of curves on a torus boundary.

A slope is a primitive class x*longitude + y*meridian, written as the
fraction y/x.  The module provides negative continued fractions (all terms
<= -2), the splitting of a slope into its two bypass neighbours, the dual
framing (q0, p0) attached to a surgery slope q/p, and the induced suture
family, together with the lattice-triangle test for bypass triples.

Everything is integer/Fraction arithmetic; nothing here touches floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple


class SlopeError(ValueError):
    """Invalid slope input."""


@dataclass(frozen=True, order=True)
class Slope:
    """Primitive class x*lambda + y*mu in canonical form.

    Canonical form: y >= 0, and x > 0 when y == 0.  A slope and its negative
    describe the same (unoriented, two-component) suture, so construction
    normalizes the sign.
    """

    x: int
    y: int

    def __post_init__(self):
        x, y = self.x, self.y
        if x == 0 and y == 0:
            raise SlopeError("(0, 0) is not a slope")
        if gcd(abs(x), abs(y)) != 1:
            raise SlopeError(f"slope ({x}, {y}) is not primitive")
        if y < 0 or (y == 0 and x < 0):
            object.__setattr__(self, "x", -x)
            object.__setattr__(self, "y", -y)

    @classmethod
    def of(cls, x: int, y: int) -> "Slope":
        """Build from any primitive representative."""
        return cls(x, y)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        """Parse 'y/x' (meridian coefficient over longitude coefficient)."""
        try:
            ys, xs = text.strip().split("/")
            return cls(int(xs), int(ys))
        except SlopeError:
            raise
        except Exception as exc:
            raise SlopeError(f"cannot parse slope {text!r}") from exc

    def fraction_str(self) -> str:
        return f"{self.y}/{self.x}"

    def det(self, other: "Slope") -> int:
        return self.x * other.y - other.x * self.y

    def __str__(self) -> str:
        return self.fraction_str()


def det2(a: Tuple[int, int], b: Tuple[int, int]) -> int:
    return a[0] * b[1] - b[0] * a[1]


# ---------------------------------------------------------------------------
# negative continued fractions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ContinuedFraction:
    """Negative continued fraction [a0, ..., an], every term <= -2.

    Value is a0 - 1/(a1 - 1/(... - 1/an)).
    """

    terms: Tuple[int, ...]

    def __post_init__(self):
        if any(a > -2 for a in self.terms):
            raise SlopeError(f"continued fraction terms must be <= -2: {self.terms}")

    def value(self) -> Fraction:
        if not self.terms:
            raise SlopeError("empty continued fraction has no finite value")
        return _eval_terms(list(self.terms))


def _eval_terms(terms: List[int]) -> Fraction:
    """Right-to-left evaluation; tolerates a trailing +1 increment (-1 tails)."""
    t = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        if t == 0:
            raise SlopeError("continued fraction hit a zero tail")
        t = a - Fraction(1) / t
    return t


def continued_fraction(value: Fraction) -> ContinuedFraction:
    """Greedy expansion of an exact rational < -1 with all terms <= -2.

    Each step takes the floor and inverts the remainder; the tail stays
    strictly below -1, so every term lands at or below -2.  The result is
    re-evaluated and must reproduce the input exactly.
    """
    value = Fraction(value)
    if value >= -1:
        raise SlopeError(f"continued fraction needs a rational < -1, got {value}")
    terms: List[int] = []
    t = value
    while True:
        if t.denominator == 1:
            terms.append(int(t))
            break
        a = t.numerator // t.denominator  # floor
        terms.append(a)
        t = Fraction(-1) / (t - a)
    out = ContinuedFraction(tuple(terms))
    if out.value() != value:
        raise AssertionError(f"round trip failed for {value}: {terms}")
    return out


def _increment_last(terms: List[int]) -> List[int]:
    """[a0..an] -> canonical form of [a0..an + 1].

    Trailing -2 entries collapse: when a_i = -2 for i in (k, n] and
    a_k != -2, the increment rewrites to [a0..ak + 1].  When everything is
    -2 the whole word collapses away and the value is -1.
    """
    k = len(terms) - 1
    while k >= 0 and terms[k] == -2:
        k -= 1
    if k < 0:
        return []  # all -2: value collapses to -1
    return terms[:k] + [terms[k] + 1]


def _slope_from_value(v: Optional[Fraction]) -> Slope:
    """None encodes 1/0 (the infinite slope)."""
    if v is None:
        return Slope(0, 1)
    return Slope(v.denominator, v.numerator)


# ---------------------------------------------------------------------------
# bypass children
# ---------------------------------------------------------------------------

# Unimodular coordinate changes taking each sign region into the
# region {y > -x > 0}, i.e. fraction y/x < -1 with x < 0 < y.
def _t_identity(x: int, y: int) -> Tuple[int, int]:
    return x, y


def _t_swapneg(x: int, y: int) -> Tuple[int, int]:
    return -y, -x


def _t_negx(x: int, y: int) -> Tuple[int, int]:
    return -x, y


def _t_rot(x: int, y: int) -> Tuple[int, int]:
    return -y, x


def _t_rot_inv(x: int, y: int) -> Tuple[int, int]:
    return y, -x


def bypass_children(s3: Slope) -> Tuple[Slope, Slope]:
    """The two slopes completing s3 to a bypass triangle.

    The split runs through the negative continued fraction of the slope
    after moving it into the region y > -x > 0 by a unimodular change of
    coordinates, one per sign region.  The fixed low-complexity slopes
    (1/0, 0/1, 1/1 and 1/-1) are returned directly.

    The children are canonical-form slopes; together with s3 they satisfy
    e1*s1 + e2*s2 = s3 for some signs e1, e2 and are pairwise Farey
    neighbours (all pairwise determinants +-1), except for the verbatim
    0/1 rule whose second child is 0/1 itself.
    """
    x3, y3 = s3.x, s3.y
    if (x3, y3) == (0, 1):  # slope 1/0
        return Slope(1, 0), Slope(-1, 1)
    if (x3, y3) == (1, 0):  # slope 0/1
        return Slope(-1, 1), Slope(1, 0)
    if (x3, y3) == (1, 1):
        return Slope(0, 1), Slope(1, 0)
    if (x3, y3) == (-1, 1):
        return Slope(1, 0), Slope(0, 1)

    if x3 < 0 and y3 > -x3:
        fwd, inv = _t_identity, _t_identity
    elif x3 < 0:
        fwd, inv = _t_swapneg, _t_swapneg
    elif y3 > x3:
        fwd, inv = _t_negx, _t_negx
    else:
        fwd, inv = _t_rot, _t_rot_inv

    tx, ty = fwd(x3, y3)
    if not (tx < 0 < ty and ty > -tx):
        raise AssertionError(f"sign dispatch failed for {s3}")
    terms = list(continued_fraction(Fraction(ty, tx)).terms)

    head = terms[:-1]
    v1 = _eval_terms(head) if head else None
    inc = _increment_last(terms)
    v2 = _eval_terms(inc) if inc else Fraction(-1)

    def back(v: Optional[Fraction]) -> Slope:
        s = _slope_from_value(v)
        return Slope(*inv(s.x, s.y))

    s1, s2 = back(v1), back(v2)
    _check_children(s1, s2, s3)
    return s1, s2


def _check_children(s1: Slope, s2: Slope, s3: Slope) -> None:
    if not additivity_holds(s1, s2, s3):
        raise AssertionError(f"children of {s3} fail additivity: {s1}, {s2}")
    for a, b in ((s1, s2), (s1, s3), (s2, s3)):
        if abs(a.det(b)) != 1:
            raise AssertionError(f"children of {s3} fail unimodularity: {s1}, {s2}")


def additivity_holds(s1: Slope, s2: Slope, s3: Slope) -> bool:
    """True when e1*s1 + e2*s2 == s3 (componentwise) for some signs e1, e2."""
    for e1 in (1, -1):
        for e2 in (1, -1):
            if e1 * s1.x + e2 * s2.x == s3.x and e1 * s1.y + e2 * s2.y == s3.y:
                return True
    return False


def lattice_triangle_ok(s1: Slope, s2: Slope, s3: Slope) -> bool:
    """Pick-style test: representative segments span a triangle of area 1/2.

    Equivalently every pairwise determinant is +-1, which rules out interior
    lattice points.
    """
    return all(abs(a.det(b)) == 1 for a, b in ((s1, s2), (s2, s3), (s1, s3)))


# ---------------------------------------------------------------------------
# the dual framing of a surgery slope and its suture family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SurgeryFrame:
    """Surgery slope q/p together with its dual framing class q0*mu + p0*lambda.

    The pair (q0, p0) satisfies p0*q - p*q0 = 1 and, away from the
    hard-wired low-complexity slopes, the window conditions
    0 <= |p0| < |p|, p0*p <= 0 and 0 <= |q0| < |q|, q0*q <= 0.
    """

    q: int
    p: int
    q0: int
    p0: int

    @property
    def mu_hat(self) -> Slope:
        return Slope(self.p, self.q)

    @property
    def lambda_hat(self) -> Slope:
        return Slope(self.p0, self.q0)

    def suture_slope(self, n: int) -> Slope:
        """Class of the n-th suture: (p0 - n p) lambda + (q0 - n q) mu."""
        return Slope(self.p0 - n * self.p, self.q0 - n * self.q)

    def q_n(self, n: int) -> int:
        """Non-negative meridian coefficient of the n-th suture."""
        return abs(self.q0 - n * self.q)


def surgery_frame(q: int, p: int) -> SurgeryFrame:
    """Dual framing for the surgery slope q/p.

    Requires gcd(p, q) = 1 and q > 0, or (q, p) = (0, 1) (no surgery) or
    (1, 0) (the meridional filling).  Special slopes are fixed directly:
    p = 0 gives the longitude itself, |p| = 1 gives -p times the meridian,
    q = 0 gives minus the meridian, and q = 1 with p >= 2 (where the window
    conditions have no solution) falls back to the longitude.  All other
    slopes are resolved by exhaustive search over the stated windows, which
    must produce exactly one pair.
    """
    if gcd(abs(p), abs(q)) != 1:
        raise SlopeError(f"surgery slope {q}/{p} is not reduced")
    if q < 0:
        raise SlopeError("surgery slope must have q > 0 (or be 0/1)")
    if p == 0:
        if q != 1:
            raise SlopeError("p = 0 forces q = 1")
        return SurgeryFrame(q=1, p=0, q0=0, p0=1)
    if q == 0:
        return SurgeryFrame(q=0, p=1, q0=-1, p0=0)
    if abs(p) == 1:
        return SurgeryFrame(q=q, p=p, q0=-p, p0=0)
    if q == 1:
        # p0*1 - p*q0 = 1 with |q0| < 1 forces (q0, p0) = (0, 1); the sign
        # condition p0*p <= 0 is unsatisfiable for p >= 2, so the longitude
        # is used for both signs of p.
        return SurgeryFrame(q=1, p=p, q0=0, p0=1)

    hits = []
    p0_range = range(0, -abs(p), -1) if p > 0 else range(0, abs(p))
    q0_range = range(0, -abs(q), -1)  # q > 0 here
    for p0 in p0_range:
        for q0 in q0_range:
            if p0 * q - p * q0 == 1:
                hits.append((q0, p0))
    if len(hits) != 1:
        raise AssertionError(f"dual framing search for {q}/{p} found {hits}")
    q0, p0 = hits[0]
    return SurgeryFrame(q=q, p=p, q0=q0, p0=p0)
