"""Plane curve families over GF(q^2): point enumeration, genus, maximality.

Two families are supported, both with a single designated point at
infinity carrying the pole orders used by the code construction:

* superelliptic: y^n = x^m + x with n = (q+1)/2; x and y have pole
  orders n and m at infinity.
* hermitian: y^q + y = x^(q+1); pole orders q and q+1.

The curve is modeled as its affine plane locus plus one abstract point
at infinity; resolution of singularities is out of scope, so for
parameter choices where the smooth model has several points above
x = infinity the reported point count refers to this plane model.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field as dc_field
from enum import Enum
from math import gcd
import numpy as np

from .gf import Felt, FieldError, QuadraticTower, quadratic_tower


class Family(str, Enum):
    SUPERELLIPTIC = "superelliptic"
    HERMITIAN = "hermitian"


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y) or the point at infinity."""

    x: Felt | None
    y: Felt | None
    at_infinity: bool = False

    def __repr__(self) -> str:
        if self.at_infinity:
            return "Pinf"
        return f"({self.x!r}, {self.y!r})"


@dataclass(frozen=True)
class CurveSpec:
    """A curve family instance over GF(q^2) with its pole orders at infinity.

    `warnings` collects violated side conditions (gcd constraints,
    coverage of the maximality criterion) that do not prevent building
    the curve but void the guarantees attached to them.
    """

    family: Family
    q: int
    n: int
    m: int
    pole_order_x: int
    pole_order_y: int
    genus: int
    tower: QuadraticTower = dc_field(repr=False, compare=False, hash=False, default=None)
    warnings: tuple[str, ...] = ()

    def label(self) -> str:
        return f"{self.family.value}-q{self.q}-m{self.m}"

    def to_json(self) -> str:
        return json.dumps({"family": self.family.value, "q": self.q, "m": self.m})


def superelliptic_curve(q: int, m: int) -> CurveSpec:
    """y^n = x^m + x over GF(q^2) with n = (q+1)/2."""
    if q % 2 == 0:
        raise FieldError(f"superelliptic family needs odd q so that (q+1)/2 is an integer; got q={q}")
    tower = quadratic_tower(q)
    n = (q + 1) // 2
    if m < 2 or n < 2:
        raise FieldError(f"exponents must be >= 2; got n={n}, m={m}")
    if (m - 1) * (n - 1) % 2 != 0:
        raise FieldError(
            f"(m-1)(n-1) = {(m - 1) * (n - 1)} is odd, genus (m-1)(n-1)/2 is not an integer"
        )
    warnings = []
    if gcd(n, m) != 1:
        warnings.append(f"gcd(n, m) = gcd({n}, {m}) != 1")
    if gcd(q, n) != 1:
        warnings.append(f"gcd(q, n) = gcd({q}, {n}) != 1")
    if gcd(q, m - 1) != 1:
        warnings.append(f"gcd(q, m-1) = gcd({q}, {m - 1}) != 1")
    if not _maximality_criterion_covers(tower.p, tower.s, m):
        warnings.append(f"m={m} outside the proven-maximal cases (m in {{2, 3}} or m = p^b with b | s)")
    return CurveSpec(
        family=Family.SUPERELLIPTIC,
        q=q,
        n=n,
        m=m,
        pole_order_x=n,
        pole_order_y=m,
        genus=(m - 1) * (n - 1) // 2,
        tower=tower,
        warnings=tuple(warnings),
    )


def hermitian_curve(q: int) -> CurveSpec:
    """y^q + y = x^(q+1) over GF(q^2)."""
    tower = quadratic_tower(q)
    return CurveSpec(
        family=Family.HERMITIAN,
        q=q,
        n=q,
        m=q + 1,
        pole_order_x=q,
        pole_order_y=q + 1,
        genus=q * (q - 1) // 2,
        tower=tower,
    )


def _maximality_criterion_covers(p: int, s: int, m: int) -> bool:
    if m in (2, 3):
        return True
    mm = m
    b = 0
    while mm % p == 0:
        mm //= p
        b += 1
    return mm == 1 and b >= 1 and s % b == 0


def curve_from_json(text: str) -> CurveSpec:
    data = json.loads(text)
    family = Family(data["family"])
    if family is Family.HERMITIAN:
        return hermitian_curve(data["q"])
    return superelliptic_curve(data["q"], data["m"])


def _lhs_rhs_tables(curve: CurveSpec) -> tuple[np.ndarray, np.ndarray]:
    """Index tables: lhs[y] and rhs[x] of the defining equation."""
    F = curve.tower.ext
    idx = np.arange(F.order, dtype=np.int64)
    if curve.family is Family.SUPERELLIPTIC:
        lhs = F.vpow(idx, curve.n)
        rhs = F.vadd(F.vpow(idx, curve.m), idx)
    else:
        lhs = F.vadd(F.vpow(idx, curve.q), idx)
        rhs = F.vpow(idx, curve.q + 1)
    return lhs, rhs


def is_on_curve(curve: CurveSpec, pt: CurvePoint) -> bool:
    """Check the defining equation by direct substitution."""
    if pt.at_infinity:
        return True
    F = curve.tower.ext
    if pt.x.field != F or pt.y.field != F:
        raise FieldError(f"point coordinates must lie in {F!r}")
    lhs, rhs = _lhs_rhs_tables(curve)
    return bool(lhs[pt.y.index] == rhs[pt.x.index])


def enumerate_points(curve: CurveSpec) -> list[CurvePoint]:
    """All affine GF(q^2)-rational points in lexicographic (x, y) order,
    followed by the point at infinity."""
    F = curve.tower.ext
    lhs, rhs = _lhs_rhs_tables(curve)
    # y-values grouped by lhs value, in canonical y order
    by_value: dict[int, list[int]] = {}
    for y in range(F.order):
        by_value.setdefault(int(lhs[y]), []).append(y)
    points = []
    for x in range(F.order):
        for y in by_value.get(int(rhs[x]), ()):
            points.append(CurvePoint(F.felt(x), F.felt(y)))
    points.append(CurvePoint(None, None, at_infinity=True))
    return points


def affine_points(curve: CurveSpec) -> list[CurvePoint]:
    return enumerate_points(curve)[:-1]


@dataclass(frozen=True)
class MaximalityReport:
    count_points: int
    expected: int
    is_maximal: bool
    genus: int
    warnings: tuple[str, ...]


def maximality_check(curve: CurveSpec) -> MaximalityReport:
    """Compare the exhaustive point count against q^2 + 1 + 2gq."""
    count = len(enumerate_points(curve))
    expected = curve.q**2 + 1 + 2 * curve.genus * curve.q
    return MaximalityReport(
        count_points=count,
        expected=expected,
        is_maximal=count == expected,
        genus=curve.genus,
        warnings=curve.warnings,
    )


def write_points_csv(curve: CurveSpec, path) -> None:
    F = curve.tower.ext
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "y"])
        for pt in enumerate_points(curve):
            if pt.at_infinity:
                writer.writerow(["inf", "inf"])
            else:
                writer.writerow([F.format_element(pt.x.index), F.format_element(pt.y.index)])
