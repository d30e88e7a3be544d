"""One-point evaluation codes over GF(q^2) and their verification.

Codes are built by evaluating a rank-verified monomial basis of the
space attached to r*Pinf at a chosen set of affine points.  Everything
the construction claims about a code (dimension, minimum distance,
duality, self-orthogonality) is checked by explicit linear algebra at
desk scale rather than assumed: distances are brute-forced within a
codeword budget, duals are null spaces, and the closed-form duality
relation is compared against computed row spaces, never asserted.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
import numpy as np

from .curve import CurvePoint, CurveSpec, affine_points
from .gf import Felt, Field, FieldError, QuadraticTower, factor_prime_power, field, quadratic_tower
from .linalg import matmul, rank, right_nullspace, row_basis, row_space_equal
from .rrspace import dimension_by_cases, evaluation_matrix, verified_basis

DEFAULT_BUDGET = 1 << 20


class BudgetExceededError(Exception):
    """Requested enumeration is larger than the codeword budget."""


@dataclass(eq=False)
class LinearCode:
    """A linear [n, k] code over `field`, held as a full-row-rank generator.

    `tower` is present when the field is a quadratic extension GF(q^2)
    with its designated GF(q), enabling Hermitian operations.  `points`
    and `r` record provenance for codes built from a curve.
    """

    field: Field
    generator: np.ndarray
    parity_check: np.ndarray | None = None
    tower: QuadraticTower | None = None
    points: tuple[CurvePoint, ...] | None = None
    curve: CurveSpec | None = None
    r: int | None = None
    source: str = "explicit"
    name: str = ""

    def __post_init__(self):
        self.generator = np.atleast_2d(np.asarray(self.generator, dtype=np.int64))
        if self.parity_check is None:
            self.parity_check = right_nullspace(self.field, self.generator)
        else:
            self.parity_check = np.atleast_2d(np.asarray(self.parity_check, dtype=np.int64))
        if not self.name:
            self.name = f"n{self.n}k{self.k}q{self.field.order}"

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    @property
    def designed_distance(self) -> int | None:
        return self.n - self.r if self.r is not None else None

    @classmethod
    def from_generator(cls, F: Field, rows, **kwargs) -> "LinearCode":
        """Construct from explicit rows, rejecting rank-deficient input."""
        G = np.atleast_2d(np.asarray(rows, dtype=np.int64))
        if np.any((G < 0) | (G >= F.order)):
            raise ValueError(f"matrix entries must be indices in [0, {F.order})")
        rk = rank(F, G)
        if rk != G.shape[0]:
            raise ValueError(f"generator has rank {rk} < {G.shape[0]} rows; not a basis")
        if kwargs.get("tower") is None and F.e % 2 == 0:
            kwargs["tower"] = quadratic_tower(F.p ** (F.e // 2))
        return cls(field=F, generator=G, **kwargs)


def resolve_eval_set(curve: CurveSpec, policy) -> list[CurvePoint]:
    """Point-selection policy: 'all', 'first:N', 'exclude-subfield',
    or an explicit sequence of affine points."""
    if isinstance(policy, str):
        pts = affine_points(curve)
        if policy == "all":
            return pts
        if policy.startswith("first:"):
            count = int(policy.split(":", 1)[1])
            if count < 1 or count > len(pts):
                raise ValueError(f"cannot select {count} of {len(pts)} affine points")
            return pts[:count]
        if policy == "exclude-subfield":
            tower = curve.tower
            return [
                p for p in pts
                if not (tower.in_subfield(p.x.index) and tower.in_subfield(p.y.index))
            ]
        raise ValueError(f"unknown evaluation-set policy {policy!r}")
    pts = list(policy)
    if not pts or any(p.at_infinity for p in pts):
        raise ValueError("explicit evaluation set must be nonempty and affine")
    return pts


def build_onepoint_code(curve: CurveSpec, r: int, eval_set="all", name: str = "") -> LinearCode:
    """Evaluation code of the verified basis of r*Pinf at the chosen points."""
    points = resolve_eval_set(curve, eval_set)
    if not points:
        raise ValueError("evaluation set is empty")
    basis = verified_basis(curve, r, points)
    G = evaluation_matrix(curve, basis.monomials, points)
    if len(basis) == 0:
        G = np.zeros((0, len(points)), dtype=np.int64)
    return LinearCode(
        field=curve.tower.ext,
        generator=G,
        tower=curve.tower,
        points=tuple(points),
        curve=curve,
        r=r,
        source=f"onepoint:{curve.label()}:r={r}",
        name=name or f"{curve.label()}-r{r}",
    )


def dual(code: LinearCode) -> LinearCode:
    """Euclidean dual: generator = null space of the generator."""
    G_dual = row_basis(code.field, right_nullspace(code.field, code.generator))
    return LinearCode(
        field=code.field,
        generator=G_dual.reshape(-1, code.n),
        parity_check=code.generator.copy() if code.k else None,
        tower=code.tower,
        points=code.points,
        curve=code.curve,
        source=f"dual({code.source})",
        name=f"dual-{code.name}",
    )


# ---------------------------------------------------------------------------
# codeword enumeration


def _message_block(order: int, k: int, start: int, stop: int) -> np.ndarray:
    msgs = np.arange(start, stop, dtype=np.int64)
    out = np.zeros((len(msgs), k), dtype=np.int64)
    for i in range(k):
        out[:, i] = (msgs // order**i) % order
    return out


def iter_codeword_blocks(code: LinearCode, block: int = 4096, skip_zero: bool = False):
    """Yield codeword index matrices covering all q^k messages in canonical order."""
    total = code.field.order**code.k
    start = 1 if skip_zero else 0
    for lo in range(start, total, block):
        hi = min(lo + block, total)
        msgs = _message_block(code.field.order, code.k, lo, hi)
        yield matmul(code.field, msgs, code.generator)


@dataclass(frozen=True)
class DistanceResult:
    d: int | None
    method: str
    lower: int | None
    upper: int | None

    @property
    def exact(self) -> bool:
        return self.d is not None


def min_distance(code: LinearCode, budget: int = DEFAULT_BUDGET) -> DistanceResult:
    """Exact minimum distance when q^k fits the budget, bounds otherwise.

    Over budget, weight-1 and weight-2 codewords are still detected
    exactly from the parity-check columns (zero or pairwise-parallel
    columns); beyond that the result is an explicit bounds-only report,
    never an estimate.
    """
    F = code.field
    n, k = code.n, code.k
    if k == 0:
        return DistanceResult(d=None, method="empty", lower=None, upper=None)
    if k == n:
        return DistanceResult(d=1, method="full-space", lower=1, upper=1)
    if F.order**k <= budget:
        best = n + 1
        for block in iter_codeword_blocks(code, skip_zero=True):
            weights = np.count_nonzero(block, axis=1)
            weights = weights[weights > 0]
            if len(weights):
                best = min(best, int(weights.min()))
        return DistanceResult(d=best, method="exhaustive", lower=best, upper=best)

    H = code.parity_check
    cols_zero = ~H.any(axis=0)
    if cols_zero.any():
        return DistanceResult(d=1, method="parity-columns", lower=1, upper=1)
    normalized = set()
    for j in range(n):
        col = H[:, j]
        lead = int(col[np.nonzero(col)[0][0]])
        key = tuple(int(v) for v in F.vscale(F.inv(lead), col))
        if key in normalized:
            return DistanceResult(d=2, method="parity-columns", lower=2, upper=2)
        normalized.add(key)

    designed = code.designed_distance
    lower = max(3, designed) if designed is not None and designed > 0 else 3
    return DistanceResult(d=None, method="bounds-only", lower=lower, upper=n - k + 1)


def weight_distribution(code: LinearCode, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """Codeword counts by Hamming weight; counts sum to q^k."""
    if code.k > 0 and code.field.order**code.k > budget:
        raise BudgetExceededError(
            f"{code.field.order}^{code.k} codewords exceed budget {budget}"
        )
    counts = np.zeros(code.n + 1, dtype=np.int64)
    if code.k == 0:
        counts[0] = 1
        return counts
    for block in iter_codeword_blocks(code):
        w = np.count_nonzero(block, axis=1)
        counts += np.bincount(w, minlength=code.n + 1)
    return counts


# ---------------------------------------------------------------------------
# Hermitian structure


def hermitian_inner(tower: QuadraticTower, a, b) -> Felt:
    """<a, b> = sum_i a_i * b_i^q over GF(q^2)."""
    ai = _as_indices(tower.ext, a)
    bi = _as_indices(tower.ext, b)
    if ai.shape != bi.shape:
        raise ValueError(f"length mismatch: {ai.shape} vs {bi.shape}")
    return Felt(tower.ext, int(tower.ext.vdot(ai, tower.vfrobenius(bi))))


def _as_indices(F: Field, v) -> np.ndarray:
    if isinstance(v, np.ndarray):
        return v.astype(np.int64)
    out = []
    for item in v:
        if isinstance(item, Felt):
            if item.field != F:
                raise FieldError(f"{item!r} is not in {F!r}")
            out.append(item.index)
        else:
            out.append(int(item))
    return np.array(out, dtype=np.int64)


def _hermitian_gram(code: LinearCode) -> np.ndarray:
    tower = _require_tower(code)
    G = code.generator
    return matmul(code.field, G, tower.vfrobenius(G).T)


def _require_tower(code: LinearCode) -> QuadraticTower:
    if code.tower is None:
        raise FieldError(
            f"{code.field!r} carries no designated quadratic subfield; "
            "Hermitian operations are unavailable"
        )
    return code.tower


def hermitian_violation(code: LinearCode) -> tuple[int, int] | None:
    """First generator row pair with nonzero Hermitian product, if any."""
    gram = _hermitian_gram(code)
    nz = np.argwhere(gram != 0)
    if len(nz) == 0:
        return None
    return int(nz[0][0]), int(nz[0][1])


def is_hermitian_self_orthogonal(code: LinearCode) -> bool:
    """All pairwise row products vanish, re-checked over a GF(q)-spanning
    set of scalar multiples of the rows so the subset claim is literal."""
    tower = _require_tower(code)
    if code.k == 0:
        return True
    gram = _hermitian_gram(code)
    if np.any(gram):
        return False
    F = code.field
    for lam in (1, F.primitive):
        scaled = F.vscale(lam, code.generator)
        if np.any(matmul(F, scaled, tower.vfrobenius(code.generator).T)):
            return False
    return True


def is_euclidean_self_orthogonal(code: LinearCode) -> bool:
    if code.k == 0:
        return True
    return not np.any(matmul(code.field, code.generator, code.generator.T))


def hermitian_dual(code: LinearCode) -> LinearCode:
    """Null space of the entrywise-conjugated generator."""
    tower = _require_tower(code)
    conj = tower.vfrobenius(code.generator)
    G_dual = row_basis(code.field, right_nullspace(code.field, conj))
    return LinearCode(
        field=code.field,
        generator=G_dual.reshape(-1, code.n),
        tower=tower,
        points=code.points,
        curve=code.curve,
        source=f"hermitian-dual({code.source})",
        name=f"hdual-{code.name}",
    )


# ---------------------------------------------------------------------------
# duality claim comparison


@dataclass(frozen=True)
class DualityClaim:
    """Computed comparison of dual(C_r) with C_{r'} for
    r' = q^2 + (q-1)(m-1)/2 - r.  Reports, never asserts."""

    q: int
    m: int
    r: int
    r_prime: int | None
    applicable: bool
    dim_code: int | None = None
    dim_dual: int | None = None
    dim_companion: int | None = None
    row_spaces_equal: bool | None = None
    companion_inside_dual: bool | None = None
    dual_inside_companion: bool | None = None

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def check_duality_claim(curve: CurveSpec, r: int, eval_set="all") -> DualityClaim:
    half = Fraction((curve.q - 1) * (curve.m - 1), 2)
    r_prime_frac = Fraction(curve.q**2) + half - r
    if r_prime_frac < 0 or r_prime_frac.denominator != 1:
        return DualityClaim(
            q=curve.q, m=curve.m, r=r,
            r_prime=None if r_prime_frac.denominator != 1 else int(r_prime_frac),
            applicable=False,
        )
    r_prime = int(r_prime_frac)
    code = build_onepoint_code(curve, r, eval_set)
    companion = build_onepoint_code(curve, r_prime, eval_set)
    code_dual = dual(code)
    F = curve.tower.ext
    stacked = np.vstack([code_dual.generator, companion.generator])
    stacked_rank = rank(F, stacked)
    return DualityClaim(
        q=curve.q,
        m=curve.m,
        r=r,
        r_prime=r_prime,
        applicable=True,
        dim_code=code.k,
        dim_dual=code_dual.k,
        dim_companion=companion.k,
        row_spaces_equal=row_space_equal(F, code_dual.generator, companion.generator),
        companion_inside_dual=stacked_rank == code_dual.k,
        dual_inside_companion=stacked_rank == companion.k,
    )


# ---------------------------------------------------------------------------
# reporting


@dataclass
class CodeReport:
    name: str
    n: int
    k: int
    d: int | None
    d_method: str
    d_lower: int | None
    d_upper: int | None
    d_designed: int | None
    singleton_ok: bool | None
    goppa_bound_ok: bool | None
    euclidean_self_orthogonal: bool
    hermitian_self_orthogonal: bool | None
    euclidean_threshold_holds: bool | None
    hermitian_threshold_r: bool | None
    hermitian_threshold_pole: bool | None
    length_claimed: int | None
    designed_distance_claimed: int | None
    dimension_case: int | None
    dimension_predicted: str | None
    dimension_prediction_matches: bool | None
    weight_distribution: list[int] | None
    duality_claim: dict | None
    warnings: list[str]

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.__dict__, indent=indent, sort_keys=True)


def code_report(curve: CurveSpec, r: int, eval_set="all", budget: int = DEFAULT_BUDGET,
                include_weights: bool = False, check_duality: bool = True) -> CodeReport:
    """Full verification record for the one-point code at r."""
    code = build_onepoint_code(curve, r, eval_set)
    dist = min_distance(code, budget)
    designed = code.designed_distance
    q, m = curve.q, curve.m
    herm = is_hermitian_self_orthogonal(code)
    eucl = is_euclidean_self_orthogonal(code)
    pred = dimension_by_cases(curve, r)
    wd = None
    if include_weights and (code.k == 0 or code.field.order**code.k <= budget):
        wd = [int(c) for c in weight_distribution(code, budget)]
    claim = check_duality_claim(curve, r, eval_set).to_dict() if check_duality else None
    half = Fraction((q - 1) * (m - 1), 2)
    return CodeReport(
        name=code.name,
        n=code.n,
        k=code.k,
        d=dist.d,
        d_method=dist.method,
        d_lower=dist.lower,
        d_upper=dist.upper,
        d_designed=designed,
        singleton_ok=(dist.d <= code.n - code.k + 1) if dist.exact else None,
        goppa_bound_ok=(dist.d >= designed) if (dist.exact and designed is not None and designed > 0) else None,
        euclidean_self_orthogonal=eucl,
        hermitian_self_orthogonal=herm,
        euclidean_threshold_holds=bool(2 * r <= q * q + half),
        hermitian_threshold_r=bool(r <= q - 1),
        hermitian_threshold_pole=bool(r <= (q - 1) * (q + 1)),
        length_claimed=q * q,
        designed_distance_claimed=q * q - r * (q + 1),
        dimension_case=pred.case,
        dimension_predicted=str(pred.value),
        dimension_prediction_matches=bool(pred.is_integer and pred.value == code.k),
        weight_distribution=wd,
        duality_claim=claim,
        warnings=list(curve.warnings),
    )


# ---------------------------------------------------------------------------
# explicit matrix files


def save_code(code: LinearCode, path) -> None:
    """Write 'q2=<size> n=<n> k=<k>' then k rows of canonical indices."""
    with open(path, "w") as fh:
        fh.write(f"q2={code.field.order} n={code.n} k={code.k}\n")
        for row in code.generator:
            fh.write(" ".join(str(int(v)) for v in row) + "\n")


def load_code(path) -> LinearCode:
    """Read the matrix format written by `save_code` and verify rank."""
    with open(path) as fh:
        header = fh.readline().strip()
        match = re.fullmatch(r"q2=(\d+) n=(\d+) k=(\d+)", header)
        if not match:
            raise ValueError(f"bad header {header!r}; expected 'q2=<size> n=<n> k=<k>'")
        size, n, k = (int(g) for g in match.groups())
        p, e = factor_prime_power(size)
        F = field(p, e)
        rows = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rows.append([int(tok) for tok in line.split()])
        if len(rows) != k or any(len(row) != n for row in rows):
            raise ValueError(f"expected {k} rows of {n} entries")
    return LinearCode.from_generator(F, rows, source=f"explicit:{path}")
