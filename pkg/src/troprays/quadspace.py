"""Vectors over the semifield, quadratic pairs (q, b), and the CS-ratio.

A model is given by Gram data on a free module R^n: the diagonal values
alpha_i = q(e_i) and a symmetric companion matrix beta_ij = b(e_i, e_j).
The off-diagonal Gram coefficient of q and the companion entry are stored
as a single matrix entry, so the companion identity

    q(x + y) = q(x) + q(y) + b(x, y)

holds on basis pairs by construction; it holds for all vectors exactly when
every diagonal entry satisfies beta_ii <= alpha_i.  The JSON loader rejects
data violating that bound; :func:`validate_pair` reports violations on
in-memory models.  Models with beta_ii = alpha_i for all i are *balanced*.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionMismatch, IsotropicArgument, SchemaError, ZeroVector
from .semifield import ZERO, ONE, TropValue


class Vector:
    """Immutable coordinate vector over [0, oo[; no coordinate may be oo."""

    __slots__ = ("coords", "exps")

    def __init__(self, coords):
        coords = tuple(coords)
        for c in coords:
            if c.is_infinite():
                raise ValueError("vector coordinates must lie in [0, oo[")
        self.coords = coords
        # raw exponents (None encoding zero) for the Gram evaluation hot path
        self.exps = tuple(c.exp for c in coords)

    @classmethod
    def parse(cls, items) -> "Vector":
        return cls(TropValue.parse(str(s)) for s in items)

    @classmethod
    def unit(cls, dim: int, i: int) -> "Vector":
        return cls(ONE if j == i else ZERO for j in range(dim))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> TropValue:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "Vector") -> "Vector":
        if len(self) != len(other):
            raise DimensionMismatch("vector dimensions differ")
        return Vector(a + b for a, b in zip(self.coords, other.coords))

    def scale(self, lam: TropValue) -> "Vector":
        """lam * x; lam must lie in [0, oo[ so no coordinate becomes oo."""
        if lam.is_infinite():
            raise ValueError("scalars must lie in [0, oo[")
        return Vector(lam * c for c in self.coords)

    def __rmul__(self, lam: TropValue) -> "Vector":
        return self.scale(lam)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def vec(*items) -> Vector:
    """Build a vector from exponents / "-inf" strings; test-friendly."""
    return Vector.parse(items)


@dataclass(frozen=True)
class QuadraticPair:
    """Gram data for a quadratic form q with bilinear companion b."""

    dim: int
    q_diag: tuple
    b: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise SchemaError("dimension must be >= 1")
        if len(self.q_diag) != self.dim or len(self.b) != self.dim:
            raise SchemaError("Gram data sizes do not match the dimension")
        for row in self.b:
            if len(row) != self.dim:
                raise SchemaError("companion matrix is not square")
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.b[i][j] != self.b[j][i]:
                    raise SchemaError("companion matrix must be symmetric")
        for v in self.q_diag:
            if v.is_infinite():
                raise SchemaError("q values must lie in [0, oo[")
        for row in self.b:
            for v in row:
                if v.is_infinite():
                    raise SchemaError("b values must lie in [0, oo[")
        object.__setattr__(self, "_qe", tuple(v.exp for v in self.q_diag))
        object.__setattr__(self, "_be",
                           tuple(tuple(v.exp for v in row) for row in self.b))

    @classmethod
    def from_rows(cls, q_diag, b_rows) -> "QuadraticPair":
        q_diag = tuple(TropValue.parse(str(v)) if isinstance(v, (str, int)) else v for v in q_diag)
        b = tuple(
            tuple(TropValue.parse(str(v)) if isinstance(v, (str, int)) else v for v in row)
            for row in b_rows
        )
        return cls(len(q_diag), q_diag, b)

    @property
    def balanced(self) -> bool:
        return all(self.b[i][i] == self.q_diag[i] for i in range(self.dim))

    def _check_dim(self, x: Vector):
        if len(x) != self.dim:
            raise DimensionMismatch("vector has length %d, model dimension is %d" % (len(x), self.dim))

    def eval_q(self, x: Vector) -> TropValue:
        """q(x) = max over alpha_i x_i^2 and beta_ij x_i x_j (i < j)."""
        self._check_dim(x)
        best = None
        xe = x.exps
        for i in range(self.dim):
            xi = xe[i]
            if xi is None:
                continue
            qi = self._qe[i]
            if qi is not None:
                v = qi + xi + xi
                if best is None or best < v:
                    best = v
            row = self._be[i]
            for j in range(i + 1, self.dim):
                xj = xe[j]
                if xj is None or row[j] is None:
                    continue
                v = row[j] + xi + xj
                if best is None or best < v:
                    best = v
        return ZERO if best is None else TropValue.finite(best)

    def eval_b(self, x: Vector, y: Vector) -> TropValue:
        """b(x, y) = max over beta_ij x_i y_j (all i, j)."""
        self._check_dim(x)
        self._check_dim(y)
        best = None
        ye = y.exps
        for i in range(self.dim):
            xi = x.exps[i]
            if xi is None:
                continue
            row = self._be[i]
            for j in range(self.dim):
                yj = ye[j]
                if yj is None or row[j] is None:
                    continue
                v = row[j] + xi + yj
                if best is None or best < v:
                    best = v
        return ZERO if best is None else TropValue.finite(best)

    def cs(self, x: Vector, y: Vector) -> TropValue:
        """CS(x, y) = b(x, y)^2 / (q(x) q(y)); requires both anisotropic."""
        qx = self.eval_q(x)
        qy = self.eval_q(y)
        if qx.is_zero() or qy.is_zero():
            raise IsotropicArgument("CS-ratio needs anisotropic arguments")
        bxy = self.eval_b(x, y)
        return (bxy * bxy) / (qx * qy)

    def is_isotropic(self, x: Vector) -> bool:
        """True iff x is nonzero and q(x) = 0."""
        if x.is_zero():
            raise ZeroVector("the zero vector is neither isotropic nor anisotropic")
        return self.eval_q(x).is_zero()


@dataclass
class ValidationReport:
    ok: bool
    balanced: bool
    pairs_checked: int
    failures: list = field(default_factory=list)


def validate_pair(pair: QuadraticPair, samples: int = 0, rng=None) -> ValidationReport:
    """Check q(x+y) = q(x) + q(y) + b(x, y) on basis pairs and random pairs.

    Basis pairs include the degenerate (e_i, e_i) case, which is what a
    diagonal companion entry exceeding q(e_i) would break.  The report
    carries the first counterexamples found; it never raises.
    """
    failures = []
    n = pair.dim
    checked = 0
    units = [Vector.unit(n, i) for i in range(n)]

    def check(x, y):
        nonlocal checked
        checked += 1
        lhs = pair.eval_q(x + y)
        rhs = pair.eval_q(x) + pair.eval_q(y) + pair.eval_b(x, y)
        if lhs != rhs:
            failures.append((x, y, lhs, rhs))

    for i in range(n):
        for j in range(i, n):
            check(units[i], units[j])
    if samples:
        from .sampling import Sampler

        sampler = rng if isinstance(rng, Sampler) else Sampler(0 if rng is None else rng)
        for _ in range(samples):
            check(sampler.vector(n), sampler.vector(n))
    return ValidationReport(ok=not failures, balanced=pair.balanced,
                            pairs_checked=checked, failures=failures)
