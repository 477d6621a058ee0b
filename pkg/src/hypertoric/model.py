"""GIT input data and stack models.

Encodes the weight matrix A and character theta, computes column bases,
basis coefficients, sigma sets and their sign rule, genericity, the minimal
unstable coordinate sets, the doubled weight matrix of the cotangent-type
model, and exact moment-map evaluation.

Column indices are 1-based throughout the public API (columns 1..n).  In a
doubled model the coordinate j is x_j for j <= n and y_{j-n} for j > n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .characters import CharacterClass
from .exact import IntMatrix, as_fraction_vector, solve_rational

LAWRENCE = "lawrence"
HYPERTORIC = "hypertoric"
DIRECT = "direct"
KINDS = (LAWRENCE, HYPERTORIC, DIRECT)


class ModelError(ValueError):
    """Invalid model input (rank deficiency, bad schema, ...)."""


class NonGenericError(ModelError):
    """Character sits on a GIT wall: some basis coefficient vanishes."""

    def __init__(self, report: "GenericReport"):
        self.report = report
        super().__init__("non-generic character: " + report.describe())


@dataclass(frozen=True)
class WeightMatrix:
    """The d x n integer matrix of torus weights; column j is the character
    of the coordinate x_j.  Must have full rank d over Q."""

    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.rows == 0 or self.matrix.cols == 0:
            raise ModelError("weight matrix must be nonempty")
        if self.matrix.rank() != self.matrix.rows:
            raise ModelError("rank deficient: weight matrix must have full row rank")

    @staticmethod
    def from_rows(rows) -> "WeightMatrix":
        return WeightMatrix(IntMatrix.from_rows(rows))

    @property
    def d(self) -> int:
        return self.matrix.rows

    @property
    def n(self) -> int:
        return self.matrix.cols

    def column(self, j: int) -> tuple[int, ...]:
        """Weight of coordinate x_j (1-based)."""
        return self.matrix.column(j - 1)

    def columns_matrix(self, cols) -> IntMatrix:
        """Square-ish submatrix of the 1-based columns, in ascending order."""
        return self.matrix.submatrix_columns(sorted(j - 1 for j in cols))


@dataclass(frozen=True)
class SigmaSet:
    """Coordinates selected by the signs of the basis coefficients: the
    x-coordinate of a column with positive coefficient, the y-coordinate of
    one with negative coefficient."""

    basis: tuple[int, ...]
    tags: tuple[str, ...]

    def coords(self, n: int, doubled: bool = True) -> frozenset[int]:
        """Coordinate indices: x_j -> j, y_j -> n + j (doubled models)."""
        out = set()
        for j, tag in zip(self.basis, self.tags):
            if tag == "x":
                out.add(j)
            elif doubled:
                out.add(n + j)
            else:
                raise ModelError(
                    "sigma set selects dual coordinate y%d but the model is not doubled" % j
                )
        return frozenset(out)

    def labels(self) -> tuple[str, ...]:
        return tuple("%s%d" % (tag, j) for j, tag in zip(self.basis, self.tags))


@dataclass(frozen=True)
class GenericReport:
    """Outcome of the genericity check; violations name (basis, column)."""

    generic: bool
    violations: tuple[tuple[tuple[int, ...], int], ...] = ()

    @property
    def witness(self):
        return self.violations[0] if self.violations else None

    def describe(self) -> str:
        if self.generic:
            return "generic"
        return "; ".join(
            "basis {%s}, lambda_%d = 0" % (",".join(map(str, basis)), col)
            for basis, col in self.violations
        )


@dataclass(frozen=True)
class StableArrangement:
    """Stable-locus combinatorics of a model: the sigma sets, the minimal
    unstable coordinate sets they determine, and the ambient coordinates
    with their characters."""

    sigma_sets: tuple[SigmaSet, ...]
    unstable_minimal: tuple[frozenset[int], ...]
    ambient_chars: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]


@dataclass(frozen=True)
class StackModel:
    """A Lawrence, hypertoric or direct toric model ready for the inertia
    and Chow machinery.

    ``base`` is the defining d x n weight matrix; ``weights`` is the ambient
    coordinate matrix (doubled to d x 2n for Lawrence/hypertoric models).
    The hypertoric tangent class is the Lawrence one minus d trivial
    summands, reflecting that the moment-map directions carry the trivial
    character.
    """

    kind: str
    base: WeightMatrix
    weights: WeightMatrix
    theta: tuple[int, ...] | None
    arrangement: StableArrangement
    tangent_class: CharacterClass
    moment_rank: int

    @property
    def d(self) -> int:
        return self.base.d

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def doubled(self) -> bool:
        return self.kind in (LAWRENCE, HYPERTORIC)

    @property
    def num_coords(self) -> int:
        return self.weights.n

    def coordinate_char(self, j: int) -> tuple[int, ...]:
        return self.weights.column(j)

    def coordinate_label(self, j: int) -> str:
        return self.arrangement.labels[j - 1]

    def coords_of_columns(self, cols) -> frozenset[int]:
        """Ambient coordinate indices lying over the given base columns."""
        cols = set(cols)
        if self.doubled:
            return frozenset(cols | {self.n + j for j in cols})
        return frozenset(cols)


def column_bases(a: WeightMatrix) -> list[tuple[int, ...]]:
    """All size-d column subsets with nonzero determinant, lexicographic."""
    out = []
    for combo in itertools.combinations(range(1, a.n + 1), a.d):
        if a.columns_matrix(combo).det() != 0:
            out.append(combo)
    if not out:
        raise ModelError("rank deficient: no column basis exists")
    return out


def lambda_coeffs(a: WeightMatrix, basis, theta) -> tuple[Fraction, ...]:
    """The unique rationals with sum(lambda_j * a_{i_j}) = theta, indexed by
    the sorted basis columns."""
    basis = tuple(sorted(basis))
    sub = a.columns_matrix(basis)
    if sub.det() == 0:
        raise ModelError("columns {%s} are not a basis" % ",".join(map(str, basis)))
    x = solve_rational(sub, as_fraction_vector(theta))
    assert x is not None
    return x


def sigma_set(a: WeightMatrix, basis, theta) -> SigmaSet:
    """Apply the sign rule to the basis coefficients; zero coefficients mean
    the character is non-generic and are a hard error."""
    basis = tuple(sorted(basis))
    lams = lambda_coeffs(a, basis, theta)
    for j, lam in zip(basis, lams):
        if lam == 0:
            raise NonGenericError(GenericReport(False, ((basis, j),)))
    tags = tuple("x" if lam > 0 else "y" for lam in lams)
    return SigmaSet(basis, tags)


def check_generic(a: WeightMatrix, theta) -> GenericReport:
    """A character is generic iff every column basis has all-nonzero
    coefficients.  All violating (basis, column) pairs are reported."""
    violations = []
    for basis in column_bases(a):
        lams = lambda_coeffs(a, basis, theta)
        for j, lam in zip(basis, lams):
            if lam == 0:
                violations.append((basis, j))
    return GenericReport(not violations, tuple(violations))


def minimal_unstable_sets(coord_sets) -> list[frozenset[int]]:
    """Inclusion-minimal sets hitting every given coordinate set, ordered by
    (size, sorted elements).  Exhaustive: intended for desk-scale inputs."""
    targets = [frozenset(s) for s in coord_sets]
    if not targets:
        raise ModelError("no sigma sets: nothing is stable")
    if any(not t for t in targets):
        raise ModelError("empty sigma set cannot be hit")
    universe = sorted(set().union(*targets))
    found: list[frozenset[int]] = []
    for size in range(1, len(universe) + 1):
        for combo in itertools.combinations(universe, size):
            cand = frozenset(combo)
            if any(prev <= cand for prev in found):
                continue
            if all(cand & t for t in targets):
                found.append(cand)
    return found


def lawrence_double(a: WeightMatrix) -> WeightMatrix:
    """The d x 2n matrix (a_1 ... a_n, -a_1 ... -a_n)."""
    rows = [list(row) + [-e for e in row] for row in a.matrix.entries]
    return WeightMatrix.from_rows(rows)


def moment_eval(a: WeightMatrix, point) -> tuple[Fraction, ...]:
    """mu_i = sum_j a_ij x_j y_j at an exact rational point
    (x_1..x_n, y_1..y_n)."""
    p = as_fraction_vector(point)
    if len(p) != 2 * a.n:
        raise ValueError("point must have %d coordinates" % (2 * a.n))
    xs, ys = p[: a.n], p[a.n :]
    return tuple(
        sum((row[j] * xs[j] * ys[j] for j in range(a.n)), Fraction(0))
        for row in a.matrix.entries
    )


def _coordinate_labels(n: int, doubled: bool) -> tuple[str, ...]:
    labels = ["x%d" % j for j in range(1, n + 1)]
    if doubled:
        labels += ["y%d" % j for j in range(1, n + 1)]
    return tuple(labels)


def _require_generic(a: WeightMatrix, theta):
    theta = tuple(int(c) for c in theta)
    if not any(theta):
        raise ModelError("character theta must be nonzero")
    report = check_generic(a, theta)
    if not report.generic:
        raise NonGenericError(report)
    return theta


def _git_arrangement(a: WeightMatrix, theta) -> tuple[tuple[SigmaSet, ...], tuple[frozenset[int], ...]]:
    sigmas = tuple(sigma_set(a, basis, theta) for basis in column_bases(a))
    unstable = tuple(minimal_unstable_sets([s.coords(a.n, doubled=True) for s in sigmas]))
    return sigmas, unstable


def lawrence_model(a: WeightMatrix, theta) -> StackModel:
    """Quotient model of the doubled coordinate space by the torus,
    linearized at theta.  Non-generic theta is rejected outright."""
    theta = _require_generic(a, theta)
    sigmas, unstable = _git_arrangement(a, theta)
    doubled = lawrence_double(a)
    chars = tuple(doubled.column(j) for j in range(1, doubled.n + 1))
    tangent = CharacterClass.build(a.d, [(w, 1) for w in chars], trivial=-a.d)
    arrangement = StableArrangement(sigmas, unstable, chars, _coordinate_labels(a.n, True))
    return StackModel(LAWRENCE, a, doubled, theta, arrangement, tangent, 0)


def hypertoric_model(a: WeightMatrix, theta) -> StackModel:
    """Moment-fiber model inside the Lawrence model: same arrangement, with
    d trivial tangent directions removed and moment rank d."""
    lm = lawrence_model(a, theta)
    tangent = lm.tangent_class + CharacterClass.build(a.d, trivial=-a.d)
    return StackModel(HYPERTORIC, a, lm.weights, lm.theta, lm.arrangement, tangent, a.d)


def direct_model(a: WeightMatrix, unstable=None, theta=None) -> StackModel:
    """Undoubled toric model.

    Either pass the minimal unstable coordinate sets directly (1-based column
    indices), or pass a character theta whose sign rule selects only
    x-coordinates in every basis (weighted-projective-space style inputs).
    """
    chars = tuple(a.column(j) for j in range(1, a.n + 1))
    tangent = CharacterClass.build(a.d, [(w, 1) for w in chars], trivial=-a.d)
    labels = _coordinate_labels(a.n, False)
    if unstable is not None:
        sets = []
        for s in unstable:
            fs = frozenset(int(j) for j in s)
            if not fs or not fs <= set(range(1, a.n + 1)):
                raise ModelError("unstable set %r is not a nonempty set of columns 1..%d" % (sorted(fs), a.n))
            sets.append(fs)
        for s1 in sets:
            for s2 in sets:
                if s1 < s2:
                    raise ModelError("unstable sets must form an antichain")
        sets = sorted(set(sets), key=lambda s: (len(s), sorted(s)))
        theta_t = tuple(int(c) for c in theta) if theta is not None else None
        arrangement = StableArrangement((), tuple(sets), chars, labels)
        return StackModel(DIRECT, a, a, theta_t, arrangement, tangent, 0)
    if theta is None:
        raise ModelError("direct model needs either unstable sets or a character")
    theta = _require_generic(a, theta)
    sigmas = tuple(sigma_set(a, basis, theta) for basis in column_bases(a))
    unstable_sets = tuple(
        minimal_unstable_sets([s.coords(a.n, doubled=False) for s in sigmas])
    )
    arrangement = StableArrangement(sigmas, unstable_sets, chars, labels)
    return StackModel(DIRECT, a, a, theta, arrangement, tangent, 0)


def model_from_dict(data: dict) -> StackModel:
    """Build a model from the JSON input schema:

      {"A": [[...]], "theta": [...], "kind": "lawrence"|"hypertoric"|"direct",
       "unstable": [[...]]}   (unstable: direct models only)
    """
    if not isinstance(data, dict):
        raise ModelError("model file must contain a JSON object")
    if "A" not in data:
        raise ModelError("model file is missing the weight matrix 'A'")
    try:
        a = WeightMatrix.from_rows(data["A"])
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ModelError):
            raise
        raise ModelError("bad weight matrix: %s" % exc) from exc
    kind = data.get("kind", LAWRENCE)
    if kind not in KINDS:
        raise ModelError("unknown model kind %r (expected one of %s)" % (kind, "/".join(KINDS)))
    theta = data.get("theta")
    if kind == DIRECT:
        return direct_model(a, unstable=data.get("unstable"), theta=theta)
    if theta is None:
        raise ModelError("%s model requires a character 'theta'" % kind)
    if "unstable" in data:
        raise ModelError("explicit unstable sets are only allowed for direct models")
    builder = lawrence_model if kind == LAWRENCE else hypertoric_model
    return builder(a, theta)
