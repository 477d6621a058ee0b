"""Degreewise-exact integral graded rings.

A sector ring is presented as Z[t1..td] modulo one product relation per
minimal unstable coordinate set (the factor for a coordinate of character w
is the linear form <w, t>).  Graded pieces are finitely generated abelian
groups computed exactly by Smith normal form up to a truncation bound, which
also yields canonical coordinates, isomorphism tests for graded ring maps,
and Gysin pushforwards along sector embeddings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import IntMatrix, snf
from .model import StackModel
from .poly import IntPoly, monomials_of_degree


class GysinError(ValueError):
    """Pushforward well-definedness check failed for an embedding."""


@dataclass(frozen=True)
class GradedPiece:
    """Degree-k piece of a presentation as an abelian group.

    ``monomials`` is the free basis, ``diag`` the invariant factors of the
    relation submodule, and ``transform`` the unimodular row transform used
    to put classes in canonical coordinates.
    """

    degree: int
    monomials: tuple[tuple[int, ...], ...]
    relation_matrix: IntMatrix | None
    transform: IntMatrix | None
    diag: tuple[int, ...]
    free_rank: int
    torsion: tuple[int, ...]

    @property
    def invariants(self) -> tuple[int, tuple[int, ...]]:
        return (self.free_rank, self.torsion)

    def describe_group(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z/%d" % t for t in self.torsion)
        return " x ".join(parts) if parts else "0"

    def canonical(self, coeffs) -> tuple[int, ...]:
        """Canonical coordinates of a coefficient vector over ``monomials``:
        the SNF row transform followed by reduction modulo the invariant
        factors.  Two classes are equal iff these coordinates agree."""
        x = list(coeffs)
        if len(x) != len(self.monomials):
            raise ValueError("coefficient vector has wrong length")
        if self.transform is None:
            y = x
        else:
            y = [sum(r * c for r, c in zip(row, x)) for row in self.transform.entries]
        out = []
        for i, val in enumerate(y):
            d = self.diag[i] if i < len(self.diag) else 0
            out.append(val % d if d else val)
        return tuple(out)

    def zero_coords(self) -> tuple[int, ...]:
        return (0,) * len(self.monomials)

    def representative(self, coords) -> IntPoly:
        """Some polynomial whose canonical coordinates are ``coords``."""
        coords = list(coords)
        if self.transform is None:
            x = coords
        else:
            inv = self.transform.inverse_unimodular()
            x = [int(c) for c in inv.mul_vector(coords)]
        nvars = len(self.monomials[0]) if self.monomials else 0
        return IntPoly.from_dict(nvars, dict(zip(self.monomials, x)))


@dataclass(eq=True)
class GradedRingPresentation:
    """Z[t1..td] modulo homogeneous relations, evaluated degreewise up to
    ``truncation``.  Graded pieces are cached lazily."""

    num_vars: int
    relations: tuple[IntPoly, ...]
    truncation: int
    _pieces: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        for r in self.relations:
            if r.is_zero:
                raise ValueError("zero relation should have been dropped")
            if not r.is_homogeneous():
                raise ValueError("relation %s is not homogeneous" % r)
            if r.homogeneous_degree() == 0:
                raise ValueError("degree-0 relation makes the ring trivial")

    def piece(self, k: int) -> GradedPiece:
        if k < 0 or k > self.truncation:
            raise ValueError("degree %d outside truncation bound %d" % (k, self.truncation))
        if k not in self._pieces:
            self._pieces[k] = _build_piece(self, k)
        return self._pieces[k]


@dataclass(frozen=True)
class GradedClass:
    """A homogeneous class on one inertia sector (``component`` None marks
    the zero class with no sector attached)."""

    component: object
    poly: IntPoly

    @property
    def degree(self):
        return self.poly.homogeneous_degree()

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero


def _build_piece(pres: GradedRingPresentation, k: int) -> GradedPiece:
    monos = tuple(monomials_of_degree(pres.num_vars, k))
    columns = []
    for rel in pres.relations:
        e = rel.homogeneous_degree()
        if e > k:
            continue
        for m in monomials_of_degree(pres.num_vars, k - e):
            shifted = rel * IntPoly.from_dict(pres.num_vars, {m: 1})
            columns.append(shifted.coefficients_on(monos))
    if not monos:
        return GradedPiece(k, monos, None, None, (), 0, ())
    if not columns:
        return GradedPiece(k, monos, None, None, (), len(monos), ())
    rel_matrix = IntMatrix.from_rows(list(zip(*columns)))
    res = snf(rel_matrix)
    diag = res.diagonal()
    rank = sum(1 for d in diag if d)
    torsion = tuple(d for d in diag if d > 1)
    return GradedPiece(k, monos, rel_matrix, res.U, diag, len(monos) - rank, torsion)


def _relations_from_model(model: StackModel) -> list[IntPoly]:
    d = model.d
    rels = []
    for s in model.arrangement.unstable_minimal:
        poly = IntPoly.one(d)
        for j in sorted(s):
            poly = poly * IntPoly.linear_form(model.coordinate_char(j))
        if not poly.is_zero:
            rels.append(poly)
    uniq = []
    for r in sorted(rels, key=lambda p: (p.homogeneous_degree(), p.terms)):
        if r not in uniq:
            uniq.append(r)
    return uniq


def presentation(model: StackModel, truncation: int | None = None) -> GradedRingPresentation:
    """Sector ring presentation of a model: one product relation per minimal
    unstable set.  Default truncation is twice the ambient coordinate count."""
    if truncation is None:
        truncation = 2 * model.num_coords
    return GradedRingPresentation(model.d, tuple(_relations_from_model(model)), truncation)


def graded_group(pres: GradedRingPresentation, k: int) -> GradedPiece:
    """Abelian-group invariants of the degree-k piece."""
    return pres.piece(k)


def reduce_class(pres: GradedRingPresentation, poly: IntPoly, degree: int | None = None) -> tuple[int, ...]:
    """Canonical coordinates of a homogeneous polynomial in its graded piece.
    The zero polynomial reduces to zero coordinates (at ``degree`` if given)."""
    deg = poly.homogeneous_degree()
    if deg is None:
        if degree is None:
            return ()
        deg = degree
    elif degree is not None and degree != deg:
        raise ValueError("polynomial has degree %d, expected %d" % (deg, degree))
    piece = pres.piece(deg)
    return piece.canonical(poly.coefficients_on(piece.monomials))


def is_zero_class(pres: GradedRingPresentation, poly: IntPoly) -> bool:
    if poly.is_zero:
        return True
    return not any(reduce_class(pres, poly))


@dataclass(frozen=True)
class IsoReport:
    is_iso: bool
    failing_degree: int | None = None
    reason: str | None = None


def ring_map_is_iso(
    src: GradedRingPresentation,
    dst: GradedRingPresentation,
    var_images,
    bound: int,
) -> IsoReport:
    """Degreewise bijectivity of the graded ring map t_i -> var_images[i].

    For each degree k <= bound: the map must send source relations of degree
    k into the target ideal, the graded groups must have equal invariants,
    and the induced map must be surjective (checked by SNF of the combined
    image/relation matrix).  Equal invariants plus surjectivity give
    bijectivity for finitely generated abelian groups.
    """
    images = list(var_images)
    if len(images) != src.num_vars:
        raise ValueError("expected %d variable images" % src.num_vars)
    for img in images:
        if img.nvars != dst.num_vars:
            raise ValueError("variable image lives in the wrong ring")
        if not img.is_zero and img.homogeneous_degree() != 1:
            raise ValueError("variable image %s is not homogeneous of degree 1" % img)

    def image_of_monomial(exps) -> IntPoly:
        out = IntPoly.one(dst.num_vars)
        for i, e in enumerate(exps):
            for _ in range(e):
                out = out * images[i]
        return out

    def image_of_poly(p: IntPoly) -> IntPoly:
        out = IntPoly.zero(dst.num_vars)
        for exps, c in p.terms:
            out = out + image_of_monomial(exps).scale(c)
        return out

    for k in range(bound + 1):
        for rel in src.relations:
            if rel.homogeneous_degree() == k:
                if not is_zero_class(dst, image_of_poly(rel)):
                    return IsoReport(False, k, "relation %s does not map into the target ideal" % rel)
        sp = src.piece(k)
        dp = dst.piece(k)
        if sp.invariants != dp.invariants:
            return IsoReport(
                False, k,
                "graded groups differ: %s vs %s" % (sp.describe_group(), dp.describe_group()),
            )
        n_dst = len(dp.monomials)
        if n_dst == 0:
            continue
        columns = [
            image_of_monomial(m).coefficients_on(dp.monomials) for m in sp.monomials
        ]
        if dp.relation_matrix is not None:
            columns.extend(dp.relation_matrix.transpose().entries)
        if not columns:
            return IsoReport(False, k, "no generators map onto a nonzero group")
        combined = IntMatrix.from_rows(list(zip(*columns)))
        diag = snf(combined).diagonal()
        onto = sum(1 for d in diag if d == 1) == n_dst
        if not onto:
            return IsoReport(False, k, "induced map is not surjective in degree %d" % k)
    return IsoReport(True)


@dataclass(frozen=True)
class SectorEmbedding:
    """Closed embedding of a smaller sector into a bigger one, over the same
    polynomial variables.  ``normal_chars`` are the characters of the
    deleted coordinates; their product of linear forms is the normal Euler
    polynomial."""

    sub: GradedRingPresentation
    ambient: GradedRingPresentation
    normal_chars: tuple[tuple[int, ...], ...]

    @property
    def euler(self) -> IntPoly:
        out = IntPoly.one(self.ambient.num_vars)
        for w in self.normal_chars:
            out = out * IntPoly.linear_form(w)
        return out

    def check(self) -> None:
        """Per-instance well-definedness: restriction must kill ambient
        relations, and pushing a sub relation must land in the ambient ideal.
        Failures raise loudly; nothing is silently accepted."""
        for rel in self.ambient.relations:
            if rel.homogeneous_degree() <= self.sub.truncation:
                if not is_zero_class(self.sub, rel):
                    raise GysinError(
                        "restriction ill-defined: ambient relation %s is nonzero on the subsector" % rel
                    )
        eu = self.euler
        shift = 0 if eu.is_zero else eu.homogeneous_degree()
        for rel in self.sub.relations:
            pushed = rel * eu
            if pushed.is_zero:
                continue
            if rel.homogeneous_degree() + shift > self.ambient.truncation:
                continue
            if not is_zero_class(self.ambient, pushed):
                raise GysinError(
                    "pushforward ill-defined: %s times the normal Euler class "
                    "is nonzero in the ambient ring" % rel
                )


def gysin_push(embedding: SectorEmbedding, poly: IntPoly) -> IntPoly:
    """Pushforward of a class on the subsector: any polynomial lift times the
    normal Euler polynomial (the restriction map is the identity on
    variables, so the lift is the polynomial itself)."""
    embedding.check()
    return poly * embedding.euler
