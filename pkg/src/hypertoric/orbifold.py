"""Orbifold product machinery.

Logarithmic traces, the obstruction class of a pair of sectors, Euler-class
polynomials, the star product on inertia sectors with its full structure
table, and the two executable verification routines: obstruction classes
restrict along the moment-fiber embedding, and the two sides carry
isomorphic orbifold rings with identical structure constants and ages.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .characters import CharacterClass
from .chow import (
    GradedClass,
    GradedRingPresentation,
    SectorEmbedding,
    gysin_push,
    presentation,
    reduce_class,
    ring_map_is_iso,
)
from .inertia import (
    DoubleInertiaComponent,
    InertiaComponent,
    TorsionElement,
    double_inertia,
    fractional,
    inertia_components,
    sector_model,
)
from .model import StackModel, WeightMatrix, hypertoric_model, lawrence_model
from .poly import IntPoly


class ObstructionError(ValueError):
    """Obstruction class failed to be a bundle: the model is inconsistent."""


def log_trace(g: TorsionElement, v: CharacterClass) -> CharacterClass:
    """Weight each eigenpiece of g by its fractional exponent: the character
    w contributes frac(<w, g>) times its multiplicity.  Characters fixed by
    g (and the trivial one) contribute nothing."""
    terms = []
    for w, m in v.terms:
        f = fractional(g.pairing(w))
        if f:
            terms.append((w, m * f))
    return CharacterClass.build(v.dim, terms)


def obstruction(model: StackModel, g1: TorsionElement, g2: TorsionElement) -> CharacterClass:
    """Obstruction class of the ordered pair (g1, g2), from the model's
    tangent class restricted to the common fixed locus (restriction keeps
    every global character).

    Per character w of multiplicity m the multiplicity is
    m * (frac<w,g1> + frac<w,g2> + frac<-w,g1+g2> - 1 + [w fixed by both]);
    the result must be a genuine bundle (all multiplicities nonnegative
    integers) or the model data is inconsistent.
    """
    g12 = g1 + g2
    terms = []
    for w, m in model.tangent_class.terms:
        f1 = fractional(g1.pairing(w))
        f2 = fractional(g2.pairing(w))
        f3 = fractional(-g12.pairing(w))
        fixed_both = 1 if (f1 == 0 and f2 == 0) else 0
        mult = m * (f1 + f2 + f3 - 1 + fixed_both)
        if mult:
            terms.append((w, mult))
    out = CharacterClass.build(model.d, terms)
    if not out.is_bundle():
        raise ObstructionError(
            "obstruction of (%s, %s) is not a bundle: %s" % (g1, g2, out)
        )
    return out


def euler_poly(bundle: CharacterClass, num_vars: int | None = None) -> IntPoly:
    """Top Chern class of a character bundle: the product of the linear
    forms <w, t>, with multiplicity.  The empty bundle gives 1; any trivial
    summand contributes a zero factor."""
    if not bundle.is_bundle():
        raise ValueError("euler class needs nonnegative integer multiplicities: %s" % bundle)
    d = bundle.dim if num_vars is None else num_vars
    if bundle.trivial > 0:
        return IntPoly.zero(d)
    out = IntPoly.one(d)
    for w, m in bundle.terms:
        out = out * IntPoly.linear_form(w) ** int(m)
    return out


@dataclass
class SectorGeometry:
    """Shared lookup tables for one model: sectors, fixed sets, double
    components, sector presentations and embeddings.  Presentations are
    cached by fixed-column set, so sectors with equal fixed loci share one
    graded ring."""

    model: StackModel
    truncation: int
    components: tuple[InertiaComponent, ...] = ()
    pairs: tuple[DoubleInertiaComponent, ...] = ()
    _by_element: dict = field(default_factory=dict)
    _by_pair: dict = field(default_factory=dict)
    _presentations: dict = field(default_factory=dict)

    def __post_init__(self):
        self.components = tuple(inertia_components(self.model))
        self.pairs = tuple(double_inertia(self.model))
        self._by_element = {c.g: c for c in self.components}
        self._by_pair = {(p.g1, p.g2): p for p in self.pairs}

    def component(self, g: TorsionElement) -> InertiaComponent:
        try:
            return self._by_element[g]
        except KeyError:
            raise ValueError("element %s is not an inertia element" % g) from None

    def pair(self, g1, g2) -> DoubleInertiaComponent | None:
        return self._by_pair.get((g1, g2))

    def presentation_for(self, fixed: frozenset[int]) -> GradedRingPresentation:
        key = tuple(sorted(fixed))
        if key not in self._presentations:
            sub = sector_model(self.model, fixed)
            self._presentations[key] = presentation(sub, truncation=self.truncation)
        return self._presentations[key]

    def sector_presentation(self, g: TorsionElement) -> GradedRingPresentation:
        return self.presentation_for(self.component(g).fixed_columns)

    def embedding(self, small: frozenset[int], big: frozenset[int]) -> SectorEmbedding:
        deleted = sorted(big - small)
        chars = []
        for j in deleted:
            chars.append(self.model.base.column(j))
            if self.model.doubled:
                chars.append(tuple(-c for c in self.model.base.column(j)))
        return SectorEmbedding(
            sub=self.presentation_for(small),
            ambient=self.presentation_for(big),
            normal_chars=tuple(chars),
        )

    def generator(self, g: TorsionElement) -> GradedClass:
        return GradedClass(g, IntPoly.one(self.model.d))


def _zero_class(d: int) -> GradedClass:
    return GradedClass(None, IntPoly.zero(d))


def star(
    model: StackModel,
    alpha: GradedClass,
    beta: GradedClass,
    geometry: SectorGeometry | None = None,
) -> GradedClass:
    """Orbifold product of two sector classes.

    Pull both classes to the common fixed locus (the identity on polynomial
    representatives), multiply by the Euler polynomial of the obstruction
    class, and push into the target sector along the normal Euler factor of
    the embedding of the common locus into the target fixed locus.
    """
    geo = geometry or SectorGeometry(model, truncation=2 * model.num_coords)
    if alpha.is_zero or beta.is_zero:
        return _zero_class(model.d)
    pair = geo.pair(alpha.component, beta.component)
    if pair is None:
        geo.component(alpha.component)
        geo.component(beta.component)
        return _zero_class(model.d)
    target = geo.component(pair.target)
    obs = obstruction(model, pair.g1, pair.g2)
    eu = euler_poly(obs, model.d)
    emb = geo.embedding(pair.common_fixed, target.fixed_columns)
    product = alpha.poly * beta.poly * eu
    pushed = gysin_push(emb, product)
    deg = pushed.homogeneous_degree()
    if deg is not None and deg > geo.truncation:
        raise ValueError(
            "product degree %d exceeds the truncation bound %d" % (deg, geo.truncation)
        )
    return GradedClass(pair.target, pushed)


@dataclass(frozen=True)
class ProductEntry:
    g1: TorsionElement
    g2: TorsionElement
    target: TorsionElement | None
    poly: IntPoly
    coords: tuple[int, ...]


@dataclass
class OrbifoldTable:
    """Structure constants of the star product on sector generators."""

    model: StackModel
    geometry: SectorGeometry
    components: tuple[InertiaComponent, ...]
    products: dict

    def entry(self, g1, g2) -> ProductEntry:
        return self.products[(g1, g2)]

    def generator(self, g) -> GradedClass:
        return self.geometry.generator(g)


def _needed_truncation(model: StackModel, floor: int) -> int:
    """Structure polynomials have degree age(g1)+age(g2)-age(g1*g2); bound
    the table truncation by the largest possible product degree."""
    comps = inertia_components(model)
    if not comps:
        return floor
    top = max(c.age for c in comps)
    need = int(2 * top) + 1
    return max(floor, need)


def orbifold_table(model: StackModel, bound: int | None = None) -> OrbifoldTable:
    """All pairwise generator products.  Pairs with empty double component
    get the zero polynomial (their target may not be a sector at all)."""
    floor = bound if bound is not None else 2 * model.num_coords
    geo = SectorGeometry(model, truncation=_needed_truncation(model, floor))
    products = {}
    elems = [c.g for c in geo.components]
    for g1, g2 in itertools.product(elems, repeat=2):
        pair = geo.pair(g1, g2)
        if pair is None:
            products[(g1, g2)] = ProductEntry(g1, g2, None, IntPoly.zero(model.d), ())
            continue
        result = star(model, geo.generator(g1), geo.generator(g2), geometry=geo)
        pres = geo.sector_presentation(pair.target)
        coords = reduce_class(pres, result.poly)
        products[(g1, g2)] = ProductEntry(g1, g2, pair.target, result.poly, coords)
    return OrbifoldTable(model, geo, geo.components, products)


@dataclass(frozen=True)
class PullbackCheck:
    g1: TorsionElement
    g2: TorsionElement
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class ObstructionPullbackReport:
    ok: bool
    checked: int
    failures: tuple[PullbackCheck, ...]


def verify_obstruction_pullback(a: WeightMatrix, theta) -> ObstructionPullbackReport:
    """On every double-inertia component, the obstruction class computed from
    the moment-fiber tangent data must equal the restriction of the ambient
    one (restriction keeps all characters, so this is equality of exact
    character multisets), and both must be genuine bundles."""
    ambient = lawrence_model(a, theta)
    fiber = hypertoric_model(a, theta)
    pairs = double_inertia(ambient)
    if [(p.g1, p.g2) for p in double_inertia(fiber)] != [(p.g1, p.g2) for p in pairs]:
        return ObstructionPullbackReport(
            False, 0, (PullbackCheck(None, None, False, "double inertia components differ"),)
        )
    failures = []
    for p in pairs:
        try:
            r_ambient = obstruction(ambient, p.g1, p.g2)
            r_fiber = obstruction(fiber, p.g1, p.g2)
        except ObstructionError as exc:
            failures.append(PullbackCheck(p.g1, p.g2, False, str(exc)))
            continue
        if r_ambient != r_fiber:
            failures.append(
                PullbackCheck(
                    p.g1, p.g2, False,
                    "ambient %s vs fiber %s" % (r_ambient, r_fiber),
                )
            )
    return ObstructionPullbackReport(not failures, len(pairs), tuple(failures))


@dataclass(frozen=True)
class OrbifoldIsoReport:
    ok: bool
    components: int
    ring_failures: tuple = ()
    product_failures: tuple = ()
    age_failures: tuple = ()
    detail: str = ""


def verify_orbifold_iso(a: WeightMatrix, theta, bound: int = 5) -> OrbifoldIsoReport:
    """Compare the full orbifold structure of the ambient model and its
    moment-fiber model: matching sectors, componentwise graded ring
    isomorphism up to ``bound``, identical structure polynomials, and
    identical ages.  Both tables are computed end-to-end from their own
    model data."""
    ambient = lawrence_model(a, theta)
    fiber = hypertoric_model(a, theta)
    table_a = orbifold_table(ambient, bound)
    table_f = orbifold_table(fiber, bound)
    if [c.g for c in table_a.components] != [c.g for c in table_f.components]:
        return OrbifoldIsoReport(False, 0, detail="inertia element sets differ")

    ring_failures = []
    for comp_a, comp_f in zip(table_a.components, table_f.components):
        pres_a = table_a.geometry.sector_presentation(comp_a.g)
        pres_f = table_f.geometry.sector_presentation(comp_f.g)
        images = [IntPoly.variable(pres_f.num_vars, i) for i in range(pres_a.num_vars)]
        rep = ring_map_is_iso(pres_a, pres_f, images, bound)
        if not rep.is_iso:
            ring_failures.append((comp_a.g, rep))

    age_failures = [
        (ca.g, ca.age, cf.age)
        for ca, cf in zip(table_a.components, table_f.components)
        if ca.age != cf.age
    ]

    product_failures = []
    for key, entry_a in table_a.products.items():
        entry_f = table_f.products[key]
        if entry_a.target != entry_f.target or entry_a.coords != entry_f.coords:
            product_failures.append((key, entry_a, entry_f))

    ok = not (ring_failures or age_failures or product_failures)
    return OrbifoldIsoReport(
        ok,
        len(table_a.components),
        tuple(ring_failures),
        tuple(product_failures),
        tuple(age_failures),
    )
