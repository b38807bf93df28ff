"""Functors and natural transformations between finite categories.

A contravariant functor is stored as a covariant functor out of the opposite
of its presented source, so one set of law checks covers both variances.
Whiskering on either side is provided because the monad/comonad machinery
needs all four composites (unit/counit against their own endofunctors).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Category, inverse_of, opposite
from .errors import (
    InvalidArtifactError,
    MismatchError,
    UnknownMorphismError,
    UnknownObjectError,
)
from .report import ValidationReport, Violation


@dataclass
class Functor:
    """A functor as explicit object and morphism tables."""

    source: Category
    target: Category
    obj_map: dict[str, str]
    mor_map: dict[str, str]
    name: str = field(default="", compare=False)

    def on_obj(self, x: str) -> str:
        try:
            return self.obj_map[x]
        except KeyError:
            raise UnknownObjectError(
                f"functor {self.name!r} is undefined on object {x!r}"
            ) from None

    def on_mor(self, f: str) -> str:
        try:
            return self.mor_map[f]
        except KeyError:
            raise UnknownMorphismError(
                f"functor {self.name!r} is undefined on morphism {f!r}"
            ) from None


def identity_functor(c: Category) -> Functor:
    return Functor(
        c,
        c,
        {x: x for x in c.objects},
        {m: m for m in c.morphisms},
        name=f"1[{c.name}]",
    )


def validate_functor(F: Functor) -> ValidationReport:
    """Check totality, typing, identity and composition preservation."""
    violations: list[Violation] = []
    src, tgt = F.source, F.target

    for x in src.objects:
        if x not in F.obj_map:
            violations.append(Violation("functor-object-missing", (x,), "no image assigned"))
        elif F.obj_map[x] not in set(tgt.objects):
            violations.append(
                Violation("functor-object-image", (x,), f"image {F.obj_map[x]!r} is not a target object")
            )
    for x in F.obj_map:
        if x not in set(src.objects):
            violations.append(
                Violation("functor-object-extra", (x,), "image assigned to a non-object")
            )

    for f in sorted(src.morphisms):
        if f not in F.mor_map:
            violations.append(Violation("functor-morphism-missing", (f,), "no image assigned"))
            continue
        Ff = F.mor_map[f]
        if Ff not in tgt.morphisms:
            violations.append(
                Violation("functor-morphism-image", (f,), f"image {Ff!r} is not a target morphism")
            )
            continue
        mf = src.morphisms[f]
        mFf = tgt.morphisms[Ff]
        want_src = F.obj_map.get(mf.src)
        want_dst = F.obj_map.get(mf.dst)
        if want_src is not None and mFf.src != want_src:
            violations.append(
                Violation(
                    "functor-endpoints",
                    (f,),
                    f"image source is {mFf.src!r}, expected {want_src!r}",
                )
            )
        if want_dst is not None and mFf.dst != want_dst:
            violations.append(
                Violation(
                    "functor-endpoints",
                    (f,),
                    f"image target is {mFf.dst!r}, expected {want_dst!r}",
                )
            )
    for f in F.mor_map:
        if f not in src.morphisms:
            violations.append(
                Violation("functor-morphism-extra", (f,), "image assigned to a non-morphism")
            )

    for x in src.objects:
        idx = src.identity.get(x)
        if idx is None or idx not in F.mor_map or x not in F.obj_map:
            continue
        want = tgt.identity.get(F.obj_map[x])
        if F.mor_map[idx] != want:
            violations.append(
                Violation(
                    "functor-identity",
                    (x,),
                    f"identity of {x!r} maps to {F.mor_map[idx]!r}, expected {want!r}",
                )
            )

    for (g, f), h in sorted(F.source.compose.items()):
        Fg, Ff, Fh = F.mor_map.get(g), F.mor_map.get(f), F.mor_map.get(h)
        if Fg is None or Ff is None or Fh is None:
            continue
        got = tgt.comp_or_none(Fg, Ff)
        if got != Fh:
            violations.append(
                Violation(
                    "functor-composition",
                    (g, f),
                    f"image of composite is {Fh!r} but composite of images is {got!r}",
                )
            )

    return ValidationReport(violations)


def compose_functors(G: Functor, F: Functor) -> Functor:
    """``G`` after ``F``.  The middle categories must agree."""
    if F.target != G.source:
        raise MismatchError(
            f"cannot compose {G.name!r} after {F.name!r}: middle categories differ"
        )
    return Functor(
        F.source,
        G.target,
        {x: G.on_obj(F.on_obj(x)) for x in F.source.objects},
        {f: G.on_mor(F.on_mor(f)) for f in F.source.morphisms},
        name=f"{G.name}.{F.name}",
    )


@dataclass
class ContravariantFunctor:
    """A contravariant functor, carried covariantly out of the opposite.

    ``functor.source`` must equal ``opposite(presented_source)``; the name
    tables are direction-agnostic, so ``on_obj``/``on_mor`` read naturally.
    """

    presented_source: Category
    functor: Functor
    name: str = field(default="", compare=False)

    @property
    def target(self) -> Category:
        return self.functor.target

    def on_obj(self, x: str) -> str:
        return self.functor.on_obj(x)

    def on_mor(self, f: str) -> str:
        return self.functor.on_mor(f)


def contravariant_functor(
    source: Category,
    target: Category,
    obj_map: dict[str, str],
    mor_map: dict[str, str],
    name: str = "",
) -> ContravariantFunctor:
    inner = Functor(opposite(source), target, dict(obj_map), dict(mor_map), name=name)
    return ContravariantFunctor(source, inner, name=name)


def validate_contravariant(F: ContravariantFunctor) -> ValidationReport:
    violations: list[Violation] = []
    if F.functor.source != opposite(F.presented_source):
        violations.append(
            Violation(
                "contravariant-source",
                (F.name or "<functor>",),
                "stored functor is not based on the opposite of the presented source",
            )
        )
        return ValidationReport(violations)
    return ValidationReport(violations).merged(validate_functor(F.functor))


@dataclass
class NaturalTransformation:
    """A transformation between two parallel functors, one component per
    source object."""

    source_functor: Functor
    target_functor: Functor
    components: dict[str, str]
    name: str = field(default="", compare=False)


def identity_nat(F: Functor) -> NaturalTransformation:
    return NaturalTransformation(
        F,
        F,
        {x: F.target.id_of(F.on_obj(x)) for x in F.source.objects},
        name=f"id[{F.name}]",
    )


def validate_nat(alpha: NaturalTransformation) -> ValidationReport:
    """Check components are typed correctly and every naturality square
    commutes.  Assumes the two functors themselves are valid."""
    violations: list[Violation] = []
    F, G = alpha.source_functor, alpha.target_functor
    if F.source != G.source or F.target != G.target:
        violations.append(
            Violation("nat-parallel", (alpha.name or "<nat>",), "functors are not parallel")
        )
        return ValidationReport(violations)
    dom, cod = F.source, F.target

    bad_at: set[str] = set()
    for x in dom.objects:
        comp = alpha.components.get(x)
        if comp is None:
            violations.append(Violation("component-missing", (x,), "no component assigned"))
            bad_at.add(x)
            continue
        if comp not in cod.morphisms:
            violations.append(
                Violation("component-unknown", (x,), f"component {comp!r} is not a morphism")
            )
            bad_at.add(x)
            continue
        m = cod.morphisms[comp]
        want_src = F.obj_map.get(x)
        want_dst = G.obj_map.get(x)
        if m.src != want_src or m.dst != want_dst:
            violations.append(
                Violation(
                    "component-typing",
                    (x,),
                    f"component {comp!r} goes {m.src!r} -> {m.dst!r}, "
                    f"expected {want_src!r} -> {want_dst!r}",
                )
            )
            bad_at.add(x)
    for x in alpha.components:
        if x not in set(dom.objects):
            violations.append(
                Violation("component-extra", (x,), "component assigned to a non-object")
            )

    for f in sorted(dom.morphisms):
        mf = dom.morphisms[f]
        if mf.src in bad_at or mf.dst in bad_at:
            continue
        Ff, Gf = F.mor_map.get(f), G.mor_map.get(f)
        if Ff is None or Gf is None:
            continue
        left = cod.comp_or_none(alpha.components[mf.dst], Ff)
        right = cod.comp_or_none(Gf, alpha.components[mf.src])
        if left != right or left is None:
            violations.append(
                Violation(
                    "naturality-square",
                    (f,),
                    f"square does not commute: component-after-image is {left!r}, "
                    f"image-after-component is {right!r}",
                )
            )

    return ValidationReport(violations)


def is_natural_iso(alpha: NaturalTransformation) -> bool:
    """True iff ``alpha`` is valid and every component has a two-sided
    inverse; raises on an invalid transformation."""
    report = validate_nat(alpha)
    if not report.ok:
        raise InvalidArtifactError("invalid natural transformation", report)
    cod = alpha.source_functor.target
    return all(
        inverse_of(cod, alpha.components[x]) is not None
        for x in alpha.source_functor.source.objects
    )


def inverse_nat(alpha: NaturalTransformation) -> NaturalTransformation:
    """Componentwise inverse; requires a natural isomorphism."""
    if not is_natural_iso(alpha):
        raise InvalidArtifactError(
            f"transformation {alpha.name!r} is not a natural isomorphism"
        )
    cod = alpha.source_functor.target
    return NaturalTransformation(
        alpha.target_functor,
        alpha.source_functor,
        {x: inverse_of(cod, m) for x, m in alpha.components.items()},
        name=f"inv[{alpha.name}]",
    )


def vertical_compose(
    beta: NaturalTransformation, alpha: NaturalTransformation
) -> NaturalTransformation:
    """``beta`` after ``alpha`` (componentwise composition)."""
    if alpha.target_functor != beta.source_functor:
        raise MismatchError("vertical composition: middle functors differ")
    cod = alpha.source_functor.target
    return NaturalTransformation(
        alpha.source_functor,
        beta.target_functor,
        {
            x: cod.comp(beta.components[x], alpha.components[x])
            for x in alpha.source_functor.source.objects
        },
        name=f"{beta.name}.{alpha.name}",
    )


def whisker_left(F: Functor, alpha: NaturalTransformation) -> NaturalTransformation:
    """Post-compose with a functor: component at x is ``F(alpha_x)``."""
    if alpha.source_functor.target != F.source:
        raise MismatchError("whisker_left: functor does not start where the transformation lands")
    return NaturalTransformation(
        compose_functors(F, alpha.source_functor),
        compose_functors(F, alpha.target_functor),
        {x: F.on_mor(m) for x, m in alpha.components.items()},
        name=f"{F.name}.{alpha.name}",
    )


def whisker_right(alpha: NaturalTransformation, F: Functor) -> NaturalTransformation:
    """Pre-compose with a functor: component at x is ``alpha_{F(x)}``."""
    if F.target != alpha.source_functor.source:
        raise MismatchError("whisker_right: functor does not land where the transformation starts")
    return NaturalTransformation(
        compose_functors(alpha.source_functor, F),
        compose_functors(alpha.target_functor, F),
        {x: alpha.components[F.on_obj(x)] for x in F.source.objects},
        name=f"{alpha.name}.{F.name}",
    )
