"""The equivalence between the two fixed subcategories of a monad/comonad
pair.

Given an idempotent monad (N, eta) and an idempotent comonad (M, psi) on the
same category, when the whiskerings ``N psi`` and ``M eta`` are natural
isomorphisms the composite of the reflector with the comonad-side inclusion
is one half of an adjoint equivalence between the counit-fixed and
unit-fixed subcategories.  Everything is re-proved on the instance: unit,
counit, triangle identities, and the two factorization isomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Category, inverse_of
from .errors import InvalidArtifactError, MismatchError
from .functors import (
    Functor,
    NaturalTransformation,
    compose_functors,
    identity_functor,
    validate_nat,
    whisker_left,
)
from .monads import (
    ComonadDatum,
    CoreflectionPackage,
    MonadDatum,
    ReflectionPackage,
    fixed_subcategory_comonad,
    fixed_subcategory_monad,
)
from .report import ValidationReport, Violation


@dataclass
class MNPair:
    """An idempotent monad and comonad on one category, with their derived
    reflection and coreflection packages."""

    monad: MonadDatum
    comonad: ComonadDatum
    reflection: ReflectionPackage
    coreflection: CoreflectionPackage

    @property
    def category(self) -> Category:
        return self.monad.category


def make_mn_pair(monad: MonadDatum, comonad: ComonadDatum) -> MNPair:
    """Pair a monad and comonad on the same category; both idempotence
    checks run inside the package constructors and raise on failure."""
    if monad.category != comonad.category:
        raise MismatchError("monad and comonad live on different categories")
    reflection = fixed_subcategory_monad(monad)
    coreflection = fixed_subcategory_comonad(comonad)
    return MNPair(monad, comonad, reflection, coreflection)


def check_mn_hypotheses(p: MNPair) -> ValidationReport:
    """Empty iff both whiskerings N(psi) and M(eta) are natural isomorphisms.

    Failures name the component object.
    """
    N, M = p.monad.functor, p.comonad.functor
    eta, psi = p.monad.unit, p.comonad.counit
    cat = p.category
    violations: list[Violation] = []
    for label, whiskered in (
        ("monad-of-counit", whisker_left(N, psi)),  # N(psi_x): NMx -> Nx
        ("comonad-of-unit", whisker_left(M, eta)),  # M(eta_x): Mx -> MNx
    ):
        sub = validate_nat(whiskered)
        violations.extend(sub.violations)
        for x in cat.objects:
            m = whiskered.components.get(x)
            if m is not None and inverse_of(cat, m) is None:
                violations.append(
                    Violation(
                        "mn-hypothesis",
                        (label, x),
                        f"whiskered component {m!r} is not invertible",
                    )
                )
    return ValidationReport(violations)


@dataclass
class EquivalenceResult:
    """The two functors between the fixed subcategories together with the
    unit and counit of the adjunction forward -| backward."""

    forward: Functor
    backward: Functor
    unit: NaturalTransformation
    counit: NaturalTransformation
    name: str = field(default="", compare=False)


def build_mn_equivalence(p: MNPair) -> EquivalenceResult:
    """Assemble the equivalence between the comonad-fixed and monad-fixed
    subcategories.

    forward = reflector after inclusion (comonad side to monad side),
    backward dually.  The unit at x is M(eta_x) after inverse(psi_x); the
    counit at y is inverse(eta_y) after N(psi_y).  Raises if the whiskering
    hypotheses fail.
    """
    hyp = check_mn_hypotheses(p)
    if not hyp.ok:
        raise InvalidArtifactError("hypotheses for the equivalence fail", hyp)
    cat = p.category
    N, M = p.monad.functor, p.comonad.functor
    eta, psi = p.monad.unit.components, p.comonad.counit.components

    forward = compose_functors(p.reflection.reflector, p.coreflection.inclusion)
    forward.name = "forward"
    backward = compose_functors(p.coreflection.coreflector, p.reflection.inclusion)
    backward.name = "backward"

    msub = p.coreflection.subcategory
    nsub = p.reflection.subcategory

    unit_components = {
        x: cat.comp(M.on_mor(eta[x]), p.coreflection.counit_inverses[x])
        for x in msub.objects
    }
    counit_components = {
        y: cat.comp(p.reflection.unit_inverses[y], N.on_mor(psi[y]))
        for y in nsub.objects
    }
    unit = NaturalTransformation(
        identity_functor(msub),
        compose_functors(backward, forward),
        unit_components,
        name="equivalence-unit",
    )
    counit = NaturalTransformation(
        compose_functors(forward, backward),
        identity_functor(nsub),
        counit_components,
        name="equivalence-counit",
    )
    return EquivalenceResult(forward, backward, unit, counit)


def verify_adjoint_equivalence(e: EquivalenceResult) -> ValidationReport:
    """Check the data of an adjoint equivalence: unit/counit are valid
    natural isomorphisms and both triangle identities hold."""
    violations: list[Violation] = []
    for label, nat in (("unit", e.unit), ("counit", e.counit)):
        sub = validate_nat(nat)
        violations.extend(sub.violations)
        if sub.ok:
            cod = nat.source_functor.target
            for x in nat.source_functor.source.objects:
                if inverse_of(cod, nat.components[x]) is None:
                    violations.append(
                        Violation(
                            "equivalence-not-iso",
                            (label, x),
                            f"component {nat.components[x]!r} is not invertible",
                        )
                    )

    F, G = e.forward, e.backward
    nsub = F.target
    msub = G.target
    # counit_{Fx} after F(unit_x) = id_{Fx}
    for x in F.source.objects:
        try:
            lhs = nsub.comp_or_none(
                e.counit.components[F.on_obj(x)], F.on_mor(e.unit.components[x])
            )
        except Exception:
            lhs = None
        want = nsub.identity.get(F.on_obj(x))
        if lhs != want:
            violations.append(
                Violation(
                    "triangle-forward",
                    (x,),
                    f"counit . forward(unit) is {lhs!r}, expected identity {want!r}",
                )
            )
    # G(counit_y) after unit_{Gy} = id_{Gy}
    for y in G.source.objects:
        try:
            rhs = msub.comp_or_none(
                G.on_mor(e.counit.components[y]), e.unit.components[G.on_obj(y)]
            )
        except Exception:
            rhs = None
        want = msub.identity.get(G.on_obj(y))
        if rhs != want:
            violations.append(
                Violation(
                    "triangle-backward",
                    (y,),
                    f"backward(counit) . unit is {rhs!r}, expected identity {want!r}",
                )
            )
    return ValidationReport(violations)


def _find_natural_iso(F: Functor, G: Functor):
    """Backtracking search for a natural isomorphism F => G.

    Components are tried in lexicographic morphism order per object, objects
    in sorted order, with naturality squares pruned as soon as both ends are
    assigned.  Returns (transformation, None) or (None, violations).
    """
    dom = F.source
    cod = F.target
    objs = list(dom.objects)
    candidates: dict[str, list[str]] = {}
    violations: list[Violation] = []
    for x in objs:
        isos = [
            m
            for m in cod.hom(F.on_obj(x), G.on_obj(x))
            if inverse_of(cod, m) is not None
        ]
        if not isos:
            violations.append(
                Violation(
                    "factorization-no-iso-component",
                    (x,),
                    "no invertible morphism between the two images",
                )
            )
        candidates[x] = isos
    if violations:
        return None, violations

    index = {x: i for i, x in enumerate(objs)}
    # morphisms grouped by the later-assigned endpoint so each choice is
    # checked against everything already fixed
    by_later: dict[str, list[tuple[str, str, str]]] = {x: [] for x in objs}
    for f in sorted(dom.morphisms):
        mf = dom.morphisms[f]
        later = mf.src if index[mf.src] >= index[mf.dst] else mf.dst
        by_later[later].append((f, mf.src, mf.dst))

    assigned: dict[str, str] = {}

    def consistent(x: str) -> bool:
        for f, a, b in by_later[x]:
            if a not in assigned or b not in assigned:
                continue
            left = cod.comp_or_none(assigned[b], F.on_mor(f))
            right = cod.comp_or_none(G.on_mor(f), assigned[a])
            if left != right or left is None:
                return False
        return True

    def search(i: int) -> bool:
        if i == len(objs):
            return True
        x = objs[i]
        for m in candidates[x]:
            assigned[x] = m
            if consistent(x) and search(i + 1):
                return True
            del assigned[x]
        return False

    if search(0):
        return (
            NaturalTransformation(F, G, dict(assigned), name="factorization"),
            None,
        )
    return None, [
        Violation(
            "factorization-no-natural-family",
            tuple(objs),
            "invertible components exist but no choice makes every square commute",
        )
    ]


def verify_factorizations(p: MNPair, e: EquivalenceResult) -> ValidationReport:
    """Check the reflector factors through the equivalence and dually.

    Looks for natural isomorphisms reflector => forward . coreflector and
    coreflector => backward . reflector.  The canonical candidates built
    from the whiskered unit/counit are tried first; if a candidate fails, an
    independent per-object search runs as fallback, and only if that also
    fails is a violation reported.
    """
    cat = p.category
    N, M = p.monad.functor, p.comonad.functor
    eta, psi = p.monad.unit, p.comonad.counit
    violations: list[Violation] = []

    def try_family(lhs: Functor, rhs: Functor, components: dict[str, str], tag: str):
        candidate = NaturalTransformation(lhs, rhs, components, name=tag)
        rep = validate_nat(candidate)
        cod = lhs.target
        if rep.ok and all(
            inverse_of(cod, components[x]) is not None for x in lhs.source.objects
        ):
            return
        found, errs = _find_natural_iso(lhs, rhs)
        if found is None:
            for v in errs:
                violations.append(
                    Violation(f"{tag}-{v.rule}", v.subject, v.detail)
                )

    # reflector => forward . coreflector, canonical component: inverse of N(psi_x)
    lhs1 = p.reflection.reflector
    rhs1 = compose_functors(e.forward, p.coreflection.coreflector)
    npsi = whisker_left(N, psi)
    comp1 = {}
    for x in cat.objects:
        inv = inverse_of(cat, npsi.components[x])
        if inv is None:
            comp1[x] = npsi.components[x]  # not invertible; candidate will fail
        else:
            comp1[x] = inv
    try_family(lhs1, rhs1, comp1, "factorization-reflector")

    # coreflector => backward . reflector, canonical component: M(eta_x)
    lhs2 = p.coreflection.coreflector
    rhs2 = compose_functors(e.backward, p.reflection.reflector)
    meta = whisker_left(M, eta)
    comp2 = {x: meta.components[x] for x in cat.objects}
    try_family(lhs2, rhs2, comp2, "factorization-coreflector")

    return ValidationReport(violations)
