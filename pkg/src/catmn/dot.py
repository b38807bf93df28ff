"""Graphviz DOT emission for categories and fibered-spec total categories.

Output is byte-deterministic: nodes sorted by object name, edges sorted by
morphism name, identity morphisms omitted.  Node styling marks the two
fixed subcategories: a double ring (``peripheries=2``) for objects fixed by
the fiber-top monad, a filled node for objects fixed by the fiber-bottom
comonad.
"""

from __future__ import annotations

from typing import Iterable

from .core import Category, inverse_of
from .errors import EngineError
from .fibered import (
    FiberedSpec,
    build_final_monad,
    build_initial_comonad,
    build_total_category,
)
from .monads import ComonadDatum, MonadDatum


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(
    c: Category,
    double_ring: Iterable[str] = (),
    filled: Iterable[str] = (),
    graph_name: str | None = None,
) -> str:
    """The category as a DOT digraph; styling sets are object names."""
    rings = set(double_ring)
    fills = set(filled)
    lines = [f"digraph {_quote(graph_name or c.name)} {{", "  rankdir=LR;"]
    for x in c.objects:
        attrs = []
        if x in rings:
            attrs.append("peripheries=2")
        if x in fills:
            attrs.append("style=filled")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(x)}{suffix};")
    for name in sorted(c.morphisms):
        m = c.morphisms[name]
        if c.is_identity_name(name):
            continue
        lines.append(
            f"  {_quote(m.src)} -> {_quote(m.dst)} [label={_quote(name)}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _fixed_objects(cat: Category, unit_components: dict[str, str]) -> set[str]:
    return {
        x
        for x in cat.objects
        if x in unit_components and inverse_of(cat, unit_components[x]) is not None
    }


def monad_fixed_objects(m: MonadDatum) -> set[str]:
    return _fixed_objects(m.category, m.unit.components)


def comonad_fixed_objects(c: ComonadDatum) -> set[str]:
    return _fixed_objects(c.category, c.counit.components)


def render_spec_dot(s: FiberedSpec) -> str:
    """The total category of a spec with fixed-subcategory styling.

    Falls back to an unstyled graph when a fiber lacks the extremal object
    a builder needs; the graph is still worth looking at then.
    """
    t = build_total_category(s)
    rings: set[str] = set()
    fills: set[str] = set()
    try:
        rings = monad_fixed_objects(build_final_monad(t))
    except EngineError:
        pass
    try:
        fills = comonad_fixed_objects(build_initial_comonad(t))
    except EngineError:
        pass
    return render_dot(t.total, double_ring=rings, filled=fills)
