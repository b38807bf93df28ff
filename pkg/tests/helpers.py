"""Hand-built gadget categories and (co)monads the test modules share.

Each is small enough to check by eye; the composition tables are written
out in full so the tests do not depend on the loader's completion rules.
"""

from catmn import (
    Category,
    ComonadDatum,
    Functor,
    MonadDatum,
    Mor,
    NaturalTransformation,
    hom_set,
    identity_functor,
)


def walking_arrow() -> Category:
    """Two objects, one arrow between them: the smallest non-discrete case."""
    return Category(
        "walking-arrow",
        ["a", "b"],
        [Mor("id_a", "a", "a"), Mor("id_b", "b", "b"), Mor("f", "a", "b")],
        {"a": "id_a", "b": "id_b"},
        {
            ("id_a", "id_a"): "id_a",
            ("id_b", "id_b"): "id_b",
            ("f", "id_a"): "f",
            ("id_b", "f"): "f",
        },
    )


def parallel_pair() -> Category:
    """Two parallel arrows u, v: s -> t and nothing else."""
    return Category(
        "parallel-pair",
        ["s", "t"],
        [
            Mor("id_s", "s", "s"),
            Mor("id_t", "t", "t"),
            Mor("u", "s", "t"),
            Mor("v", "s", "t"),
        ],
        {"s": "id_s", "t": "id_t"},
        {
            ("id_s", "id_s"): "id_s",
            ("id_t", "id_t"): "id_t",
            ("u", "id_s"): "u",
            ("v", "id_s"): "v",
            ("id_t", "u"): "u",
            ("id_t", "v"): "v",
        },
    )


def orbit() -> Category:
    """An involution e on b and a free point a over it: f2 = e after f.

    hom(a, b) = {f, f2} is a free orbit of the two-element group acting on
    b, which makes {b} reflective in a way small enough to sweep by hand.
    """
    return Category(
        "orbit",
        ["a", "b"],
        [
            Mor("id_a", "a", "a"),
            Mor("id_b", "b", "b"),
            Mor("e", "b", "b"),
            Mor("f", "a", "b"),
            Mor("f2", "a", "b"),
        ],
        {"a": "id_a", "b": "id_b"},
        {
            ("id_a", "id_a"): "id_a",
            ("id_b", "id_b"): "id_b",
            ("e", "e"): "id_b",
            ("e", "id_b"): "e",
            ("id_b", "e"): "e",
            ("f", "id_a"): "f",
            ("f2", "id_a"): "f2",
            ("id_b", "f"): "f",
            ("id_b", "f2"): "f2",
            ("e", "f"): "f2",
            ("e", "f2"): "f",
        },
    )


def orbit_op() -> Category:
    """Mirror image of :func:`orbit`: the free point maps out of b."""
    return Category(
        "orbit-op",
        ["a", "b"],
        [
            Mor("id_a", "a", "a"),
            Mor("id_b", "b", "b"),
            Mor("e", "b", "b"),
            Mor("f", "b", "a"),
            Mor("f2", "b", "a"),
        ],
        {"a": "id_a", "b": "id_b"},
        {
            ("id_a", "id_a"): "id_a",
            ("id_b", "id_b"): "id_b",
            ("e", "e"): "id_b",
            ("e", "id_b"): "e",
            ("id_b", "e"): "e",
            ("f", "id_b"): "f",
            ("f2", "id_b"): "f2",
            ("id_a", "f"): "f",
            ("id_a", "f2"): "f2",
            ("f", "e"): "f2",
            ("f2", "e"): "f",
        },
    )


def idem_endo() -> Category:
    """A non-invertible idempotent e on b absorbing the arrow from a."""
    return Category(
        "idem-endo",
        ["a", "b"],
        [
            Mor("id_a", "a", "a"),
            Mor("id_b", "b", "b"),
            Mor("e", "b", "b"),
            Mor("f", "a", "b"),
        ],
        {"a": "id_a", "b": "id_b"},
        {
            ("id_a", "id_a"): "id_a",
            ("id_b", "id_b"): "id_b",
            ("e", "e"): "e",
            ("e", "id_b"): "e",
            ("id_b", "e"): "e",
            ("f", "id_a"): "f",
            ("id_b", "f"): "f",
            ("e", "f"): "f",
        },
    )


def three_chain() -> Category:
    """The thin category x0 <= x1 <= x2."""
    return Category(
        "three-chain",
        ["x0", "x1", "x2"],
        [
            Mor("id_x0", "x0", "x0"),
            Mor("id_x1", "x1", "x1"),
            Mor("id_x2", "x2", "x2"),
            Mor("a01", "x0", "x1"),
            Mor("a12", "x1", "x2"),
            Mor("a02", "x0", "x2"),
        ],
        {"x0": "id_x0", "x1": "id_x1", "x2": "id_x2"},
        {
            ("id_x0", "id_x0"): "id_x0",
            ("id_x1", "id_x1"): "id_x1",
            ("id_x2", "id_x2"): "id_x2",
            ("a01", "id_x0"): "a01",
            ("id_x1", "a01"): "a01",
            ("a12", "id_x1"): "a12",
            ("id_x2", "a12"): "a12",
            ("a02", "id_x0"): "a02",
            ("id_x2", "a02"): "a02",
            ("a12", "a01"): "a02",
        },
    )


def successor_monad() -> MonadDatum:
    """Round up one step along the three-chain: a valid monad datum whose
    unit whiskerings are not invertible, so idempotence fails."""
    c = three_chain()
    N = Functor(
        c,
        c,
        {"x0": "x1", "x1": "x2", "x2": "x2"},
        {
            "id_x0": "id_x1",
            "id_x1": "id_x2",
            "id_x2": "id_x2",
            "a01": "a12",
            "a12": "id_x2",
            "a02": "a12",
        },
        name="step-up",
    )
    unit = NaturalTransformation(
        identity_functor(c), N, {"x0": "a01", "x1": "a12", "x2": "id_x2"}
    )
    return MonadDatum(N, unit, name="step-up")


def predecessor_comonad() -> ComonadDatum:
    c = three_chain()
    M = Functor(
        c,
        c,
        {"x0": "x0", "x1": "x0", "x2": "x1"},
        {
            "id_x0": "id_x0",
            "id_x1": "id_x0",
            "id_x2": "id_x1",
            "a01": "id_x0",
            "a12": "a01",
            "a02": "a01",
        },
        name="step-down",
    )
    counit = NaturalTransformation(
        M, identity_functor(c), {"x0": "id_x0", "x1": "a01", "x2": "a12"}
    )
    return ComonadDatum(M, counit, name="step-down")


def collapse_monad(sets: Category) -> MonadDatum:
    """Send every object of the two-set demo category to the singleton.
    Idempotent, but its unit is not pointwise invertible."""
    only = {
        (a, b): hom_set(sets, a, b)[0] for a in sets.objects for b in sets.objects
    }
    N = Functor(
        sets,
        sets,
        {x: "set1" for x in sets.objects},
        {f: only[("set1", "set1")] for f in sets.morphisms},
        name="collapse",
    )
    unit = NaturalTransformation(
        identity_functor(sets),
        N,
        {x: only[(x, "set1")] for x in sets.objects},
        name="collapse-unit",
    )
    return MonadDatum(N, unit, name="collapse")
