"""Command-line surface for the engine.

Commands: ``validate`` (parse a file, run every artifact's validator),
``mn-check`` (full monad/comonad/equivalence pipeline on a fibered spec),
``transport`` (carry the spec's monads across a contravariant equivalence
and re-verify everything on the far side), ``export-dot`` (Graphviz
rendering), ``random`` (seeded spec generation), and ``demo`` (built-in
fixtures end to end).

Every command prints a deterministic report to stdout and exits 0 exactly
when all requested verifications came back empty; verification failures
exit 1, parse and build errors exit 2 with the failing stage named.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources

from .dot import (
    comonad_fixed_objects,
    monad_fixed_objects,
    render_dot,
    render_spec_dot,
)
from .equivalence import (
    build_mn_equivalence,
    check_mn_hypotheses,
    make_mn_pair,
    verify_adjoint_equivalence,
    verify_factorizations,
)
from .errors import EngineError, InvalidArtifactError, ParseError
from .fibered import (
    SizeLimits,
    build_final_monad,
    build_initial_comonad,
    build_total_category,
    canonical_c2,
    check_extension_property,
    random_spec,
    terminal_spec,
    validate_spec,
)
from .monads import (
    check_idempotent_comonad,
    check_idempotent_monad,
    identity_comonad,
    identity_monad,
    verify_coreflection,
    verify_reflection,
)
from .textio import (
    LoadedArtifact,
    load_path,
    load_text,
    render_artifacts,
    render_json,
    validator_for,
)
from .transport import (
    powerset_duality_demo,
    relabeled_opposite_equivalence,
    transport_pair,
    validate_equivalence,
    verify_transfer,
)


class _Run:
    """Stage bookkeeping: prints one line per stage, stops at the first
    failure, remembers which stage failed."""

    def __init__(self, out):
        self.out = out
        self.failed_stage = None

    @property
    def ok(self) -> bool:
        return self.failed_stage is None

    def _fail(self, label: str, lines) -> None:
        self.out.write(f"stage {label}: FAIL\n")
        for line in lines:
            self.out.write(f"  {line}\n")
        self.failed_stage = label

    def check(self, label: str, fn) -> bool:
        """Run ``fn`` for a ValidationReport; pass iff it is empty."""
        if not self.ok:
            return False
        try:
            report = fn()
        except EngineError as exc:
            self._fail(label, str(exc).splitlines())
            return False
        if report.ok:
            self.out.write(f"stage {label}: ok\n")
            for note in report.notes:
                self.out.write(f"  note: {note}\n")
            return True
        self._fail(label, report.render().splitlines())
        return False

    def build(self, label: str, fn, diagnose=None):
        """Run ``fn`` for a value; engine errors fail the stage, optionally
        with a diagnostic report appended."""
        if not self.ok:
            return None
        try:
            value = fn()
        except EngineError as exc:
            lines = list(str(exc).splitlines())
            if diagnose is not None:
                lines.extend(diagnose().render().splitlines())
            self._fail(label, lines)
            return None
        self.out.write(f"stage {label}: ok\n")
        return value

    def finish(self) -> int:
        if self.ok:
            self.out.write("result: PASS\n")
            return 0
        self.out.write(f"result: FAIL (stage {self.failed_stage})\n")
        return 1


def _mn_pipeline(run: _Run, monad, comonad, prefix: str = ""):
    """The shared theorem chain: idempotence, reflections, hypotheses,
    equivalence, factorizations.  Returns (pair, equivalence) or None."""
    if not run.check(prefix + "monad-laws", lambda: check_idempotent_monad(monad)):
        return None
    if not run.check(prefix + "comonad-laws", lambda: check_idempotent_comonad(comonad)):
        return None
    pair = run.build(
        prefix + "fixed-subcategories", lambda: make_mn_pair(monad, comonad)
    )
    if pair is None:
        return None
    if not run.check(prefix + "reflection", lambda: verify_reflection(pair.reflection)):
        return None
    if not run.check(
        prefix + "coreflection", lambda: verify_coreflection(pair.coreflection)
    ):
        return None
    if not run.check(prefix + "hypotheses", lambda: check_mn_hypotheses(pair)):
        return None
    eq = run.build(prefix + "equivalence-build", lambda: build_mn_equivalence(pair))
    if eq is None:
        return None
    if not run.check(
        prefix + "adjoint-equivalence", lambda: verify_adjoint_equivalence(eq)
    ):
        return None
    if not run.check(
        prefix + "factorizations", lambda: verify_factorizations(pair, eq)
    ):
        return None
    return pair, eq


def _load_first_spec(path):
    artifacts = load_path(path)
    for a in artifacts:
        if a.kind == "spec":
            return a.value
    raise ParseError("file contains no SPEC artifact", str(path))


def _spec_pipeline(out, spec) -> int:
    out.write(f"spec {spec.name}\n")
    run = _Run(out)
    run.check("validate-spec", lambda: validate_spec(spec))
    t = run.build("build-total", lambda: build_total_category(spec))
    monad = run.build(
        "build-monad",
        lambda: build_final_monad(t),
        diagnose=lambda: check_extension_property(t),
    )
    comonad = run.build(
        "build-comonad",
        lambda: build_initial_comonad(t),
        diagnose=lambda: check_extension_property(t),
    )
    result = None
    if run.ok:
        result = _mn_pipeline(run, monad, comonad)
    if result is not None:
        pair, _ = result
        out.write(
            "summary: objects={} morphisms={} monad-fixed={} comonad-fixed={}\n".format(
                len(t.total.objects),
                len(t.total.morphisms),
                len(pair.reflection.subcategory.objects),
                len(pair.coreflection.subcategory.objects),
            )
        )
    return run.finish()


def _transport_pipeline(out, spec, mode: str) -> int:
    out.write(f"spec {spec.name}\n")
    out.write(f"mode {mode}\n")
    run = _Run(out)
    run.check("validate-spec", lambda: validate_spec(spec))
    if mode == "relabel-opposite":
        t = run.build("build-total", lambda: build_total_category(spec))
        monad = run.build(
            "build-monad",
            lambda: build_final_monad(t),
            diagnose=lambda: check_extension_property(t),
        )
        comonad = run.build(
            "build-comonad",
            lambda: build_initial_comonad(t),
            diagnose=lambda: check_extension_property(t),
        )
        eq = run.build("build-duality", lambda: relabeled_opposite_equivalence(t.total))
        run.check("duality", lambda: validate_equivalence(eq))
        source_monad, source_comonad = monad, comonad
    else:
        # the duality is built in; the spec is only parsed, validated, and
        # size-gated so the command stays uniform across modes
        run.build("size-gate", lambda: build_total_category(spec))
        demo = run.build("build-duality", lambda: powerset_duality_demo())
        eq = demo.equivalence if demo is not None else None
        run.check("duality", lambda: validate_equivalence(eq))
        source_monad = identity_monad(eq.source) if run.ok else None
        source_comonad = identity_comonad(eq.source) if run.ok else None

    r = run.build(
        "transport", lambda: transport_pair(eq, source_monad, source_comonad)
    )
    run.check(
        "transfer",
        lambda: verify_transfer(eq, source_monad, source_comonad, r),
    )
    if run.ok:
        _mn_pipeline(run, r.induced_monad, r.induced_comonad, prefix="induced-")
    if run.ok:
        out.write(
            "induced-monad-fixed: "
            + " ".join(sorted(monad_fixed_objects(r.induced_monad)))
            + "\n"
        )
        out.write(
            "induced-comonad-fixed: "
            + " ".join(sorted(comonad_fixed_objects(r.induced_comonad)))
            + "\n"
        )
    return run.finish()


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args, out) -> int:
    artifacts = load_path(args.path)
    all_ok = True
    for a in artifacts:
        report = validator_for(a.kind)(a.value)
        if report.ok:
            out.write(f"{a.kind} {a.name}: ok\n")
            for note in report.notes:
                out.write(f"  note: {note}\n")
        else:
            all_ok = False
            out.write(f"{a.kind} {a.name}: FAIL\n")
            for line in report.render().splitlines():
                out.write(f"  {line}\n")
    return 0 if all_ok else 1


def cmd_mn_check(args, out) -> int:
    return _spec_pipeline(out, _load_first_spec(args.path))


def cmd_transport(args, out) -> int:
    return _transport_pipeline(out, _load_first_spec(args.path), args.mode)


def cmd_export_dot(args, out) -> int:
    artifacts = load_path(args.path)
    first = artifacts[0]
    if first.kind == "category":
        text = render_dot(first.value)
    elif first.kind == "spec":
        text = render_spec_dot(first.value)
    else:
        raise InvalidArtifactError(
            f"cannot export a {first.kind} as DOT; give a category or spec file"
        )
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    out.write(f"wrote {args.out}\n")
    return 0


def cmd_random(args, out) -> int:
    limits = SizeLimits(
        max_base_objects=args.max_base, max_fiber_elements=args.max_fiber
    )
    spec = random_spec(args.seed, limits)
    artifacts = [LoadedArtifact("spec", spec.name, spec)]
    text = render_json(artifacts) if args.json else render_artifacts(artifacts)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.write(f"wrote {args.out}\n")
    else:
        out.write(text)
    return 0


def cmd_demo(args, out) -> int:
    codes = [
        _spec_pipeline(out, terminal_spec()),
    ]
    out.write("\n")
    codes.append(_spec_pipeline(out, canonical_c2()))
    out.write("\n")
    codes.append(_transport_pipeline(out, canonical_c2(), "relabel-opposite"))
    out.write("\n")
    codes.append(_transport_pipeline(out, terminal_spec(), "powerset-duality-demo"))
    out.write("\n")

    shipped = resources.files("catmn.data").joinpath("canonical_c2.spec").read_text(
        encoding="utf-8"
    )
    arts = load_text(shipped, "canonical_c2.spec")
    roundtrip = render_artifacts(arts) == shipped
    out.write(
        "shipped-fixture-round-trip: " + ("ok" if roundtrip else "FAIL") + "\n"
    )
    codes.append(0 if roundtrip else 1)
    return max(codes)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catmn",
        description=(
            "Finite-category engine: construct and exhaustively verify "
            "idempotent monads, reflective subcategories, the maximal-normal "
            "equivalence, and their transport across contravariant dualities."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("validate", help="run every artifact's validator on a file")
    p.add_argument("path", help="artifact file (text or JSON)")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser(
        "mn-check",
        help="full monad/comonad/equivalence verification of a fibered spec",
    )
    p.add_argument("path", help="spec file")
    p.set_defaults(func=cmd_mn_check)

    p = sub.add_parser(
        "transport",
        help="carry the spec's monads across a contravariant equivalence",
    )
    p.add_argument("path", help="spec file")
    p.add_argument(
        "--mode",
        choices=("relabel-opposite", "powerset-duality-demo"),
        default="relabel-opposite",
        help="which contravariant equivalence to use",
    )
    p.set_defaults(func=cmd_transport)

    p = sub.add_parser("export-dot", help="write a Graphviz DOT rendering")
    p.add_argument("path", help="category or spec file")
    p.add_argument("--out", required=True, help="output .dot path")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("random", help="generate a seeded random fibered spec")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-base", type=int, default=4, help="max base objects")
    p.add_argument("--max-fiber", type=int, default=5, help="max fiber elements")
    p.add_argument("--json", action="store_true", help="emit the JSON encoding")
    p.add_argument("--out", default=None, help="write to a file instead of stdout")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("demo", help="run the built-in fixtures end to end")
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    out = sys.stdout
    try:
        return args.func(args, out)
    except EngineError as exc:
        out.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        out.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
