"""Cross-cutting law drivers: 2-functor equations and adjunction round trips.

Each suite walks a fixture bundle and produces a ``LawReport``.  Reports are
deterministic for a fixed bundle and seed; the JSON form is byte-stable so
CI runs can be diffed directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from .core import (
    CategoryModel,
    MonFunctorData,
    NatTransData,
    compose_functors,
    compose_nats,
    hcompose_nats,
    identity_functor,
    whisker_left,
    whisker_right,
)
from .nonstrictify import embed_j_functor, lift_nonstrict, q_model, q_nat, q_functor, qobjs_over
from .strictify import embed_functor, lift_strict, seqs_over, str_functor, str_model, str_nat


@dataclass
class LawFailure:
    law: str
    instance: str
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {"law": self.law, "instance": self.instance, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class LawReport:
    law: str
    seed: int = 0
    universe_size: int = 0
    failures: list[LawFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def count(self, n: int = 1):
        self.universe_size += n

    def record_failure(self, law: str, instance: str, lhs: str, rhs: str):
        self.failures.append(LawFailure(law, instance, lhs, rhs))

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "universe_size": self.universe_size,
            "failures": [f.to_dict() for f in self.failures],
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=True)

    def to_text(self) -> str:
        lines = [
            f"law: {self.law}",
            f"seed: {self.seed}",
            f"instances checked: {self.universe_size}",
            f"failures: {len(self.failures)}",
        ]
        for failure in self.failures:
            lines.append(f"  FAIL {failure.law} @ {failure.instance}")
            lines.append(f"       lhs: {failure.lhs}")
            lines.append(f"       rhs: {failure.rhs}")
        return "\n".join(lines)


# -- comparison helpers -------------------------------------------------------


def compare_functors(
    report: LawReport,
    law: str,
    left: MonFunctorData,
    right: MonFunctorData,
    objects: list,
    arrows: list,
    coherence_pairs: list | None = None,
    ambient: CategoryModel | None = None,
):
    """Record any componentwise disagreement of two parallel functors."""
    d = ambient or left.target
    ro = d.render_obj
    for x in objects:
        report.count()
        if not d.obj_eq(left.obj_map(x), right.obj_map(x)):
            report.record_failure(law, f"object {left.source.render_obj(x)}",
                                  ro(left.obj_map(x)), ro(right.obj_map(x)))
    for f in arrows:
        report.count()
        lf, rf = left.mor_map(f), right.mor_map(f)
        if not d.mor_eq(lf, rf):
            report.record_failure(law, f"arrow {left.source.render_mor(f)}",
                                  d.render_mor(lf), d.render_mor(rf))
    if coherence_pairs is None:
        coherence_pairs = [(x, y) for x in objects for y in objects]
    for x, y in coherence_pairs:
        report.count()
        lg, rg = left.gamma(x, y), right.gamma(x, y)
        if not d.mor_eq(lg, rg):
            report.record_failure(
                law,
                f"gamma {left.source.render_obj(x)},{left.source.render_obj(y)}",
                d.render_mor(lg),
                d.render_mor(rg),
            )
    report.count()
    if not d.mor_eq(left.u, right.u):
        report.record_failure(law, "unit coherence", d.render_mor(left.u), d.render_mor(right.u))


def compare_nats(
    report: LawReport,
    law: str,
    left: NatTransData,
    right: NatTransData,
    objects: list,
    ambient: CategoryModel | None = None,
):
    d = ambient or left.dom.target
    for x in objects:
        report.count()
        lc, rc = left.component(x), right.component(x)
        if not d.mor_eq(lc, rc):
            report.record_failure(
                law,
                f"component {left.dom.source.render_obj(x)}",
                d.render_mor(lc),
                d.render_mor(rc),
            )


def _str_universe(fixtures, model: CategoryModel, max_len: int = 2, base_objects=None):
    base = fixtures.objects_for(model) if base_objects is None else base_objects
    objs = seqs_over(base, max_len)
    arrows = _transported_arrows(str_model(model), objs, fixtures.arrows_for(model))
    return objs, arrows


def _q_universe(fixtures, model: CategoryModel, max_leaves: int = 2, base_objects=None):
    base = fixtures.objects_for(model) if base_objects is None else base_objects
    objs = qobjs_over(base, max_leaves)
    arrows = _transported_arrows(q_model(model), objs, fixtures.arrows_for(model))
    return objs, arrows


def _transported_arrows(wrapped, objs, base_arrows):
    """Arrows of a sequence/shape category over the given objects.

    Uses the hom tables when the base category enumerates them, otherwise
    transports a base arrow sample along length-one objects.
    """
    out = []
    enumerable = True
    for s in objs:
        for t in objs:
            hom = wrapped.hom(s, t)
            if hom is None:
                enumerable = False
                break
            out.extend(hom)
        if not enumerable:
            break
    if enumerable:
        return out
    out = []
    for f in base_arrows:
        out.append(wrapped.embed_arrow(f))
    return out


def run_2functor_suite(fixtures, seed: int = 0, max_len: int = 2) -> LawReport:
    """Identity preservation and both composition equations, for str and q."""
    report = LawReport(law="2functor", seed=seed)

    for model in fixtures.models.values():
        # the identity laws are definitional; three base objects per model keep
        # the sequence universes small without losing shape coverage
        base = fixtures.objects_for(model)[:3]
        objs, arrows = _str_universe(fixtures, model, max_len, base_objects=base)
        compare_functors(
            report,
            f"str-identity:{model.name}",
            str_functor(identity_functor(model)),
            identity_functor(str_model(model)),
            objs,
            arrows,
        )
        qobjs, qarrows = _q_universe(fixtures, model, max_len, base_objects=base)
        compare_functors(
            report,
            f"q-identity:{model.name}",
            q_functor(identity_functor(model)),
            identity_functor(q_model(model)),
            qobjs,
            qarrows,
        )

    for f2, f1 in fixtures.composable_pairs:
        objs, arrows = _str_universe(fixtures, f1.source, max_len)
        compare_functors(
            report,
            f"str-compose:{f2.name}o{f1.name}",
            str_functor(compose_functors(f2, f1)),
            compose_functors(str_functor(f2), str_functor(f1)),
            objs,
            arrows,
            ambient=str_model(f2.target),
        )
        qobjs, qarrows = _q_universe(fixtures, f1.source, max_len)
        compare_functors(
            report,
            f"q-compose:{f2.name}o{f1.name}",
            q_functor(compose_functors(f2, f1)),
            compose_functors(q_functor(f2), q_functor(f1)),
            qobjs,
            qarrows,
            ambient=q_model(f2.target),
        )

    for b, a in fixtures.vertical_pairs:
        objs, _ = _str_universe(fixtures, a.dom.source, max_len)
        compare_nats(
            report,
            f"str-vertical:{b.name}o{a.name}",
            str_nat(compose_nats(b, a)),
            compose_nats(str_nat(b), str_nat(a)),
            objs,
            ambient=str_model(a.dom.target),
        )
        qobjs, _ = _q_universe(fixtures, a.dom.source, max_len)
        compare_nats(
            report,
            f"q-vertical:{b.name}o{a.name}",
            q_nat(compose_nats(b, a)),
            compose_nats(q_nat(b), q_nat(a)),
            qobjs,
            ambient=q_model(a.dom.target),
        )

    for a2, a1 in fixtures.horizontal_pairs:
        objs, _ = _str_universe(fixtures, a1.dom.source, max_len)
        compare_nats(
            report,
            f"str-horizontal:{a2.name}*{a1.name}",
            str_nat(hcompose_nats(a2, a1)),
            hcompose_nats(str_nat(a2), str_nat(a1)),
            objs,
            ambient=str_model(a2.dom.target),
        )
        qobjs, _ = _q_universe(fixtures, a1.dom.source, max_len)
        compare_nats(
            report,
            f"q-horizontal:{a2.name}*{a1.name}",
            q_nat(hcompose_nats(a2, a1)),
            hcompose_nats(q_nat(a2), q_nat(a1)),
            qobjs,
            ambient=q_model(a2.dom.target),
        )

    return report


def run_adjunction_suite_str(fixtures, seed: int = 0, max_len: int = 2) -> LawReport:
    """Both round trips of the hom isomorphism plus its naturality equalities."""
    report = LawReport(law="adjunction-str", seed=seed)

    for scenario in fixtures.str_scenarios:
        c, f = scenario.ambient, scenario.functor
        tag = f"{scenario.name}"
        lifted = lift_strict(f)
        embed = embed_functor(c)
        c_objs = fixtures.objects_for(c)
        c_arrows = fixtures.arrows_for(c)

        # round trip through the embedding: (lift F) o i = F, with coherence data
        compare_functors(
            report, f"str-counit:{tag}", compose_functors(lifted, embed), f, c_objs, c_arrows
        )

        # round trip the other way: lifting the restriction returns the strict functor
        objs, arrows = _str_universe(fixtures, c, max_len)
        relift = lift_strict(compose_functors(lifted, embed), allow_nonstrict_target=True)
        compare_functors(report, f"str-unit:{tag}", relift, lifted, objs, arrows)

        # naturality in the monoidal category argument
        h = scenario.inner
        c2_objs = fixtures.objects_for(h.source)
        c2_arrows = fixtures.arrows_for(h.source)
        lhs = compose_functors(f, h)
        rhs = compose_functors(lifted, compose_functors(str_functor(h), embed_functor(h.source)))
        compare_functors(report, f"str-natural-functor:{tag}", lhs, rhs, c2_objs, c2_arrows)

        # naturality for 2-cells: whiskering the strictified transformation
        eps = scenario.nat
        lhs_nat = whisker_right(str_nat(eps), embed_functor(eps.dom.source))
        rhs_nat = whisker_left(embed_functor(eps.dom.target), eps)
        compare_nats(
            report,
            f"str-natural-2cell:{tag}",
            lhs_nat,
            rhs_nat,
            fixtures.objects_for(eps.dom.source),
            ambient=str_model(eps.dom.target),
        )

    return report


def run_adjunction_suite_q(fixtures, seed: int = 0, max_leaves: int = 2) -> LawReport:
    report = LawReport(law="adjunction-q", seed=seed)

    for scenario in fixtures.q_scenarios:
        c, f = scenario.ambient, scenario.functor
        tag = f"{scenario.name}"
        lifted = lift_nonstrict(f)
        embed = embed_j_functor(c)
        c_objs = fixtures.objects_for(c)
        c_arrows = fixtures.arrows_for(c)

        compare_functors(
            report, f"q-counit:{tag}", compose_functors(lifted, embed), f, c_objs, c_arrows
        )

        objs, arrows = _q_universe(fixtures, c, max_leaves)
        relift = lift_nonstrict(compose_functors(lifted, embed), allow_strict_target=True)
        compare_functors(report, f"q-unit:{tag}", relift, lifted, objs, arrows)

        h = scenario.inner
        c2_objs = fixtures.objects_for(h.source)
        c2_arrows = fixtures.arrows_for(h.source)
        lhs = compose_functors(f, h)
        rhs = compose_functors(lifted, compose_functors(q_functor(h), embed_j_functor(h.source)))
        compare_functors(report, f"q-natural-functor:{tag}", lhs, rhs, c2_objs, c2_arrows)

        eps = scenario.nat
        lhs_nat = whisker_right(q_nat(eps), embed_j_functor(eps.dom.source))
        rhs_nat = whisker_left(embed_j_functor(eps.dom.target), eps)
        compare_nats(
            report,
            f"q-natural-2cell:{tag}",
            lhs_nat,
            rhs_nat,
            fixtures.objects_for(eps.dom.source),
            ambient=q_model(eps.dom.target),
        )

    return report
