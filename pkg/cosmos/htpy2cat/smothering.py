"""Smothering functors and the weak universal property of arrow objects."""
from __future__ import annotations

import logging
from typing import Any

from cosmos.cat.category import CatFunctor, label
from cosmos.cat.constructions import arrow_category
from cosmos.core.base import Cosmos
from cosmos.core.models import Certificate, Verdict

logger = logging.getLogger(__name__)


def check_smothering(functor: CatFunctor) -> Verdict:
    """Surjective on objects, full and conservative; a NO names the first failing property."""
    source, target = functor.source, functor.target
    certificate = Certificate(exact=True)
    image = {functor(x) for x in source.objects}
    for y in target.objects:
        if y not in image:
            return Verdict.no(
                "not surjective on objects",
                {"property": "surjective on objects", "object": label(y)},
                certificate,
            )
    for x in source.objects:
        for x2 in source.objects:
            reached = {functor.arrow(a) for a in source.hom(x, x2)}
            for b in target.hom(functor(x), functor(x2)):
                if b not in reached:
                    return Verdict.no(
                        "not full",
                        {"property": "full", "source": label(x), "target": label(x2), "arrow": label(b)},
                        certificate,
                    )
    for a in source.arrows:
        if target.is_iso(functor.arrow(a)) and not source.is_iso(a):
            return Verdict.no(
                "not conservative",
                {"property": "conservative", "arrow": label(a)},
                certificate,
            )
    logger.debug("%s is smothering", functor.label())
    return Verdict.yes("surjective on objects, full and conservative", None, certificate)


def weak_cotensor_comparison(cosmos: Cosmos, probe: Any, obj: Any) -> CatFunctor:
    """``hom(X, A^𝟚) → hom(X, A)^𝟚`` sending ``k`` to the 2-cell it encodes."""
    K = cosmos
    arrows = K.arrow_object(obj)
    source = K.hom(probe, arrows.apex)
    target, _, _ = arrow_category(K.hom(probe, obj))
    at_source = K.postcompose(arrows.ev0, probe)
    at_target = K.postcompose(arrows.ev1, probe)
    on_objects = {k: K.cotensor_cell(k).arrow for k in source.objects}
    on_arrows = {
        tau: (at_source.arrow(tau), at_target.arrow(tau), on_objects[source.src(tau)], on_objects[source.tgt(tau)])
        for tau in source.arrows
    }
    return CatFunctor(source, target, on_objects, on_arrows, name=f"hom({label(probe)}, -^𝟚)")


def check_weak_cotensor(cosmos: Cosmos, probe: Any, obj: Any) -> Verdict:
    """The comparison for ``A^𝟚`` at the probe ``X`` is smothering."""
    verdict = check_smothering(weak_cotensor_comparison(cosmos, probe, obj))
    verdict.certificate = verdict.certificate.merge(
        Certificate(dims=getattr(cosmos, "dims", None), probes=(label(probe),))
    )
    return verdict
