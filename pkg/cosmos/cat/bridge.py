"""The nerve as a functor of cosmoi: Cat data carried into the quasi-category instance."""
from __future__ import annotations

import logging
from typing import Any, Optional

from cosmos.cat.category import CatFunctor, label
from cosmos.cat.constructions import comma_cat_oracle
from cosmos.core.models import Certificate, Verdict
from cosmos.qcat.cosmos import QCatCosmos
from cosmos.sset.constructions import Nerve, chain_simplex
from cosmos.sset.simplicial import FormalSimplex, SimplicialMap

logger = logging.getLogger(__name__)

BRIDGE_KINDS = ("adjunction", "equivalence", "comma", "isofibration", "terminal")


def nerve_functor(functor: CatFunctor, cosmos: QCatCosmos) -> SimplicialMap:
    """``N F: N A → N B``, sending each chain to the chain of its images."""
    source: Nerve = cosmos.shape(functor.source)
    target: Nerve = cosmos.shape(functor.target)
    B = functor.target
    assignment = {}
    for n in range(source.dims + 1):
        for sid in source.nondegenerate(n):
            if n == 0:
                assignment[sid] = FormalSimplex.of(label(functor(source.objects[sid])), 0)
            else:
                assignment[sid] = chain_simplex(B, [functor.arrow(a) for a in source.chains[sid]])
    logger.debug("nerve of %s at dims %d", functor.label(), source.dims)
    return SimplicialMap(source, target, assignment, name=f"N({functor.label()})").validate()


def nerve_bridge_checks(kind: str, *items: Any, cosmos: Optional[QCatCosmos] = None) -> Verdict:
    """Confirm that the nerve preserves a Cat fact: an adjunction ``(f, u)``, an equivalence ``f``,
    a comma ``(f, g)``, an isofibration ``p`` or a terminal object ``(A, t)``."""
    from cosmos.comma.characterizations import is_terminal_element
    from cosmos.comma.objects import comma
    from cosmos.htpy2cat.adjunctions import check_equivalence_2cat, find_adjunction
    from cosmos.runtime import get_qcat_cosmos

    K = cosmos or get_qcat_cosmos()
    certificate = Certificate(dims=K.dims, exact=False, notes=(f"nerve bridge: {kind}",))
    if kind not in BRIDGE_KINDS:
        raise KeyError(f"Unknown bridge check '{kind}'")
    if kind == "terminal":
        category, obj = items
        verdict = is_terminal_element(K, K.element(K.shape(category), label(obj)))
        verdict.certificate = verdict.certificate.merge(certificate)
        return verdict
    nerves = [nerve_functor(f, K) for f in items]
    if kind == "adjunction":
        f, u = nerves
        adj = find_adjunction(K, f, u)
        if adj is None:
            return Verdict.no(f"no adjunction between {f.label()} and {u.label()} at dims {K.dims}", None, certificate)
        return Verdict.yes("the nerves are adjoint", adj, certificate)
    if kind == "equivalence":
        verdict = check_equivalence_2cat(K, nerves[0])
        verdict.certificate = verdict.certificate.merge(certificate)
        return verdict
    if kind == "comma":
        f, g = items
        apex = comma(K, *nerves).apex
        expected = K.shape(comma_cat_oracle(f, g)[0])
        found, wanted = apex.counts(), expected.counts()
        if found[:3] != wanted[:3]:
            return Verdict.no(
                "the comma of nerves differs from the nerve of the comma",
                {"comma_of_nerves": list(found[:3]), "nerve_of_comma": list(wanted[:3])},
                certificate,
            )
        return Verdict.yes("comma of nerves matches the nerve of the comma up to dimension 2", list(found[:3]), certificate)
    verdict = K.is_isofibration(nerves[0])
    verdict.certificate = verdict.certificate.merge(certificate)
    return verdict
