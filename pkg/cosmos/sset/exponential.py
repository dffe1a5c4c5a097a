"""Truncated function complexes Fun(A, B) and their transposition maps."""
from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from cosmos.core.errors import InputError, TruncationError
from cosmos.core.models import Budget
from cosmos.sset.constructions import (
    LimitSimplicialSet,
    product,
    simplex_map,
    simplex_of,
    standard_simplex,
    to_terminal,
)
from cosmos.sset.search import iter_maps, search_depth
from cosmos.sset.simplicial import (
    FiniteSimplicialSet,
    FormalSimplex,
    Operator,
    SimplicialMap,
    compose,
    face_op,
    identity_map,
    surjections,
)

logger = logging.getLogger(__name__)

MapKey = Tuple[Tuple[str, FormalSimplex], ...]


def operator_map(theta: Operator, m: int) -> SimplicialMap:
    """The map Δ^n → Δ^m induced by a monotone ``theta: [n] → [m]``."""
    return simplex_map(standard_simplex(m), simplex_of(m, theta))


def check_exponent(domain: FiniteSimplicialSet, codomain: FiniteSimplicialSet, dims: int) -> None:
    """Raise :class:`TruncationError` when Fun(domain, codomain) is not determined to ``dims``."""
    cosk = codomain.coskeletal
    if domain.truncated:
        if cosk is None or cosk > domain.dims:
            raise TruncationError(
                f"exponent {domain.label()} is truncated at {domain.dims}; "
                f"{codomain.label()} must be coskeletal at or below that level"
            )
        return
    if codomain.truncated and codomain.dims < dims + domain.top_dim and (cosk is None or cosk > codomain.dims):
        raise TruncationError(
            f"{codomain.label()} is stored to dimension {codomain.dims}, "
            f"function complex needs {dims + domain.top_dim}"
        )


class FunctionComplex(FiniteSimplicialSet):
    """Fun(A, B) truncated at ``dims``: n-simplices are maps Δ^n × A → B.

    Nondegenerate n-simplices are named ``"m{n}.{k}"`` in canonical search order.
    """

    def __init__(
        self,
        domain: FiniteSimplicialSet,
        codomain: FiniteSimplicialSet,
        dims: Optional[int] = None,
        budget: Optional[Budget] = None,
    ) -> None:
        from cosmos.config import config

        dims = config.dim_bound if dims is None else dims
        if dims < 0:
            raise InputError(f"function complex dimension must be >= 0, got {dims}")
        check_exponent(domain, codomain, dims)
        self.domain = domain
        self.codomain = codomain
        budget = budget or Budget()
        self._cylinders: Dict[int, LimitSimplicialSet] = {}
        self._formal_of: Dict[MapKey, FormalSimplex] = {}
        self.maps: Dict[str, SimplicialMap] = {}
        levels: List[List[str]] = []
        faces: Dict[str, Tuple[FormalSimplex, ...]] = {}
        for n in range(dims + 1):
            cylinder = self.cylinder(n)
            for m in range(n):
                for sid in levels[m]:
                    for sigma in surjections(n, m):
                        if sigma == tuple(range(m + 1)):
                            continue
                        degenerate = self._reindex(self.maps[sid], m, sigma)
                        self._formal_of.setdefault(degenerate.key(), FormalSimplex(sid, sigma))
            level = []
            for phi in iter_maps(cylinder, codomain, budget=budget):
                if phi.key() in self._formal_of:
                    continue
                sid = f"m{n}.{len(level)}"
                level.append(sid)
                self.maps[sid] = phi
                self._formal_of[phi.key()] = FormalSimplex.of(sid, n)
                if n:
                    faces[sid] = tuple(
                        self._formal_of[self._reindex(phi, n, face_op(n, i)).key()] for i in range(n + 1)
                    )
            levels.append(level)
            logger.debug("Fun(%s, %s): %d nondegenerate %d-simplices", domain.label(), codomain.label(), len(level), n)
        super().__init__(
            levels,
            faces,
            dims=dims,
            truncated=True,
            coskeletal=codomain.coskeletal,
            name=f"Fun({domain.label()}, {codomain.label()})",
        )

    def cylinder(self, n: int) -> LimitSimplicialSet:
        """Δ^n × A."""
        cached = self._cylinders.get(n)
        if cached is None:
            cached = product(standard_simplex(n), self.domain)
            self._cylinders[n] = cached
        return cached

    def _reindex(self, phi: SimplicialMap, m: int, theta: Operator) -> SimplicialMap:
        """``phi ∘ (theta × A)`` for ``phi: Δ^m × A → B`` and ``theta: [n] → [m]``."""
        n = len(theta) - 1
        source, target = self.cylinder(n), self.cylinder(m)
        along = target.pair(compose(operator_map(theta, m), source.legs[0]), source.legs[1])
        return self._trim(compose(phi, along))

    def _trim(self, phi: SimplicialMap) -> SimplicialMap:
        depth = search_depth(phi.source, self.codomain)
        if all(phi.source.dim(sid) <= depth for sid in phi.assignment):
            return phi
        kept = {sid: img for sid, img in phi.assignment.items() if phi.source.dim(sid) <= depth}
        return SimplicialMap(phi.source, phi.target, kept)

    # -- simplices as maps ------------------------------------------------------------

    def map_of(self, x: FormalSimplex) -> SimplicialMap:
        """The map Δ^n × A → B represented by a formal n-simplex."""
        base = self.maps[x.base]
        if not x.is_degenerate:
            return base
        return self._reindex(base, x.base_dim, x.sigma)

    def formal_of(self, phi: SimplicialMap) -> FormalSimplex:
        """The simplex representing ``phi: Δ^n × A → B``.

        A map given only on low dimensions is matched against the stored simplices,
        which is exact when B is coskeletal below the dimensions given.
        """
        found = self._formal_of.get(self._trim(phi).key())
        if found is not None:
            return found
        n = phi.source.factors[0].top_dim if isinstance(phi.source, LimitSimplicialSet) else -1
        if 0 <= n <= self.dims:
            for x in self.formal_simplices(n):
                candidate = self.map_of(x)
                if all(candidate.assignment.get(sid, img) == img for sid, img in phi.assignment.items()):
                    return x
        raise InputError(f"{phi!r} is not a simplex of {self.label()}")

    def evaluate(self, x: FormalSimplex, a: FormalSimplex) -> FormalSimplex:
        """Value of the n-simplex ``x`` at the n-simplex ``a`` of the domain."""
        m = x.base_dim
        point = self.cylinder(m).normalize([simplex_of(m, x.sigma), a])
        return self.maps[x.base](point)

    def vertex_map(self, vertex: str) -> SimplicialMap:
        """The 1-cell A → B named by a vertex, through Δ^0 × A ≅ A."""
        cylinder = self.cylinder(0)
        section = cylinder.pair(to_terminal(self.domain), identity_map(self.domain))
        return compose(self.maps[vertex], section)

    def vertex_of(self, f: SimplicialMap) -> str:
        """The vertex naming a map A → B."""
        return self.formal_of(compose(f, self.cylinder(0).legs[1])).base

    def edge_of(self, phi: SimplicialMap) -> FormalSimplex:
        """The 1-simplex naming a homotopy Δ^1 × A → B."""
        return self.formal_of(phi)


def exponential(domain: FiniteSimplicialSet, codomain: FiniteSimplicialSet, dims: Optional[int] = None) -> FunctionComplex:
    return FunctionComplex(domain, codomain, dims)


def evaluation_map(fun: FunctionComplex) -> SimplicialMap:
    """ev: Fun(A, B) × A → B."""
    space = product(fun, fun.domain)
    assignment = {}
    for sid, (x, a) in space.components.items():
        assignment[sid] = fun.evaluate(x, a)
    return SimplicialMap(space, fun.codomain, assignment, name="ev")


def transpose(f: SimplicialMap, fun: FunctionComplex) -> SimplicialMap:
    """X × A → B  ⟼  X → Fun(A, B), on simplices up to the stored truncation."""
    source = f.source
    if not isinstance(source, LimitSimplicialSet) or len(source.factors) != 2:
        raise InputError("transpose needs a map out of a binary product")
    space = source.factors[0]
    assignment = {}
    for n in range(min(space.dims, fun.dims) + 1):
        cylinder = fun.cylinder(n)
        for sid in space.nondegenerate(n):
            chi = simplex_map(space, space.formal(sid))
            along = source.pair(compose(chi, cylinder.legs[0]), cylinder.legs[1])
            assignment[sid] = fun.formal_of(compose(f, along))
    return SimplicialMap(space, fun, assignment)


def untranspose(g: SimplicialMap, fun: FunctionComplex) -> SimplicialMap:
    """X → Fun(A, B)  ⟼  X × A → B.

    A product simplex ``(x, a)`` is defined whenever ``x`` degenerates from a stored
    simplex of X; the map is validated once X lies within the truncation.
    """
    space = product(g.source, fun.domain)
    assignment = {}
    for sid, (x, a) in space.components.items():
        if g.source.dim(x.base) <= fun.dims and x.base in g.assignment:
            assignment[sid] = fun.evaluate(g(x), a)
    result = SimplicialMap(space, fun.codomain, assignment)
    if g.source.dims <= fun.dims:
        result.validate()
    return result


def postcompose_map(h: SimplicialMap, source: FunctionComplex, target: FunctionComplex) -> SimplicialMap:
    """Fun(A, B) → Fun(A, C), φ ↦ h ∘ φ."""
    assignment = {sid: target.formal_of(compose(h, phi)) for sid, phi in source.maps.items()}
    return SimplicialMap(source, target, assignment)


def precompose_map(k: SimplicialMap, source: FunctionComplex, target: FunctionComplex) -> SimplicialMap:
    """Fun(A, B) → Fun(A′, B), φ ↦ φ ∘ (Δ^n × k)."""
    assignment = {}
    for sid, phi in source.maps.items():
        n = source.dim(sid)
        outer, inner = source.cylinder(n), target.cylinder(n)
        along = outer.pair(inner.legs[0], compose(k, inner.legs[1]))
        assignment[sid] = target.formal_of(compose(phi, along))
    return SimplicialMap(source, target, assignment)


def endpoint_map(fun: FunctionComplex, vertex: int) -> SimplicialMap:
    """Evaluation Fun(Δ^1, A) → A at an endpoint of Δ^1."""
    if fun.domain != standard_simplex(1):
        raise InputError("endpoint evaluation needs Fun(Δ^1, A)")
    assignment = {}
    for sid in fun.ids():
        n = fun.dim(sid)
        assignment[sid] = fun.evaluate(FormalSimplex.of(sid, n), FormalSimplex(str(vertex), (0,) * (n + 1)))
    return SimplicialMap(fun, fun.codomain, assignment, name=f"ev{vertex}")


__all__ = [
    "FunctionComplex",
    "check_exponent",
    "endpoint_map",
    "evaluation_map",
    "exponential",
    "operator_map",
    "postcompose_map",
    "precompose_map",
    "transpose",
    "untranspose",
]
