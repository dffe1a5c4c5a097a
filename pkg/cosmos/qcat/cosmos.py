"""The quasi-category cosmos: truncated function complexes and their homotopy categories."""
from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from cosmos.cat.category import CatFunctor, FiniteCategory
from cosmos.core.base import ArrowObject, Cosmos, LimitCone, TwoCell
from cosmos.core.errors import InputError
from cosmos.core.models import Budget, Verdict
from cosmos.qcat.fibrations import is_isofibration
from cosmos.qcat.homotopy import HomotopyCategory, homotopy_category, homotopy_functor
from cosmos.sset.constructions import nerve, point_map, product, pullback, simplex_map, standard_simplex, to_terminal
from cosmos.sset.exponential import FunctionComplex, endpoint_map, postcompose_map, precompose_map, transpose
from cosmos.sset.simplicial import FiniteSimplicialSet, FormalSimplex, SimplicialMap, compose, identity_map

logger = logging.getLogger(__name__)


class QCatCosmos(Cosmos):
    """Quasi-categories with hom(A, B) = h(Fun(A, B)), computed at a fixed truncation.

    ``dims`` is the truncation of cotensors such as A^𝟚; hom-categories only need
    the function complex up to dimension 2.
    """

    kind = "qCat"
    one_cell_type = SimplicialMap

    def __init__(self, dims: Optional[int] = None, budget: Optional[int] = None) -> None:
        from cosmos.config import config

        self.dims = config.dim_bound if dims is None else dims
        if self.dims < 2:
            raise InputError(f"the homotopy 2-category needs dims >= 2, got {self.dims}")
        self.budget = budget
        self._funs: Dict[Tuple[FiniteSimplicialSet, FiniteSimplicialSet, int], FunctionComplex] = {}
        self._homs: Dict[Tuple[FiniteSimplicialSet, FiniteSimplicialSet], Tuple[FunctionComplex, HomotopyCategory, FiniteCategory]] = {}

    def fun(self, source: FiniteSimplicialSet, target: FiniteSimplicialSet, dims: Optional[int] = None) -> FunctionComplex:
        key = (source, target, self.dims if dims is None else dims)
        cached = self._funs.get(key)
        if cached is None:
            cached = FunctionComplex(source, target, key[2], Budget(self.budget))
            self._funs[key] = cached
        return cached

    def _hom_data(self, source: FiniteSimplicialSet, target: FiniteSimplicialSet) -> Tuple[FunctionComplex, HomotopyCategory, FiniteCategory]:
        key = (source, target)
        cached = self._homs.get(key)
        if cached is None:
            fun = self.fun(source, target, 2)
            h = homotopy_category(fun)
            names = {v: fun.vertex_map(v) for v in fun.nondegenerate(0)}
            category = h.with_objects(names.__getitem__, name=f"hom({source.label()}, {target.label()})")
            cached = (fun, h, category)
            self._homs[key] = cached
        return cached

    # -- 2-category -----------------------------------------------------------------------

    def hom(self, source: FiniteSimplicialSet, target: FiniteSimplicialSet) -> FiniteCategory:
        return self._hom_data(source, target)[2]

    def identity(self, obj: FiniteSimplicialSet) -> SimplicialMap:
        return identity_map(obj)

    def compose(self, g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
        return compose(g, f)

    def arrow_of_edge(self, source: FiniteSimplicialSet, target: FiniteSimplicialSet, edge: FormalSimplex) -> FormalSimplex:
        """The hom-category arrow named by an edge of Fun(source, target)."""
        return self._hom_data(source, target)[1].arrow_of(edge)

    def homotopy(self, alpha: TwoCell) -> SimplicialMap:
        """A representative Δ^1 × X → A of a 2-cell."""
        fun = self._hom_data(alpha.domain, alpha.codomain)[0]
        return fun.map_of(alpha.arrow)

    def _induced(self, fun_map: SimplicialMap, source: Tuple, target: Tuple, on_objects: Dict) -> CatFunctor:
        _, h_source, cat_source = source
        _, h_target, cat_target = target
        on_arrows = {a: h_target.arrow_of(fun_map(a)) for a in h_source.arrows}
        return CatFunctor(cat_source, cat_target, on_objects, on_arrows)

    def postcompose(self, h: SimplicialMap, obj: FiniteSimplicialSet) -> CatFunctor:
        source = self._hom_data(obj, h.source)
        target = self._hom_data(obj, h.target)
        fun_map = postcompose_map(h, source[0], target[0])
        return self._induced(fun_map, source, target, {f: compose(h, f) for f in source[2].objects})

    def precompose(self, k: SimplicialMap, obj: FiniteSimplicialSet) -> CatFunctor:
        source = self._hom_data(k.target, obj)
        target = self._hom_data(k.source, obj)
        fun_map = precompose_map(k, source[0], target[0])
        return self._induced(fun_map, source, target, {f: compose(f, k) for f in source[2].objects})

    # -- limits ---------------------------------------------------------------------------

    def terminal(self) -> FiniteSimplicialSet:
        return standard_simplex(0)

    def to_terminal(self, obj: FiniteSimplicialSet) -> SimplicialMap:
        return to_terminal(obj)

    def elements(self, obj: FiniteSimplicialSet) -> List[SimplicialMap]:
        return [point_map(obj, v) for v in obj.nondegenerate(0)]

    def element(self, obj: FiniteSimplicialSet, x: object) -> SimplicialMap:
        """The element at a vertex id, or at the vertex of a function complex naming a map."""
        if isinstance(x, SimplicialMap):
            if not isinstance(obj, FunctionComplex):
                raise InputError(f"{x.label()} names an element only of a function complex")
            x = obj.vertex_of(x)
        if x not in obj or obj.dim(x) != 0:
            raise InputError(f"{x} is not a vertex of {obj.label()}")
        return point_map(obj, x)

    def product(self, left: FiniteSimplicialSet, right: FiniteSimplicialSet) -> LimitCone:
        apex = product(left, right)
        return LimitCone(apex, apex.legs, apex.pair)

    def pullback(self, f: SimplicialMap, g: SimplicialMap) -> LimitCone:
        apex = pullback(f, g)
        return LimitCone(apex, apex.legs, apex.pair)

    def arrow_object(self, obj: FiniteSimplicialSet) -> ArrowObject:
        fun = self.fun(standard_simplex(1), obj)
        return ArrowObject(fun, endpoint_map(fun, 0), endpoint_map(fun, 1))

    def shape(self, category: FiniteCategory) -> FiniteSimplicialSet:
        return nerve(category, dims=self.dims)

    def cotensor(self, shape: FiniteSimplicialSet, obj: FiniteSimplicialSet) -> FunctionComplex:
        return self.fun(shape, obj)

    def cotensor_map(self, shape: FiniteSimplicialSet, h: SimplicialMap) -> SimplicialMap:
        return postcompose_map(h, self.fun(shape, h.source), self.fun(shape, h.target))

    def diagonal(self, shape: FiniteSimplicialSet, obj: FiniteSimplicialSet) -> SimplicialMap:
        return transpose(product(obj, shape).legs[0], self.fun(shape, obj))

    def cotensor_cell(self, k: SimplicialMap) -> TwoCell:
        arrows = k.target
        if not isinstance(arrows, FunctionComplex) or arrows.domain != standard_simplex(1):
            raise InputError("cotensor_cell needs a map into an arrow object")
        space, obj = k.source, arrows.codomain
        fun = self._hom_data(space, obj)[0]
        cylinder = fun.cylinder(1)
        assignment = {}
        for sid, (u, x) in cylinder.components.items():
            if x.dim <= arrows.dims:
                assignment[sid] = arrows.evaluate(k(x), u)
        edge = fun.formal_of(SimplicialMap(cylinder, obj, assignment))
        source = compose(endpoint_map(arrows, 0), k)
        target = compose(endpoint_map(arrows, 1), k)
        return TwoCell(self, source, target, self.arrow_of_edge(space, obj, edge))

    def cell_as_cotensor(self, alpha: TwoCell) -> SimplicialMap:
        space, obj = alpha.domain, alpha.codomain
        arrows = self.fun(standard_simplex(1), obj)
        homotopy = self.homotopy(alpha)
        cylinder = homotopy.source
        assignment = {}
        for n in range(min(space.dims, arrows.dims) + 1):
            square = arrows.cylinder(n)
            for sid in space.nondegenerate(n):
                chi = simplex_map(space, space.formal(sid))
                swap = cylinder.pair(square.legs[1], compose(chi, square.legs[0]))
                assignment[sid] = arrows.formal_of(compose(homotopy, swap))
        return SimplicialMap(space, arrows, assignment)

    def is_isofibration(self, p: SimplicialMap) -> Verdict:
        return is_isofibration(p, self.dims, Budget(self.budget))

    def homotopy_functor_of(self, f: SimplicialMap) -> CatFunctor:
        return homotopy_functor(f, homotopy_category(f.source), homotopy_category(f.target))


def fibered_fun(p: SimplicialMap, q: SimplicialMap, cosmos: Optional[QCatCosmos] = None, dims: Optional[int] = None) -> FiniteSimplicialSet:
    """Fun_B(p, q): the fiber of q_*: Fun(E, F) → Fun(E, B) over the vertex p."""
    if p.target != q.target:
        raise InputError("fibered function complex needs maps over a common base")
    cosmos = cosmos or QCatCosmos(dims)
    over = cosmos.fun(p.source, q.target, dims)
    total = cosmos.fun(p.source, q.source, dims)
    push = postcompose_map(q, total, over)
    vertex = point_map(over, over.vertex_of(p))
    return pullback(push, vertex)
