"""Standard simplicial sets, nerves and finite limits of simplicial sets."""
from __future__ import annotations

import itertools
import logging
from functools import lru_cache
from typing import TYPE_CHECKING, Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from cosmos.core.errors import BoundaryMismatch, InputError, TruncationError
from cosmos.sset.simplicial import (
    FiniteSimplicialSet,
    FormalSimplex,
    SimplicialMap,
    compose,
    identity_op,
    injections,
)

if TYPE_CHECKING:
    from cosmos.cat.category import FiniteCategory

logger = logging.getLogger(__name__)


def _vertex_name(t: Sequence[int], n: int) -> str:
    return ("" if n < 10 else ",").join(str(v) for v in t)


@lru_cache(maxsize=None)
def standard_simplex(n: int) -> FiniteSimplicialSet:
    """Δ^n, with the nondegenerate k-simplex on vertices v0<...<vk named "v0...vk"."""
    if n < 0:
        raise InputError(f"standard simplex needs n >= 0, got {n}")
    levels = [[_vertex_name(t, n) for t in injections(k, n)] for k in range(n + 1)]
    faces: Dict[str, Tuple[FormalSimplex, ...]] = {}
    for k in range(1, n + 1):
        for t in injections(k, n):
            faces[_vertex_name(t, n)] = tuple(
                FormalSimplex.of(_vertex_name(t[:i] + t[i + 1 :], n), k - 1) for i in range(k + 1)
            )
    return FiniteSimplicialSet(levels, faces, coskeletal=min(n, 1), name=f"Δ^{n}")


def top_simplex(n: int) -> FormalSimplex:
    return FormalSimplex.of(_vertex_name(tuple(range(n + 1)), n), n)


def simplex_of(n: int, vertices: Sequence[int]) -> FormalSimplex:
    """The (possibly degenerate) simplex of Δ^n with the given monotone vertex list."""
    distinct = sorted(set(vertices))
    position = {v: i for i, v in enumerate(distinct)}
    return FormalSimplex(_vertex_name(distinct, n), tuple(position[v] for v in vertices))


def _subcomplex(n: int, keep: Callable[[Tuple[int, ...]], bool], name: str) -> Tuple[FiniteSimplicialSet, SimplicialMap]:
    full = standard_simplex(n)
    levels: List[List[str]] = []
    faces: Dict[str, Tuple[FormalSimplex, ...]] = {}
    for k in range(n + 1):
        level = []
        for t in injections(k, n):
            if not keep(t):
                continue
            sid = _vertex_name(t, n)
            level.append(sid)
            if k:
                faces[sid] = full.faces(sid)
        levels.append(level)
    space = FiniteSimplicialSet(levels, faces, name=name)
    inclusion = SimplicialMap(space, full, {sid: full.formal(sid) for sid in space.ids()}, name=f"{name} ↪ Δ^{n}")
    return space, inclusion


def horn(n: int, k: int) -> Tuple[FiniteSimplicialSet, SimplicialMap]:
    """Λ^{n,k} and its inclusion into Δ^n."""
    if n < 0 or not 0 <= k <= n:
        raise InputError(f"horn index out of range: n={n}, k={k}")
    everything = set(range(n + 1))
    return _subcomplex(n, lambda t: set(t) != everything and set(t) != everything - {k}, f"Λ^{{{n},{k}}}")


def boundary(n: int) -> Tuple[FiniteSimplicialSet, SimplicialMap]:
    """∂Δ^n and its inclusion into Δ^n."""
    if n < 0:
        raise InputError(f"boundary needs n >= 0, got {n}")
    return _subcomplex(n, lambda t: len(t) != n + 1, f"∂Δ^{n}")


def simplex_map(space: FiniteSimplicialSet, x: FormalSimplex) -> SimplicialMap:
    """The map Δ^n → X classifying the n-simplex ``x``."""
    delta = standard_simplex(x.dim)
    assignment = {}
    for k in range(x.dim + 1):
        for t in injections(k, x.dim):
            assignment[_vertex_name(t, x.dim)] = space.act(x, t)
    return SimplicialMap(delta, space, assignment)


def truncate(space: FiniteSimplicialSet, dims: int) -> FiniteSimplicialSet:
    """Forget simplices above ``dims``; a no-op when nothing is lost."""
    if space.dims <= dims and (space.truncated is False or space.dims == dims):
        return space
    if space.truncated and space.dims < dims:
        raise TruncationError(f"{space.label()} is stored only up to dimension {space.dims}")
    levels = space.simplices[: dims + 1]
    kept = {sid for level in levels for sid in level}
    faces = {sid: fs for sid, fs in space.raw_faces().items() if sid in kept}
    return FiniteSimplicialSet(
        levels, faces, dims=dims, truncated=True, coskeletal=space.coskeletal, name=space.name
    )


# -- nerves ---------------------------------------------------------------------------


def _has_cycle(category: FiniteCategory) -> bool:
    successors: Dict[object, List[object]] = {x: [] for x in category.objects}
    for a in category.arrows:
        if not category.is_identity(a):
            successors[category.src(a)].append(category.tgt(a))
    state: Dict[object, int] = {}

    def visit(x: object) -> bool:
        state[x] = 1
        for y in successors[x]:
            if state.get(y) == 1 or (y not in state and visit(y)):
                return True
        state[x] = 2
        return False

    return any(x not in state and visit(x) for x in category.objects)


class Nerve(FiniteSimplicialSet):
    """The nerve of a finite category; remembers the chain of arrows behind each simplex."""

    def __init__(
        self,
        category: FiniteCategory,
        chains: Dict[str, Tuple[object, ...]],
        levels: List[List[str]],
        faces: Dict[str, Tuple[FormalSimplex, ...]],
        **kwargs: object,
    ) -> None:
        from cosmos.cat.category import label

        super().__init__(levels, faces, **kwargs)  # type: ignore[arg-type]
        self.category = category
        self.chains = chains
        self.objects = {label(x): x for x in category.objects}

    def chain(self, x: FormalSimplex) -> Tuple[Tuple[object, ...], Tuple[object, ...]]:
        """The objects and arrows (identities included) of the chain spelled by ``x``."""
        C = self.category
        if x.base in self.objects:
            obj = self.objects[x.base]
            return (obj,) * (x.dim + 1), (C.identity(obj),) * x.dim
        base = self.chains[x.base]
        corners = (C.src(base[0]),) + tuple(C.tgt(a) for a in base)
        objects = tuple(corners[j] for j in x.sigma)
        arrows = tuple(
            C.identity(corners[x.sigma[j]]) if x.sigma[j] == x.sigma[j + 1] else base[x.sigma[j]]
            for j in range(x.dim)
        )
        return objects, arrows


def nerve(category: FiniteCategory, dims: Optional[int] = None, name: str = "") -> Nerve:
    """The nerve of a finite category.

    Categories without cycles of nonidentity arrows have finite nerves, returned
    complete unless ``dims`` asks for less.  Otherwise the nerve is truncated at
    ``dims`` (default: the configured bound); it is 2-coskeletal either way.
    """
    from cosmos.cat.category import label
    from cosmos.config import config

    cyclic = _has_cycle(category)
    bound = dims if dims is not None else (config.dim_bound if cyclic else None)

    def chain_id(chain: Tuple[object, ...]) -> str:
        return ";".join(label(a) for a in chain)

    levels: List[List[str]] = [[label(x) for x in category.objects]]
    faces: Dict[str, Tuple[FormalSimplex, ...]] = {}
    chains: Dict[str, Tuple[object, ...]] = {}
    frontier: List[Tuple[object, ...]] = [(a,) for a in category.arrows if not category.is_identity(a)]
    k = 1
    while frontier and (bound is None or k <= bound):
        level = []
        for chain in frontier:
            sid = chain_id(chain)
            level.append(sid)
            chains[sid] = chain
            if k == 1:
                a = chain[0]
                faces[sid] = (FormalSimplex.of(label(category.tgt(a)), 0), FormalSimplex.of(label(category.src(a)), 0))
                continue
            chain_faces = [chain_simplex(category, chain[1:])]
            for i in range(1, k):
                merged = chain[: i - 1] + (category.compose(chain[i], chain[i - 1]),) + chain[i + 1 :]
                chain_faces.append(chain_simplex(category, merged))
            chain_faces.append(chain_simplex(category, chain[:-1]))
            faces[sid] = tuple(chain_faces)
        levels.append(level)
        frontier = [
            chain + (a,)
            for chain in frontier
            for a in category.arrows
            if not category.is_identity(a) and category.src(a) == category.tgt(chain[-1])
        ]
        k += 1
    truncated = bool(frontier) and bound is not None
    if bound is not None and not truncated and len(levels) - 1 < bound and cyclic:
        truncated = True
    if not name and category.name:
        name = f"N({category.name})"
    if truncated:
        while len(levels) < bound + 1:
            levels.append([])
        return Nerve(category, chains, levels, faces, dims=bound, truncated=True, coskeletal=2, name=name)
    return Nerve(category, chains, levels, faces, coskeletal=2, name=name)


def chain_simplex(category: FiniteCategory, arrows: Sequence[object], obj: object = None) -> FormalSimplex:
    """The simplex of the nerve spelled by a chain of composable arrows."""
    from cosmos.cat.category import label

    if not arrows:
        return FormalSimplex.of(label(obj), 0)
    nonidentity = tuple(a for a in arrows if not category.is_identity(a))
    sigma = [0]
    for a in arrows:
        sigma.append(sigma[-1] + (0 if category.is_identity(a) else 1))
    if nonidentity:
        return FormalSimplex(";".join(label(a) for a in nonidentity), tuple(sigma))
    return FormalSimplex(label(category.src(arrows[0])), tuple(sigma))


# -- finite limits ------------------------------------------------------------------


def _common_repeats(parts: Sequence[FormalSimplex]) -> Tuple[int, ...]:
    n = parts[0].dim
    return tuple(j for j in range(n) if all(p.sigma[j] == p.sigma[j + 1] for p in parts))


def _normalize_components(
    parts: Sequence[FormalSimplex], lookup: Mapping[Tuple[FormalSimplex, ...], str], dims: int, name: str
) -> FormalSimplex:
    """The limit simplex with the given components: common degeneracies are factored out first."""
    parts = tuple(parts)
    n = parts[0].dim
    repeats = set(_common_repeats(parts))
    rho = [0]
    for j in range(n):
        rho.append(rho[-1] + (0 if j in repeats else 1))
    section: Dict[int, int] = {}
    for t, u in enumerate(rho):
        section.setdefault(u, t)
    reduced = tuple(FormalSimplex(p.base, tuple(p.sigma[section[u]] for u in range(rho[-1] + 1))) for p in parts)
    sid = lookup.get(reduced)
    if sid is None:
        if rho[-1] > dims:
            raise TruncationError(f"{name} is stored only up to dimension {dims}")
        raise BoundaryMismatch(f"components {[p.label() for p in parts]} do not form a simplex of the limit")
    return FormalSimplex(sid, tuple(rho))


class LimitSimplicialSet(FiniteSimplicialSet):
    """A finite limit whose simplices are compatible tuples of factor simplices."""

    def __init__(
        self,
        factors: Sequence[FiniteSimplicialSet],
        components: Dict[str, Tuple[FormalSimplex, ...]],
        levels: List[List[str]],
        faces: Dict[str, Tuple[FormalSimplex, ...]],
        **kwargs: object,
    ) -> None:
        super().__init__(levels, faces, **kwargs)  # type: ignore[arg-type]
        self.factors = tuple(factors)
        self.components = components
        self._lookup = {parts: sid for sid, parts in components.items()}
        self.legs = tuple(
            SimplicialMap(self, factor, {sid: parts[i] for sid, parts in components.items()})
            for i, factor in enumerate(self.factors)
        )

    def normalize(self, parts: Sequence[FormalSimplex]) -> FormalSimplex:
        """The simplex of the limit with the given components."""
        return _normalize_components(parts, self._lookup, self.dims, self.label())

    def pair(self, *maps: SimplicialMap) -> SimplicialMap:
        """The map into the limit induced by a cone of maps."""
        if len(maps) != len(self.factors):
            raise BoundaryMismatch(f"expected {len(self.factors)} maps, got {len(maps)}")
        source = maps[0].source
        for m, factor in zip(maps, self.factors):
            if m.source != source or m.target != factor:
                raise BoundaryMismatch("maps do not form a cone over the limit diagram")
        assignment = {}
        for sid in source.ids():
            if all(sid in m.assignment for m in maps):
                assignment[sid] = self.normalize([m.on(sid) for m in maps])
        return SimplicialMap(source, self, assignment)


def _limit_dims(factors: Sequence[FiniteSimplicialSet]) -> Tuple[int, bool]:
    truncated_dims = {f.dims for f in factors if f.truncated}
    if len(truncated_dims) > 1:
        raise TruncationError(f"truncation mismatch: factors stored to dimensions {sorted(truncated_dims)}")
    if truncated_dims:
        return truncated_dims.pop(), True
    return sum(max(f.top_dim, 0) for f in factors), False


def _coskeletal(factors: Sequence[FiniteSimplicialSet]) -> Optional[int]:
    levels = [f.coskeletal for f in factors]
    if any(level is None for level in levels):
        return None
    return max(levels) if levels else 0


def _build_limit(
    factors: Sequence[FiniteSimplicialSet],
    tuples_in_dim: Callable[[int], Sequence[Tuple[FormalSimplex, ...]]],
    name: str,
) -> LimitSimplicialSet:
    dims, truncated = _limit_dims(factors)
    components: Dict[str, Tuple[FormalSimplex, ...]] = {}
    lookup: Dict[Tuple[FormalSimplex, ...], str] = {}
    levels: List[List[str]] = []
    faces: Dict[str, Tuple[FormalSimplex, ...]] = {}
    for n in range(dims + 1):
        level = []
        for parts in tuples_in_dim(n):
            if _common_repeats(parts):
                continue
            sid = "(" + ", ".join(p.label() for p in parts) + ")"
            components[sid] = parts
            lookup[parts] = sid
            level.append(sid)
        levels.append(level)
    for n in range(1, dims + 1):
        for sid in levels[n]:
            parts = components[sid]
            faces[sid] = tuple(
                _normalize_components([f.face_of(p, i) for f, p in zip(factors, parts)], lookup, dims, name)
                for i in range(n + 1)
            )
    if not truncated:
        while len(levels) > 1 and not levels[-1]:
            levels.pop()
        dims = len(levels) - 1
    return LimitSimplicialSet(
        factors,
        components,
        levels,
        faces,
        dims=dims,
        truncated=truncated,
        coskeletal=_coskeletal(factors),
        name=name,
    )


def product(*factors: FiniteSimplicialSet) -> LimitSimplicialSet:
    """The product, computed levelwise and renormalized; legs are the projections."""
    if not factors:
        raise InputError("product needs at least one factor")
    name = " × ".join(f.label() for f in factors)
    logger.debug("building product %s", name)
    return _build_limit(
        factors,
        lambda n: list(itertools.product(*(f.formal_simplices(n) for f in factors))),
        name,
    )


def pullback(f: SimplicialMap, g: SimplicialMap) -> LimitSimplicialSet:
    """The pullback of ``f: A → C`` and ``g: B → C``; legs go to A and B."""
    if f.target != g.target:
        raise BoundaryMismatch("pullback needs a cospan with a common target")
    name = f"{f.source.label()} ×_{f.target.label()} {g.source.label()}"

    def tuples(n: int) -> List[Tuple[FormalSimplex, ...]]:
        grouped: Dict[FormalSimplex, List[FormalSimplex]] = {}
        for y in g.source.formal_simplices(n):
            grouped.setdefault(g(y), []).append(y)
        return [(x, y) for x in f.source.formal_simplices(n) for y in grouped.get(f(x), ())]

    result = _build_limit((f.source, g.source), tuples, name)
    result.cospan = (f, g)  # type: ignore[attr-defined]
    return result


def terminal() -> FiniteSimplicialSet:
    return standard_simplex(0)


def to_terminal(space: FiniteSimplicialSet) -> SimplicialMap:
    """The unique map ``space → Δ^0``."""
    point = standard_simplex(0)
    return SimplicialMap(space, point, {sid: FormalSimplex("0", (0,) * (space.dim(sid) + 1)) for sid in space.ids()})


def constant_map(space: FiniteSimplicialSet, target: FiniteSimplicialSet, vertex: str) -> SimplicialMap:
    return SimplicialMap(space, target, {sid: FormalSimplex(vertex, (0,) * (space.dim(sid) + 1)) for sid in space.ids()})


def point_map(target: FiniteSimplicialSet, vertex: str) -> SimplicialMap:
    """The element ``Δ^0 → target`` picking a vertex."""
    if vertex not in target or target.dim(vertex) != 0:
        raise InputError(f"{vertex!r} is not a vertex of {target.label()}")
    return SimplicialMap(standard_simplex(0), target, {"0": FormalSimplex.of(vertex, 0)})


def product_map(*maps: SimplicialMap) -> SimplicialMap:
    """``f × g`` between products built by :func:`product`."""
    source = product(*(m.source for m in maps))
    target = product(*(m.target for m in maps))
    legs = [compose(m, leg) for m, leg in zip(maps, source.legs)]
    return target.pair(*legs)


__all__ = [
    "LimitSimplicialSet",
    "Nerve",
    "boundary",
    "chain_simplex",
    "constant_map",
    "horn",
    "identity_op",
    "nerve",
    "point_map",
    "product",
    "product_map",
    "pullback",
    "simplex_map",
    "simplex_of",
    "standard_simplex",
    "terminal",
    "to_terminal",
    "top_simplex",
    "truncate",
]
