"""Finite simplicial sets presented by nondegenerate simplices and face data."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from cosmos.core.errors import BoundaryMismatch, InputError, TruncationError

Operator = Tuple[int, ...]


def compose_ops(outer: Operator, inner: Operator) -> Operator:
    """Composite ``outer ∘ inner`` of monotone maps written as value tuples."""
    return tuple(outer[i] for i in inner)


@lru_cache(maxsize=None)
def identity_op(n: int) -> Operator:
    return tuple(range(n + 1))


@lru_cache(maxsize=None)
def face_op(n: int, i: int) -> Operator:
    """The coface map [n-1] → [n] that skips ``i``."""
    return tuple(j if j < i else j + 1 for j in range(n))


@lru_cache(maxsize=None)
def degeneracy_op(n: int, j: int) -> Operator:
    """The codegeneracy map [n+1] → [n] that repeats ``j``."""
    return tuple(k if k <= j else k - 1 for k in range(n + 2))


def epi_mono(theta: Operator) -> Tuple[Operator, Operator]:
    """Factor a monotone map as a surjection followed by an injection."""
    image = sorted(set(theta))
    position = {v: i for i, v in enumerate(image)}
    return tuple(position[v] for v in theta), tuple(image)


def degeneracy_indices(sigma: Operator) -> Tuple[int, ...]:
    """Eilenberg-Zilber word of a surjection, in strictly decreasing order."""
    return tuple(j for j in range(len(sigma) - 2, -1, -1) if sigma[j] == sigma[j + 1])


def surjection_from_word(word: Sequence[int], base_dim: int) -> Operator:
    """Inverse of :func:`degeneracy_indices`; rejects words not in normal form."""
    if any(a <= b for a, b in zip(word, word[1:])):
        raise InputError(f"degeneracy word {list(word)} is not strictly decreasing", law="normal form")
    sigma = identity_op(base_dim)
    dim = base_dim
    for j in reversed(word):
        if not 0 <= j <= dim:
            raise InputError(f"degeneracy s{j} applied in dimension {dim}", law="normal form")
        sigma = compose_ops(sigma, degeneracy_op(dim, j))
        dim += 1
    return sigma


@lru_cache(maxsize=None)
def surjections(n: int, m: int) -> Tuple[Operator, ...]:
    """All monotone surjections [n] → [m] in lexicographic order."""
    if m < 0 or m > n:
        return ()
    result = []
    for repeats in itertools.combinations(range(n), n - m):
        sigma = [0]
        for j in range(n):
            sigma.append(sigma[-1] + (0 if j in repeats else 1))
        result.append(tuple(sigma))
    return tuple(sorted(result))


@lru_cache(maxsize=None)
def injections(k: int, n: int) -> Tuple[Operator, ...]:
    """All monotone injections [k] → [n]."""
    return tuple(itertools.combinations(range(n + 1), k + 1))


def _is_surjection(sigma: Operator) -> bool:
    return bool(sigma) and sigma[0] == 0 and all(b - a in (0, 1) for a, b in zip(sigma, sigma[1:]))


@dataclass(frozen=True, slots=True)
class FormalSimplex:
    """A nondegenerate simplex ``base`` pulled back along a surjection ``sigma``."""

    base: str
    sigma: Operator

    @classmethod
    def of(cls, base: str, dim: int) -> FormalSimplex:
        return cls(base, identity_op(dim))

    @classmethod
    def from_word(cls, base: str, base_dim: int, word: Sequence[int]) -> FormalSimplex:
        return cls(base, surjection_from_word(word, base_dim))

    @property
    def dim(self) -> int:
        return len(self.sigma) - 1

    @property
    def base_dim(self) -> int:
        return self.sigma[-1]

    @property
    def degens(self) -> Tuple[int, ...]:
        return degeneracy_indices(self.sigma)

    @property
    def is_degenerate(self) -> bool:
        return self.dim != self.base_dim

    def label(self) -> str:
        if not self.is_degenerate:
            return self.base
        return "".join(f"s{j}" for j in self.degens) + f"({self.base})"

    def describe(self) -> Dict[str, Any]:
        return {"base": self.base, "degens": list(self.degens)}

    def __str__(self) -> str:
        return self.label()


class FiniteSimplicialSet:
    """A simplicial set stored by its nondegenerate simplices, possibly truncated.

    ``faces[x][i]`` is the formal simplex ``d_i x``.  A truncated set stores every
    simplex up to ``dims``; ``coskeletal`` records a level ``k`` such that the set
    is ``k``-coskeletal, which makes maps into it decidable from stored data.
    """

    def __init__(
        self,
        simplices: Sequence[Sequence[str]],
        faces: Mapping[str, Sequence[FormalSimplex]],
        *,
        dims: Optional[int] = None,
        truncated: bool = False,
        coskeletal: Optional[int] = None,
        name: str = "",
    ) -> None:
        levels = [tuple(level) for level in simplices]
        while len(levels) > 1 and not levels[-1] and dims is None:
            levels.pop()
        if dims is None:
            dims = max(len(levels) - 1, 0)
        if any(levels[n] for n in range(dims + 1, len(levels))):
            raise InputError(f"simplices stored above dims={dims}", law="dimension bound")
        levels = levels[: dims + 1]
        while len(levels) < dims + 1:
            levels.append(())
        self.simplices: Tuple[Tuple[str, ...], ...] = tuple(levels)
        self.dims = dims
        self.truncated = truncated
        self.coskeletal = coskeletal
        self.name = name
        self._faces: Dict[str, Tuple[FormalSimplex, ...]] = {sid: tuple(fs) for sid, fs in faces.items()}
        self._dim: Dict[str, int] = {}
        self._index: Dict[str, Tuple[int, int]] = {}
        for n, level in enumerate(self.simplices):
            for i, sid in enumerate(level):
                if sid in self._dim:
                    raise InputError(f"duplicate simplex identifier {sid!r}", law="unique identifiers")
                self._dim[sid] = n
                self._index[sid] = (n, i)
        self._act_cache: Dict[Tuple[str, Operator, Operator], FormalSimplex] = {}
        self._formal_cache: Dict[int, Tuple[FormalSimplex, ...]] = {}
        self._boundary_index: Dict[int, Dict[Tuple[FormalSimplex, ...], Tuple[FormalSimplex, ...]]] = {}
        self._hash: Optional[int] = None

    # -- basic data ---------------------------------------------------------------

    @property
    def is_complete(self) -> bool:
        return not self.truncated

    @property
    def top_dim(self) -> int:
        """Highest dimension holding a nondegenerate simplex (-1 when empty)."""
        for n in range(self.dims, -1, -1):
            if self.simplices[n]:
                return n
        return -1

    def nondegenerate(self, n: int) -> Tuple[str, ...]:
        if n < 0:
            return ()
        if n > self.dims:
            if self.truncated:
                raise TruncationError(f"{self.label()} is stored only up to dimension {self.dims}")
            return ()
        return self.simplices[n]

    def count(self, n: int) -> int:
        return len(self.nondegenerate(n))

    def counts(self) -> Tuple[int, ...]:
        return tuple(len(level) for level in self.simplices)

    def ids(self) -> Iterator[str]:
        for level in self.simplices:
            yield from level

    def __contains__(self, sid: object) -> bool:
        return sid in self._dim

    def dim(self, sid: str) -> int:
        return self._dim[sid]

    def index(self, sid: str) -> Tuple[int, int]:
        return self._index[sid]

    def formal(self, sid: str) -> FormalSimplex:
        return FormalSimplex.of(sid, self._dim[sid])

    def key(self, x: FormalSimplex) -> Tuple[int, Tuple[int, int], Operator]:
        """Canonical sort key: (dimension, creation index of the base, degeneracy)."""
        return (x.dim, self._index[x.base], x.sigma)

    def face(self, sid: str, i: int) -> FormalSimplex:
        return self._faces[sid][i]

    def faces(self, sid: str) -> Tuple[FormalSimplex, ...]:
        return self._faces.get(sid, ())

    def raw_faces(self) -> Mapping[str, Tuple[FormalSimplex, ...]]:
        return self._faces

    def label(self) -> str:
        return self.name or f"sSet{self.counts()}"

    # -- simplicial operators ---------------------------------------------------

    def act(self, x: FormalSimplex, theta: Operator) -> FormalSimplex:
        """Apply the simplicial operator ``theta: [k] → [n]`` to an n-simplex."""
        cache_key = (x.base, x.sigma, theta)
        cached = self._act_cache.get(cache_key)
        if cached is not None:
            return cached
        epi, mono = epi_mono(compose_ops(x.sigma, theta))
        restricted = self._restrict(x.base, mono)
        result = FormalSimplex(restricted.base, compose_ops(restricted.sigma, epi))
        self._act_cache[cache_key] = result
        return result

    def _restrict(self, sid: str, mono: Operator) -> FormalSimplex:
        n = self._dim[sid]
        if len(mono) == n + 1:
            return FormalSimplex.of(sid, n)
        missing = max(set(range(n + 1)) - set(mono))
        rest = tuple(v if v < missing else v - 1 for v in mono)
        return self.act(self._faces[sid][missing], rest)

    def face_of(self, x: FormalSimplex, i: int) -> FormalSimplex:
        return self.act(x, face_op(x.dim, i))

    def boundary(self, x: FormalSimplex) -> Tuple[FormalSimplex, ...]:
        if x.dim == 0:
            return ()
        return tuple(self.face_of(x, i) for i in range(x.dim + 1))

    def degeneracy(self, x: FormalSimplex, j: int) -> FormalSimplex:
        return self.act(x, degeneracy_op(x.dim, j))

    def vertices(self, x: FormalSimplex) -> Tuple[str, ...]:
        return tuple(self.act(x, (t,)).base for t in range(x.dim + 1))

    def formal_simplices(self, n: int) -> Tuple[FormalSimplex, ...]:
        """Every n-simplex, degenerate ones included, in canonical order."""
        cached = self._formal_cache.get(n)
        if cached is not None:
            return cached
        if n > self.dims and self.truncated:
            raise TruncationError(f"{self.label()} is stored only up to dimension {self.dims}")
        result: List[FormalSimplex] = []
        for m in range(0, min(n, self.dims) + 1):
            for sid in self.simplices[m]:
                for sigma in surjections(n, m):
                    result.append(FormalSimplex(sid, sigma))
        cached = tuple(result)
        self._formal_cache[n] = cached
        return cached

    def simplices_with_boundary(self, n: int) -> Dict[Tuple[FormalSimplex, ...], Tuple[FormalSimplex, ...]]:
        """Index of the n-simplices by their tuple of faces."""
        cached = self._boundary_index.get(n)
        if cached is not None:
            return cached
        grouped: Dict[Tuple[FormalSimplex, ...], List[FormalSimplex]] = {}
        for x in self.formal_simplices(n):
            grouped.setdefault(self.boundary(x), []).append(x)
        index = {faces: tuple(xs) for faces, xs in grouped.items()}
        self._boundary_index[n] = index
        return index

    # -- validation -----------------------------------------------------------------

    def validate(self) -> FiniteSimplicialSet:
        """Check face data and the simplicial identities; raise :class:`InputError`."""
        for sid in self._faces:
            if sid not in self._dim:
                raise InputError(f"faces given for unknown simplex {sid!r}", law="stored faces")
        for n, level in enumerate(self.simplices):
            for sid in level:
                faces = self._faces.get(sid, ())
                if n == 0:
                    if faces:
                        raise InputError(f"vertex {sid!r} has faces", law="face count")
                    continue
                if len(faces) != n + 1:
                    raise InputError(f"{sid!r} has {len(faces)} faces, expected {n + 1}", law="face count")
                for i, face in enumerate(faces):
                    if not _is_surjection(face.sigma) or face.dim != n - 1:
                        raise InputError(f"face d{i} of {sid!r} is not an {n - 1}-simplex", law="face dimension")
                    if face.base not in self._dim or self._dim[face.base] != face.base_dim:
                        raise InputError(f"face d{i} of {sid!r} names unstored simplex {face.base!r}", law="stored faces")
        for n in range(2, self.dims + 1):
            for sid in self.simplices[n]:
                x = self.formal(sid)
                for j in range(n + 1):
                    for i in range(j):
                        lhs = self.face_of(self.face_of(x, j), i)
                        rhs = self.face_of(self.face_of(x, i), j - 1)
                        if lhs != rhs:
                            raise InputError(
                                f"d{i}d{j} != d{j - 1}d{i} on {sid!r}: {lhs.label()} vs {rhs.label()}",
                                law="simplicial identity",
                            )
        return self

    # -- identity ---------------------------------------------------------------------

    def _structure(self) -> Tuple[Any, ...]:
        faces = tuple((sid, self._faces.get(sid, ())) for sid in self.ids())
        return (self.simplices, faces, self.dims, self.truncated)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteSimplicialSet):
            return NotImplemented
        return hash(self) == hash(other) and self._structure() == other._structure()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._structure())
        return self._hash

    def __repr__(self) -> str:
        flag = f", truncated at {self.dims}" if self.truncated else ""
        return f"FiniteSimplicialSet({self.label()}{flag})"

    def describe(self) -> Dict[str, Any]:
        return {
            "dims": self.dims,
            "truncated": self.truncated,
            "simplices": [list(level) for level in self.simplices],
            "faces": {sid: [f.describe() for f in faces] for sid, faces in self._faces.items() if faces},
        }


class SimplicialMap:
    """A map given on nondegenerate source simplices by formal target simplices."""

    def __init__(
        self,
        source: FiniteSimplicialSet,
        target: FiniteSimplicialSet,
        assignment: Mapping[str, FormalSimplex],
        name: str = "",
    ) -> None:
        self.source = source
        self.target = target
        self.assignment: Dict[str, FormalSimplex] = dict(assignment)
        self.name = name
        self._key = tuple((sid, self.assignment[sid]) for sid in source.ids() if sid in self.assignment)

    def __call__(self, x: FormalSimplex) -> FormalSimplex:
        try:
            image = self.assignment[x.base]
        except KeyError as exc:
            raise TruncationError(f"map {self.label()} is not defined on {x.base!r}") from exc
        return FormalSimplex(image.base, compose_ops(image.sigma, x.sigma))

    def on(self, sid: str) -> FormalSimplex:
        return self.assignment[sid]

    def key(self) -> Tuple[Tuple[str, FormalSimplex], ...]:
        return self._key

    def label(self) -> str:
        if self.name:
            return self.name
        return "{" + ", ".join(f"{sid}↦{img.label()}" for sid, img in self._key if self.source.dim(sid) == 0) + "}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return self._key == other._key and self.source == other.source and self.target == other.target

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"SimplicialMap({self.source.label()} → {self.target.label()}: {self.label()})"

    def describe(self) -> Dict[str, Any]:
        return {sid: img.label() for sid, img in self._key}

    def defined_dims(self) -> int:
        """Highest source dimension on which the map must be defined."""
        if self.target.truncated:
            return min(self.source.dims, self.target.dims)
        return self.source.dims

    def validate(self) -> SimplicialMap:
        """Check totality, dimensions and compatibility with faces."""
        top = self.defined_dims()
        for n in range(top + 1):
            for sid in self.source.nondegenerate(n):
                image = self.assignment.get(sid)
                if image is None:
                    raise InputError(f"map undefined on {sid!r}", law="totality")
                if image.dim != n or image.base not in self.target or self.target.dim(image.base) != image.base_dim:
                    raise InputError(f"{sid!r} sent to {image.label()} of wrong dimension", law="dimension")
                for i, face in enumerate(self.source.faces(sid)):
                    if self(face) != self.target.face_of(image, i):
                        raise InputError(f"map does not commute with d{i} on {sid!r}", law="face compatibility")
        return self


def identity_map(space: FiniteSimplicialSet) -> SimplicialMap:
    return SimplicialMap(space, space, {sid: space.formal(sid) for sid in space.ids()})


def compose(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """The composite ``g ∘ f``."""
    if f.target != g.source:
        raise BoundaryMismatch(f"cannot compose {g.label()} after {f.label()}: target and source differ")
    assignment = {sid: g(img) for sid, img in f.assignment.items() if img.base in g.assignment}
    return SimplicialMap(f.source, g.target, assignment)


def compose_all(maps: Iterable[SimplicialMap]) -> SimplicialMap:
    """Compose a chain written left to right as g, f, ... meaning g ∘ f ∘ ..."""
    chain = list(maps)
    result = chain[-1]
    for g in reversed(chain[:-1]):
        result = compose(g, result)
    return result
