"""Named example instances and the acceptance suite run over them."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import partial
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Tuple

from cosmos.cat.bridge import nerve_bridge_checks
from cosmos.cat.category import (
    CatFunctor,
    FiniteCategory,
    NatTransform,
    boolean_lattice,
    chaotic,
    compose_functors,
    constant_functor,
    cyclic_group,
    discrete,
    empty_category,
    free_isomorphism,
    identity_functor,
    label,
    ordinal,
    poset,
    terminal_category,
)
from cosmos.cat.constructions import grothendieck_construction, product_category
from cosmos.cat.fibrations import (
    is_cartesian_fibration,
    is_cocartesian_fibration,
    is_groupoidal_cartesian_fibration,
)
from cosmos.cat.functors import find_isomorphism
from cosmos.cat.limits import limit_oracle
from cosmos.comma.characterizations import (
    check_adjunction_via_comma,
    check_limit,
    check_right_adjoint_preserves_limit,
)
from cosmos.comma.equivalence import Span, fibered_equivalence_search
from cosmos.comma.objects import check_smothering_comparison, comma
from cosmos.core.errors import CharacterizationDisagreement, CosmosError
from cosmos.core.models import Budget, Certificate, Status, Verdict
from cosmos.equipment.cells import (
    Frame,
    check_cartesian_cell,
    check_cocartesian_unit,
    check_companion_identities,
    companion_cells,
    enumerate_cells,
    identity_cell,
    restriction_cell,
    unit_cell,
    yoneda_bijection,
)
from cosmos.equipment.kan import (
    check_left_extension_2cat,
    check_right_extension_2cat,
    check_right_extension_of_modules,
    pointwise_lan,
    pointwise_ran,
    right_extension_of_modules,
)
from cosmos.equipment.modules import ModuleSpan, Profunctor, is_module, restrict_module, unit_module
from cosmos.htpy2cat.adjunctions import (
    AdjunctionData,
    check_adjunction,
    check_equivalence_2cat,
    compare_left_adjoints,
    compose_adjunctions,
    equivalence_as_adjunctions,
    find_adjunction,
    induced_adjunction_checks,
    promote_to_adjoint_equivalence,
    transport_left_adjoint,
)
from cosmos.htpy2cat.cells import is_invertible
from cosmos.htpy2cat.smothering import check_smothering, check_weak_cotensor
from cosmos.qcat.fibrations import is_kan, is_quasicategory
from cosmos.qcat.homotopy import composition_is_well_defined, homotopy_category
from cosmos.runtime import get_cat_cosmos, get_qcat_cosmos
from cosmos.sset.constructions import boundary, horn, nerve, product, standard_simplex
from cosmos.sset.exponential import exponential, transpose, untranspose
from cosmos.sset.search import find_isomorphism as find_simplicial_isomorphism
from cosmos.sset.search import iter_maps
from cosmos.sset.simplicial import FiniteSimplicialSet

logger = logging.getLogger(__name__)

KINDS = ("category", "space", "functor", "adjunction", "fibration", "diagram", "module")

YES, NO, UNKNOWN = Status.YES, Status.NO, Status.UNKNOWN


def monotone(source: FiniteCategory, target: FiniteCategory, values: Mapping[Any, Any], name: str = "") -> CatFunctor:
    """The functor between thin categories with the given object values."""
    arrows = {}
    for a in source.arrows:
        hom = target.hom(values[source.src(a)], values[source.tgt(a)])
        if len(hom) != 1:
            raise KeyError(f"No unique arrow for {label(a)} in {target.label()}")
        arrows[a] = hom[0]
    return CatFunctor(source, target, values, arrows, name=name).validate()


def _holds(condition: bool, reason: str, witness: Any = None) -> Verdict:
    if condition:
        return Verdict.yes(reason, witness, Certificate(exact=True))
    return Verdict.no(f"not {reason}", witness, Certificate(exact=True))


# -- library items -------------------------------------------------------------------------------


@dataclass(frozen=True)
class AdjointPair:
    """A left adjoint ``f`` with its right adjoint ``u``."""

    f: CatFunctor
    u: CatFunctor


@dataclass(frozen=True)
class Fibration:
    """An isofibration with the statuses it is known to have; ``None`` means not recorded."""

    p: CatFunctor
    cartesian: Status
    cocartesian: Optional[Status] = None
    groupoidal: Optional[Status] = None


@dataclass(frozen=True)
class Diagram:
    """A diagram ``d: J → A`` with its documented limit apex."""

    functor: CatFunctor
    limit: Optional[Any]

    @property
    def shape(self) -> FiniteCategory:
        return self.functor.source

    @property
    def target(self) -> FiniteCategory:
        return self.functor.target


@dataclass(frozen=True)
class ModuleExample:
    span: ModuleSpan
    expected: Status


# -- the suite ---------------------------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    """One acceptance check: a thunk producing a verdict and the status it must have."""

    name: str
    group: str
    expected: Status
    run: Callable[[], Verdict]


@dataclass(frozen=True)
class CheckResult:
    name: str
    group: str
    expected: Status
    actual: Optional[Status]
    reason: str

    @property
    def passed(self) -> bool:
        return self.actual is self.expected

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "group": self.group,
            "expected": self.expected.name,
            "actual": self.actual.name if self.actual is not None else "ERROR",
            "passed": self.passed,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class LibraryReport:
    results: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        groups: Dict[str, Dict[str, int]] = {}
        for r in self.results:
            counts = groups.setdefault(r.group, {"passed": 0, "failed": 0})
            counts["passed" if r.passed else "failed"] += 1
        return {
            "passed": self.passed,
            "total": len(self.results),
            "failed": len(self.failures),
            "groups": groups,
            "results": [r.to_dict() for r in self.results],
        }


class Library:
    """Registry of named categories, spaces, functors and the roles they play in the suite."""

    def __init__(self, populate: bool = True) -> None:
        self._items: Dict[str, Dict[str, Any]] = {kind: {} for kind in KINDS}
        if populate:
            self._populate()

    # -- registry ------------------------------------------------------------------------------

    def register(self, kind: str, name: str, item: Any) -> Any:
        if kind not in self._items:
            raise KeyError(f"Unknown library kind '{kind}'")
        self._items[kind][name] = item
        logger.debug("registered %s %s", kind, name)
        return item

    def get(self, kind: str, name: str) -> Any:
        if kind not in self._items:
            raise KeyError(f"Unknown library kind '{kind}'")
        try:
            return self._items[kind][name]
        except KeyError:
            raise KeyError(f"Unknown {kind} '{name}'") from None

    def names(self, kind: str) -> List[str]:
        if kind not in self._items:
            raise KeyError(f"Unknown library kind '{kind}'")
        return list(self._items[kind])

    def items(self, kind: str) -> List[Tuple[str, Any]]:
        return list(self._items[kind].items())

    def listing(self) -> Dict[str, List[str]]:
        return {kind: self.names(kind) for kind in KINDS}

    def validate(self) -> None:
        """Re-check every stored category, space and functor; raises :class:`InputError` naming the law."""
        for _, category in self.items("category"):
            category.validate()
        for _, space in self.items("space"):
            space.validate()
        for _, functor in self.items("functor"):
            functor.validate()

    # -- contents ------------------------------------------------------------------------------

    def _populate(self) -> None:
        K = get_cat_cosmos()
        c0, c1, c2, c3 = (self.register("category", f"[{n}]", ordinal(n)) for n in range(4))
        one = self.register("category", "1", terminal_category())
        empty = self.register("category", "∅", empty_category())
        iso = self.register("category", "Iso", free_isomorphism())
        z2 = self.register("category", "Z/2", cyclic_group(2))
        self.register("category", "Chaotic2", chaotic(["a", "b"]))
        lattice = self.register("category", "P(x,y)", boolean_lattice(["x", "y"]))
        pair = self.register("category", "Disc2", discrete(["l", "r"]))
        two = self.register("category", "Disc{a,b}", discrete(["a", "b"]))
        cospan = self.register("category", "Cospan", poset(["l", "m", "r"], lambda x, y: x == y or y == "m", name="Cospan"))
        square = self.register(
            "category",
            "[1]×[1]",
            poset([(0, 0), (0, 1), (1, 0), (1, 1)], lambda s, t: s[0] <= t[0] and s[1] <= t[1], name="[1]×[1]"),
        )
        doubled = self.register(
            "category",
            "Doubled",
            poset(["0", "1", "1'"], lambda x, y: x == y or x == "0" or (x != "0" and y != "0"), name="Doubled"),
        )

        for n in range(4):
            self.register("space", f"Δ^{n}", standard_simplex(n))
        self.register("space", "Λ^{2,1}", horn(2, 1)[0])
        self.register("space", "Λ^{3,1}", horn(3, 1)[0])
        self.register("space", "∂Δ^2", boundary(2)[0])
        for name in ("[1]", "[2]", "[3]", "Iso", "Z/2", "P(x,y)", "[1]×[1]"):
            self.register("space", f"N({name})", nerve(self.get("category", name)))

        functors = {
            "f": monotone(c1, c2, {0: 0, 1: 2}, "f"),
            "u": monotone(c2, c1, {0: 0, 1: 0, 2: 1}, "u"),
            "f′": monotone(c2, c3, {0: 0, 1: 1, 2: 3}, "f′"),
            "u′": monotone(c3, c2, {0: 0, 1: 1, 2: 1, 3: 2}, "u′"),
            "i": monotone(c1, c2, {0: 0, 1: 1}, "i"),
            "r": monotone(c2, c1, {0: 0, 1: 1, 2: 1}, "r"),
            "⊥": monotone(c0, c1, {0: 0}, "⊥"),
            "⊤": monotone(c0, c1, {0: 1}, "⊤"),
            "![1]": monotone(c1, c0, {0: 0, 1: 0}, "!"),
            "∨": monotone(square, c1, {x: max(x) for x in square.objects}, "∨"),
            "δ": monotone(c1, square, {x: (x, x) for x in c1.objects}, "δ"),
            "const0": monotone(c1, c1, {0: 0, 1: 0}, "const0"),
            "const1": monotone(c1, c1, {0: 1, 1: 1}, "const1"),
            "a": K.element(iso, "a"),
            "b": K.element(iso, "b"),
            "!Iso": K.to_terminal(iso),
            "embed": monotone(c1, doubled, {0: "0", 1: "1"}, "embed"),
            "collapse": monotone(doubled, c1, {"0": 0, "1": 1, "1'": 1}, "collapse"),
        }
        for name, functor in functors.items():
            self.register("functor", name, functor)

        adjunctions = {
            "galois": ("f", "u"),
            "bottom-bang": ("⊥", "![1]"),
            "bang-top": ("![1]", "⊤"),
            "inclusion-retraction": ("i", "r"),
            "join-diagonal": ("∨", "δ"),
            "galois-upper": ("f′", "u′"),
            "point-iso": ("a", "!Iso"),
        }
        self.register("adjunction", "identity", AdjointPair(identity_functor(c1), identity_functor(c1)))
        for name, (f, u) in adjunctions.items():
            self.register("adjunction", name, AdjointPair(functors[f], functors[u]))

        arrows1, arrows2 = K.arrow_object(c1), K.arrow_object(c2)
        total_f, proj_f = grothendieck_construction(c1, {0: c1, 1: c0}, {"0->1": monotone(c0, c1, {0: 1})}, name="∫F")
        total_d, proj_d = grothendieck_construction(
            c1,
            {0: two, 1: discrete(["c"])},
            {"0->1": monotone(discrete(["c"]), two, {"c": "a"})},
            name="∫D",
        )
        fibrations = {
            "p0 [1]^𝟚": Fibration(arrows1.ev0, YES, groupoidal=NO),
            "p1 [1]^𝟚": Fibration(arrows1.ev1, YES, cocartesian=YES),
            "p0 [2]^𝟚": Fibration(arrows2.ev0, YES, groupoidal=NO),
            "∫F": Fibration(proj_f, YES, groupoidal=NO),
            "∫D": Fibration(proj_d, YES, groupoidal=YES),
            "id [1]": Fibration(identity_functor(c1), YES, cocartesian=YES, groupoidal=YES),
            "[0] at 0": Fibration(monotone(c0, c1, {0: 0}), YES, cocartesian=NO),
            "[0] at 1": Fibration(monotone(c0, c1, {0: 1}), NO, cocartesian=YES),
            "Iso → 1": Fibration(K.to_terminal(iso), YES, cocartesian=YES, groupoidal=YES),
            "[1] → 1": Fibration(K.to_terminal(c1), YES, groupoidal=NO),
        }
        for name, fibration in fibrations.items():
            self.register("fibration", name, fibration)

        def nothing(target: FiniteCategory) -> CatFunctor:
            return CatFunctor(empty, target, {}, {})

        diagrams = {
            "empty in [1]": Diagram(nothing(c1), 1),
            "empty in P(x,y)": Diagram(nothing(lattice), "{x,y}"),
            "empty in Disc2": Diagram(nothing(pair), None),
            "empty in Z/2": Diagram(nothing(z2), None),
            "pair in P(x,y)": Diagram(monotone(pair, lattice, {"l": "{x}", "r": "{y}"}), "∅"),
            "pair in [2]": Diagram(monotone(pair, c2, {"l": 1, "r": 2}), 1),
            "pair in Disc{a,b}": Diagram(monotone(pair, two, {"l": "a", "r": "b"}), None),
            "cospan in P(x,y)": Diagram(monotone(cospan, lattice, {"l": "{x}", "m": "{x,y}", "r": "{y}"}), "∅"),
            "cospan in [2]": Diagram(monotone(cospan, c2, {"l": 0, "m": 2, "r": 1}), 0),
            "point in [1]": Diagram(monotone(one, c1, {"*": 1}), 1),
            "arrow in [2]": Diagram(monotone(c1, c2, {0: 0, 1: 2}), 0),
        }
        for name, diagram in diagrams.items():
            self.register("diagram", name, diagram)

        galois = self.get("adjunction", "galois")
        bang = K.to_terminal(c1)
        modules = {
            "arrow [1]": ModuleExample(ModuleSpan.of_comma(comma(K, identity_functor(c1), identity_functor(c1))), YES),
            "arrow [2]": ModuleExample(ModuleSpan.of_comma(comma(K, identity_functor(c2), identity_functor(c2))), YES),
            "comma f↓A": ModuleExample(ModuleSpan.of_comma(comma(K, galois.f, identity_functor(c2))), YES),
            "comma B↓u": ModuleExample(ModuleSpan.of_comma(comma(K, identity_functor(c1), galois.u)), YES),
            "comma f↓i": ModuleExample(ModuleSpan.of_comma(comma(K, galois.f, functors["i"])), YES),
            "identity [1]×[1]": ModuleExample(ModuleSpan(*_identity_span(c1, c1)), YES),
            "[1] → 1×1": ModuleExample(ModuleSpan(c1, bang, bang), NO),
        }
        for name, example in modules.items():
            self.register("module", name, example)

    # -- checks --------------------------------------------------------------------------------

    def checks(self) -> List[Check]:
        groups: Iterable[Callable[[], List[Check]]] = (
            self._foundation_checks,
            self._quasicategory_checks,
            self._homotopy_checks,
            self._adjunction_checks,
            self._smothering_checks,
            self._comma_checks,
            self._limit_checks,
            self._fibration_checks,
            self._equipment_checks,
            self._kan_checks,
            self._bridge_checks,
        )
        return [check for group in groups for check in group()]

    def run(self, group: Optional[str] = None) -> LibraryReport:
        """Validate the library, then run every check (or one group) in a fixed order."""
        self.validate()
        results = []
        for check in self.checks():
            if group is not None and check.group != group:
                continue
            try:
                verdict = check.run()
                results.append(CheckResult(check.name, check.group, check.expected, verdict.status, verdict.reason))
            except CharacterizationDisagreement:
                raise
            except CosmosError as exc:
                results.append(CheckResult(check.name, check.group, check.expected, None, str(exc)))
            logger.info("%s: %s", check.name, results[-1].to_dict()["actual"])
        return LibraryReport(tuple(results))

    def _foundation_checks(self) -> List[Check]:
        checks = [
            Check(
                f"nerve [{n}] ≅ Δ^{n}",
                "foundations",
                YES,
                partial(_isomorphic_spaces, nerve(ordinal(n)), standard_simplex(n)),
            )
            for n in range(5)
        ]
        checks += [
            Check(f"simplicial identities {name}", "foundations", YES, partial(_validates, space))
            for name, space in self.items("space")
        ]
        pairs = [("Δ^0", "Δ^1"), ("Δ^1", "Δ^1"), ("Δ^1", "Δ^2"), ("Δ^2", "Δ^1"), ("Δ^0", "N([2])")]
        for probe in range(3):
            for a, b in pairs:
                checks.append(
                    Check(
                        f"transposition Δ^{probe} against Fun({a}, {b})",
                        "foundations",
                        YES,
                        partial(_transposition, standard_simplex(probe), self.get("space", a), self.get("space", b)),
                    )
                )
        return checks

    def _quasicategory_checks(self) -> List[Check]:
        checks = [
            Check(f"quasi-category N({name})", "quasi-categories", YES, partial(_unique_fillers, self.get("space", f"N({name})")))
            for name in ("[1]", "[2]", "[3]", "Iso", "Z/2", "P(x,y)", "[1]×[1]")
        ]
        checks += [
            Check("quasi-category Λ^{2,1}", "quasi-categories", NO, partial(is_quasicategory, self.get("space", "Λ^{2,1}"))),
            Check("Kan N(Z/2)", "quasi-categories", YES, partial(is_kan, nerve(self.get("category", "Z/2"), dims=3), 3)),
            Check("Kan Δ^1", "quasi-categories", NO, partial(is_kan, self.get("space", "Δ^1"))),
            Check("Kan Δ^0", "quasi-categories", YES, partial(is_kan, self.get("space", "Δ^0"))),
            Check(
                "quasi-category search within a tiny budget",
                "quasi-categories",
                UNKNOWN,
                lambda: is_quasicategory(self.get("space", "N([3])"), budget=Budget(3)),
            ),
        ]
        return checks

    def _homotopy_checks(self) -> List[Check]:
        return [
            Check(f"h N({name}) ≅ {name}", "homotopy", YES, partial(_homotopy_recovers, self.get("category", name)))
            for name in ("[1]", "[2]", "[3]", "Iso", "Z/2", "P(x,y)", "Chaotic2")
        ]

    def _adjunction(self, name: str) -> AdjunctionData:
        pair = self.get("adjunction", name)
        adj = find_adjunction(get_cat_cosmos(), pair.f, pair.u)
        if adj is None:
            raise KeyError(f"No unit and counit for adjunction '{name}'")
        return adj

    def _adjunction_checks(self) -> List[Check]:
        K = get_cat_cosmos()
        checks = [Check(f"adjunction {name}", "adjunctions", YES, partial(_found_adjunction, pair)) for name, pair in self.items("adjunction")]

        def stacked() -> Verdict:
            return check_adjunction(compose_adjunctions(self._adjunction("galois"), self._adjunction("galois-upper")))

        def with_identity() -> Verdict:
            adj = self._adjunction("galois")
            composite = compose_adjunctions(self._adjunction("identity"), adj)
            same = composite.f == adj.f and composite.u == adj.u
            verdict = check_adjunction(composite)
            return verdict if same else Verdict.no("composing with the identity changed the functors")

        def promoted_point() -> Verdict:
            witness = check_equivalence_2cat(K, self.get("functor", "a")).witness
            adj = promote_to_adjoint_equivalence(K, self.get("functor", "a"), witness["inverse"], witness["unit"], witness["counit"])
            return check_adjunction(adj)

        def promoted_twist() -> Verdict:
            z2 = self.get("category", "Z/2")
            ident = identity_functor(z2)
            twist = K.cell(ident, ident, NatTransform(ident, ident, {"*": "g"}))
            return check_adjunction(promote_to_adjoint_equivalence(K, ident, ident, K.identity_cell(ident), twist))

        def promoted_unchanged() -> Verdict:
            embed, collapse = self.get("functor", "embed"), self.get("functor", "collapse")
            adj = find_adjunction(K, embed, collapse)
            if adj is None:
                return Verdict.no("embedding has no right adjoint")
            again = promote_to_adjoint_equivalence(K, embed, collapse, adj.eta, adj.epsilon)
            return _holds(again == adj, "unchanged by promotion", again)

        def twisted_counit() -> Verdict:
            ident = identity_functor(self.get("category", "Z/2"))
            twist = K.cell(ident, ident, NatTransform(ident, ident, {"*": "g"}))
            return check_adjunction(AdjunctionData(K, ident, ident, K.identity_cell(ident), twist))

        def transported() -> Verdict:
            a, b = self.get("functor", "a"), self.get("functor", "b")
            theta = K.cell(a, b, NatTransform(a, b, {"*": "f"}))
            return check_adjunction(transport_left_adjoint(self._adjunction("point-iso"), theta))

        def compared() -> Verdict:
            other = find_adjunction(K, self.get("functor", "b"), self.get("functor", "!Iso"))
            cell = compare_left_adjoints(self._adjunction("point-iso"), other)
            return _holds(is_invertible(cell), "an invertible comparison of left adjoints", cell)

        def both_ways() -> Verdict:
            left, right = equivalence_as_adjunctions(K, self.get("functor", "a"))
            return _holds(check_adjunction(left).is_yes and check_adjunction(right).is_yes, "adjoint both ways")

        checks += [
            Check("composite of stacked Galois connections", "adjunctions", YES, stacked),
            Check("composite with the identity adjunction", "adjunctions", YES, with_identity),
            Check("promoted point of Iso", "adjunctions", YES, promoted_point),
            Check("promoted twisted counit on Z/2", "adjunctions", YES, promoted_twist),
            Check("promotion leaves an adjoint equivalence unchanged", "adjunctions", YES, promoted_unchanged),
            Check("twisted counit on Z/2", "adjunctions", NO, twisted_counit),
            Check("transport along an invertible 2-cell", "adjunctions", YES, transported),
            Check("left adjoints of one functor are isomorphic", "adjunctions", YES, compared),
            Check("equivalence as adjunctions", "adjunctions", YES, both_ways),
            Check(
                "galois under hom([1], -)",
                "adjunctions",
                YES,
                lambda: induced_adjunction_checks(self._adjunction("galois"), self.get("category", "[1]")),
            ),
            Check(
                "galois under (-)^[1]",
                "adjunctions",
                YES,
                lambda: induced_adjunction_checks(self._adjunction("galois"), self.get("category", "[1]"), "cotensor"),
            ),
            Check(
                "identity under hom(Iso, -)",
                "adjunctions",
                YES,
                lambda: induced_adjunction_checks(self._adjunction("identity"), self.get("category", "Iso")),
            ),
        ]
        return checks

    def _smothering_checks(self) -> List[Check]:
        K = get_cat_cosmos()
        checks = []
        for probe in ("1", "[1]"):
            X = self.get("category", probe)
            for name in ("[1]", "[2]", "Iso", "Z/2"):
                A = self.get("category", name)
                checks.append(Check(f"weak cotensor {name} at {probe}", "smothering", YES, partial(check_weak_cotensor, K, X, A)))
                checks.append(
                    Check(
                        f"comma comparison {name} at {probe}",
                        "smothering",
                        YES,
                        partial(lambda X, A: check_smothering_comparison(X, comma(K, identity_functor(A), identity_functor(A))), X, A),
                    )
                )
        checks += [
            Check("inclusion [0] → [1]", "smothering", NO, partial(check_smothering, self.get("fibration", "[0] at 0").p)),
            Check(
                "weak cotensor Δ^2 at Δ^0 in qCat",
                "smothering",
                YES,
                lambda: check_weak_cotensor(get_qcat_cosmos(), standard_simplex(0), standard_simplex(2)),
            ),
        ]
        return checks

    def _comma_checks(self) -> List[Check]:
        K = get_cat_cosmos()
        checks = []
        for name, pair in self.items("adjunction"):
            checks.append(Check(f"fibered equivalence of commas {name}", "commas", YES, partial(_commas_equivalent, pair)))
            checks.append(Check(f"adjunction via commas {name}", "commas", YES, partial(check_adjunction_via_comma, K, pair.f, pair.u)))
        c1 = self.get("category", "[1]")
        galois = self.get("adjunction", "galois")
        checks += [
            Check(
                "adjunction via commas const0, id",
                "commas",
                NO,
                partial(check_adjunction_via_comma, K, self.get("functor", "const0"), identity_functor(c1)),
            ),
            Check(
                "comma f↓[2] has four objects",
                "commas",
                YES,
                lambda: _holds(len(comma(K, galois.f, identity_functor(galois.f.target)).apex.objects) == 4, "four objects"),
            ),
        ]
        return checks

    def _limit_checks(self) -> List[Check]:
        K = get_cat_cosmos()
        checks = []
        for name, diagram in self.items("diagram"):
            checks.append(Check(f"limit oracle {name}", "limits", YES, partial(_oracle_matches, diagram)))
            found = limit_oracle(diagram.functor)
            for x in diagram.target.objects:
                expected = YES if found is not None and diagram.target.isomorphic(found[0], x) else NO
                checks.append(Check(f"limit {name} at {label(x)}", "limits", expected, partial(_limit_at, diagram, x)))
        for adj_name, pair in self.items("adjunction"):
            for name, diagram in self.items("diagram"):
                if diagram.target != pair.u.source or diagram.limit is None:
                    continue
                checks.append(
                    Check(
                        f"right adjoint of {adj_name} preserves the limit of {name}",
                        "limits",
                        YES,
                        partial(lambda adj_name, diagram: _preserved(self._adjunction(adj_name), diagram), adj_name, diagram),
                    )
                )
        return checks

    def _fibration_checks(self) -> List[Check]:
        checks = []
        for name, fibration in self.items("fibration"):
            checks.append(Check(f"cartesian {name}", "fibrations", fibration.cartesian, partial(is_cartesian_fibration, fibration.p)))
            if fibration.cocartesian is not None:
                checks.append(
                    Check(f"cocartesian {name}", "fibrations", fibration.cocartesian, partial(is_cocartesian_fibration, fibration.p))
                )
            if fibration.groupoidal is not None:
                checks.append(
                    Check(
                        f"groupoidal cartesian {name}",
                        "fibrations",
                        fibration.groupoidal,
                        partial(is_groupoidal_cartesian_fibration, fibration.p),
                    )
                )
        return checks

    def _equipment_checks(self) -> List[Check]:
        K = get_cat_cosmos()
        c1, c2, one = (self.get("category", n) for n in ("[1]", "[2]", "1"))
        galois = self.get("adjunction", "galois")
        at0, at1 = K.element(c1, 0), K.element(c1, 1)
        checks = [Check(f"module {name}", "equipment", example.expected, partial(is_module, example.span)) for name, example in self.items("module")]

        def restricted() -> Verdict:
            span = restrict_module(self.get("module", "arrow [1]").span, at1, at0)
            return _holds(len(span.apex.objects) == 1, "a single element", span.describe())

        def empty_into_unit() -> Verdict:
            nothing = Profunctor(one, one, {}, _no_action, _no_action, name="∅")
            frame_cell = next(enumerate_cells(Frame((nothing,), unit_module(c1), at1, at0)))
            return check_cartesian_cell(frame_cell)

        checks += [
            Check("restriction of arrow [1] to (1, 0)", "equipment", YES, restricted),
            Check("cartesian restriction of [1]^𝟚 to (1, 0)", "equipment", YES, lambda: check_cartesian_cell(restriction_cell(unit_module(c1), at1, at0))),
            Check(
                "cartesian restriction of [1]^𝟚 along identities",
                "equipment",
                YES,
                lambda: check_cartesian_cell(restriction_cell(unit_module(c1), identity_functor(c1), identity_functor(c1))),
            ),
            Check("cartesian identity cell of [2]^𝟚", "equipment", YES, lambda: check_cartesian_cell(identity_cell(unit_module(c2)))),
            Check("cartesian companion restriction of f", "equipment", YES, lambda: check_cartesian_cell(companion_cells(galois.f)[1])),
            Check("cartesian cell out of the empty module", "equipment", NO, empty_into_unit),
            Check("cocartesian unit of [1]", "equipment", YES, lambda: check_cocartesian_unit(unit_cell(c1))),
            Check("cocartesian unit of 1", "equipment", YES, lambda: check_cocartesian_unit(unit_cell(one))),
            Check("cocartesian unit of Z/2", "equipment", YES, lambda: check_cocartesian_unit(unit_cell(self.get("category", "Z/2")))),
            Check("nullary cell into a non-unit module", "equipment", NO, partial(_chaotic_unit, self.get("category", "Disc{a,b}"))),
            Check("companion and conjoint identities of f", "equipment", YES, partial(check_companion_identities, galois.f)),
            Check("companion and conjoint identities of u", "equipment", YES, partial(check_companion_identities, galois.u)),
        ]
        pairs = [
            ("id, id on [1]", identity_functor(c1), identity_functor(c1), 1),
            ("const0, const1", self.get("functor", "const0"), self.get("functor", "const1"), 1),
            ("const1, const0", self.get("functor", "const1"), self.get("functor", "const0"), 0),
            ("i, f", self.get("functor", "i"), galois.f, 1),
            ("a, b", self.get("functor", "a"), self.get("functor", "b"), 1),
        ]
        for name, f, g, count in pairs:
            checks.append(Check(f"yoneda bijection {name}", "equipment", YES, partial(_yoneda_counts, f, g, count)))
        return checks

    def _kan_checks(self) -> List[Check]:
        K = get_cat_cosmos()
        c1, one = self.get("category", "[1]"), self.get("category", "1")
        lattice = self.get("category", "P(x,y)")
        galois = self.get("adjunction", "galois")
        at1 = K.element(c1, 1)
        at_x = K.element(lattice, "{x}")
        instances = {
            "constant along 1 → [1]": (at1, at_x, {0: "{x}", 1: "{x}"}),
            "along the identity": (identity_functor(c1), galois.f, dict(galois.f.on_objects)),
            "galois left adjoint along itself": (galois.f, identity_functor(c1), dict(galois.u.on_objects)),
        }
        for name in ("pair in P(x,y)", "empty in [1]", "cospan in [2]", "arrow in [2]"):
            diagram = self.get("diagram", name)
            instances[f"limit of {name} along !"] = (K.to_terminal(diagram.shape), diagram.functor, {"*": diagram.limit})
        checks = [Check(f"pointwise right extension {name}", "kan", YES, partial(_ran_matches, k, f, values)) for name, (k, f, values) in instances.items()]

        def perturbed() -> Verdict:
            wrong = constant_functor(c1, lattice, "∅")
            nu = NatTransform(compose_functors(wrong, at1), at_x, {"*": "∅->{x}"})
            return check_right_extension_2cat(wrong, nu, at_x, at1)

        def left_extension() -> Verdict:
            diagram = self.get("diagram", "pair in P(x,y)")
            k = K.to_terminal(diagram.shape)
            l, lam = pointwise_lan(k, diagram.functor)
            if l("*") != "{x,y}":
                return Verdict.no(f"colimit computed as {label(l('*'))}")
            return check_left_extension_2cat(l, lam, diagram.functor, k)

        def modules_along_unit() -> Verdict:
            F = unit_module(c1)
            R, nu = right_extension_of_modules(F, unit_module(c1))
            if R.sizes() != F.sizes():
                return Verdict.no("extension along the unit changed the sizes", R.describe())
            return check_right_extension_of_modules(nu)

        checks += [
            Check("perturbed extension along 1 → [1]", "kan", NO, perturbed),
            Check("pointwise left extension of pair in P(x,y)", "kan", YES, left_extension),
            Check("right extension of modules along the unit", "kan", YES, modules_along_unit),
        ]
        return checks

    def _bridge_checks(self) -> List[Check]:
        c1 = self.get("category", "[1]")
        checks = []
        for name in ("galois", "identity", "bottom-bang", "bang-top", "inclusion-retraction"):
            pair = self.get("adjunction", name)
            checks.append(Check(f"nerve preserves adjunction {name}", "bridge", YES, partial(nerve_bridge_checks, "adjunction", pair.f, pair.u)))
        galois = self.get("adjunction", "galois")
        checks += [
            Check("nerve preserves comma id↓id on [1]", "bridge", YES, partial(nerve_bridge_checks, "comma", identity_functor(c1), identity_functor(c1))),
            Check("nerve preserves comma f↓[2]", "bridge", YES, partial(nerve_bridge_checks, "comma", galois.f, identity_functor(galois.f.target))),
            Check("nerve preserves the terminal element of [1]", "bridge", YES, partial(nerve_bridge_checks, "terminal", c1, 1)),
        ]
        for name in ("p0 [1]^𝟚", "∫F", "[0] at 0"):
            checks.append(
                Check(f"nerve preserves isofibration {name}", "bridge", YES, partial(nerve_bridge_checks, "isofibration", self.get("fibration", name).p))
            )
        return checks


# -- check bodies ----------------------------------------------------------------------------------


def _identity_span(A: FiniteCategory, B: FiniteCategory) -> Tuple[FiniteCategory, CatFunctor, CatFunctor]:
    apex, (to_a, to_b) = product_category(A, B)
    return apex, to_a, to_b


def _no_action(*args: Any) -> Any:
    raise KeyError("Empty module has no elements to act on")


def _chaotic_unit(category: FiniteCategory) -> Verdict:
    """A nullary cell with identity verticals into the terminal module, which is not the unit."""
    objects = category.objects
    terminal = Profunctor(
        category,
        category,
        {(a, b): ("*",) for a in objects for b in objects},
        lambda u, x: (category.tgt(u), x[1], "*"),
        lambda x, v: (x[0], category.src(v), "*"),
        name="T",
    )
    ident = identity_functor(category)
    iota = next(enumerate_cells(Frame((), terminal, ident, ident, base=category)))
    return check_cocartesian_unit(iota, modules=(terminal, unit_module(category)))


def _isomorphic_spaces(source: FiniteSimplicialSet, target: FiniteSimplicialSet) -> Verdict:
    iso = find_simplicial_isomorphism(source, target)
    return _holds(iso is not None, f"{source.label()} ≅ {target.label()}", iso)


def _validates(space: FiniteSimplicialSet) -> Verdict:
    space.validate()
    return Verdict.yes("simplicial identities hold", space.counts(), Certificate(exact=True))


def _transposition(probe: FiniteSimplicialSet, A: FiniteSimplicialSet, B: FiniteSimplicialSet) -> Verdict:
    """Maps ``X × A → B`` and ``X → Fun(A, B)`` correspond through transpose and untranspose."""
    fun = exponential(A, B, max(probe.dims, 1))
    left = list(iter_maps(product(probe, A), B))
    right = list(iter_maps(probe, fun))
    if len(left) != len(right):
        return Verdict.no("different numbers of maps", {"product": len(left), "function complex": len(right)})
    for f in left:
        g = transpose(f, fun)
        if untranspose(g, fun) != f or g not in right:
            return Verdict.no("transposition is not inverse to untransposition", f)
    return Verdict.yes(f"bijection on {len(left)} maps", None, Certificate(dims=fun.dims, exact=True))


def _unique_fillers(space: FiniteSimplicialSet) -> Verdict:
    verdict = is_quasicategory(space)
    if verdict.is_yes and "inner fillers unique" not in verdict.certificate.notes:
        return Verdict.no("inner fillers are not unique", None, verdict.certificate)
    return verdict


def _homotopy_recovers(category: FiniteCategory) -> Verdict:
    h = homotopy_category(nerve(category))
    iso = find_isomorphism(category, h)
    return _holds(iso is not None and composition_is_well_defined(h), f"h N({category.label()}) ≅ {category.label()}", iso)


def _found_adjunction(pair: AdjointPair) -> Verdict:
    adj = find_adjunction(get_cat_cosmos(), pair.f, pair.u)
    if adj is None:
        return Verdict.no(f"no unit and counit make {pair.f.label()} ⊣ {pair.u.label()}")
    return check_adjunction(adj)


def _commas_equivalent(pair: AdjointPair) -> Verdict:
    K = get_cat_cosmos()
    left = comma(K, pair.f, K.identity(pair.f.target))
    right = comma(K, K.identity(pair.f.source), pair.u)
    return fibered_equivalence_search(Span.of_comma(left), Span.of_comma(right))


def _diagram_element(diagram: Diagram) -> CatFunctor:
    K = get_cat_cosmos()
    return K.element(K.cotensor(diagram.shape, diagram.target), diagram.functor)


def _oracle_matches(diagram: Diagram) -> Verdict:
    found = limit_oracle(diagram.functor)
    if found is None:
        return _holds(diagram.limit is None, "without a limit")
    return _holds(diagram.limit is not None and diagram.target.isomorphic(found[0], diagram.limit), f"limit {label(found[0])}")


def _limit_at(diagram: Diagram, x: Any) -> Verdict:
    K = get_cat_cosmos()
    return check_limit(K, diagram.shape, _diagram_element(diagram), K.element(diagram.target, x))


def _preserved(adj: AdjunctionData, diagram: Diagram) -> Verdict:
    K = get_cat_cosmos()
    return check_right_adjoint_preserves_limit(adj, diagram.shape, _diagram_element(diagram), K.element(diagram.target, diagram.limit))


def _ran_matches(k: CatFunctor, f: CatFunctor, values: Mapping[Any, Any]) -> Verdict:
    r, nu = pointwise_ran(k, f)
    wrong = {label(b): label(r(b)) for b in k.target.objects if not f.target.isomorphic(r(b), values[b])}
    if wrong:
        return Verdict.no("unexpected values of the extension", wrong)
    return check_right_extension_2cat(r, nu, f, k)


def _yoneda_counts(f: CatFunctor, g: CatFunctor, count: int) -> Verdict:
    verdict = yoneda_bijection(f, g)
    if verdict.is_yes and verdict.witness["two_cells"] != count:
        return Verdict.no(f"expected {count} 2-cells", verdict.witness, verdict.certificate)
    return verdict


__all__ = [
    "AdjointPair",
    "Check",
    "CheckResult",
    "Diagram",
    "Fibration",
    "KINDS",
    "Library",
    "LibraryReport",
    "ModuleExample",
    "monotone",
]
