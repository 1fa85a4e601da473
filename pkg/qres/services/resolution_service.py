"""
Embedded Q-resolution of plane curve germs by iterated weighted blow-ups.

Every infinitely near point is kept in cover coordinates (u, v) of its ambient
X(d;a,b). Up to two curves lie on the axes {u=0} and {v=0} (exceptional divisors or
strict transforms); every other branch is an expansion v = sum c_k u^f_k.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from qres.core.config import settings
from qres.core.exceptions import (
    ArithmeticInvariantError,
    DegenerateInput,
    NonInvariantCurve,
    NotNormalized,
    ResolutionLimitExceeded,
)
from qres.models.branch import CurveGerm, PuiseuxBranch, PuiseuxTerm
from qres.models.graph import ARROW, EMBEDDED, EXCEPTIONAL, DualGraph, Edge, Vertex
from qres.models.quotient import CyclicType, Weight
from qres.services.blowup_service import blowup_service
from qres.services.quotient_service import inverse_mod, quotient_service

logger = logging.getLogger(__name__)

PhaseVector = Tuple[Fraction, ...]


def _mod1(value: Fraction) -> Fraction:
    return value - (value.numerator // value.denominator)


def _subgroup(generators: Sequence[PhaseVector], size: int) -> Set[PhaseVector]:
    """Subgroup of (Q/Z)^size generated by the given phase vectors."""
    zero = tuple(Fraction(0) for _ in range(size))
    seen = {zero}
    frontier = [zero]
    while frontier:
        element = frontier.pop()
        for generator in generators:
            shifted = tuple(_mod1(x + y) for x, y in zip(element, generator))
            if shifted not in seen:
                seen.add(shifted)
                frontier.append(shifted)
    return seen


def _rotate_terms(terms: Sequence[PuiseuxTerm], shifts: Sequence[Fraction]) -> Tuple[PuiseuxTerm, ...]:
    return tuple(PuiseuxTerm(t.coeff.rotate(s), t.exp) for t, s in zip(terms, shifts))


@dataclass
class _AxisCurve:
    """A curve lying on a coordinate axis of a point: an exceptional divisor or a strict transform."""
    m: Fraction
    exceptional: Optional[int] = None
    branch: Optional[int] = None

    @property
    def is_exceptional(self) -> bool:
        return self.exceptional is not None


@dataclass
class _LocalBranch:
    index: int
    terms: Tuple[PuiseuxTerm, ...]
    multiplicity: int

    @property
    def exponents(self) -> Tuple[Fraction, ...]:
        return tuple(t.exp for t in self.terms)

    @property
    def leading(self) -> PuiseuxTerm:
        return self.terms[0]

    @property
    def degree(self) -> int:
        return PuiseuxBranch(self.terms).conjugacy_degree


@dataclass
class _Point:
    ambient: CyclicType
    x0: Optional[_AxisCurve] = None
    y0: Optional[_AxisCurve] = None
    branches: List[_LocalBranch] = field(default_factory=list)


def shift_generators(exponents: Sequence[Fraction], ambient: CyclicType) -> List[PhaseVector]:
    """
    Phase shifts of the coefficients under conjugation x^(1/N) -> e(1/N) x^(1/N)
    and under the generator of mu_d acting on the cover coordinates.
    """
    generators = [tuple(_mod1(f) for f in exponents)]
    if ambient.d > 1:
        generators.append(tuple(_mod1(Fraction(ambient.a * f - ambient.b, ambient.d)) for f in exponents))
    return generators


def sheets(terms: Sequence[PuiseuxTerm], ambient: CyclicType) -> int:
    """Number of distinct expansions in the orbit of a branch (conjugates and group images)."""
    exponents = [t.exp for t in terms]
    return len(_subgroup(shift_generators(exponents, ambient), len(exponents)))


def branch_order(terms: Sequence[PuiseuxTerm], ambient: CyclicType, w: Weight, multiplicity: int = 1) -> Fraction:
    """(p,q)-order of the local equation of a non-axis branch, counted over its orbit."""
    first = terms[0].exp
    return sheets(terms, ambient) * min(Fraction(w.q), w.p * first) * multiplicity


def same_curve(first: Sequence[PuiseuxTerm], second: Sequence[PuiseuxTerm], ambient: CyclicType) -> bool:
    """True iff the two expansions describe the same curve in X(d;a,b)."""
    if [t.exp for t in first] != [t.exp for t in second]:
        return False
    if any(not s.coeff.same_magnitude(t.coeff) for s, t in zip(first, second)):
        return False
    difference = tuple(_mod1(t.coeff.phase - s.coeff.phase) for s, t in zip(first, second))
    exponents = [t.exp for t in first]
    return difference in _subgroup(shift_generators(exponents, ambient), len(exponents))


def _contact(first: Sequence[PuiseuxTerm], second: Sequence[PuiseuxTerm]) -> Fraction:
    """x-valuation of the difference of two expansions."""
    a = {t.exp: t.coeff for t in first}
    b = {t.exp: t.coeff for t in second}
    for exp in sorted(set(a) | set(b)):
        if a.get(exp) != b.get(exp):
            return exp
    raise DegenerateInput("two branches have identical expansions")


def _conjugates(terms: Sequence[PuiseuxTerm]) -> List[Tuple[PuiseuxTerm, ...]]:
    degree = PuiseuxBranch(tuple(terms)).conjugacy_degree
    return [_rotate_terms(terms, [i * t.exp for t in terms]) for i in range(degree)]


def intersection_number(first: Sequence[PuiseuxTerm], second: Sequence[PuiseuxTerm]) -> Fraction:
    """Intersection multiplicity at a smooth point of two branches v = phi(u), v = psi(u)."""
    return sum(
        (_contact(f, s) for f in _conjugates(first) for s in _conjugates(second)),
        Fraction(0),
    )


def branch_multiplicity(terms: Sequence[PuiseuxTerm]) -> Fraction:
    degree = PuiseuxBranch(tuple(terms)).conjugacy_degree
    return min(Fraction(degree), degree * terms[0].exp)


class CurveResolver:
    """Worklist of infinitely near points for one germ."""

    def __init__(self, germ: CurveGerm):
        if not germ.ambient.normalized:
            raise NotNormalized(f"ambient type {germ.ambient} is not normalized")
        self.germ = germ
        self.require_integral = germ.ambient.is_smooth
        self.multiplicity: Dict[int, Fraction] = {}
        self.self_int: Dict[int, Fraction] = {}
        self.sing0: Dict[int, List[CyclicType]] = {}
        self.edges: List[Tuple[int, int, CyclicType]] = []
        # (exceptional id or None, branch index, other branch index or None, type with a on the first end)
        self.arrow_edges: List[Tuple[Optional[int], int, Optional[int], CyclicType]] = []
        self.kept_branches: List[int] = []
        self.blowups = 0

    # root
    def _root_point(self) -> _Point:
        ambient = self.germ.ambient
        point = _Point(ambient)
        candidates: List[_LocalBranch] = []
        for index, branch in enumerate(self.germ.branches, start=1):
            if branch.axis == "x":
                if point.x0 is not None:
                    raise DegenerateInput("the axis {x=0} is listed twice")
                point.x0 = _AxisCurve(Fraction(branch.multiplicity), branch=index)
                self.kept_branches.append(index)
            elif branch.axis == "y":
                if point.y0 is not None:
                    raise DegenerateInput("the axis {y=0} is listed twice")
                point.y0 = _AxisCurve(Fraction(branch.multiplicity), branch=index)
                self.kept_branches.append(index)
            else:
                candidates.append(_LocalBranch(index, branch.terms, branch.multiplicity))

        trivial = CyclicType.smooth()
        for i, first in enumerate(candidates):
            for second in candidates[i + 1:]:
                if same_curve(first.terms, second.terms, trivial):
                    raise DegenerateInput(f"branches {first.index} and {second.index} coincide")

        if ambient.d > 1:
            candidates = self._orbit_representatives(candidates, ambient)
        point.branches = candidates
        self.kept_branches.extend(b.index for b in candidates)
        return point

    def _orbit_representatives(self, candidates: List[_LocalBranch], ambient: CyclicType) -> List[_LocalBranch]:
        trivial = CyclicType.smooth()
        for branch in candidates:
            image = _rotate_terms(
                branch.terms,
                [Fraction(ambient.a * t.exp - ambient.b, ambient.d) for t in branch.terms],
            )
            if not any(same_curve(image, other.terms, trivial) for other in candidates):
                raise NonInvariantCurve(
                    f"the image of branch {branch.index} under the action of {ambient} is not in the curve"
                )
        representatives: List[_LocalBranch] = []
        for branch in candidates:
            if not any(same_curve(branch.terms, rep.terms, ambient) for rep in representatives):
                representatives.append(branch)
            else:
                logger.debug("branch %d lies in the orbit of an earlier branch", branch.index)
        return representatives

    # normal crossings
    def _simplify(self, point: _Point) -> None:
        """Absorb a common smooth leading term v -> v - c u^k into the coordinate v."""
        d, a, b = point.ambient.as_tuple()
        while point.y0 is None and point.branches:
            lead = point.branches[0].leading
            if lead.exp.denominator != 1 or (a * lead.exp.numerator - b) % d:
                return
            if any(br.leading != lead for br in point.branches):
                return
            remaining = []
            for branch in point.branches:
                branch.terms = branch.terms[1:]
                if branch.terms:
                    remaining.append(branch)
                else:
                    point.y0 = _AxisCurve(Fraction(branch.multiplicity), branch=branch.index)
            point.branches = remaining

    def _is_normal_crossing(self, point: _Point) -> bool:
        if not point.ambient.is_smooth:
            return not point.branches
        axes = [c for c in (point.x0, point.y0) if c is not None]
        if len(axes) + len(point.branches) > 2:
            return False
        if any(branch_multiplicity(br.terms) != 1 for br in point.branches):
            return False
        if len(point.branches) == 2:
            return intersection_number(point.branches[0].terms, point.branches[1].terms) == 1
        if point.branches:
            branch = point.branches[0]
            degree = branch.degree
            if point.x0 is not None and degree != 1:
                return False
            if point.y0 is not None and degree * branch.leading.exp != 1:
                return False
        return True

    def _record(self, point: _Point) -> None:
        t = point.ambient
        on_x = point.x0
        on_y = point.y0
        if on_x is not None and on_y is not None and on_x.is_exceptional and on_y.is_exceptional:
            self.edges.append((on_x.exceptional, on_y.exceptional, t))
            return

        exceptional = [c for c in (on_x, on_y) if c is not None and c.is_exceptional]
        strict = [c.branch for c in (on_x, on_y) if c is not None and not c.is_exceptional]
        strict += [b.index for b in point.branches]

        if exceptional:
            divisor = exceptional[0]
            # the exceptional divisor is the first end of an arrow edge: orient it as {x=0}
            oriented = t if divisor is on_x else t.swap()
            if strict:
                self.arrow_edges.append((divisor.exceptional, strict[0], None, oriented))
            elif not t.is_smooth:
                self.sing0.setdefault(divisor.exceptional, []).append(oriented.swap())
            return

        if len(strict) == 2:
            oriented = t if on_x is not None else t.swap()
            self.arrow_edges.append((None, strict[0], strict[1], oriented))

    # blow-ups
    def _weight(self, point: _Point) -> Weight:
        lowest = min(br.leading.exp for br in point.branches)
        return Weight(lowest.denominator, lowest.numerator)

    def _blow_up(self, point: _Point) -> List[_Point]:
        self.blowups += 1
        if self.blowups > settings.MAX_BLOWUPS:
            raise ResolutionLimitExceeded(f"more than {settings.MAX_BLOWUPS} weighted blow-ups needed")

        t = point.ambient
        w = self._weight(point)
        result = blowup_service.blowup(t, w)
        p, q, e = w.p, w.q, result.e
        mult_x, mult_y = blowup_service.axis_multiplicities(w)

        nu = sum((branch_order(br.terms, t, w, br.multiplicity) for br in point.branches), Fraction(0))
        if point.x0 is not None:
            nu += mult_x * point.x0.m
        if point.y0 is not None:
            nu += mult_y * point.y0.m
        m_new = blowup_service.total_transform(t, w, nu, require_integral=self.require_integral)

        new_id = len(self.multiplicity) + 1
        self.multiplicity[new_id] = m_new
        self.self_int[new_id] = result.exc_self_intersection
        for curve, mu in ((point.x0, mult_x), (point.y0, mult_y)):
            if curve is not None and curve.is_exceptional:
                self.self_int[curve.exceptional] = blowup_service.strict_self_intersection_update(
                    self.self_int[curve.exceptional], t, w, mu
                )
        logger.debug(
            "E%d: center %s, weight %s, e=%d, nu=%s, m=%s, E^2=%s",
            new_id, t, w, e, nu, m_new, result.exc_self_intersection,
        )

        exceptional = _AxisCurve(m_new, exceptional=new_id)
        chart1 = result.chart1_origin
        at_origin: List[_LocalBranch] = []
        elsewhere: List[_LocalBranch] = []
        for branch in point.branches:
            terms = tuple(PuiseuxTerm(term.coeff, (p * term.exp - q) / e) for term in branch.terms)
            moved = _LocalBranch(branch.index, terms, branch.multiplicity)
            (elsewhere if terms[0].exp == 0 else at_origin).append(moved)

        points = [_Point(chart1, x0=exceptional, y0=point.y0, branches=at_origin)]
        points.extend(self._points_off_origin(elsewhere, chart1, exceptional))
        points.append(_Point(result.chart2_origin, x0=point.x0, y0=exceptional))
        return points

    def _points_off_origin(
        self, branches: List[_LocalBranch], chart: CyclicType, exceptional: _AxisCurve
    ) -> List[_Point]:
        """Group branches through the same non-origin point of E and translate them there."""
        d1, k1 = chart.d, chart.b
        groups: List[List[_LocalBranch]] = []
        for branch in branches:
            constant = branch.leading.coeff
            for group in groups:
                target = group[0].leading.coeff
                delta = (target.phase - constant.phase) * d1
                if target.same_magnitude(constant) and delta.denominator == 1:
                    turns = int(delta) * inverse_mod(k1, d1) % d1 if d1 > 1 else 0
                    shifts = [Fraction(turns * (k1 - term.exp), d1) for term in branch.terms]
                    branch.terms = _rotate_terms(branch.terms, shifts)
                    if branch.leading.coeff != target:
                        raise ArithmeticInvariantError("orbit translation failed to align constant terms")
                    group.append(branch)
                    break
            else:
                groups.append([branch])

        points = []
        for group in groups:
            point = _Point(CyclicType.smooth(), x0=exceptional)
            for branch in group:
                branch.terms = branch.terms[1:]
                if branch.terms:
                    point.branches.append(branch)
                elif point.y0 is None:
                    point.y0 = _AxisCurve(Fraction(branch.multiplicity), branch=branch.index)
                else:
                    raise DegenerateInput("two branches become identical after translation")
            points.append(point)
        return points

    def run(self) -> DualGraph:
        queue = deque([self._root_point()])
        while queue:
            point = queue.popleft()
            self._simplify(point)
            if self._is_normal_crossing(point):
                self._record(point)
            else:
                queue.extend(self._blow_up(point))
        return self._graph()

    def _graph(self) -> DualGraph:
        vertices = [
            Vertex(
                id=i,
                kind=EXCEPTIONAL,
                m=self.multiplicity[i],
                self_int=self.self_int[i],
                genus=0,
                sing0=tuple(self.sing0.get(i, ())),
            )
            for i in sorted(self.multiplicity)
        ]
        offset = len(vertices)
        arrow_id: Dict[int, int] = {}
        for position, index in enumerate(sorted(self.kept_branches), start=1):
            branch = self.germ.branches[index - 1]
            arrow_id[index] = offset + position
            vertices.append(
                Vertex(
                    id=offset + position,
                    kind=ARROW,
                    m=Fraction(branch.multiplicity),
                    branch=index,
                    label=branch.label or f"C{index}",
                )
            )

        edges = [Edge(v1, v2, t) for v1, v2, t in self.edges]
        for divisor, index, other, t in self.arrow_edges:
            first = divisor if divisor is not None else arrow_id[index]
            second = arrow_id[other] if other is not None else arrow_id[index]
            edges.append(Edge(first, second, t))
        graph = DualGraph(tuple(vertices), tuple(edges), kind=EMBEDDED, ambient=self.germ.ambient)
        logger.info("resolved germ with %d weighted blow-ups: %r", self.blowups, graph)
        return graph


class ResolutionService:
    """Embedded Q-resolutions and the normal crossing check."""

    def resolve(self, curve: CurveGerm) -> DualGraph:
        return CurveResolver(curve).run()

    def resolve_quotient(self, curve: CurveGerm) -> DualGraph:
        """Same procedure; the blow-up charts of the ambient X(d;a,b) are used from the start."""
        return self.resolve(curve)

    def invariant_violations(self, graph: DualGraph) -> List[str]:
        """Every DualGraph invariant the graph breaks, as readable messages."""
        problems = []
        integral = all(v.m.denominator == 1 for v in graph.vertices)
        for vertex in graph.exceptional:
            if vertex.self_int is None or vertex.self_int >= 0:
                problems.append(f"E{vertex.id}: self-intersection {vertex.self_int} is not negative")
            if graph.kind == EMBEDDED and integral:
                for point in vertex.sing0:
                    index = quotient_service.index(point)
                    if vertex.m % index:
                        problems.append(f"E{vertex.id}: index of {point} does not divide m={vertex.m}")
        for arrow in graph.arrows:
            if len(graph.edges_at(arrow.id)) > 1:
                problems.append(f"arrow {arrow.id} meets more than one divisor")
        if integral:
            by_id = graph.by_id
            for edge in graph.edges:
                t = edge.type
                total = t.a * by_id[edge.v1].m + t.b * by_id[edge.v2].m
                if total % t.d:
                    problems.append(f"edge {edge.v1}-{edge.v2} of type {t}: {t.d} does not divide {total}")
        crossings: Dict[object, Set[int]] = {}
        for edge in graph.edges:
            if edge.point is not None:
                crossings.setdefault(edge.point, set()).update((edge.v1, edge.v2))
        for label, divisors in crossings.items():
            if len(divisors) > 2:
                problems.append(f"point {label}: {len(divisors)} divisors meet")
        return problems

    def check_q_normal_crossing(self, graph: DualGraph) -> bool:
        problems = self.invariant_violations(graph)
        for problem in problems:
            logger.debug("normal crossing check: %s", problem)
        return not problems


# Singleton instance
resolution_service = ResolutionService()
