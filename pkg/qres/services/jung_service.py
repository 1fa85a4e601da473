"""
Jung method for cyclic surface singularities z^n = f(x, y) and the
Hirzebruch-Jung refinement of a Q-resolution into a smooth one.
"""
import logging
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from qres.core.exceptions import (
    ArithmeticInvariantError,
    BadFraction,
    DivisibilityViolation,
    InconsistentData,
    IntegralityViolation,
    MalformedGraph,
)
from qres.models.graph import ABSTRACT, EXCEPTIONAL, DualGraph, Edge, Vertex
from qres.models.intersection import IntersectionMatrix
from qres.models.jung import (
    ChainStep,
    ComponentTransform,
    DoublePointTransform,
    HirzebruchJungChain,
    Sing0Transform,
    SurfaceGerm,
)
from qres.models.quotient import BlowupResult, CyclicType, TwoRowType, Weight
from qres.services.blowup_service import blowup_service
from qres.services.quotient_service import exact_div, quotient_service

logger = logging.getLogger(__name__)


def _integral(value: Fraction, what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise InconsistentData(f"{what} must be an integer, got {value}")
    return value.numerator


class JungService:
    """Covering transforms of the Jung method and Hirzebruch-Jung chains."""

    # point transforms
    def transform_sing0(self, n: int, s: int, t: CyclicType) -> Sing0Transform:
        """
        Preimage of a point X(d;a,b) of E (E the image of {y=0}) under z^n = y^s.

        Returns g points of type (d1; a n2, b).
        """
        t = quotient_service.normalize(t)[0]
        d, a, b = t.as_tuple()
        if s % d:
            raise DivisibilityViolation(f"index {d} of {t} does not divide the multiplicity {s}")
        s0 = s // d
        g = gcd(n, s0)
        n1, s1 = n // g, s0 // g
        e = gcd(n1, d)
        n2, d1 = n1 // e, d // e
        result = quotient_service.normalize(CyclicType(d1, a * n2, b))[0]
        return Sing0Transform(n, s, t, s0, g, n1, s1, e, n2, d1, result)

    def _small_pair(self, m1: int, r2: int, s2: int, n2: int) -> Tuple[int, int]:
        """(k, l) with m1 + k r2 + l s2 = 0 mod n2 and |k| + |l| minimal."""
        for total in range(0, 2 * n2 + 1):
            for k in range(-total, total + 1):
                rest = total - abs(k)
                for l in (rest, -rest) if rest else (0,):
                    if (m1 + k * r2 + l * s2) % n2 == 0:
                        return k, l
        raise ArithmeticInvariantError(f"no (k, l) solves {m1} + k*{r2} + l*{s2} = 0 mod {n2}")

    def transform_double_point(self, n: int, r: int, s: int, t: CyclicType) -> DoublePointTransform:
        """
        Preimage of a point X(d;a,b) under z^n = x^r y^s.

        Returns g points of two-row type (d1 n2, n2 | (a', b'), (s2, -r2)) and its cyclic
        reduction; {x=0} stays the first coordinate.
        """
        t = quotient_service.normalize(t)[0]
        d, a, b = t.as_tuple()
        if (a * r + b * s) % d:
            raise DivisibilityViolation(f"{d} does not divide {a}*{r} + {b}*{s} at a point of type {t}")
        m0 = (a * r + b * s) // d
        g = gcd(n, r, s, m0)
        n1, r1, s1, m1 = n // g, r // g, s // g, m0 // g
        e = gcd(n1, r1, s1)
        if gcd(m1, e) != 1:
            raise ArithmeticInvariantError(f"gcd(m1={m1}, e={e}) is not 1")
        n2, r2, s2 = n1 // e, r1 // e, s1 // e
        d1 = exact_div(d, e, "covering order of the double point")

        k, l = self._small_pair(m1, r2, s2, n2)
        a_prime, b_prime = a + k * d1, b + l * d1
        if (a_prime * r2 + b_prime * s2) % n2:
            raise ArithmeticInvariantError(f"a'r2 + b's2 is not divisible by n2={n2}")

        two_row = TwoRowType(d1 * n2, n2, ((a_prime, b_prime), (s2, -r2)))
        result = quotient_service.reduce_two_row(two_row)
        logger.debug("double point %s under z^%d = x^%d y^%d: %d x %s", t, n, r, s, g, result)
        return DoublePointTransform(
            n, r, s, t, m0, g, n1, r1, s1, m1, e, n2, r2, s2, d1, k, l, a_prime, b_prime, two_row, result
        )

    def transform_component(
        self, n: int, s: int, eta, g_points: Sequence[int], genus: int = 0
    ) -> ComponentTransform:
        """
        Preimage of a divisor E of multiplicity s, self-intersection eta and genus ``genus``.

        ``g_points`` holds the number of preimages of every special point of E.
        """
        eta = Fraction(eta)
        if eta >= 0:
            raise InconsistentData(f"self-intersection {eta} must be negative")
        m = gcd(s, n)
        nu = gcd(s, n, *g_points)
        for g in g_points:
            if m % g:
                raise InconsistentData(f"{g} preimages of a point do not divide the covering degree {m}")
        degree = m // nu

        euler = degree * (2 - 2 * genus) - sum(degree - g // nu for g in g_points)
        if euler % 2 or euler > 2:
            raise InconsistentData(f"Riemann-Hurwitz gives Euler characteristic {euler}")
        component_genus = (2 - euler) // 2
        self_int = Fraction(m * m) * eta / (n * nu)
        return ComponentTransform(n, s, eta, m, nu, degree, component_genus, self_int, tuple(g_points))

    # abstract graph
    def jung_resolution(self, germ: SurfaceGerm) -> DualGraph:
        """Abstract Q-resolution of z^n = f(x,y) from the embedded Q-resolution of f."""
        n, base = germ.n, germ.base
        by_id = base.by_id
        multiplicity = {v.id: _integral(v.m, f"multiplicity of vertex {v.id}") for v in base.vertices}
        for vertex in base.exceptional:
            if vertex.self_int is None:
                raise MalformedGraph(f"E{vertex.id} has no self-intersection")

        edge_transforms: Dict[int, DoublePointTransform] = {}
        points: Dict[int, List[Tuple[int, CyclicType]]] = {v.id: [] for v in base.exceptional}
        g_points: Dict[int, List[int]] = {v.id: [] for v in base.exceptional}

        for vertex in base.exceptional:
            for t in vertex.sing0:
                transform = self.transform_sing0(n, multiplicity[vertex.id], t)
                g_points[vertex.id].append(transform.g)
                points[vertex.id].append((transform.g, transform.result))

        for position, edge in enumerate(base.edges):
            first, second = by_id[edge.v1], by_id[edge.v2]
            if not first.is_exceptional and not second.is_exceptional:
                continue
            if first.is_exceptional and second.is_exceptional:
                transform = self.transform_double_point(n, multiplicity[first.id], multiplicity[second.id], edge.type)
                edge_transforms[position] = transform
                g_points[first.id].append(transform.g)
                g_points[second.id].append(transform.g)
                continue
            # strict transform point, with E as {x=0}; kept on E as seen from E
            divisor, arrow = (first, second) if first.is_exceptional else (second, first)
            t = edge.type_seen_from(divisor.id).swap()
            transform = self.transform_double_point(n, multiplicity[divisor.id], multiplicity[arrow.id], t)
            g_points[divisor.id].append(transform.g)
            points[divisor.id].append((transform.g, transform.result.swap()))

        components: Dict[int, ComponentTransform] = {}
        new_ids: Dict[int, List[int]] = {}
        next_id = 1
        for vertex in base.exceptional:
            component = self.transform_component(
                n, multiplicity[vertex.id], vertex.self_int, g_points[vertex.id], vertex.genus
            )
            components[vertex.id] = component
            new_ids[vertex.id] = list(range(next_id, next_id + component.nu))
            next_id += component.nu

        sing0: Dict[int, List[CyclicType]] = {i: [] for ids in new_ids.values() for i in ids}
        for vertex_id, entries in points.items():
            ids = new_ids[vertex_id]
            for g, t in entries:
                if t.is_smooth:
                    continue
                for j in range(g):
                    sing0[ids[j % len(ids)]].append(t)

        edges = []
        for position, transform in edge_transforms.items():
            edge = base.edges[position]
            first, second = new_ids[edge.v1], new_ids[edge.v2]
            for j in range(transform.g):
                edges.append(Edge(first[j % len(first)], second[j % len(second)], transform.result))

        vertices = []
        for vertex in base.exceptional:
            component = components[vertex.id]
            for i in new_ids[vertex.id]:
                vertices.append(
                    Vertex(
                        id=i,
                        kind=EXCEPTIONAL,
                        m=Fraction(multiplicity[vertex.id], component.m),
                        self_int=component.self_int,
                        genus=component.genus,
                        sing0=tuple(sing0[i]),
                        label=f"E{vertex.id}" if component.nu == 1 else f"E{vertex.id}.{i - new_ids[vertex.id][0] + 1}",
                    )
                )
        graph = DualGraph(tuple(vertices), tuple(edges), kind=ABSTRACT, ambient=CyclicType.smooth())
        logger.info("jung resolution of z^%d over %r: %r", n, base, graph)
        return graph

    # Hirzebruch-Jung
    def continued_fraction(self, d: int, k: int = 1) -> List[int]:
        """Excess division d = q k - r until the remainder vanishes."""
        if k <= 0 or d <= 0:
            raise BadFraction(f"expected positive numerator and denominator, got {d}/{k}")
        fraction = []
        while k:
            q = -(-d // k)
            fraction.append(q)
            d, k = k, q * k - d
        return fraction

    def evaluate_fraction(self, fraction: Sequence[int]) -> Fraction:
        """q1 - 1/(q2 - 1/(... - 1/qn))."""
        if not fraction:
            raise BadFraction("empty continued fraction")
        value = Fraction(fraction[-1])
        for q in reversed(fraction[:-1]):
            value = q - 1 / value
        return value

    def resolve_cyclic_point(self, t: CyclicType, m_near=0, m_other=0) -> HirzebruchJungChain:
        """
        Resolve X(d;a,b) by (1,k) blow-ups, d/k being the unit form.

        ``m_near`` is the multiplicity of the divisor {y=0}, ``m_other`` that of {x=0};
        the chain starts next to {y=0}.
        """
        t = quotient_service.normalize(t)[0]
        unit = quotient_service.unit_form(t)
        if t.is_smooth:
            return HirzebruchJungChain(t, unit, ())

        fraction = self.continued_fraction(unit.d, unit.b)
        steps = []
        d, k = unit.d, unit.b
        near, other = Fraction(m_near), Fraction(m_other)
        for q in fraction:
            near = (other + k * near) / d
            steps.append(ChainStep(CyclicType(d, 1, k), k, Fraction(-q), near))
            if d == 1 or k == 1:
                break
            # the next center is (k; 1, -d) with the new curve as {y=0}
            d, k = k, (-d) % k
        chain = HirzebruchJungChain(t, unit, tuple(fraction), tuple(steps))
        logger.debug("Hirzebruch-Jung chain of %s: %s", t, chain.chain)
        return chain

    def chain_matrix(self, fraction: Sequence[int]) -> IntersectionMatrix:
        """Tridiagonal intersection matrix of a chain with self-intersections -q_i."""
        n = len(fraction)
        entries = sympy.zeros(n, n)
        for i, q in enumerate(fraction):
            entries[i, i] = -q
            if i + 1 < n:
                entries[i, i + 1] = entries[i + 1, i] = 1
        return IntersectionMatrix(tuple(range(1, n + 1)), sympy.ImmutableMatrix(entries))

    def ab_blowup_step(self, t: CyclicType, w: Optional[Weight] = None) -> BlowupResult:
        """The (a,b) blow-up of X(d;a,b): E^2 = -d/(ab), points (a;-d,b) and (b;a,-d)."""
        t = quotient_service.normalize(t)[0]
        w = w or Weight(t.a, t.b)
        return blowup_service.blowup(t, w)

    def smooth_refinement(self, graph: DualGraph) -> DualGraph:
        """
        Replace every singular point by its Hirzebruch-Jung chain.

        Each exceptional divisor loses k/d for every point (d;1,k) seen from it and
        must end up with an integral self-intersection.
        """
        by_id = graph.by_id
        next_id = max((v.id for v in graph.vertices), default=0) + 1
        vertices: Dict[int, Vertex] = {}
        edges: List[Edge] = []

        for vertex in graph.exceptional:
            refined = vertex.self_int - sum(
                (quotient_service.refinement_ratio(t) for t in graph.singular_points(vertex.id)), Fraction(0)
            )
            if refined.denominator != 1:
                raise IntegralityViolation(f"E{vertex.id}: refined self-intersection {refined} is not an integer")
            vertices[vertex.id] = Vertex(
                id=vertex.id,
                kind=EXCEPTIONAL,
                m=vertex.m,
                self_int=refined,
                genus=vertex.genus,
                label=vertex.label,
            )
        for vertex in graph.arrows:
            vertices[vertex.id] = vertex

        def add_chain(near: int, other: Optional[int], t: CyclicType) -> None:
            nonlocal next_id
            m_other = by_id[other].m if other is not None else 0
            chain = self.resolve_cyclic_point(t, by_id[near].m, m_other)
            previous = near
            for step in chain.steps:
                vertices[next_id] = Vertex(id=next_id, kind=EXCEPTIONAL, m=step.m, self_int=step.self_int)
                edges.append(Edge(previous, next_id, CyclicType.smooth()))
                previous = next_id
                next_id += 1
            if other is not None:
                edges.append(Edge(previous, other, CyclicType.smooth()))

        for vertex in graph.exceptional:
            for t in vertex.sing0:
                add_chain(vertex.id, None, t)
        for edge in graph.edges:
            if edge.type.is_smooth:
                edges.append(Edge(edge.v1, edge.v2, edge.type))
                continue
            near, other = edge.v2, edge.v1
            if not by_id[near].is_exceptional and by_id[other].is_exceptional:
                # arrow edge: the chain starts at the exceptional divisor
                near, other = other, near
            add_chain(near, other, edge.type_seen_from(near))

        refined = DualGraph(
            tuple(vertices[i] for i in sorted(vertices)), tuple(edges), kind=graph.kind, ambient=graph.ambient
        )
        logger.info("smooth refinement: %r -> %r", graph, refined)
        return refined


# Singleton instance
jung_service = JungService()
