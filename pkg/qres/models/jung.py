"""
Records of the Jung method: surface germs, point and component transforms,
Hirzebruch-Jung chains.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from qres.models.graph import DualGraph
from qres.models.quotient import CyclicType, TwoRowType


@dataclass(frozen=True)
class SurfaceGerm:
    """The cyclic surface singularity z^n = f(x, y), f given by its embedded resolution."""
    n: int
    base: DualGraph


@dataclass(frozen=True)
class Sing0Transform:
    n: int
    s: int
    point: CyclicType
    s0: int
    g: int
    n1: int
    s1: int
    e: int
    n2: int
    d1: int
    result: CyclicType


@dataclass(frozen=True)
class DoublePointTransform:
    n: int
    r: int
    s: int
    point: CyclicType
    m0: int
    g: int
    n1: int
    r1: int
    s1: int
    m1: int
    e: int
    n2: int
    r2: int
    s2: int
    d1: int
    k: int
    l: int
    a_prime: int
    b_prime: int
    two_row: TwoRowType
    result: CyclicType


@dataclass(frozen=True)
class ComponentTransform:
    n: int
    s: int
    eta: Fraction
    m: int
    nu: int
    degree: int
    genus: int
    self_int: Fraction
    g_points: Tuple[int, ...]


@dataclass(frozen=True)
class ChainStep:
    """One (1,k) blow-up of the Hirzebruch-Jung procedure."""
    center: CyclicType
    k: int
    self_int: Fraction
    m: Fraction


@dataclass(frozen=True)
class HirzebruchJungChain:
    """Resolution chain of X(d;1,k): curves with self-intersections -q_1, ..., -q_n."""
    point: CyclicType
    unit_form: CyclicType
    fraction: Tuple[int, ...]
    steps: Tuple[ChainStep, ...] = ()

    @property
    def chain(self) -> Tuple[int, ...]:
        return tuple(-q for q in self.fraction)

    @property
    def multiplicities(self) -> Tuple[Fraction, ...]:
        return tuple(step.m for step in self.steps)
