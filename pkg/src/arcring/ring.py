"""
Arc Ring

Handles Khovanov's arc ring H^n for N = 2: basis diagrams (a, b, circle labels),
the multiplication that compresses b̄b by saddle surgeries, idempotents and the
action of the variables X_i.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .matchings import Circle, CrossinglessMatching, compose_circles, enumerate_matchings

logger = logging.getLogger(__name__)

ONE = 0
X = 1
LABEL_DEGREE = {ONE: -1, X: 1}


@dataclass(frozen=True, order=True)
class ArcBasis:
    """
    Basis diagram of ₐ(H^n)_b: one label (ONE or X) per circle of b̄a.

    Labels follow the circle order of compose_circles(a, b).
    """
    a: CrossinglessMatching
    b: CrossinglessMatching
    labels: Tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.circles):
            raise ValueError(f"Expected {len(self.circles)} labels, got {len(self.labels)}")

    @property
    def n(self) -> int:
        return self.a.n

    @property
    def circles(self) -> Tuple[Circle, ...]:
        return compose_circles(self.a, self.b)

    @property
    def degree(self) -> int:
        return sum(LABEL_DEGREE[label] for label in self.labels) + self.n

    def circle_index(self, point: int) -> int:
        for k, circle in enumerate(self.circles):
            if point in circle:
                return k
        raise ValueError(f"Point {point} outside 1..{2 * self.n}")

    def __str__(self) -> str:
        marks = ''.join('X' if label == X else '1' for label in self.labels)
        return f"{self.a}|{self.b}[{marks}]"


class ArcElement:
    """
    Integer-linear combination of basis diagrams of H^n.

    Features:
    - Addition, subtraction and scaling
    - Multiplication through hn_multiply
    - Homogeneous degree
    """

    def __init__(self, n: int, terms: Optional[Dict[ArcBasis, int]] = None):
        self.n = n
        self.terms: Dict[ArcBasis, int] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def basis(cls, diagram: ArcBasis, coefficient: int = 1) -> 'ArcElement':
        return cls(diagram.n, {diagram: coefficient})

    def __iter__(self) -> Iterator[Tuple[ArcBasis, int]]:
        for key in sorted(self.terms):
            yield key, self.terms[key]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArcElement):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return '0'
        return ' + '.join(f"{c}*{k}" for k, c in self)

    def __add__(self, other: 'ArcElement') -> 'ArcElement':
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return ArcElement(self.n, terms)

    def __sub__(self, other: 'ArcElement') -> 'ArcElement':
        return self + other.scaled(-1)

    def __mul__(self, other: 'ArcElement') -> 'ArcElement':
        return hn_multiply(self, other)

    def scaled(self, factor: int) -> 'ArcElement':
        return ArcElement(self.n, {k: factor * v for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {k.degree for k in self.terms}


def arc_basis(n: int) -> List[ArcBasis]:
    """Every basis diagram of H^n, sorted."""
    out = []
    for a in enumerate_matchings(n):
        for b in enumerate_matchings(n):
            count = len(compose_circles(a, b))
            for mask in range(2 ** count):
                labels = tuple((mask >> (count - 1 - k)) & 1 for k in range(count))
                out.append(ArcBasis(a, b, labels))
    return sorted(out)


def idempotent(a: CrossinglessMatching) -> ArcElement:
    """ₐ1ₐ: the diagram āa with every circle labeled 1."""
    return ArcElement.basis(ArcBasis(a, a, (ONE,) * a.n))


def identity(n: int) -> ArcElement:
    """Σₐ ₐ1ₐ."""
    total = ArcElement(n)
    for a in enumerate_matchings(n):
        total = total + idempotent(a)
    return total


class _UnionFind:
    def __init__(self, nodes: Iterable[int]):
        self.parent = {v: v for v in nodes}

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, u: int, v: int) -> None:
        ru, rv = self.find(u), self.find(v)
        if ru != rv:
            self.parent[max(ru, rv)] = min(ru, rv)


def _components(nodes: List[int], edges: List[Tuple[int, int]]) -> List[frozenset]:
    uf = _UnionFind(nodes)
    for u, v in edges:
        uf.union(u, v)
    groups: Dict[int, set] = {}
    for v in nodes:
        groups.setdefault(uf.find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def _surgery_order(b: CrossinglessMatching) -> List[Tuple[int, int]]:
    """Arcs of b, innermost first (shortest span first)."""
    return sorted(b.arcs, key=lambda arc: (arc[1] - arc[0], arc[0]))


@lru_cache(maxsize=None)
def _multiply_basis(x: ArcBasis, y: ArcBasis,
                    order: Optional[Tuple[Tuple[int, int], ...]] = None) -> Tuple[Tuple[ArcBasis, int], ...]:
    if x.b != y.a:
        return ()
    n = x.n
    two_n = 2 * n
    nodes = list(range(1, 2 * two_n + 1))

    def q(i: int) -> int:
        return i + two_n

    edges: List[Tuple[int, int]] = []
    edges += [(i, j) for i, j in x.a.arcs]
    edges += [(i, j) for i, j in x.b.arcs]
    edges += [(q(i), q(j)) for i, j in y.a.arcs]
    edges += [(q(i), q(j)) for i, j in y.b.arcs]

    components = _components(nodes, edges)
    # initial labels: P-circles from x, Q-circles from y
    start: List[int] = []
    for comp in components:
        p_points = sorted(v for v in comp if v <= two_n)
        if p_points:
            start.append(x.labels[x.circle_index(p_points[0])])
        else:
            start.append(y.labels[y.circle_index(min(comp) - two_n)])
    states: Dict[Tuple[int, ...], int] = {tuple(start): 1}

    for i, j in (order or tuple(_surgery_order(x.b))):
        edges.remove((i, j))
        edges.remove((q(i), q(j)))
        edges += [(i, q(i)), (j, q(j))]
        new_components = _components(nodes, edges)
        old_of = {v: k for k, comp in enumerate(components) for v in comp}
        new_of = {v: k for k, comp in enumerate(new_components) for v in comp}
        c1, c2 = old_of[i], old_of[q(i)]
        new_states: Dict[Tuple[int, ...], int] = {}
        if c1 != c2:
            merged = new_of[i]
            for labels, coefficient in states.items():
                if labels[c1] == X and labels[c2] == X:
                    continue
                new_labels = [0] * len(new_components)
                for k, comp in enumerate(components):
                    new_labels[new_of[min(comp)]] = labels[k]
                new_labels[merged] = labels[c1] | labels[c2]
                key = tuple(new_labels)
                new_states[key] = new_states.get(key, 0) + coefficient
        else:
            d1, d2 = new_of[i], new_of[j]
            if d1 == d2:
                raise RuntimeError(f"Surgery on arc ({i}, {j}) neither merged nor split")
            for labels, coefficient in states.items():
                base = [0] * len(new_components)
                for k, comp in enumerate(components):
                    if k != c1:
                        base[new_of[min(comp)]] = labels[k]
                splits = [(ONE, X), (X, ONE)] if labels[c1] == ONE else [(X, X)]
                for l1, l2 in splits:
                    new_labels = list(base)
                    new_labels[d1], new_labels[d2] = l1, l2
                    key = tuple(new_labels)
                    new_states[key] = new_states.get(key, 0) + coefficient
        components = new_components
        states = {k: v for k, v in new_states.items() if v}

    # read final components as circles of the product diagram
    result_circles = compose_circles(x.a, y.b)
    out: Dict[ArcBasis, int] = {}
    for labels, coefficient in states.items():
        final = [0] * len(result_circles)
        for k, comp in enumerate(components):
            p_points = tuple(sorted(v for v in comp if v <= two_n))
            final[result_circles.index(p_points)] = labels[k]
        key = ArcBasis(x.a, y.b, tuple(final))
        out[key] = out.get(key, 0) + coefficient
    return tuple(sorted((k, v) for k, v in out.items() if v))


def multiply_basis(x: ArcBasis, y: ArcBasis,
                   order: Optional[List[Tuple[int, int]]] = None) -> ArcElement:
    """
    Product of two basis diagrams, zero unless x ∈ ₐH_b and y ∈ _bH_c.

    Args:
        x: Left diagram
        y: Right diagram
        order: Optional surgery order on the arcs of x.b (defaults to innermost first)

    Returns:
        The product in ₐH_c
    """
    key = tuple(order) if order is not None else None
    return ArcElement(x.n, dict(_multiply_basis(x, y, key)))


def hn_multiply(x: ArcElement, y: ArcElement) -> ArcElement:
    """Bilinear extension of multiply_basis."""
    if x.n != y.n:
        raise ValueError(f"Cannot multiply elements of H^{x.n} and H^{y.n}")
    terms: Dict[ArcBasis, int] = {}
    for bx, cx in x.terms.items():
        for by, cy in y.terms.items():
            for key, v in _multiply_basis(bx, by, None):
                terms[key] = terms.get(key, 0) + cx * cy * v
    return ArcElement(x.n, terms)


def xi_action(i: int, x: ArcElement) -> ArcElement:
    """
    Action of X_i: (−1)^i times multiplication by X on the circle through point i.

    Args:
        i: Point index, 1 ≤ i ≤ 2n
        x: Element of H^n

    Returns:
        X_i · x
    """
    if not 1 <= i <= 2 * x.n:
        raise ValueError(f"Point index {i} outside 1..{2 * x.n}")
    sign = -1 if i % 2 else 1
    terms: Dict[ArcBasis, int] = {}
    for diagram, coefficient in x.terms.items():
        k = diagram.circle_index(i)
        if diagram.labels[k] == X:
            continue
        labels = list(diagram.labels)
        labels[k] = X
        key = ArcBasis(diagram.a, diagram.b, tuple(labels))
        terms[key] = terms.get(key, 0) + sign * coefficient
    return ArcElement(x.n, terms)


def monomial_element(n: int, subset: Iterable[int]) -> ArcElement:
    """X_I applied to the identity of H^n."""
    element = identity(n)
    for i in sorted(subset):
        element = xi_action(i, element)
    return element
