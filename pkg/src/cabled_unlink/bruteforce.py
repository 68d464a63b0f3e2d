"""
Brute-Force Route

Handles the truncated quotient of the direct sum of shifted unlink homologies
over all levels r ≤ r_max, computed in the standard X-exponent basis with
orbit labels (multisets of exponents per strand orientation).
"""

import logging
from itertools import combinations_with_replacement, product
from typing import Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from core.errors import InvalidConfigError, UnstableWindowError
from intlinalg import GradedGroup, IntMatrix, cokernel, rational_rank

from .levels import StandardComponent, StandardLabel, stabilization_bound

logger = logging.getLogger(__name__)

Level = Tuple[int, ...]
Generator = Tuple[Level, StandardLabel]


class _LabelCatalog:
    """Standard orbit labels per level, grouped by shifted degree."""

    def __init__(self, N: int, alpha: Sequence[int]):
        self.N = N
        self.alpha = tuple(alpha)
        self._component_cache: Dict[Tuple[int, int], Dict[int, List[StandardComponent]]] = {}
        self._level_cache: Dict[Level, Dict[int, List[StandardLabel]]] = {}

    def _component(self, i: int, r: int) -> Dict[int, List[StandardComponent]]:
        a = r - min(self.alpha[i], 0)
        b = r + max(self.alpha[i], 0)
        key = (a, b)
        if key not in self._component_cache:
            grouped: Dict[int, List[StandardComponent]] = {}
            for a_exps in combinations_with_replacement(range(self.N), a):
                for b_exps in combinations_with_replacement(range(self.N), b):
                    degree = 2 * (1 - self.N) * (a + b) + 2 * (sum(a_exps) + sum(b_exps))
                    grouped.setdefault(degree, []).append((a_exps, b_exps))
            self._component_cache[key] = grouped
        return self._component_cache[key]

    def labels(self, level: Level, degree: int) -> List[StandardLabel]:
        if level not in self._level_cache:
            grouped: Dict[int, List[StandardLabel]] = {0: [()]}
            for i, r in enumerate(level):
                step: Dict[int, List[StandardLabel]] = {}
                for deg, labels in grouped.items():
                    for comp_deg, comps in self._component(i, r).items():
                        bucket = step.setdefault(deg + comp_deg, [])
                        bucket.extend(label + (comp,) for label in labels for comp in comps)
                grouped = step
            self._level_cache[level] = grouped
        return self._level_cache[level].get(degree, [])


def _append(label: StandardLabel, component: int, a_exp: int, b_exp: int) -> StandardLabel:
    a_exps, b_exps = label[component]
    new = (tuple(sorted(a_exps + (a_exp,))), tuple(sorted(b_exps + (b_exp,))))
    return label[:component] + (new,) + label[component + 1:]


def _raised(level: Level, component: int) -> Level:
    return level[:component] + (level[component] + 1,) + level[component + 1:]


def relation_matrix(N: int, alpha: Sequence[int], r_max: int,
                    degree: int) -> Tuple[List[Generator], IntMatrix]:
    """
    Generators and relations of the truncated quotient in one quantum degree.

    Rows are orbit labels of the given degree at every level r ≤ r_max.
    Columns are ψ^{[N−1]}_i(v) − v for v in this degree, and ψ^{[m]}_i(v) for
    m < N−1 and v in degree + 2(N−1−m), whenever the target level is ≤ r_max.

    Args:
        N: Rank
        alpha: Level per component
        r_max: Truncation per component
        degree: Shifted quantum degree

    Returns:
        (generators, relation matrix)
    """
    catalog = _LabelCatalog(N, alpha)
    levels = list(product(range(r_max + 1), repeat=len(alpha)))
    generators: List[Generator] = [
        (level, label) for level in levels for label in catalog.labels(level, degree)
    ]
    index = {g: i for i, g in enumerate(generators)}

    columns: List[Dict[int, int]] = []
    for level in levels:
        for i in range(len(alpha)):
            if level[i] + 1 > r_max:
                continue
            target_level = _raised(level, i)
            for label in catalog.labels(level, degree):
                target = index[(target_level, _append(label, i, N - 1, N - 1))]
                columns.append({target: 1, index[(level, label)]: -1})
            for m in range(N - 1):
                source_degree = degree + 2 * (N - 1 - m)
                for label in catalog.labels(level, source_degree):
                    column: Dict[int, int] = {}
                    for k in range(N - m):
                        row = index[(target_level, _append(label, i, k + m, N - 1 - k))]
                        column[row] = column.get(row, 0) + 1
                    columns.append(column)
    return generators, IntMatrix.from_columns(len(generators), columns)


def cabled_bruteforce(N: int, alpha: Sequence[int], r_max: int, q_min: int,
                      framing: Optional[Sequence[int]] = None,
                      over_rationals: bool = False,
                      allow_unstable: bool = False,
                      max_nonzeros: Optional[int] = None,
                      progress: bool = False) -> GradedGroup:
    """
    Cabled homology of a 0-framed unlink as a truncated quotient over ℤ.

    Args:
        N: Rank
        alpha: Level per component
        r_max: Truncation of every level coordinate
        q_min: Lowest quantum degree reported (degrees q_min..0)
        framing: Framing per component; only 0 is handled here
        over_rationals: Report ranks over ℚ instead of the integral cokernel
        allow_unstable: Report degrees below the certified truncation bound
        max_nonzeros: Cap on relation-matrix nonzeros
        progress: Show a progress bar over degrees

    Returns:
        GradedGroup with a piece at (0, j) for every even j in [q_min, 0]
    """
    alpha = tuple(alpha)
    if N < 1:
        raise InvalidConfigError(f"Rank N must be at least 1, got {N}", {'N': N})
    if not alpha:
        raise InvalidConfigError("At least one component is required")
    if r_max < 0:
        raise InvalidConfigError(f"r_max must be nonnegative, got {r_max}", {'r_max': r_max})
    if framing is not None and any(framing):
        raise InvalidConfigError(
            "Nonzero framings are computed by the framed-unknot colimit, not the unlink route",
            {'framing': list(framing)},
        )
    bound = stabilization_bound(alpha, q_min)
    if r_max < bound:
        if not allow_unstable:
            raise UnstableWindowError(
                f"r_max={r_max} is below the stabilization bound {bound} for j >= {q_min}",
                {'r_max': r_max, 'required': bound, 'q_min': q_min},
            )
        logger.warning(f"Reporting j >= {q_min} with r_max={r_max} below bound {bound}")

    group = GradedGroup()
    degrees = list(range(0, q_min - 1, -2)) if q_min <= 0 else []
    for degree in tqdm(degrees, desc='degrees', disable=not progress):
        generators, relations = relation_matrix(N, alpha, r_max, degree)
        logger.info(f"Degree {degree}: {len(generators)} generators, {relations.cols} relations")
        if over_rationals:
            group.set_piece(0, degree, len(generators) - rational_rank(relations))
        else:
            free_rank, torsion = cokernel(relations, max_nonzeros=max_nonzeros)
            group.set_piece(0, degree, free_rank, torsion)
    return group
