"""Seeded Monte Carlo construction of k-independence covering families.

A k-independence covering family of a graph is a family of independent
sets such that every independent set of size at most k is contained in
some member. The builder samples independent sets through the degeneracy
order: mark each vertex with probability p = 1/(d+1), keep a marked
vertex iff none of its forward neighbors (later in the order) is marked.
Any fixed independent set X with |X| <= k then survives a sample with
probability at least p^k (1-p)^(kd), and a union bound over the target
sets gives the number of samples needed for failure probability delta.

Randomness: sample i draws from numpy's PCG64 seeded with the sequence
(master_seed, i), so families are reproducible for a given seed and
independent of how samples are scheduled across workers.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .graphs import (DegeneracyResult, Graph, GraphError, VertexSet,
                     degeneracy_order, graph_hash, is_c4_free, iter_members,
                     members, sqrt_degeneracy_bound)
from .independence import BudgetExceededError, enumerate_independent_sets, \
    enumerate_maximal_independent_sets

DEFAULT_BUDGET = 10 ** 7


@dataclass(frozen=True)
class CoveringFamily:
    """Ordered independent sets plus the parameters that produced them."""

    sets: tuple[VertexSet, ...]
    k: int
    delta: float
    seed: int
    t: int
    degeneracy: int
    p: Fraction
    graph_hash: str


def containment_probability_floor(d: int, k: int) -> Fraction:
    """Per-sample lower bound p^k (1-p)^(kd) with p = 1/(d+1), exact."""
    p = Fraction(1, d + 1)
    return p ** k * (1 - p) ** (k * d)


def sample_independent_set(g: Graph, order: DegeneracyResult, p,
                           rng: np.random.Generator) -> VertexSet:
    """Draw one independent set: mark with probability p, prune forward.

    Marks are drawn in vertex-index order so the output is a function of
    the stream alone, not of the elimination order's layout.
    """
    if not (0 < p <= 1):
        raise GraphError("marking probability must be in (0, 1]")
    draws = rng.random(g.n)
    marked = 0
    pf = float(p)
    for v in range(g.n):
        if draws[v] < pf:
            marked |= 1 << v
    pos = [0] * g.n
    for i, v in enumerate(order.order):
        pos[v] = i
    out = 0
    for v in iter_members(marked):
        keep = True
        for u in iter_members(g.adj[v] & marked):
            if pos[u] > pos[v]:
                keep = False
                break
        if keep:
            out |= 1 << v
    return out


def substream(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng((seed, index))


def required_samples(universe_size: int, p_min: Fraction,
                     delta: float) -> int:
    """Samples needed so every target set is hit with probability >= 1-delta.

    Union bound: t = ceil(ln(universe/delta) / p_min).
    """
    if universe_size < 1:
        raise GraphError("universe size must be at least 1")
    if not (0 < delta < 1):
        raise GraphError("delta must be in (0, 1)")
    return math.ceil(math.log(universe_size / delta) / float(p_min))


def build_family_mc(g: Graph, k: int, delta: float, seed: int,
                    budget: Optional[int] = DEFAULT_BUDGET,
                    require_c4_free: bool = False) -> CoveringFamily:
    """Build a covering family by seeded sampling; deterministic per seed.

    The union-bound universe is the exact count of independent sets of
    size <= k when it is enumerable within the budget, else the n^k
    fallback. Duplicate samples keep their first occurrence.
    """
    if k < 1:
        raise GraphError("k must be at least 1")
    if require_c4_free and not is_c4_free(g):
        raise GraphError("graph contains a 4-cycle")
    order = degeneracy_order(g)
    d = order.degeneracy
    if require_c4_free:
        assert d <= sqrt_degeneracy_bound(g.n)
    p = Fraction(1, d + 1)
    try:
        universe = sum(1 for _ in enumerate_independent_sets(g, k, budget))
        universe = max(universe, 1)
    except BudgetExceededError:
        universe = g.n ** k
    p_min = containment_probability_floor(d, k)
    t = required_samples(universe, p_min, delta)
    seen = set()
    sets = []
    for i in range(t):
        s = sample_independent_set(g, order, p, substream(seed, i))
        if s and s not in seen:
            seen.add(s)
            sets.append(s)
    return CoveringFamily(sets=tuple(sets), k=k, delta=delta, seed=seed,
                          t=t, degeneracy=d, p=p, graph_hash=graph_hash(g))


def verify_family(g: Graph, k: int, sets: Sequence[VertexSet],
                  budget: Optional[int] = DEFAULT_BUDGET
                  ) -> tuple[bool, Optional[VertexSet]]:
    """Exact coverage check; returns the first uncovered set on failure.

    The witness is lexicographically first because the enumeration is.
    """
    family = list(sets)
    for z in enumerate_independent_sets(g, k, budget):
        if not any(z & ~s == 0 for s in family):
            return False, z
    return True, None


def greedy_cover(g: Graph, k: int,
                 budget: Optional[int] = DEFAULT_BUDGET) -> list[VertexSet]:
    """Greedy set cover of the size-<=k independent sets by maximal ones.

    Ties go to the lexicographically smallest candidate (by sorted member
    list). Useful as an upper-bound oracle against the exact counting
    lower bound.
    """
    universe = list(enumerate_independent_sets(g, k, budget))
    candidates = sorted(enumerate_maximal_independent_sets(g),
                        key=members)
    uncovered = set(universe)
    chosen: list[VertexSet] = []
    while uncovered:
        best, best_gain = None, 0
        for c in candidates:
            gain = sum(1 for z in uncovered if z & ~c == 0)
            if gain > best_gain:
                best, best_gain = c, gain
        if best is None:
            raise GraphError("universe not coverable by maximal sets")
        chosen.append(best)
        uncovered = {z for z in uncovered if z & ~best}
    return chosen


def family_to_json(fam: CoveringFamily) -> dict:
    return {
        "graph_hash": fam.graph_hash,
        "k": fam.k,
        "delta": fam.delta,
        "seed": fam.seed,
        "t": fam.t,
        "d": fam.degeneracy,
        "p": f"{fam.p.numerator}/{fam.p.denominator}",
        "sets": [members(s) for s in fam.sets],
    }


def family_from_json(doc: dict) -> CoveringFamily:
    num, den = doc["p"].split("/")
    sets = []
    for arr in doc["sets"]:
        if arr != sorted(set(arr)):
            raise GraphError("family set is not a strictly ascending array")
        mask = 0
        for v in arr:
            mask |= 1 << v
        sets.append(mask)
    return CoveringFamily(
        sets=tuple(sets), k=doc["k"], delta=doc["delta"], seed=doc["seed"],
        t=doc["t"], degeneracy=doc["d"], p=Fraction(int(num), int(den)),
        graph_hash=doc["graph_hash"])


def dump_family(fam: CoveringFamily) -> str:
    return json.dumps(family_to_json(fam), indent=2, sort_keys=True) + "\n"


def load_family(text: str) -> CoveringFamily:
    return family_from_json(json.loads(text))
