"""Coset actions and coset graphs: the bipartite graph on [G:L] u [G:R]
with Lx ~ Ry iff the cosets meet, its incidence structure, and the
double-coset count |RL n RLg| / |R| that equals the pair count of the
corresponding design.

Cosets are identified by a canonical representative: the element of Lx
whose base-image sequence under L's stabilizer chain is lexicographically
minimal, found by walking the chain transversals.  This gives constant-time
coset keys without backtrack searches.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .config import element_limit, exhaustive_limit, index_limit
from .group import (GroupWithChain, StructureContradiction, induced_action)
from .incidence import IncidenceStructure
from .perm import Permutation


class SubgroupError(ValueError):
    """The claimed subgroup is not contained in the ambient group."""


class IndexLimitError(RuntimeError):
    """The coset space is larger than the configured index limit."""


def canonical_coset_representative(subgroup, x):
    """The chain-minimal element of the right coset (subgroup)*x."""
    h = x
    for level in subgroup._chain.levels:
        best_pt = None
        best_img = None
        for c in level.orbit:
            img = h.images[c]
            if best_img is None or img < best_img:
                best_img = img
                best_pt = c
        if best_pt != level.base:
            h = level.orbit[best_pt] * h
    return h


class CosetSpace:
    """The right cosets of a subgroup, with canonical representatives in
    breadth-first discovery order (the trivial coset is index 0)."""

    def __init__(self, group, subgroup, limit=None):
        if subgroup.degree != group.degree:
            raise SubgroupError("subgroup degree mismatch")
        for g in subgroup.generators:
            if not group.contains(g):
                raise SubgroupError("given generators do not lie in the group")
        limit = index_limit() if limit is None else limit
        index = group.order() // subgroup.order()
        if index > limit:
            raise IndexLimitError(
                f"index {index} exceeds the coset index limit {limit}")
        reps = [canonical_coset_representative(subgroup,
                                               Permutation.identity(group.degree))]
        position = {reps[0].images: 0}
        queue = [reps[0]]
        while queue:
            rep = queue.pop(0)
            for g in group.generators:
                c = canonical_coset_representative(subgroup, rep * g)
                if c.images not in position:
                    position[c.images] = len(reps)
                    reps.append(c)
                    queue.append(c)
        if len(reps) != index:
            raise StructureContradiction(
                f"coset enumeration found {len(reps)} cosets, expected {index}")
        self.group = group
        self.subgroup = subgroup
        self.representatives = tuple(reps)
        self.index = index
        self._position = position

    def position_of(self, x):
        """Index of the coset (subgroup)*x."""
        key = canonical_coset_representative(self.subgroup, x).images
        return self._position[key]


def coset_action(group, subgroup, limit=None):
    """Transitive action of the group on [G:L] by right multiplication.

    Asserted: the point stabilizer of the trivial coset is exactly L (every
    L generator fixes index 0 and the orbit-stabilizer count matches)."""
    space = CosetSpace(group, subgroup, limit)
    image = induced_action(
        group, space.representatives,
        lambda rep, g: canonical_coset_representative(space.subgroup, rep * g))
    if not image.image.is_transitive():
        raise StructureContradiction("coset action is not transitive")
    for g in subgroup.generators:
        if space.position_of(g) != 0:
            raise StructureContradiction(
                "subgroup generator moves the trivial coset")
    if space.index * subgroup.order() != group.order():
        raise StructureContradiction("index times subgroup order != group order")
    return image


class CosetGraph:
    """Coset graph data: the two coset spaces, the point neighborhoods, and
    the incidence structure on (points=[G:L], blocks=[G:R])."""

    def __init__(self, group, left, right, limit=None):
        self.space_points = CosetSpace(group, left, limit)
        self.space_blocks = CosetSpace(group, right, limit)
        lr_keys = _left_coset_orbit_keys(left, right)
        blocks = []
        point_neighbors = [set() for _ in range(self.space_points.index)]
        for j, y in enumerate(self.space_blocks.representatives):
            y_inv = y.inverse()
            members = []
            for i, x in enumerate(self.space_points.representatives):
                key = canonical_coset_representative(left, x * y_inv).images
                if key in lr_keys:
                    members.append(i)
                    point_neighbors[i].add(j)
            blocks.append(members)
        if 0 not in blocks[0]:
            raise StructureContradiction(
                "the trivial cosets of L and R are not adjacent")
        self.group = group
        self.left = left
        self.right = right
        self.blocks = tuple(tuple(b) for b in blocks)
        self.point_neighbors = tuple(frozenset(s) for s in point_neighbors)
        self.structure = IncidenceStructure(
            v=self.space_points.index, blocks=[list(b) for b in blocks])

    @property
    def trivial(self):
        return all(len(b) == self.space_points.index for b in self.blocks)


def _left_coset_orbit_keys(left, right):
    """Canonical keys of the cosets {L*r : r in R}; membership z in LR is
    equivalent to the key of L*z lying in this set."""
    start = canonical_coset_representative(
        left, Permutation.identity(left.degree))
    keys = {start.images}
    queue = [start]
    while queue:
        rep = queue.pop(0)
        for g in right.generators:
            c = canonical_coset_representative(left, rep * g)
            if c.images not in keys:
                keys.add(c.images)
                queue.append(c)
    return keys


def coset_graph_design(group, left, right, limit=None):
    """The incidence structure of Cos(G, L, R)."""
    return CosetGraph(group, left, right, limit).structure


def coset_graph_faithful(group, left, right, limit=None):
    """Whether the action on both coset spaces together is faithful, i.e.
    whether the intersection of the two subgroups is core-free."""
    points = coset_action(group, left, limit)
    blocks = coset_action(group, right, limit)
    offset = points.image.degree
    union_gens = [
        Permutation(tuple(p.images) + tuple(offset + j for j in q.images))
        for p, q in zip(points.image.generators, blocks.image.generators)]
    return GroupWithChain(tuple(union_gens)).order() == group.order()


def _rl_element_set(left, right, limit=None):
    """The product set RL, materialized as one right R-coset per coset of
    (R n L) in L rather than all |R|*|L| pairwise products."""
    limit = element_limit() if limit is None else limit
    inter = subgroup_intersection(left, right, limit)
    transversal = CosetSpace(left, inter).representatives
    rl = set()
    for t in transversal:
        for r in right.elements(limit):
            rl.add((r * t).images)
    if len(rl) != right.order() * len(transversal):
        raise StructureContradiction("double coset sizes inconsistent")
    return rl


def double_coset_lambda(group, left, right, g, _rl=None):
    """|RL n RLg| / |R|, an exact integer: RL is a union of right R-cosets,
    so the count is divisible.  For g in L this is the replication number."""
    rl = _rl_element_set(left, right) if _rl is None else _rl
    hits = 0
    for t in rl:
        if tuple(map(g.images.__getitem__, t)) in rl:
            hits += 1
    r_order = right.order()
    if hits % r_order:
        raise StructureContradiction(
            "|RL n RLg| is not a multiple of |R|")
    return hits // r_order


@dataclass(frozen=True)
class CrosscheckResult:
    constant: bool
    value: int | None
    ratios: tuple
    graph_agrees: bool
    exhaustive: bool
    sample_count: int

    @property
    def ok(self):
        return self.constant and self.graph_agrees


def lambda_constancy_crosscheck(group, left, right, samples=20,
                                exhaustive=None, rng=None, limit=None):
    """Check that |RL n RLg| / |R| is one constant over g outside L, and that
    each value equals the independently computed neighborhood intersection
    |N(a) n N(a^g)| in the coset graph.

    Exhaustive mode walks every g in G minus L; otherwise `samples` draws
    from a seeded RNG.  Defaults to exhaustive when |G| is at most the
    configured exhaustive limit.
    """
    if exhaustive is None:
        exhaustive = group.order() <= exhaustive_limit()
    graph = CosetGraph(group, left, right, limit)
    if left.order() == group.order():
        # no element lies outside L; the constancy claim is vacuous
        return CrosscheckResult(constant=True, value=None, ratios=(),
                                graph_agrees=True, exhaustive=True,
                                sample_count=0)
    rl = _rl_element_set(left, right)
    neighbors = graph.point_neighbors
    base_neighbors = neighbors[0]
    if exhaustive:
        candidates = [g for g in group.elements(limit) if not left.contains(g)]
    else:
        rng = rng or random.Random(0)
        pool = group.elements(limit)
        candidates = []
        while len(candidates) < samples:
            g = pool[rng.randrange(len(pool))]
            if not left.contains(g):
                candidates.append(g)
    ratios = {}
    graph_agrees = True
    for g in candidates:
        value = double_coset_lambda(group, left, right, g, _rl=rl)
        graph_side = len(base_neighbors & neighbors[graph.space_points.position_of(g)])
        if graph_side != value:
            graph_agrees = False
        ratios.setdefault(value, 0)
        ratios[value] += 1
    constant = len(ratios) == 1
    value = next(iter(ratios)) if constant else None
    return CrosscheckResult(constant=constant, value=value,
                            ratios=tuple(sorted(ratios.items())),
                            graph_agrees=graph_agrees,
                            exhaustive=exhaustive,
                            sample_count=len(candidates))


def subgroup_intersection(left, right, limit=None):
    """L n R, by filtering the elements of the smaller subgroup through the
    membership test of the other."""
    small, large = (left, right) if left.order() <= right.order() else (right, left)
    common = [p for p in small.elements(limit) if large.contains(p)]
    non_identity = [p for p in common if not p.is_identity()]
    if not non_identity:
        return GroupWithChain.trivial(left.degree)
    return GroupWithChain(tuple(non_identity))


def is_trivial_factorization(group, left, right, limit=None):
    """True iff G = LR, i.e. |L| * |R| / |L n R| = |G| (complete bipartite
    coset graph)."""
    inter = subgroup_intersection(left, right, limit)
    return left.order() * right.order() == group.order() * inter.order()
