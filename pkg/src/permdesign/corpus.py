"""The bundled instance corpus: one (group, design) pair per construction
studied by the pipeline, covering all three rows of the reduction theorem
(almost simple + quasiprimitive blocks, affine + affine blocks, affine +
non-quasiprimitive blocks)."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cosets import coset_action, coset_graph_design, subgroup_intersection
from .discovery import (cyclic_normalizer, first_element_of_order,
                        random_subgroups_of_order, subgroups_conjugate_in)
from .geometry import build_AG, build_PG, build_symplectic_subdesign
from .group import GroupWithChain
from .incidence import IncidenceStructure
from .io import write_design_file, write_group_file
from .perm import Permutation

CORPUS_SEED = 20240701


@dataclass(frozen=True)
class CorpusInstance:
    name: str
    structure: IncidenceStructure
    group: GroupWithChain
    description: str


def frobenius21_in(pgl32):
    """The order-21 normalizer of a cyclic group of order 7 inside the
    projective group of the smallest projective plane, reduced to two
    generators (an order-7 and an order-3 element)."""
    sigma = first_element_of_order(pgl32, 7)
    norm = cyclic_normalizer(pgl32, sigma)
    tau = first_element_of_order(norm, 3)
    frob = GroupWithChain((sigma, tau))
    if frob.order() != 21:
        raise RuntimeError(f"normalizer construction gave order {frob.order()}")
    return frob


def alternating7():
    return GroupWithChain((Permutation.from_cycles("(1 2 3)", 7),
                           Permutation.from_cycles("(1 2 3 4 5 6 7)", 7)))


def discover_a7_subgroups(rng=None, max_candidates=200):
    """Subgroups L (order 168), R (order 72), and a second order-168
    subgroup from the other conjugacy class, each meeting L in a subgroup
    of order 24, so that the two coset graphs carry the two 15-point
    designs."""
    rng = rng or random.Random(CORPUS_SEED)
    a7 = alternating7()
    left = random_subgroups_of_order(a7, 168, rng=rng)[0]
    right = None
    for _ in range(max_candidates):
        cand = random_subgroups_of_order(a7, 72, rng=rng)[0]
        if subgroup_intersection(left, cand).order() == 24:
            right = cand
            break
    if right is None:
        raise RuntimeError("no order-72 subgroup meeting L in order 24")
    other = None
    found = [left]
    for _ in range(max_candidates):
        cand = random_subgroups_of_order(a7, 168, rng=rng,
                                         distinct_from=found)[0]
        found.append(cand)
        if subgroups_conjugate_in(a7, left, cand):
            continue
        if subgroup_intersection(left, cand).order() == 24:
            other = cand
            break
    if other is None:
        raise RuntimeError("no non-conjugate order-168 partner found")
    return a7, left, right, other


def a7_instances(rng=None):
    a7, left, right, other = discover_a7_subgroups(rng)
    point_group = coset_action(a7, left).image
    nonsym = coset_graph_design(a7, left, right)
    sym = coset_graph_design(a7, left, other)
    return (CorpusInstance(
                name="a7-cos-15-3-1", structure=nonsym, group=point_group,
                description="coset graph of the alternating group of degree 7 "
                            "on subgroups of orders 168 and 72"),
            CorpusInstance(
                name="a7-cos-15-7-3", structure=sym, group=point_group,
                description="coset graph on two non-conjugate order-168 "
                            "subgroups (symmetric)"))


def bundled_corpus(rng=None):
    """Deterministic list of all bundled instances."""
    out = []
    fano, pgl32 = build_PG(2, 2, 1)
    out.append(CorpusInstance("fano-pgl32", fano, pgl32,
                              "smallest projective plane with its full "
                              "projective group"))
    out.append(CorpusInstance("fano-frobenius21", fano, frobenius21_in(pgl32),
                              "smallest projective plane with the order-21 "
                              "Frobenius subgroup"))
    pg1, pgl42 = build_PG(3, 2, 1)
    out.append(CorpusInstance("pg1-3-2-pgl42", pg1, pgl42,
                              "lines of the binary projective 3-space"))
    pg2, _ = build_PG(3, 2, 2)
    out.append(CorpusInstance("pg2-3-2-pgl42", pg2, pgl42,
                              "planes of the binary projective 3-space "
                              "(symmetric)"))
    ag, agl32 = build_AG(3, 2, 2)
    out.append(CorpusInstance("ag2-3-2-agl32", ag, agl32,
                              "planes of the binary affine 3-space"))
    sympl, spgroup = build_symplectic_subdesign(2, 2)
    out.append(CorpusInstance("symplectic-2-2", sympl, spgroup,
                              "cosets of the non-degenerate planes of a "
                              "4-dimensional binary symplectic space"))
    out.extend(a7_instances(rng))
    return out


def write_corpus(directory, rng=None):
    """Write the bundled corpus as <name>.group / <name>.design pairs."""
    import os

    os.makedirs(directory, exist_ok=True)
    written = []
    for inst in bundled_corpus(rng):
        gpath = os.path.join(directory, f"{inst.name}.group")
        dpath = os.path.join(directory, f"{inst.name}.design")
        write_group_file(gpath, inst.group, comment=inst.description)
        write_design_file(dpath, inst.structure, comment=inst.description)
        written.append((gpath, dpath))
    return written
