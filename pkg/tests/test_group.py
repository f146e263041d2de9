import random

import pytest

from bruteforce import mulclose
from conftest import group, perm
from permdesign.group import (ActionClosureError, EnumerationLimitError,
                              GroupWithChain, MembershipError,
                              induced_action, normal_closure,
                              prime_order_class_representatives)
from permdesign.perm import Permutation


def test_alternating_7_order(a7):
    assert a7.order() == 2520  # 7!/2


def test_frobenius_21_order_vs_closure(frobenius21):
    assert frobenius21.order() == 21
    assert len(mulclose(frobenius21.generators)) == 21


def test_trivial_group():
    g = GroupWithChain((Permutation.identity(4),))
    assert g.order() == 1
    assert g.contains(Permutation.identity(4))
    assert not g.contains(perm("(1 2)", 4))


def test_empty_generators_rejected():
    with pytest.raises(ValueError):
        GroupWithChain(())


def test_generator_degree_mismatch():
    with pytest.raises(ValueError):
        GroupWithChain((perm("(1 2)", 3), perm("(1 2)", 4)))


# deterministic construction: same generators, same chain
def test_chain_is_deterministic(a7):
    again = group(7, "(1 2 3)", "(1 2 3 4 5 6 7)")
    assert again.base() == a7.base()
    assert [len(l.orbit) for l in again._chain.levels] == \
           [len(l.orbit) for l in a7._chain.levels]


CLOSURE_CASES = [
    ("s4", 4, ("(1 2)", "(1 2 3 4)"), 24),
    ("d4", 4, ("(1 2 3 4)", "(1 3)"), 8),
    ("c6", 6, ("(1 2 3 4 5 6)",), 6),
    ("f21", 7, ("(1 2 3 4 5 6 7)", "(1 2 4)(3 6 5)"), 21),
    ("a5", 5, ("(1 2 3)", "(3 4 5)"), 60),
    ("s6", 6, ("(1 2)", "(1 2 3 4 5 6)"), 720),
    ("pgl32", 7, ("(1 2 3 4 5 6 7)", "(1 2)(3 6)"), None),
    ("a7", 7, ("(1 2 3)", "(1 2 3 4 5 6 7)"), 2520),
]


@pytest.mark.parametrize("name,deg,gens,expected",
                         CLOSURE_CASES, ids=[c[0] for c in CLOSURE_CASES])
def test_chain_order_equals_bruteforce_closure(name, deg, gens, expected):
    g = group(deg, *gens)
    closure = len(mulclose(g.generators))
    assert g.order() == closure
    if expected is not None:
        assert g.order() == expected


def test_membership_of_100_random_words(a7):
    rng = random.Random(5)
    for _ in range(100):
        w = Permutation.identity(7)
        for _ in range(rng.randrange(1, 12)):
            g = a7.generators[rng.randrange(len(a7.generators))]
            w = w * (g if rng.randrange(2) else g.inverse())
        assert a7.contains(w)


def test_membership_rejects_odd_permutation(a7):
    assert not a7.contains(perm("(1 2)", 7))


def test_membership_rejects_point_outside_orbit():
    g = group(4, "(1 2)")
    assert not g.contains(perm("(3 4)", 4))


def test_orbit_full_cycle():
    g = group(7, "(1 2 3 4 5 6 7)")
    assert g.orbit(0) == frozenset(range(7))
    assert g.is_transitive()


def test_orbit_fixed_point():
    g = group(3, "(1 2)")
    assert g.orbit(2) == frozenset({2})
    assert not g.is_transitive()


def test_orbit_out_of_range(a7):
    with pytest.raises(ValueError):
        a7.orbit(7)


@pytest.mark.parametrize("deg,gens,point,stab_order", [
    (7, ("(1 2 3 4 5 6 7)", "(1 2)(3 6)"), 0, 24),   # projective plane group
    (7, ("(1 2 3 4 5 6 7)", "(1 2 4)(3 6 5)"), 3, 3),
    (4, ("(1 2)", "(1 2 3 4)"), 2, 6),
])
def test_point_stabilizer_orders(deg, gens, point, stab_order):
    g = group(deg, *gens)
    stab = g.point_stabilizer(point)
    assert stab.order() == stab_order
    assert g.order() == len(g.orbit(point)) * stab.order()
    for x in stab.generators:
        assert x.apply(point) == point


def test_point_stabilizer_of_trivial_group():
    g = GroupWithChain((Permutation.identity(5),))
    assert g.point_stabilizer(2).order() == 1


def test_orbit_stabilizer_identity_random_groups():
    rng = random.Random(11)
    for _ in range(20):
        deg = rng.randrange(4, 9)
        gens = []
        for _ in range(2):
            images = list(range(deg))
            rng.shuffle(images)
            gens.append(Permutation(images))
        g = GroupWithChain(tuple(gens))
        pt = rng.randrange(deg)
        assert g.order() == len(g.orbit(pt)) * g.point_stabilizer(pt).order()


def test_normal_closure_of_three_cycle_in_s4(s4):
    n = normal_closure(s4, [perm("(1 2 3)", 4)])
    assert n.order() == 12
    # closure is normal: conjugates of its generators stay inside
    for x in n.generators:
        for g in s4.generators:
            assert n.contains(x.conjugated_by(g))


def test_normal_closure_of_identity(s4):
    assert normal_closure(s4, [Permutation.identity(4)]).order() == 1


def test_normal_closure_translation_subgroup(frobenius21):
    n = normal_closure(frobenius21, [perm("(1 2 3 4 5 6 7)", 7)])
    assert n.order() == 7


def test_normal_closure_seed_outside_group(frobenius21):
    with pytest.raises(MembershipError):
        normal_closure(frobenius21, [perm("(1 2)", 7)])


def test_normal_closure_is_smallest(s4):
    # brute force: every normal subgroup of S4 containing (1 2)(3 4) contains
    # the Klein group, and the closure equals it
    n = normal_closure(s4, [perm("(1 2)(3 4)", 4)])
    assert n.order() == 4
    klein = {(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)}
    assert {p.images for p in n.elements()} == klein


def test_prime_order_class_reps_c6():
    c6 = group(6, "(1 2 3 4 5 6)")
    reps = prime_order_class_representatives(c6)
    assert {r.order() for r in reps} == {2, 3}


def test_prime_order_class_reps_s3():
    s3 = group(3, "(1 2)", "(1 2 3)")
    reps = prime_order_class_representatives(s3)
    assert sorted(r.order() for r in reps) == [2, 3]


def test_prime_order_class_reps_trivial():
    g = GroupWithChain((Permutation.identity(3),))
    assert prime_order_class_representatives(g) == []


def test_prime_order_class_reps_cover_all_prime_elements(s4):
    reps = prime_order_class_representatives(s4)
    # every prime-order element of S4 must be conjugate to a listed rep
    by_rep = set()
    for r in reps:
        stack = [r]
        seen = {r.images}
        while stack:
            x = stack.pop()
            for g in s4.generators:
                c = x.conjugated_by(g)
                if c.images not in seen:
                    seen.add(c.images)
                    stack.append(c)
        by_rep |= seen
    for t in mulclose(s4.generators):
        p = Permutation(t)
        o = p.order()
        if o in (2, 3):
            assert p.images in by_rep


def test_enumeration_limit():
    with pytest.raises(EnumerationLimitError):
        group(7, "(1 2 3)", "(1 2 3 4 5 6 7)").elements(limit=100)


def test_elements_are_distinct_and_complete(s4):
    els = s4.elements()
    assert len(els) == 24
    assert len({p.images for p in els}) == 24


def test_induced_action_faithful_on_fano_lines(fano_pair):
    structure, g = fano_pair
    action = induced_action(
        g, structure.blocks,
        lambda blk, x: tuple(sorted(x.images[p] for p in blk)))
    assert action.faithful
    assert action.image.order() == 168


def test_induced_action_single_fixed_object(s4):
    action = induced_action(s4, ["anchor"], lambda obj, g: obj)
    assert action.image.order() == 1
    assert not action.faithful  # |S4| > 1


def test_induced_action_closure_error(s4):
    with pytest.raises(ActionClosureError):
        induced_action(s4, [0, 1], lambda obj, g: g.images[obj])


def test_induced_action_faithfulness_matches_bruteforce_kernel():
    cases = [
        group(6, "(1 2 3 4 5 6)"),          # on the two alternating cells
        group(4, "(1 2 3 4)", "(1 3)"),     # D4 on the two diagonals
    ]
    cells = [({0, 2, 4}, {1, 3, 5}), ({0, 2}, {1, 3})]
    for g, objs in zip(cases, cells):
        action = induced_action(
            g, [frozenset(c) for c in objs],
            lambda cell, x: frozenset(x.images[p] for p in cell))
        kernel = sum(
            1 for t in mulclose(g.generators)
            if all(frozenset(t[p] for p in cell) == cell for cell in objs))
        assert action.faithful == (kernel == 1)
        assert action.image.order() * kernel == g.order()
