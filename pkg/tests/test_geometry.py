import random

import pytest

from permdesign.geometry import (SizeLimitError, agl_order, all_vectors,
                                 build_AG, build_PG,
                                 build_symplectic_subdesign,
                                 classical_group_generators,
                                 enumerate_subspaces, gaussian_coefficient,
                                 gl_order, index_vector, parallel_classes,
                                 pgl_order, sp_order, span_vectors,
                                 symplectic_form, vector_index)
from permdesign.gf import (SUPPORTED_PRIME_POWERS, FiniteField,
                           UnsupportedFieldError, field)
from permdesign.incidence import t_design_strength, verify_design

ALL_Q = (2, 3, 4, 5, 7, 8, 9, 16, 25, 27)


@pytest.mark.parametrize("q", ALL_Q)
def test_field_axioms_spot_check(q):
    gf = field(q)
    rng = random.Random(q)
    for _ in range(200):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert gf.add(a, b) == gf.add(b, a)
        assert gf.mul(a, b) == gf.mul(b, a)
        assert gf.add(gf.add(a, b), c) == gf.add(a, gf.add(b, c))
        assert gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c))
        assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))
        assert gf.add(a, gf.neg(a)) == 0
        if a:
            assert gf.mul(a, gf.inv(a)) == 1


@pytest.mark.parametrize("q", ALL_Q)
def test_multiplicative_group_cyclic(q):
    gf = field(q)
    g = gf.generator
    seen = set()
    x = 1
    for _ in range(q - 1):
        x = gf.mul(x, g)
        seen.add(x)
    assert len(seen) == q - 1  # generator has full order


def test_unsupported_field():
    with pytest.raises(UnsupportedFieldError):
        FiniteField(6)
    with pytest.raises(UnsupportedFieldError):
        FiniteField(49)  # prime power without a stored polynomial
    assert 49 not in SUPPORTED_PRIME_POWERS


def test_gaussian_coefficients():
    assert gaussian_coefficient(3, 1, 2) == 7
    assert gaussian_coefficient(4, 2, 2) == 35
    assert gaussian_coefficient(3, 2, 2) == 7
    assert gaussian_coefficient(5, 0, 3) == 1
    assert gaussian_coefficient(4, 5, 2) == 0
    assert gaussian_coefficient(4, -1, 2) == 0


@pytest.mark.parametrize("d,i,q", [
    (2, 1, 2), (3, 1, 2), (3, 2, 2), (4, 2, 2), (4, 1, 3), (4, 3, 2),
    (3, 2, 3), (5, 2, 2), (5, 3, 2), (4, 2, 3),
])
def test_subspace_counts_match_gaussian(d, i, q):
    subs = enumerate_subspaces(d, q, i)
    assert len(subs.canonical_matrices) == gaussian_coefficient(d, i, q)


def test_subspaces_pairwise_distinct_row_spaces():
    gf = field(2)
    spans = {span_vectors(gf, m)
             for m in enumerate_subspaces(4, 2, 2).canonical_matrices}
    assert len(spans) == 35


def test_whole_space_is_single_subspace():
    assert len(enumerate_subspaces(3, 2, 3).canonical_matrices) == 1


def test_vector_indexing_round_trip():
    for q, d in ((2, 4), (3, 3), (4, 2)):
        for i in range(q ** d):
            assert vector_index(index_vector(i, d, q), q) == i
    assert len(all_vectors(3, 2)) == 8


@pytest.mark.parametrize("family,dim,q,expected", [
    ("GL", 3, 2, 168),
    ("GL", 2, 3, 48),
    ("GL", 4, 2, 20160),
    ("PGL", 3, 2, 168),
    ("PGL", 4, 2, 20160),
    ("PGL", 3, 3, 5616),
    ("AGL", 3, 2, 1344),
    ("AGL", 1, 8, 56),
    ("Sp", 4, 2, 720),
])
def test_classical_group_orders(family, dim, q, expected):
    g = classical_group_generators(family, dim, q)
    assert g.order() == expected
    formula = {"GL": gl_order, "AGL": agl_order, "PGL": pgl_order}.get(family)
    if formula is not None:
        assert formula(dim, q) == expected
    else:
        assert sp_order(dim // 2, q) == expected


def test_sp_order_formula():
    assert sp_order(2, 2) == 2 ** 4 * (2 ** 2 - 1) * (2 ** 4 - 1)


def test_symplectic_form_invariance():
    g = classical_group_generators("Sp", 4, 2)
    rng = random.Random(12)
    for x in g.generators:
        for _ in range(100):
            u = index_vector(rng.randrange(16), 4, 2)
            v = index_vector(rng.randrange(16), 4, 2)
            gu = index_vector(x.images[vector_index(u, 2)], 4, 2)
            gv = index_vector(x.images[vector_index(v, 2)], 4, 2)
            assert symplectic_form(gu, gv, 2) == symplectic_form(u, v, 2)


def test_build_pg_fano(fano_pair):
    structure, g = fano_pair
    params = verify_design(structure)
    assert (params.v, params.k, params.lam) == (7, 3, 1)
    assert g.order() == 168


def test_build_pg_15_3_1(pg132_pair):
    structure, g = pg132_pair
    params = verify_design(structure)
    assert (params.v, params.b, params.r, params.k, params.lam) == \
           (15, 35, 7, 3, 1)
    assert g.order() == 20160


def test_build_pg_15_7_3(pg232_pair):
    structure, g = pg232_pair
    params = verify_design(structure)
    assert (params.v, params.b, params.k, params.lam) == (15, 15, 7, 3)
    assert params.symmetric


def test_build_pg_argument_validation():
    with pytest.raises(ValueError):
        build_PG(1, 2, 1)
    with pytest.raises(ValueError):
        build_PG(3, 2, 3)


def test_build_ag322(ag322_pair):
    structure, g = ag322_pair
    params = verify_design(structure)
    assert (params.v, params.b, params.r, params.k, params.lam) == \
           (8, 14, 7, 4, 3)
    assert g.order() == 1344


def test_build_ag_affine_plane_order_3():
    structure, g = build_AG(2, 3, 1)
    params = verify_design(structure)
    assert (params.v, params.b, params.r, params.k, params.lam) == \
           (9, 12, 4, 3, 1)
    assert g.order() == agl_order(2, 3)


def test_binary_affine_designs_are_3_designs():
    for d, i in ((3, 2), (4, 2), (4, 3)):
        structure, _ = build_AG(d, 2, i)
        t_max, _ = t_design_strength(structure)
        assert t_max >= 3, (d, i)


def test_ag_blocks_through_origin_are_subspaces(ag322_pair):
    structure, _ = ag322_pair
    gf = field(2)
    for block in structure.blocks:
        if 0 not in block:
            continue
        vecs = [index_vector(p, 3, 2) for p in block]
        for u in vecs:
            for v in vecs:
                s = tuple(gf.add(a, b) for a, b in zip(u, v))
                assert vector_index(s, 2) in block
            for c in range(2):
                s = tuple(gf.mul(c, a) for a in u)
                assert vector_index(s, 2) in block


def test_ag_parallelism(ag322_pair):
    structure, _ = ag322_pair
    classes = parallel_classes(structure, 2, 3)
    assert len(classes) == 7
    for cls in classes:
        covered = set()
        for j in cls:
            block = set(structure.blocks[j])
            assert not covered & block
            covered |= block
        assert covered == set(range(8))


def test_build_symplectic_2_2(symplectic_pair):
    structure, g = symplectic_pair
    params = verify_design(structure)
    assert (params.v, params.b, params.r, params.k, params.lam) == \
           (16, 80, 20, 4, 4)
    assert g.order() == 11520


def test_symplectic_blocks_proper_subset_of_affine(symplectic_pair):
    structure, _ = symplectic_pair
    ag, _ = build_AG(4, 2, 2)
    assert set(structure.blocks) < set(ag.blocks)


def test_symplectic_strength_exactly_two(symplectic_pair):
    t_max, _ = t_design_strength(symplectic_pair[0])
    assert t_max == 2


def test_symplectic_argument_validation():
    with pytest.raises(ValueError):
        build_symplectic_subdesign(1, 2)


def test_size_limit():
    with pytest.raises(SizeLimitError):
        enumerate_subspaces(20, 2, 2)
    with pytest.raises(SizeLimitError):
        classical_group_generators("GL", 20, 2)


@pytest.mark.parametrize("d,q,i", [
    (2, 3, 1), (4, 2, 1), (4, 2, 2), (4, 2, 3),
    (2, 4, 1), (2, 5, 1), (3, 3, 1), (3, 3, 2),
])
def test_projective_design_parameter_formula(d, q, i):
    structure, g = build_PG(d, q, i)
    params = verify_design(structure)
    assert params.v == (q ** (d + 1) - 1) // (q - 1)
    assert params.k == (q ** (i + 1) - 1) // (q - 1)
    assert params.lam == gaussian_coefficient(d - 1, i - 1, q)
    assert params.r == gaussian_coefficient(d, i, q)
    assert params.b == gaussian_coefficient(d + 1, i + 1, q)
    assert g.order() == pgl_order(d + 1, q)


@pytest.mark.parametrize("d,q,i", [
    (3, 2, 1), (4, 2, 2), (2, 3, 1), (3, 3, 1),
    (4, 2, 1), (2, 5, 1), (3, 3, 2), (2, 4, 1),
])
def test_affine_design_parameter_formula(d, q, i):
    structure, g = build_AG(d, q, i)
    params = verify_design(structure)
    assert params.v == q ** d
    assert params.k == q ** i
    expected_lam = gaussian_coefficient(d - 1, i - 1, q) if i >= 2 else 1
    assert params.lam == expected_lam
    assert g.order() == agl_order(d, q)
