import pytest

from conftest import group
from permdesign.analysis import primitivity_status
from permdesign.designgroup import (DesignAction, PreservationError,
                                    RepeatedBlockError, TrivialDesignError,
                                    block_stabilizer, is_flag_transitive,
                                    is_locally_primitive, point_block_actions)
from permdesign.incidence import IncidenceStructure, complement

# cyclic labeling: lines {i, i+1, i+3} mod 7
FANO_BLOCKS = [[0, 1, 3], [0, 2, 6], [0, 4, 5], [1, 2, 4],
               [1, 5, 6], [2, 3, 5], [3, 4, 6]]
SINGER_FANO_GROUP = ("(1 2 3 4 5 6 7)", "(1 2)(3 6)")
SINGER_F21 = ("(1 2 3 4 5 6 7)", "(1 2 4)(3 6 5)")


def singer_fano():
    return IncidenceStructure(v=7, blocks=FANO_BLOCKS)


def test_preservation_error():
    s3 = group(3, "(1 2)", "(1 2 3)")
    s = IncidenceStructure(v=3, blocks=[[0, 1]])
    with pytest.raises(PreservationError):
        DesignAction(s3, s)


def test_degree_mismatch_is_preservation_error():
    with pytest.raises(PreservationError):
        DesignAction(group(4, "(1 2)"), singer_fano())


def test_repeated_blocks_rejected():
    s = IncidenceStructure(v=3, blocks=[[0, 1, 2], [0, 1, 2]])
    with pytest.raises(RepeatedBlockError):
        DesignAction(group(3, "(1 2 3)"), s)


def test_block_stabilizer_order_full_group(fano_pair):
    structure, g = fano_pair
    stab = block_stabilizer(g, structure, 0)
    assert stab.order() == 24  # 168 / 7
    blk = set(structure.blocks[0])
    for x in stab.generators:
        assert {x.images[p] for p in blk} == blk


def test_block_stabilizer_order_frobenius():
    g = group(7, *SINGER_F21)
    stab = block_stabilizer(g, singer_fano(), 0)
    assert stab.order() == 3  # 21 / 7


def test_point_block_actions(fano_pair):
    structure, g = fano_pair
    point_action, blk_action = point_block_actions(g, structure, 0, 0)
    assert point_action.image.degree == 3   # three blocks through each point
    assert blk_action.image.degree == 3     # three points on each block
    assert point_action.image.is_transitive()
    assert blk_action.image.is_transitive()


def test_flag_transitive_frobenius_on_its_plane():
    g = group(7, *SINGER_F21)
    assert is_flag_transitive(g, singer_fano())


def test_not_flag_transitive_cyclic():
    z7 = group(7, "(1 2 3 4 5 6 7)")
    assert not is_flag_transitive(z7, singer_fano())


def test_not_flag_transitive_frobenius_on_complement():
    g = group(7, *SINGER_F21)
    assert not is_flag_transitive(g, complement(singer_fano()))


def test_locally_primitive_full_fano_group(fano_pair):
    structure, g = fano_pair
    report = is_locally_primitive(g, structure)
    assert report.locally_primitive
    assert report.flag_transitive and report.point_primitive
    assert report.block_quasiprimitive
    assert report.stabilizer_bound_ok


def test_locally_primitive_agl_on_affine_planes(ag322_pair):
    structure, g = ag322_pair
    report = is_locally_primitive(g, structure)
    assert report.locally_primitive
    assert report.point_primitive
    assert report.block_quasiprimitive is False


def test_cyclic_group_report_short_circuits():
    z7 = group(7, "(1 2 3 4 5 6 7)")
    report = is_locally_primitive(z7, singer_fano())
    assert not report.flag_transitive
    assert not report.point_local_primitive  # trivial stabilizer on 3 blocks
    assert report.notes


def test_trivial_design_detected():
    s = IncidenceStructure(v=3, blocks=[[0, 1, 2]])
    with pytest.raises(TrivialDesignError):
        is_locally_primitive(group(3, "(1 2 3)", "(1 2)"), s)


def test_stabilizer_bound_on_fano(fano_pair):
    structure, g = fano_pair
    action = DesignAction(g, structure)
    alpha = structure.blocks[0][0]
    g_alpha = action.point_stabilizer_union(alpha)
    g_alpha_beta = g_alpha.point_stabilizer(structure.v + 0)
    assert g.order() == 168
    assert g_alpha.order() == 24
    assert g_alpha_beta.order() == 8
    assert g_alpha.order() ** 3 // g_alpha_beta.order() ** 2 == 216
    assert 168 < 216
    assert action.stabilizer_bound_holds()


def test_stabilizer_bound_on_flag_transitive_corpus(corpus_instances):
    for inst in corpus_instances:
        action = DesignAction(inst.group, inst.structure)
        if action.is_flag_transitive():
            assert action.stabilizer_bound_holds(), inst.name


def test_faithful_on_blocks_across_corpus(corpus_instances):
    for inst in corpus_instances:
        action = DesignAction(inst.group, inst.structure)
        assert action.block_action.faithful, inst.name


def test_local_primitivity_consequences_never_violated(corpus_instances):
    # strict mode raises if a locally primitive instance were not
    # flag-transitive and point-primitive; it must not
    for inst in corpus_instances:
        report = is_locally_primitive(inst.group, inst.structure, strict=True)
        if report.locally_primitive:
            assert report.flag_transitive and report.point_primitive


def test_dual_of_symmetric_locally_primitive_design(pg232_pair):
    # the dual of a symmetric locally primitive design, under the induced
    # block action, is again locally primitive with the same parameters
    from permdesign.incidence import dual, verify_design
    structure, g = pg232_pair
    action = DesignAction(g, structure)
    dual_structure = dual(structure)
    dual_group = action.block_action.image
    report = DesignAction(dual_group, dual_structure).local_primitivity_report()
    assert report.locally_primitive
    p, pd = verify_design(structure), verify_design(dual_structure)
    assert (p.v, p.b, p.r, p.k, p.lam) == (pd.v, pd.b, pd.r, pd.k, pd.lam)


def test_symmetric_locally_primitive_is_primitive_both_sides(corpus_instances):
    from permdesign.analysis import is_primitive
    from permdesign.incidence import verify_design
    seen_symmetric = 0
    for inst in corpus_instances:
        params = verify_design(inst.structure)
        if not params.symmetric:
            continue
        action = DesignAction(inst.group, inst.structure)
        report = action.local_primitivity_report()
        if report.locally_primitive:
            seen_symmetric += 1
            assert report.point_primitive, inst.name
            assert is_primitive(action.block_action.image), inst.name
    assert seen_symmetric >= 3  # both planes and the coset instance


def test_complement_pair_count_identity(fano_pair, pg232_pair):
    from permdesign.incidence import verify_design
    for structure, _ in (fano_pair, pg232_pair):
        p = verify_design(structure)
        pc = verify_design(complement(structure))
        assert pc.lam == p.b - 2 * p.r + p.lam


def test_imprimitivity_cells_have_disjoint_blocks(corpus_instances):
    from permdesign.analysis import minimal_block_system
    for inst in corpus_instances:
        action = DesignAction(inst.group, inst.structure)
        report = is_locally_primitive(inst.group, inst.structure)
        if not (report.locally_primitive
                and report.block_quasiprimitive is False):
            continue
        image = action.block_action.image
        assert primitivity_status(image) == "imprimitive"
        blocks = inst.structure.blocks
        seen = set()
        for j in range(1, len(blocks)):
            system = minimal_block_system(image, 0, j)
            if system.is_trivial or system.cells in seen:
                continue
            seen.add(system.cells)
            for cell in system.cells:
                covered = set()
                for idx in cell:
                    assert not covered & set(blocks[idx]), inst.name
                    covered |= set(blocks[idx])
