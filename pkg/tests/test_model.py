import pytest

from kgraphsem import fixtures
from kgraphsem.errors import PresentationError
from kgraphsem.model import (
    KGraphPresentation,
    RayPresentation,
    Tri,
    condition_L,
    degree_matrix,
    full_degree_cycle,
    hereditary_closure,
    is_cofinal,
    is_strongly_connected,
    require_valid,
    require_valid_ray,
    restrict,
    saturated_hereditary_closure,
    simplicity_status,
    structure_report,
    union_reach,
    validate,
    validate_ray,
)


def two_vertex(m):
    return KGraphPresentation(k=1, vertices=("a", "b"), matrices=(m,))


# construction and validation


def test_entry_rejection_negative():
    with pytest.raises(PresentationError, match="negative"):
        two_vertex(((1, -1), (0, 1)))


def test_entry_rejection_bool():
    with pytest.raises(PresentationError):
        two_vertex(((True, 0), (0, 1)))


def test_entry_rejection_non_int():
    with pytest.raises(PresentationError):
        two_vertex(((1.5, 0), (0, 1)))


def test_k_matrix_count_mismatch():
    with pytest.raises(PresentationError):
        KGraphPresentation(
            k=2, vertices=("a",), matrices=(((1,),),)
        )


def test_duplicate_vertex_names():
    with pytest.raises(PresentationError):
        KGraphPresentation(k=1, vertices=("a", "a"), matrices=(((1, 0), (0, 1)),))


def test_non_square_matrix():
    with pytest.raises(PresentationError):
        two_vertex(((1, 0, 0), (0, 1, 0)))


def test_index_and_size():
    g = fixtures.hereditary2()
    assert g.size == 2
    assert g.index("a") == 0
    assert g.index("b") == 1
    with pytest.raises(PresentationError):
        g.index("c")


def test_validate_non_commuting():
    g = KGraphPresentation(
        k=2,
        vertices=("a", "b"),
        matrices=(((1, 0), (1, 0)), ((0, 1), (0, 1))),
    )
    report = validate(g)
    assert not report.commuting
    assert report.commuting_failure == (1, 2)
    with pytest.raises(PresentationError, match="matrices 1 and 2 do not commute"):
        require_valid(g)


def test_validate_zero_row():
    g = two_vertex(((0, 0), (1, 1)))
    report = validate(g)
    assert report.commuting and not report.no_sources
    assert report.source_failure == (1, "a")
    with pytest.raises(PresentationError, match="zero row at vertex 'a'"):
        require_valid(g)


def test_validate_good_inputs():
    for g in (
        fixtures.o2(),
        fixtures.torus(2, 3),
        fixtures.cycle(3, 2),
        fixtures.funnel2c(),
    ):
        report = validate(g)
        assert report.valid


# degree matrices


def test_degree_matrix_torus_powers():
    g = fixtures.torus(2, 3)
    assert degree_matrix(g, (0, 0)) == ((1,),)
    assert degree_matrix(g, (2, 1)) == ((12,),)
    assert degree_matrix(g, (1, 3)) == ((54,),)


def test_degree_matrix_identity_at_zero():
    g = fixtures.cycle(2, 3)
    assert degree_matrix(g, (0, 0)) == (
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
    )


def test_degree_matrix_bad_degree():
    g = fixtures.o2()
    with pytest.raises(PresentationError):
        degree_matrix(g, (1, 2))
    with pytest.raises(PresentationError):
        degree_matrix(g, (-1,))


# reachability and closures


def test_union_reach_funnel():
    g = fixtures.funnel2()
    assert union_reach(g, "a") == ("a", "b")
    assert union_reach(g, "b") == ("b",)


def test_hereditary_closure_hereditary2():
    g = fixtures.hereditary2()
    assert hereditary_closure(g, ("b",)) == ("b",)
    assert hereditary_closure(g, ("a",)) == ("a", "b")


def test_saturated_closure_absorbs_feeder():
    # both of a's edges land in {b}, so saturation pulls a in
    g = fixtures.funnel2()
    assert saturated_hereditary_closure(g, ("b",)) == ("a", "b")


def test_saturated_closure_proper():
    # a keeps a loop, so {b} stays saturated hereditary and proper
    g = fixtures.hereditary2()
    assert saturated_hereditary_closure(g, ("b",)) == ("b",)


def test_is_cofinal_no_with_counterexample():
    g = fixtures.hereditary2()
    verdict, counterexample = is_cofinal(g)
    assert verdict is Tri.NO
    assert counterexample == ("b",)


@pytest.mark.parametrize(
    "name",
    ["o2", "circle1", "funnel2", "funnel3", "funnel2c", "torus(2,3)", "cycle(2,3)"],
)
def test_is_cofinal_yes(name):
    verdict, counterexample = is_cofinal(fixtures.named(name))
    assert verdict is Tri.YES
    assert counterexample is None


def test_strongly_connected():
    assert is_strongly_connected(fixtures.cycle(2, 3))
    assert is_strongly_connected(fixtures.o2())
    assert not is_strongly_connected(fixtures.funnel2())
    assert not is_strongly_connected(fixtures.hereditary2())


# full-degree cycles


@pytest.mark.parametrize(
    "name,expected",
    [
        ("o2", ("v", (1,))),
        ("hereditary2", ("a", (1,))),
        ("funnel2", ("b", (1,))),
        ("funnel3", ("b", (2,))),
        ("cycle(2,3)", ("v0", (3, 3))),
        ("torus(2,3)", ("v", (1, 1))),
    ],
)
def test_full_degree_cycle(name, expected):
    g = fixtures.named(name)
    v, n = full_degree_cycle(g)
    assert (v, n) == expected
    idx = g.index(v)
    assert degree_matrix(g, n)[idx][idx] > 0


# restriction


def test_restrict_full_set_is_identity():
    g = fixtures.cycle(2, 3)
    assert restrict(g, g.vertices) == g


def test_restrict_funnel3():
    g = fixtures.funnel3()
    sub = restrict(g, ("b", "c"))
    assert sub.vertices == ("b", "c")
    assert sub.matrices == (((0, 1), (1, 0)),)


def test_restrict_rejects_non_hereditary():
    g = fixtures.hereditary2()
    with pytest.raises(PresentationError, match="color-1 edge from 'a' to 'b'"):
        restrict(g, ("a",))


# condition (L)


def test_condition_L_single_loop_fails():
    verdict, witness = condition_L(fixtures.circle1())
    assert verdict is Tri.NO
    assert witness == ("v",)


def test_condition_L_two_loops_pass():
    verdict, witness = condition_L(fixtures.o2())
    assert verdict is Tri.YES and witness is None


def test_condition_L_cycle_graph():
    verdict, witness = condition_L(fixtures.cycle(1, 4))
    assert verdict is Tri.NO
    assert witness == ("v0", "v1", "v2", "v3")


def test_condition_L_funnels():
    verdict, witness = condition_L(fixtures.funnel2())
    assert verdict is Tri.YES and witness is None
    verdict, witness = condition_L(fixtures.funnel3())
    assert verdict is Tri.NO
    assert witness == ("b", "c")


def test_condition_L_multicolor_unknown():
    verdict, witness = condition_L(fixtures.torus(2, 3))
    assert verdict is Tri.UNKNOWN and witness is None


# simplicity


def test_simplicity_o2():
    verdict, provenance = simplicity_status(fixtures.o2())
    assert verdict is Tri.YES
    assert provenance == (
        "cofinality: checked (yes)",
        "aperiodicity: checked (no cycle without entrance)",
    )


def test_simplicity_flag_ignored_for_one_color():
    verdict, provenance = simplicity_status(fixtures.o2(), assume_aperiodic=True)
    assert verdict is Tri.YES
    assert "assume-aperiodic flag ignored: the k = 1 check is decisive" in provenance


def test_simplicity_not_cofinal():
    verdict, provenance = simplicity_status(fixtures.hereditary2())
    assert verdict is Tri.NO
    assert provenance[0] == "cofinality: checked (no)"


def test_simplicity_entranceless_cycle():
    verdict, provenance = simplicity_status(fixtures.funnel3())
    assert verdict is Tri.NO
    assert any("cycle without entrance through b, c" in p for p in provenance)


def test_simplicity_multicolor_needs_assumption():
    g = fixtures.torus(2, 3)
    verdict, provenance = simplicity_status(g)
    assert verdict is Tri.UNKNOWN
    assert "aperiodicity: undetermined (k >= 2, no assumption)" in provenance
    verdict, provenance = simplicity_status(g, assume_aperiodic=True)
    assert verdict is Tri.YES
    assert "aperiodicity: assumed (user flag, k >= 2)" in provenance


def test_structure_report_cycle():
    report = structure_report(fixtures.cycle(2, 3))
    assert report.valid
    assert report.cofinal is Tri.YES
    assert report.strongly_connected
    assert report.full_degree_cycle == ("v0", (3, 3))
    assert report.condition_L is Tri.UNKNOWN
    assert report.simplicity is Tri.UNKNOWN
    assert report.nontrivial_saturated_hereditary is None


def test_structure_report_invalid_short_circuits():
    g = two_vertex(((0, 0), (1, 1)))
    report = structure_report(g)
    assert not report.valid
    assert report.cofinal is None and report.full_degree_cycle is None


# rays


def test_ray_block_wrap():
    r = fixtures.bridge((2, 3), (1, 1), prefix_length=1)
    # listed levels 0..1; period 1 starting at level 1
    assert r.level_size(5) == 1
    assert r.block(0, 0) == ((2,),)
    assert r.block(0, 1) == ((3,),)
    assert r.block(0, 2) == ((3,),)
    assert r.block(0, 7) == ((3,),)


def test_ray_validation_commuting_failure():
    r = fixtures.bridge((2, 3), (1, 1))
    report = validate_ray(r)
    assert not report.commuting
    assert report.commuting_failure == (1, 2, 0)
    with pytest.raises(PresentationError, match="colors 1 and 2 at level 0"):
        require_valid_ray(r)


def test_ray_validation_zero_block():
    # zero second color keeps graded commutation but kills no-sources
    r = fixtures.bridge((2, 2), (0, 0))
    report = validate_ray(r)
    assert report.commuting
    assert not report.no_sources
    assert report.source_failure == (2, 0, 0)
    with pytest.raises(PresentationError, match="zero row"):
        require_valid_ray(r)


def test_ray_validation_good():
    r = fixtures.bridge((2, 2), (1, 1))
    report = validate_ray(r)
    assert report.commuting and report.no_sources
    assert report.cofinal is Tri.YES


def test_ray_bad_shape():
    with pytest.raises(PresentationError):
        RayPresentation(
            k=1,
            level_sizes=(1, 1),
            blocks=((((1,),),),),  # one block for two levels
            prefix_length=0,
            period=2,
        )
