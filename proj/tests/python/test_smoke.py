import pytest

import krstrata as kr


def test_affine_permutations():
    w = kr.AffinePermutation([3, 2])
    assert w.translation_part() == [1, 0]
    assert (w * w).window == [5, 2]
    assert w * w.inverse() == kr.AffinePermutation.identity(2)
    with pytest.raises(kr.KrstrataError) as info:
        kr.AffinePermutation([3, 3])
    assert kr.error_kind(info.value) == "DuplicateResidue"


def test_groups_and_lengths():
    g = kr.AffineWeylGroup.gsp(2)
    assert g.name == "GSp(4)"
    assert len(g.simple_reflections()) == 3
    assert all(g.length(s) == 1 for s in g.simple_reflections())
    assert all(g.length(t) == 3 for t in kr.orbit_translations(2))
    assert g.bruhat_leq(g.omega_generator(), kr.orbit_translations(2)[0])


def test_kr_set_and_report():
    assert [w.window for w in kr.enumerate_perm_gsp(1)] == [[1, 4], [2, 3], [3, 2]]
    assert len(kr.enumerate_adm_gsp(2)) == 13
    report = kr.strata_report(2)
    assert len(report["elements"]) == 13
    assert report["total_polynomial"] == [1, 3, 5, 4]
    assert kr.hasse_dot(1).startswith("digraph KR {")
    with pytest.raises(kr.KrstrataError):
        kr.strata_report(5)


def test_points_and_prank():
    assert kr.count_points(1, 2) == 5
    assert kr.stratified_count(2, 2) == {0: 11, 1: 16, 2: 32}
    g = kr.AffineWeylGroup.gsp(2)
    for w in kr.enumerate_perm_gsp(2):
        pt = kr.orbit_rep(w, 3)
        assert kr.point_p_rank(pt) == kr.p_rank(g, w)
        assert kr.cell_of_point(kr.iwahori_act(kr.random_iwahori(2, 3, 11), pt)) == w
    assert kr.point_count(1, 3) == {"n": 1, "q": 3, "total": 7, "by_p_rank": {"1": 6, "0": 1}, "matches_polynomial": True}


def test_r_polynomials_and_trace():
    g = kr.AffineWeylGroup.gl(2)
    e = kr.AffinePermutation.identity(2)
    for s in g.simple_reflections():
        assert kr.r_polynomial(g, e, s) == [-1, 1]
    assert kr.hecke_verify(kr.AffineWeylGroup.gsp(2), 3)
    assert kr.ss_trace(kr.AffinePermutation([2, 3]), 2, 1) == -1
    assert all(kr.ss_trace(t, 4, 2) == 1 for t in kr.orbit_translations(3))


def test_checks():
    assert "point_prank" in kr.check_names()
    assert kr.run_check("round_trip", 2, 2)[0] == "PASS"
    assert kr.run_check("adm_perm", 4, 2)[0] == "SKIP"
