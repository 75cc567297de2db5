import random

import pytest

from gtrscodes import (
    ConstructionError,
    ConstructionResult,
    GTRSError,
    check_self_dual_criterion,
    classify_eta,
    code,
    construct_class1,
    construct_class2,
    plus_gtrs,
    sweep_constructions,
    zeta_roots,
)

from conftest import field_q2, sweep_cache


def test_criterion_on_bundled_instance(gf49):
    w = next(x for x in gf49.primitive_elements() if gf49.pow(x, 8) == 3)
    alpha = [1, 2, 3, 4, 5, 6]
    v = [gf49.pow(w, 4), 1, gf49.pow(w, 11), 3, gf49.pow(w, 9), w]
    params = plus_gtrs(gf49, alpha, v, gf49.pow(w, 4), 3)
    assert check_self_dual_criterion(params)
    # oracle: direct Hermitian Gram check on the assembled code
    assert code(params).is_hermitian_self_dual()
    # perturbing eta breaks it
    broken = plus_gtrs(gf49, alpha, v, 1, 3)
    assert not check_self_dual_criterion(broken)
    assert not code(broken).is_hermitian_self_dual()


def test_criterion_errors(gf49):
    with pytest.raises(GTRSError):
        check_self_dual_criterion(plus_gtrs(gf49, [1, 2, 3], [1, 1, 1], 5, 1))
    a = 1 + 2 + 3 + 4
    params = plus_gtrs(gf49, [1, 2, 3, 4], [1, 1, 1, 1],
                       gf49.neg(gf49.inv(gf49.scalar(a))), 2)
    with pytest.raises(GTRSError):
        check_self_dual_criterion(params)


@pytest.mark.parametrize("q", [2, 3, 5, 7, 8, 9, 11])
def test_zeta_roots_count(q):
    f = field_q2(q)
    roots = zeta_roots(f)
    assert len(roots) == q
    assert all(r != 0 for r in roots)
    for r in roots:
        val = f.add(f.add(f.pow(r, q), f.pow(r, q - 1)), 1)
        assert val == 0
    # oracle: full scan of the unit group
    scan = {x for x in range(1, f.order)
            if f.add(f.add(f.pow(x, q), f.pow(x, q - 1)), 1) == 0}
    assert set(roots) == scan


def test_zeta_roots_gf4():
    f = field_q2(2)
    w = f.generator
    assert set(zeta_roots(f)) == {w, f.mul(w, w)}


def test_classify_eta(gf49):
    assert classify_eta(gf49, 0, 5) == "MDS"
    a = 3
    eta = gf49.div(gf49.neg(gf49.scalar(2)), a)
    assert classify_eta(gf49, a, eta) == "NMDS"
    assert classify_eta(gf49, a, gf49.add(eta, 1)) == "MDS"
    gf4 = field_q2(2)
    for a in (1,):
        for eta in range(1, 4):
            assert classify_eta(gf4, a, eta) == "MDS"


def test_class1_zero_sum_family(gf49):
    res = construct_class1(gf49, 0, gf49.subfield_elements()[1:])
    assert res.a == 0
    etas = [e for e, _ in res.eta_list]
    assert len(etas) == 6
    # exactly the solutions of eta^6 = -1
    for e in etas:
        assert gf49.pow(e, 6) == gf49.neg(1)
    assert sorted(gf49.log[e] for e in etas) == [4, 12, 20, 28, 36, 44]
    assert all(lbl == "MDS" for _, lbl in res.eta_list)
    for _eta, _lbl, c in res.codes():
        assert c.is_hermitian_self_dual()
        assert c.min_distance() == 4


def test_class1_nonzero_sum(gf49):
    res = construct_class1(gf49, 1, gf49.subfield_elements()[:6])
    assert res.a != 0
    # the zeta-equation substitution yields q = 7 candidates before the filter
    assert len(res.eta_list) + res.filtered == 7
    labels = [lbl for _, lbl in res.eta_list]
    assert labels.count("NMDS") <= 1
    for eta, lbl, c in res.codes():
        assert c.is_hermitian_self_dual()
        assert c.min_distance() == (3 if lbl == "NMDS" else 4)


def test_class1_u_in_subfield(gf49):
    from gtrscodes import u_vector
    for a_l in gf49.subfield_elements():
        res = construct_class1(gf49, a_l, gf49.subfield_elements()[:4])
        for u in u_vector(gf49, res.alpha):
            assert gf49.in_subfield(u) and u != 0


def test_class1_errors(gf49):
    sub = gf49.subfield_elements()
    with pytest.raises(ConstructionError):
        construct_class1(gf49, 0, sub[:3])            # odd length
    with pytest.raises(ConstructionError):
        construct_class1(gf49, 0, list(sub) + [1])    # repeat / too long
    with pytest.raises(ConstructionError):
        construct_class1(gf49, gf49.generator, sub[:4])  # label outside subfield
    gf16 = field_q2(4)
    with pytest.raises(ConstructionError):
        # the four elements of GF(4) sum to zero: a = 0 in characteristic 2
        construct_class1(gf16, 0, gf16.subfield_elements())


def test_class2_zero_sum_family(gf49):
    res = construct_class2(gf49, 0, 4, gf49.subfield_elements()[1:])
    assert res.a == 0
    w = gf49.generator
    beta = gf49.pow(w, 4)
    for e, lbl in res.eta_list:
        assert gf49.pow(e, 6) == gf49.neg(gf49.pow(beta, -6))
        assert lbl == "MDS"
    assert len(res.eta_list) == 6
    for _eta, _lbl, c in res.codes():
        assert c.is_hermitian_self_dual()
        assert c.min_distance() == 4


def test_class2_nonzero_sum(gf49):
    res = construct_class2(gf49, 1, 3, gf49.subfield_elements()[:6])
    for eta, lbl, c in res.codes():
        assert c.is_hermitian_self_dual()
        assert classify_eta(gf49, res.a, eta) == lbl


def test_class2_locators_form_shifted_line(gf49):
    res = construct_class2(gf49, 2, 5, gf49.subfield_elements()[:4])
    beta = gf49.pow(gf49.generator, 5)
    expect = [gf49.add(2, gf49.mul(beta, x)) for x in res.x_subset]
    assert list(res.alpha) == expect


def test_class2_errors(gf49):
    sub = gf49.subfield_elements()
    with pytest.raises(ConstructionError):
        construct_class2(gf49, 0, 0, sub[:4])     # m out of range
    with pytest.raises(ConstructionError):
        construct_class2(gf49, 0, 8, sub[:4])     # m > q
    # m = q is the largest admissible direction exponent
    res = construct_class2(gf49, 0, 7, sub[1:])
    beta = gf49.pow(gf49.generator, 7)
    assert all(gf49.in_subfield(gf49.div(x, beta)) for x in res.alpha)


def test_scaling_freedom(gf49):
    res = construct_class1(gf49, 1, gf49.subfield_elements()[:6])
    eta = res.eta_list[0][0]
    for c_log in (1, 9, 25):
        c = gf49.exp[c_log]
        scaled = plus_gtrs(gf49, res.alpha,
                           [gf49.mul(c, vi) for vi in res.v], eta, res.k)
        assert check_self_dual_criterion(scaled)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_sweep_soundness(q):
    results = sweep_cache(q)
    assert results
    for res in results:
        assert isinstance(res, ConstructionResult)
        for eta, lbl, c in res.codes():
            assert c.is_hermitian_self_dual()
            assert classify_eta(res.field, res.a, eta) == lbl


def test_sweep_char2_class1_nonempty():
    f = field_q2(4)
    results = sweep_constructions(f, n_values=[2, 4], classes=("I",))
    assert results
    for res in results:
        assert res.a != 0
        assert all(lbl == "MDS" for _, lbl in res.eta_list)


def test_sweep_q7_contains_row1_family():
    results = sweep_cache(7)
    f = results[0].field
    hit = [r for r in results
           if r.construction == "I" and r.n == 6 and r.a == 0]
    assert hit
    etas = {e for r in hit for e, _ in r.eta_list}
    assert all(f.pow(e, 6) == f.neg(1) for e in etas)


def test_serialization(gf49):
    res = construct_class1(gf49, 0, gf49.subfield_elements()[1:])
    d = res.to_dict()
    assert d["class"] == "I" and d["q"] == 7 and d["n"] == 6
    assert len(d["eta_list"]) == 6
    assert all(item["class"] == "MDS" for item in d["eta_list"])
