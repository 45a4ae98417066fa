from fractions import Fraction as F

import pytest

from leonard_lab.leonard import candidate_orderings
from leonard_lab.params import ParameterDomainError, build_params
from leonard_lab.racah import (
    affine_maps,
    build_racah_params,
    check_barred_matrices,
    check_barred_recurrence,
    check_index_mapping,
    check_racah_orthogonality,
    check_starred_products,
    check_unbarred_identities,
    check_varphi,
    dual_params,
    eval_table_4F3,
    index_map,
    standard_racah_eval,
    to_json_dict,
)
from leonard_lab.representations import eval_table_hypergeometric

R_VALUES = [F(-3, 4), F(-1, 2), F(-1, 4), F(1, 4), F(1, 2), F(3, 4)]


def test_build_frozen_values():
    q1 = build_racah_params(1, F(1, 2))
    assert q1.bar_theta == (2, 0)
    q2 = build_racah_params(2, F(1, 2))
    assert q2.bar_theta == (6, 0, 2)
    assert q2.bar_theta_star == (F(9, 16), F(1, 16), F(25, 16))
    assert q2.bar_b == (3, F(1, 2), 0)
    assert q2.bar_nu == F(16, 5)
    assert q2.bar_b_star[1] == F(-9, 8)
    assert q2.bar_k_star == (1, F(2, 5), F(9, 5))


def test_domain_errors():
    with pytest.raises(ParameterDomainError):
        build_racah_params(2, F(0))
    with pytest.raises(ParameterDomainError):
        build_racah_params(2, F(3, 2))
    with pytest.raises(ParameterDomainError):
        build_racah_params(2, F(-1))


def test_index_map_examples():
    assert index_map(2) == (0, 2, 1)
    assert index_map(1) == (0, 1)
    assert index_map(4) == (0, 2, 4, 3, 1)
    # the map is exactly the first candidate ordering
    for d in range(1, 9):
        assert index_map(d) == candidate_orderings(d)[0].perm


def test_index_mapping_examples():
    q = build_racah_params(2, F(1, 2))
    p = dual_params(q)
    assert p.theta == (6, 2, 0)
    assert q.bar_theta == tuple(p.theta[j] for j in index_map(2))
    assert check_index_mapping(p, q)
    q1 = build_racah_params(1, F(1, 2))
    assert q1.bar_theta == dual_params(q1).theta
    assert check_index_mapping(dual_params(q1), q1)


def test_index_mapping_rejects_mismatched_inputs():
    q = build_racah_params(2, F(1, 2))
    with pytest.raises(ValueError):
        check_index_mapping(build_params(2, F(1, 2), F(1, 4)), q)
    with pytest.raises(ValueError):
        check_index_mapping(build_params(3, F(1, 2), F(-1, 2)), q)


def test_unbarred_identities_worked():
    q = build_racah_params(2, F(1, 2))
    p = dual_params(q)
    assert q.bar_b == p.b
    assert q.bar_nu == p.nu == F(16, 5)
    assert check_unbarred_identities(p, q)


def test_starred_products_worked_even_middle():
    q = build_racah_params(2, F(1, 2))
    p = dual_params(q)
    middle = F(2 + 1) * F(1, 2) / 2
    assert q.bar_b_star[1] == middle * p.c_star[2] == F(-9, 8)
    assert q.bar_k_star == tuple(p.k_star[j] for j in index_map(2))
    assert check_starred_products(p, q)


def test_starred_products_worked_odd_middle():
    q = build_racah_params(3, F(1, 2))
    p = dual_params(q)
    middle = F(3 + 1) * F(1, 2) / 2
    assert q.bar_b_star[1] == middle * p.b_star[2]
    assert q.bar_c_star[2] == middle * p.c_star[3]
    assert check_starred_products(p, q)


def test_varphi_closed_form_and_quotient():
    for d in (1, 2, 3, 5):
        q = build_racah_params(d, F(1, 2))
        assert check_varphi(q)
    q2 = build_racah_params(2, F(1, 2))
    assert q2.varphi(1) == F(-3, 2)
    with pytest.raises(IndexError):
        q2.varphi(0)
    with pytest.raises(IndexError):
        q2.varphi(3)


def test_4f3_table_frozen_and_permuted():
    q = build_racah_params(1, F(1, 2))
    table = eval_table_4F3(q)
    assert table.at(1, 1) == -3
    q2 = build_racah_params(2, F(1, 2))
    table2 = eval_table_4F3(q2)
    assert table2.values.to_rows() == [
        [1, 1, 1],
        [1, -1, F(-1, 3)],
        [1, 5, F(-5, 3)],
    ]
    assert list(table2.values.row(0)) == [1, 1, 1]


def test_full_identity_suite_on_grid():
    for d in range(0, 7):
        for r in R_VALUES:
            q = build_racah_params(d, r)
            p = dual_params(q)
            table = eval_table_4F3(q)
            U = eval_table_hypergeometric(p)
            sigma = index_map(d)
            assert all(
                table.at(i, j) == U.at(i, sigma[j])
                for i in range(d + 1)
                for j in range(d + 1)
            ), (d, r)
            assert check_index_mapping(p, q), (d, r)
            assert check_unbarred_identities(p, q), (d, r)
            assert check_starred_products(p, q), (d, r)
            assert check_varphi(q), (d, r)
            assert check_racah_orthogonality(q, table), (d, r)
            assert check_barred_recurrence(q, table), (d, r)
            assert check_barred_matrices(p, q), (d, r)


def test_racah_orthogonality_worked_instance():
    q = build_racah_params(2, F(1, 2))
    table = eval_table_4F3(q)
    total = sum((table.at(2, h) ** 2 * q.bar_k_star[h] for h in range(3)), F(0))
    assert total == 16
    assert q.bar_nu / q.bar_k[2] == 16


def test_standard_racah_route():
    for d, r in [(2, F(1, 2)), (3, F(-1, 4)), (5, F(3, 4))]:
        q = build_racah_params(d, r)
        table = eval_table_4F3(q)
        (aff1_m, aff1_b), (aff2_m, aff2_b) = affine_maps(d, r)
        assert (aff1_m, aff1_b) == (1, d * (d + 1))
        assert (aff2_m, aff2_b) == (4, d * (d + 1))
        for j in range(d + 1):
            node = F(j) * (j - d - F(1, 2))
            assert aff2_m * node + aff2_b == q.bar_theta[j]
            for i in range(d + 1):
                assert standard_racah_eval(d, r, i, F(j)) == table.at(i, j), (d, r, i, j)


def test_aff1_carries_standard_dual_hahn_nodes():
    for d, r in [(2, F(1, 2)), (4, F(-1, 2))]:
        p = build_params(d, r, -r)
        (aff1_m, aff1_b), _ = affine_maps(d, r)
        for j in range(d + 1):
            node = F(j) * (j - 2 * d - 1)  # x(x + gamma + delta + 1) at s = -r
            assert aff1_m * node + aff1_b == p.theta[j]


def test_aff2_at_zero_is_top_barred_node():
    for d, r in [(2, F(1, 2)), (5, F(-1, 4))]:
        q = build_racah_params(d, r)
        _, (aff2_m, aff2_b) = affine_maps(d, r)
        assert aff2_b == d * (d + 1) == q.bar_theta[0]


def test_json_dump():
    q = build_racah_params(2, F(1, 2))
    payload = to_json_dict(q)
    assert payload["barNu"] == "16/5"
    assert payload["barBStar"] == ["1/4", "-9/8", "0"]
    assert payload["barVarphi"] == ["-3/2", "-3/2"]
