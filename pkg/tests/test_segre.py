import math

import pytest

from qgrobner.models.algebra import DeformationMatrix
from qgrobner.models.coeff import LaurentMonomial
from qgrobner.services.segre import (
    flat,
    product_identities,
    segre_hilbert_dim,
    segre_index,
    segre_kernel_gb,
    segre_matrix,
    segre_quadruples,
    segre_space,
    tensor_eval,
)
from qgrobner.utils.render import render_presentation


def mono(**exponents):
    return LaurentMonomial.model_validate(exponents)


def test_flat_index_round_trip():
    assert flat(2, 1, 1) == 5
    assert segre_index(5, 1) == (2, 1, 5)


def test_segre_quadric(segre_factors):
    q, q_prime = segre_factors(1, 1)
    kernel = segre_kernel_gb(q, q_prime)
    assert kernel.generator_labels == ("z00", "z01", "z10", "z11")
    assert render_presentation(kernel).splitlines()[1:] == ["z01*z10 - qp z00*z11"]

    g = segre_matrix(q, q_prime)
    expected = [
        [mono(), mono(qp=-1), mono(q=-1), mono(q=-1, qp=-1)],
        [mono(qp=1), mono(), mono(q=-1, qp=1), mono(q=-1)],
        [mono(q=1), mono(q=1, qp=-1), mono(), mono(qp=-1)],
        [mono(q=1, qp=1), mono(q=1), mono(qp=1), mono()],
    ]
    assert [list(row) for row in g.entries] == expected


def test_segre_threefold(segre_factors):
    q, q_prime = segre_factors(2, 1)
    kernel = segre_kernel_gb(q, q_prime)
    assert render_presentation(kernel).splitlines() == [
        "# SegreKernel n=2 m=1 N=5",
        "z01*z10 - qp z00*z11",
        "z01*z20 - qp z00*z21",
        "z11*z20 - qp z10*z21",
    ]
    g = segre_matrix(q, q_prime)
    # (z11, z20)
    assert g.entry(3, 4) == mono(q21=-1, qp=1)
    assert g.entry(4, 3) == mono(q21=1, qp=-1)
    assert g.entry(5, 0) == mono(q20=1, qp=1)


def test_kronecker_entries(segre_factors):
    q, q_prime = segre_factors(2, 2)
    g = segre_matrix(q, q_prime)
    for i in range(3):
        for j in range(3):
            for alpha in range(3):
                for beta in range(3):
                    assert g.entry(flat(i, alpha, 2), flat(j, beta, 2)) == (
                        q.entry(i, j) * q_prime.entry(alpha, beta)
                    )


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("m", range(5))
def test_kernel_size(segre_factors, n, m):
    q, q_prime = segre_factors(n, m)
    assert len(segre_quadruples(n, m)) == math.comb(n + 1, 2) * math.comb(m + 1, 2)
    assert len(segre_kernel_gb(q, q_prime)) == math.comb(n + 1, 2) * math.comb(m + 1, 2)


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (2, 3)])
def test_kernel_leads_do_not_depend_on_the_matrices(segre_factors, n, m):
    q, q_prime = segre_factors(n, m)
    generic = segre_kernel_gb(q, q_prime)
    commutative = segre_kernel_gb(DeformationMatrix.trivial(n + 1), DeformationMatrix.trivial(m + 1))
    assert generic.leads() == commutative.leads()
    assert all(relation.coeff.is_unit() for relation in commutative.relations)



def test_quadruples_start_at_alpha_zero():
    assert segre_quadruples(1, 1) == [(0, 1, 0, 1)]


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (2, 2), (3, 2)])
def test_kernel_relations_vanish_under_the_segre_map(segre_factors, n, m):
    q, q_prime = segre_factors(n, m)
    for relation in segre_kernel_gb(q, q_prime).relations:
        lead = tensor_eval(q, q_prime, relation.lead)
        tail = tensor_eval(q, q_prime, relation.tail)
        assert (lead.x_term, lead.y_term) == (tail.x_term, tail.y_term)
        assert lead.coeff == relation.coeff * tail.coeff


@pytest.mark.parametrize("n", range(4))
@pytest.mark.parametrize("m", range(4))
def test_product_identities(segre_factors, n, m):
    q, q_prime = segre_factors(n, m)
    identities = product_identities(q, q_prime)
    if n and m:
        assert {identity.family for identity in identities} == {
            "same-column", "ordered", "both-descending", "crossed", "kernel", "same-row",
        }
    for identity in identities:
        lhs = tensor_eval(q, q_prime, identity.lhs)
        rhs = tensor_eval(q, q_prime, identity.rhs)
        assert (lhs.x_term, lhs.y_term) == (rhs.x_term, rhs.y_term)
        assert lhs.coeff == identity.coeff * rhs.coeff


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (1, 3)])
def test_segre_space_relations_hold_in_the_product(segre_factors, n, m):
    q, q_prime = segre_factors(n, m)
    space = segre_space(q, q_prime)
    assert space.labels[0] == "z00"
    assert len(space.presentation) == math.comb(space.size, 2)
    for relation in space.presentation.relations:
        lead = tensor_eval(q, q_prime, relation.lead)
        tail = tensor_eval(q, q_prime, relation.tail)
        assert lead.coeff == relation.coeff * tail.coeff


def test_hilbert_dim():
    assert segre_hilbert_dim(1, 1, 3) == 16
    assert segre_hilbert_dim(2, 1, 3) == 40
    assert segre_hilbert_dim(2, 1, -1) == 0
