"""
Segre constructions for a pair of quantum spaces A^n_q and A^m_q'.

Generators z_{i alpha} map to x_i (x) y_alpha and are ordered by their flat
index i (m + 1) + alpha. The tensor product is evaluated as two independent
normal forms, one per factor, because x- and y-letters commute with
coefficient 1.
"""

import logging
import math
from functools import lru_cache
from typing import List, NamedTuple, Sequence

import numpy as np

from qgrobner.models.algebra import (
    BinomialRelation,
    DeformationMatrix,
    ExponentVector,
    Presentation,
    Provenance,
    Word,
)
from qgrobner.models.coeff import LaurentMonomial
from qgrobner.services.qspace import QuantumSpace, normal_form
from qgrobner.utils.naming import z_labels

logger = logging.getLogger(__name__)


class SegreIndex(NamedTuple):
    i: int
    alpha: int
    flat: int


class SegreQuadruple(NamedTuple):
    """Indices with i < j and alpha < beta; one kernel binomial each."""

    i: int
    j: int
    alpha: int
    beta: int


class TensorTerm(NamedTuple):
    coeff: LaurentMonomial
    x_term: ExponentVector
    y_term: ExponentVector


class SegreIdentity(NamedTuple):
    """``lhs = coeff * rhs`` in the Segre product."""

    family: str
    lhs: Word
    coeff: LaurentMonomial
    rhs: Word


def flat(i: int, alpha: int, m: int) -> int:
    return i * (m + 1) + alpha


def segre_index(flat_index: int, m: int) -> SegreIndex:
    i, alpha = divmod(flat_index, m + 1)
    return SegreIndex(i=i, alpha=alpha, flat=flat_index)


def segre_matrix(q: DeformationMatrix, q_prime: DeformationMatrix) -> DeformationMatrix:
    """Kronecker product q (x) q': g[(i, a), (j, b)] = q_ij q'_ab."""
    return DeformationMatrix.from_array(np.kron(q.as_array(), q_prime.as_array()))


def segre_space_relations(g: DeformationMatrix, n: int, m: int) -> Presentation:
    """Defining relations of the quantum space on Z_{nm} with matrix ``g``."""
    return segre_space_from_matrix(g, n, m).presentation


def segre_space_from_matrix(g: DeformationMatrix, n: int, m: int) -> QuantumSpace:
    if g.size != (n + 1) * (m + 1):
        raise ValueError(f"Segre matrix of size {g.size} does not match n={n}, m={m}")
    return QuantumSpace(
        g,
        labels=z_labels(n + 1, m + 1),
        provenance=Provenance.SEGRE_SPACE,
        header={"n": n, "m": m, "N": g.size - 1},
    )


def segre_space(q: DeformationMatrix, q_prime: DeformationMatrix) -> QuantumSpace:
    """The quantum space A^N_g with g the Kronecker product of q and q'."""
    return segre_space_from_matrix(segre_matrix(q, q_prime), q.size - 1, q_prime.size - 1)


def segre_quadruples(n: int, m: int) -> List[SegreQuadruple]:
    """MS(n, m) in lexicographic (i, j, alpha, beta) order."""
    return [
        SegreQuadruple(i, j, alpha, beta)
        for i in range(n + 1)
        for j in range(i + 1, n + 1)
        for alpha in range(m + 1)
        for beta in range(alpha + 1, m + 1)
    ]


def segre_kernel_gb(q: DeformationMatrix, q_prime: DeformationMatrix) -> Presentation:
    """Reduced Gröbner basis of ker(s_{n,m}): z_{i b} z_{j a} - q'_{b a} z_{i a} z_{j b}.

    Args:
        q: Deformation matrix of the first factor, size n + 1
        q_prime: Deformation matrix of the second factor, size m + 1

    Returns:
        Presentation with binomial(n+1, 2) binomial(m+1, 2) relations
    """
    n, m = q.size - 1, q_prime.size - 1
    relations = [
        BinomialRelation(
            lead=(flat(quad.i, quad.beta, m), flat(quad.j, quad.alpha, m)),
            coeff=q_prime.entry(quad.beta, quad.alpha),
            tail=(flat(quad.i, quad.alpha, m), flat(quad.j, quad.beta, m)),
        )
        for quad in segre_quadruples(n, m)
    ]
    logger.info(f"Segre kernel n={n}, m={m}: {len(relations)} binomials")
    return Presentation(
        provenance=Provenance.SEGRE_KERNEL,
        header={"n": n, "m": m, "N": (n + 1) * (m + 1) - 1},
        generator_labels=tuple(z_labels(n + 1, m + 1)),
        relations=tuple(relations),
    )


@lru_cache(maxsize=64)
def _factor_space(matrix: DeformationMatrix) -> QuantumSpace:
    return QuantumSpace(matrix)


def tensor_eval(
    q: DeformationMatrix, q_prime: DeformationMatrix, word: Sequence[int]
) -> TensorTerm:
    """Image of a Z-word in A^n_q (x) A^m_q' as coefficient and two multi-degrees."""
    m = q_prime.size - 1
    indices = [segre_index(flat_index, m) for flat_index in word]
    x_word = [index.i for index in indices]
    y_word = [index.alpha for index in indices]
    x_nf = normal_form(_factor_space(q), x_word)
    y_nf = normal_form(_factor_space(q_prime), y_word)
    return TensorTerm(coeff=x_nf.coeff * y_nf.coeff, x_term=x_nf.term, y_term=y_nf.term)


def product_identities(
    q: DeformationMatrix, q_prime: DeformationMatrix
) -> List[SegreIdentity]:
    """The product rules of the Segre product for all i < j and alpha < beta."""
    n, m = q.size - 1, q_prime.size - 1
    identities = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            for alpha in range(m + 1):
                identities.append(
                    SegreIdentity(
                        "same-column",
                        (flat(j, alpha, m), flat(i, alpha, m)),
                        q.entry(j, i),
                        (flat(i, alpha, m), flat(j, alpha, m)),
                    )
                )
                for beta in range(alpha + 1, m + 1):
                    identities.append(
                        SegreIdentity(
                            "ordered",
                            (flat(i, alpha, m), flat(j, beta, m)),
                            LaurentMonomial.unit(),
                            (flat(i, alpha, m), flat(j, beta, m)),
                        )
                    )
                    identities.append(
                        SegreIdentity(
                            "both-descending",
                            (flat(j, beta, m), flat(i, alpha, m)),
                            q.entry(j, i) * q_prime.entry(beta, alpha),
                            (flat(i, alpha, m), flat(j, beta, m)),
                        )
                    )
                    identities.append(
                        SegreIdentity(
                            "crossed",
                            (flat(j, alpha, m), flat(i, beta, m)),
                            q.entry(j, i) * q_prime.entry(alpha, beta),
                            (flat(i, beta, m), flat(j, alpha, m)),
                        )
                    )
                    identities.append(
                        SegreIdentity(
                            "kernel",
                            (flat(i, beta, m), flat(j, alpha, m)),
                            q_prime.entry(beta, alpha),
                            (flat(i, alpha, m), flat(j, beta, m)),
                        )
                    )
    for i in range(n + 1):
        for alpha in range(m + 1):
            for beta in range(alpha + 1, m + 1):
                identities.append(
                    SegreIdentity(
                        "same-row",
                        (flat(i, beta, m), flat(i, alpha, m)),
                        q_prime.entry(beta, alpha),
                        (flat(i, alpha, m), flat(i, beta, m)),
                    )
                )
    return identities


def segre_hilbert_dim(n: int, m: int, t: int) -> int:
    """dim (A^n_q o A^m_q')_t = binomial(n + t, t) binomial(m + t, t)."""
    if t < 0:
        return 0
    return math.comb(n + t, t) * math.comb(m + t, t)
