"""
d-Veronese constructions over a quantum space A^n_q.

The degree-d ordered monomials w_0 < ... < w_N become the generators
y_0 .. y_N of a derived quantum space. Every relation used here comes from
one normal-form computation: ``Nor(w_i w_j) = phi_ij w_i' w_j'``.
"""

import logging
import math
import threading
from itertools import combinations_with_replacement
from typing import Dict, List, NamedTuple, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from qgrobner.models.algebra import (
    BinomialRelation,
    DeformationMatrix,
    ExponentVector,
    NormalTerm,
    Presentation,
    Provenance,
    Word,
    exponents_of,
)
from qgrobner.models.coeff import LaurentMonomial
from qgrobner.services.qspace import QuantumSpace, normal_form
from qgrobner.utils.naming import Q_PREFIX, x_labels

logger = logging.getLogger(__name__)

# Term tables depend only on (n, d)
_table_cache: Dict[Tuple[int, int], "TermTable"] = {}
_cache_lock = threading.Lock()


class TermTable:
    """Degree-d ordered monomials over x_0..x_n in increasing deglex order."""

    def __init__(self, n: int, d: int):
        if n < 0 or d < 1:
            raise ValueError(f"Term table needs n >= 0 and d >= 1, got n={n}, d={d}")
        self.n = n
        self.d = d
        # combinations_with_replacement yields sorted words in lexicographic order
        self.words: Tuple[Word, ...] = tuple(combinations_with_replacement(range(n + 1), d))
        self.terms: Tuple[ExponentVector, ...] = tuple(
            exponents_of(word, n + 1) for word in self.words
        )
        self.index_of: Dict[ExponentVector, int] = {
            term: index for index, term in enumerate(self.terms)
        }
        self._word_index: Dict[Word, int] = {
            word: index for index, word in enumerate(self.words)
        }

    @property
    def big_n(self) -> int:
        """N, so that there are N + 1 terms."""
        return len(self.terms) - 1

    def __len__(self) -> int:
        return len(self.terms)

    def index_of_word(self, word: Sequence[int]) -> int:
        return self._word_index[tuple(word)]

    def labels(self) -> List[str]:
        return x_labels(len(self.terms), letter="y")


def term_table(n: int, d: int) -> TermTable:
    """Get the cached term table for (n, d).

    Args:
        n: Largest generator index of the base space
        d: Veronese degree

    Returns:
        TermTable with binomial(n + d, d) terms
    """
    with _cache_lock:
        key = (n, d)
        if key not in _table_cache:
            _table_cache[key] = TermTable(n, d)
            logger.debug(f"Built term table n={n}, d={d} with {len(_table_cache[key])} terms")
        return _table_cache[key]


def m_of(table: TermTable, j: int) -> int:
    """Smallest generator index occurring in w_j."""
    return table.words[j][0]


def M_of(table: TermTable, j: int) -> int:
    """Largest generator index occurring in w_j."""
    return table.words[j][-1]


class PairClasses(NamedTuple):
    c2: Tuple[Tuple[int, int], ...]
    mv: Tuple[Tuple[int, int], ...]


def classify_pairs(table: TermTable) -> PairClasses:
    """Split all pairs i <= j into C(n,2,d) (w_i w_j ordered) and MV(n,d)."""
    c2, mv = [], []
    size = len(table)
    for i in range(size):
        for j in range(i, size):
            if M_of(table, i) <= m_of(table, j):
                c2.append((i, j))
            else:
                mv.append((i, j))
    return PairClasses(c2=tuple(c2), mv=tuple(mv))


def c3_set(table: TermTable) -> List[Tuple[int, int, int]]:
    """Chains i <= j <= k with (i, j) and (j, k) both in C(n,2,d)."""
    c2 = set(classify_pairs(table).c2)
    successors: Dict[int, List[int]] = {}
    for i, j in sorted(c2):
        successors.setdefault(i, []).append(j)
    triples = []
    for i, j in sorted(c2):
        for k in successors.get(j, []):
            triples.append((i, j, k))
    return triples


class PhiEntry(BaseModel):
    """Nor(w_i w_j) = phi * w_i' w_j' with (i', j') in C(n,2,d)."""

    model_config = ConfigDict(frozen=True)

    i: int
    j: int
    phi: LaurentMonomial = Field(default_factory=LaurentMonomial.unit)
    i_prime: int
    j_prime: int


def phi(space: QuantumSpace, table: TermTable, i: int, j: int) -> PhiEntry:
    """Normal form of w_i w_j, split back into two degree-d terms.

    Args:
        space: Base quantum space A^n_q
        table: Term table of the same n
        i: Index of the left factor
        j: Index of the right factor

    Returns:
        PhiEntry with the coefficient and the split indices
    """
    nf = normal_form(space, table.words[i] + table.words[j])
    ordered = nf.word()
    d = table.d
    return PhiEntry(
        i=i,
        j=j,
        phi=nf.coeff,
        i_prime=table.index_of_word(ordered[:d]),
        j_prime=table.index_of_word(ordered[d:]),
    )


def _header(space: QuantumSpace, table: TermTable) -> Dict[str, int]:
    return {"n": space.n, "d": table.d, "N": table.big_n}


def _check_degree(space: QuantumSpace, d: int) -> TermTable:
    if d < 1:
        raise ValueError(f"Veronese degree must be at least 1, got {d}")
    return term_table(space.n, d)


def _relation(entry: PhiEntry, lead: Word) -> BinomialRelation:
    return BinomialRelation(lead=lead, coeff=entry.phi, tail=(entry.i_prime, entry.j_prime))


class VeronesePresentation(NamedTuple):
    r1: Presentation
    r2: Presentation
    r1_prime: Presentation


def veronese_presentation(space: QuantumSpace, d: int) -> VeronesePresentation:
    """Quadratic presentation of A^(d) on binomial(n + d, d) generators.

    R1 holds y_j y_i - phi_ji y_i' y_j' for i < j, R2 holds
    y_i y_j - phi_ij y_i' y_j' for (i, j) in MV(n,d), and R1' holds the
    derived-space relations y_j y_i - g_ji y_i y_j.
    """
    table = _check_degree(space, d)
    labels = tuple(table.labels())
    header = _header(space, table)
    size = len(table)

    r1 = [
        _relation(phi(space, table, j, i), (j, i))
        for i in range(size)
        for j in range(i + 1, size)
    ]
    r2 = [_relation(phi(space, table, i, j), (i, j)) for i, j in classify_pairs(table).mv]

    g = derived_matrix(space, d)
    r1_prime = [
        BinomialRelation(lead=(j, i), coeff=g.entry(j, i), tail=(i, j))
        for i in range(size)
        for j in range(i + 1, size)
    ]

    logger.info(
        f"Veronese presentation n={space.n}, d={d}: |R1|={len(r1)}, |R2|={len(r2)}"
    )
    return VeronesePresentation(
        r1=Presentation(
            provenance=Provenance.VERONESE_R1, header=header,
            generator_labels=labels, relations=tuple(r1),
        ),
        r2=Presentation(
            provenance=Provenance.VERONESE_R2, header=header,
            generator_labels=labels, relations=tuple(r2),
        ),
        r1_prime=Presentation(
            provenance=Provenance.VERONESE_R1_PRIME, header=header,
            generator_labels=labels, relations=tuple(r1_prime),
        ),
    )


def derived_matrix(space: QuantumSpace, d: int) -> DeformationMatrix:
    """The matrix g with g_ji = phi_ji / phi_ij, written in the original parameters."""
    table = _check_degree(space, d)
    size = len(table)
    unit = LaurentMonomial.unit()
    rows = [[unit] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            g_ji = phi(space, table, j, i).phi * phi(space, table, i, j).phi.inverse()
            rows[j][i] = g_ji
            rows[i][j] = g_ji.inverse()
    return DeformationMatrix(entries=tuple(tuple(row) for row in rows))


def derived_space(space: QuantumSpace, d: int) -> QuantumSpace:
    """The quantum space on y_0 .. y_N with the derived matrix."""
    table = _check_degree(space, d)
    return QuantumSpace(
        derived_matrix(space, d),
        labels=table.labels(),
        header={"d": d, "N": table.big_n},
    )


def veronese_kernel_gb(space: QuantumSpace, d: int) -> Presentation:
    """Reduced Gröbner basis of ker(v_{n,d}) inside the derived quantum space."""
    table = _check_degree(space, d)
    relations = [
        _relation(phi(space, table, i, j), (i, j)) for i, j in classify_pairs(table).mv
    ]
    logger.info(f"Veronese kernel n={space.n}, d={d}: {len(relations)} binomials")
    return Presentation(
        provenance=Provenance.VERONESE_KERNEL,
        header=_header(space, table),
        generator_labels=tuple(table.labels()),
        relations=tuple(relations),
    )


class LiftedKernel(NamedTuple):
    re1: Presentation
    re2: Presentation


def lifted_kernel_gb(space: QuantumSpace, d: int) -> LiftedKernel:
    """Reduced Gröbner basis of the kernel of C<Y_N> -> A^(d) in the free algebra."""
    presentation = veronese_presentation(space, d)
    return LiftedKernel(
        re1=presentation.r1.model_copy(update={"provenance": Provenance.LIFTED_KERNEL}),
        re2=presentation.r2.model_copy(update={"provenance": Provenance.LIFTED_KERNEL}),
    )


def veronese_image_dim(space: QuantumSpace, d: int, k: int) -> int:
    """dim (A^(d))_k = dim A_{kd} = binomial(n + k d, n)."""
    if k < 0:
        return 0
    return math.comb(space.n + k * d, space.n)


def veronese_eval(space: QuantumSpace, d: int, word: Sequence[int]) -> NormalTerm:
    """Image of a word over Y under y_k -> w_k, normalised in A^n_q."""
    table = _check_degree(space, d)
    letters: Tuple[int, ...] = ()
    for k in word:
        letters += table.words[k]
    return normal_form(space, letters)


def rational_normal_curve_gb(d: int, prefix: str = Q_PREFIX) -> Presentation:
    """Closed-form kernel basis for n = 1.

    y_i y_j - q^{i(d-j)} y_0 y_{i+j} when i + j <= d, otherwise
    y_i y_j - q^{i(d-j)} y_{i+j-d} y_d, for 1 <= i <= j <= d - 1.
    """
    if d < 1:
        raise ValueError(f"Veronese degree must be at least 1, got {d}")
    relations = []
    for i in range(1, d):
        for j in range(i, d):
            tail = (0, i + j) if i + j <= d else (i + j - d, d)
            relations.append(
                BinomialRelation(
                    lead=(i, j), coeff=LaurentMonomial.param(prefix, i * (d - j)), tail=tail
                )
            )
    return Presentation(
        provenance=Provenance.VERONESE_KERNEL,
        header={"n": 1, "d": d, "N": d},
        generator_labels=tuple(x_labels(d + 1, letter="y")),
        relations=tuple(relations),
    )


def veronese_counts(n: int, d: int) -> Dict[str, int]:
    """Cardinalities of the index sets and relation families for (n, d)."""
    table = term_table(n, d)
    classes = classify_pairs(table)
    size = len(table)
    return {
        "terms": size,
        "c2": len(classes.c2),
        "mv": len(classes.mv),
        "r1": size * (size - 1) // 2,
        "r2": len(classes.mv),
        "c3": len(c3_set(table)),
    }
