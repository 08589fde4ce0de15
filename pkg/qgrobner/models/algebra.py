"""
Data types shared by the quantum-space services.

Words are tuples of 0-based generator indices, exponent vectors are dense
tuples of non-negative integers. Relations, presentations and deformation
matrices are frozen pydantic models so they can be serialized to JSON and
compared structurally.
"""

import logging
from enum import Enum
from typing import Dict, List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from qgrobner.errors import QGrobnerError
from qgrobner.models.coeff import LaurentMonomial
from qgrobner.utils.naming import Q_PREFIX, param_name

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
ExponentVector = Tuple[int, ...]


def deglex_key(word: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Sort key of the degree-lexicographic order with x_0 < x_1 < ... < x_n."""
    return (len(word), tuple(word))


def word_of(alpha: ExponentVector) -> Word:
    """The ordered monomial T_alpha as a word."""
    letters: List[int] = []
    for letter, power in enumerate(alpha):
        letters.extend([letter] * power)
    return tuple(letters)


def exponents_of(word: Sequence[int], size: int) -> ExponentVector:
    """Multi-degree of a word over ``size`` generators."""
    alpha = [0] * size
    for letter in word:
        alpha[letter] += 1
    return tuple(alpha)


class BadMatrixError(QGrobnerError):
    """Raised when a deformation matrix is not multiplicatively anti-symmetric."""

    def __init__(self, i: int, j: int, reason: str):
        self.i = i
        self.j = j
        self.reason = reason
        super().__init__(f"Bad deformation matrix at ({i}, {j}): {reason}")


class NormalTerm(BaseModel):
    """A coefficient times the ordered monomial with multi-degree ``term``."""

    model_config = ConfigDict(frozen=True)

    coeff: LaurentMonomial = Field(default_factory=LaurentMonomial.unit)
    term: ExponentVector = Field(..., description="Multi-degree alpha of T_alpha")

    def word(self) -> Word:
        return word_of(self.term)

    def scaled(self, factor: LaurentMonomial) -> "NormalTerm":
        return NormalTerm(coeff=self.coeff * factor, term=self.term)


class BinomialRelation(BaseModel):
    """The binomial ``lead - coeff * tail`` with lead above tail in deglex order."""

    model_config = ConfigDict(frozen=True)

    lead: Word = Field(..., description="Leading word")
    coeff: LaurentMonomial = Field(default_factory=LaurentMonomial.unit)
    tail: Word = Field(..., description="Word of the second monomial")

    @model_validator(mode="after")
    def _lead_above_tail(self) -> "BinomialRelation":
        if len(self.lead) != len(self.tail):
            raise ValueError(f"Relation {self.lead} -> {self.tail} is not homogeneous")
        if deglex_key(self.lead) <= deglex_key(self.tail):
            raise ValueError(f"Lead {self.lead} is not above tail {self.tail}")
        return self


class Provenance(str, Enum):
    QUANTUM_SPACE = "QuantumSpace"
    VERONESE_R1 = "VeroneseR1"
    VERONESE_R2 = "VeroneseR2"
    VERONESE_R1_PRIME = "VeroneseR1Prime"
    VERONESE_KERNEL = "VeroneseKernel"
    LIFTED_KERNEL = "LiftedKernel"
    SEGRE_SPACE = "SegreSpace"
    SEGRE_KERNEL = "SegreKernel"
    KOSZUL_DUAL = "KoszulDual"


class Presentation(BaseModel):
    """Generators, binomial relations and the construction that produced them."""

    model_config = ConfigDict(frozen=True)

    provenance: Provenance = Field(..., description="Construction that produced the relations")
    header: Dict[str, int] = Field(
        default_factory=dict, description="Size data such as n, d, m and N"
    )
    generator_labels: Tuple[str, ...] = Field(..., description="Generator names in order")
    relations: Tuple[BinomialRelation, ...] = Field(default=())
    monomial_relations: Tuple[Word, ...] = Field(
        default=(), description="Words that vanish, used by the Koszul dual"
    )

    @model_validator(mode="after")
    def _antichain(self) -> "Presentation":
        seen = set()
        for relation in self.relations:
            if relation.lead in seen:
                raise ValueError(f"Two relations share the lead word {relation.lead}")
            seen.add(relation.lead)
            if max(relation.lead + relation.tail, default=-1) >= len(self.generator_labels):
                raise ValueError(f"Relation {relation.lead} uses an unknown generator")
        return self

    def leads(self) -> List[Word]:
        return [relation.lead for relation in self.relations]

    def __len__(self) -> int:
        return len(self.relations)


class DeformationMatrix(BaseModel):
    """Square matrix of Laurent monomials with q_ii = 1 and q_ji = q_ij^-1.

    ``entries[row][col]`` is the coefficient in ``x_row x_col = entries[row][col] x_col x_row``.
    """

    model_config = ConfigDict(frozen=True)

    entries: Tuple[Tuple[LaurentMonomial, ...], ...] = Field(
        ..., description="Rows of the matrix"
    )

    @model_validator(mode="after")
    def _anti_symmetric(self) -> "DeformationMatrix":
        size = len(self.entries)
        if size == 0:
            raise BadMatrixError(0, 0, "matrix is empty")
        for i, row in enumerate(self.entries):
            if len(row) != size:
                raise BadMatrixError(i, len(row), f"row {i} has length {len(row)}, expected {size}")
        for i in range(size):
            if not self.entries[i][i].is_unit():
                raise BadMatrixError(i, i, "diagonal entry is not 1")
            for j in range(i + 1, size):
                if not (self.entries[i][j] * self.entries[j][i]).is_unit():
                    raise BadMatrixError(i, j, "entries are not mutually inverse")
        return self

    @classmethod
    def generic(cls, size: int, prefix: str = Q_PREFIX) -> "DeformationMatrix":
        """Matrix with one free parameter per pair i < j, placed at entry (j, i).

        Args:
            size: Number of generators n + 1
            prefix: Parameter name prefix

        Returns:
            Symbolic deformation matrix
        """
        single = size == 2
        rows = [[LaurentMonomial.unit() for _ in range(size)] for _ in range(size)]
        for j in range(size):
            for i in range(j):
                value = LaurentMonomial.param(param_name(prefix, j, i, single))
                rows[j][i] = value
                rows[i][j] = value.inverse()
        return cls(entries=tuple(tuple(row) for row in rows))

    @classmethod
    def trivial(cls, size: int) -> "DeformationMatrix":
        """All-ones matrix: the commutative polynomial ring."""
        unit = LaurentMonomial.unit()
        return cls(entries=tuple(tuple(unit for _ in range(size)) for _ in range(size)))

    @classmethod
    def from_array(cls, array: np.ndarray) -> "DeformationMatrix":
        rows, cols = array.shape
        return cls(
            entries=tuple(tuple(array[r, c] for c in range(cols)) for r in range(rows))
        )

    @property
    def size(self) -> int:
        return len(self.entries)

    def entry(self, row: int, col: int) -> LaurentMonomial:
        return self.entries[row][col]

    def as_array(self) -> np.ndarray:
        """Object-dtype numpy array of the entries."""
        array = np.empty((self.size, self.size), dtype=object)
        for r, row in enumerate(self.entries):
            for c, value in enumerate(row):
                array[r, c] = value
        return array

    def params(self) -> List[str]:
        names = set()
        for row in self.entries:
            for value in row:
                names.update(value.params())
        return sorted(names)

