"""
Quantum spaces A^n_q and their normal-form engine.

The defining relations ``x_j x_i = q_ji x_i x_j`` (i < j) rewrite every word
to a scalar multiple of the ordered monomial with the same multi-degree.
``normal_form`` computes that scalar in closed form by counting inversions;
``normal_form_oracle`` reaches the same result one relation at a time and is
kept as an independent check of the closed form.
"""

import logging
import math
import random
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from qgrobner.config import config
from qgrobner.errors import QGrobnerError
from qgrobner.models.algebra import (
    BadMatrixError,
    BinomialRelation,
    DeformationMatrix,
    NormalTerm,
    Presentation,
    Provenance,
    Word,
    deglex_key,
    exponents_of,
    word_of,
)
from qgrobner.models.coeff import LaurentMonomial, ParamAssignment, mono_eval, mono_product
from qgrobner.utils.naming import Q_PREFIX, dual_labels, x_labels

logger = logging.getLogger(__name__)


class NotReducibleError(QGrobnerError):
    """Raised when a reduction is requested at an already ordered position."""

    def __init__(self, word: Sequence[int], position: int):
        self.word = tuple(word)
        self.position = position
        super().__init__(f"Word {self.word} is not reducible at position {position}")


class Ordering(str, Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


class Strategy(str, Enum):
    """Which reducible position the step-wise oracle rewrites next."""

    LEFTMOST = "leftmost"
    RIGHTMOST = "rightmost"
    RANDOM = "random"


class QuantumSpace:
    """The algebra C<x_0..x_n> / (x_j x_i - q_ji x_i x_j : i < j)."""

    def __init__(
        self,
        matrix: DeformationMatrix,
        labels: Optional[Sequence[str]] = None,
        provenance: Provenance = Provenance.QUANTUM_SPACE,
        header: Optional[Dict[str, int]] = None,
    ):
        """Initialize the space from a validated deformation matrix.

        Args:
            matrix: Multiplicatively anti-symmetric matrix of size n + 1
            labels: Generator names, ``x0 .. xn`` by default
            provenance: Tag carried by the defining presentation
            header: Extra size data for the presentation header
        """
        self._matrix = matrix
        self._labels = tuple(labels) if labels is not None else tuple(x_labels(matrix.size))
        if len(self._labels) != matrix.size:
            raise ValueError(
                f"{len(self._labels)} labels given for {matrix.size} generators"
            )
        self._presentation = Presentation(
            provenance=provenance,
            header={"n": matrix.size - 1, **(header or {})},
            generator_labels=self._labels,
            relations=tuple(_defining_relations(matrix)),
        )

    @property
    def n(self) -> int:
        return self._matrix.size - 1

    @property
    def size(self) -> int:
        return self._matrix.size

    @property
    def matrix(self) -> DeformationMatrix:
        return self._matrix

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def presentation(self) -> Presentation:
        return self._presentation

    def q(self, row: int, col: int) -> LaurentMonomial:
        return self._matrix.entry(row, col)

    def __repr__(self) -> str:
        return f"QuantumSpace(n={self.n}, params={self._matrix.params()})"


def _defining_relations(matrix: DeformationMatrix) -> List[BinomialRelation]:
    relations = []
    for i in range(matrix.size):
        for j in range(i + 1, matrix.size):
            relations.append(
                BinomialRelation(lead=(j, i), coeff=matrix.entry(j, i), tail=(i, j))
            )
    return relations


def new_quantum_space(
    n: int, q: Optional[DeformationMatrix] = None, prefix: str = Q_PREFIX
) -> QuantumSpace:
    """Build A^n_q, with generic symbolic parameters when ``q`` is omitted.

    Args:
        n: Largest generator index
        q: Deformation matrix of size n + 1
        prefix: Parameter prefix for the generic matrix

    Returns:
        QuantumSpace bundling n, q and the defining relations

    Raises:
        BadMatrixError: On a size mismatch or an anti-symmetry violation
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if q is None:
        q = DeformationMatrix.generic(n + 1, prefix=prefix)
    if q.size != n + 1:
        raise BadMatrixError(q.size, n + 1, f"matrix has size {q.size}, expected {n + 1}")
    space = QuantumSpace(q)
    logger.debug(f"Built quantum space n={n} with {len(space.presentation)} relations")
    return space


def deglex_compare(u: Sequence[int], v: Sequence[int]) -> Ordering:
    """Compare two words: shorter first, then lexicographically by letter."""
    ku, kv = deglex_key(u), deglex_key(v)
    if ku < kv:
        return Ordering.LT
    if ku > kv:
        return Ordering.GT
    return Ordering.EQ


def inversion_counts(word: Sequence[int], size: int) -> Dict[Tuple[int, int], int]:
    """Number of position pairs p < p' with word[p] = a > b = word[p'], keyed by (a, b)."""
    seen = [0] * size
    counts: Dict[Tuple[int, int], int] = {}
    for letter in reversed(word):
        for smaller in range(letter):
            if seen[smaller]:
                key = (letter, smaller)
                counts[key] = counts.get(key, 0) + seen[smaller]
        seen[letter] += 1
    return counts


def normal_form(space: QuantumSpace, word: Sequence[int]) -> NormalTerm:
    """Closed-form normal form: the product of q(a, b) over all inversions of the word."""
    totals: Dict[str, int] = {}
    for (a, b), count in inversion_counts(word, space.size).items():
        for name, exponent in space.q(a, b).exponents:
            totals[name] = totals.get(name, 0) + exponent * count
    return NormalTerm(
        coeff=LaurentMonomial.from_counts(totals), term=exponents_of(word, space.size)
    )


def reduce_step(
    space: QuantumSpace, word: Sequence[int], position: int
) -> Tuple[LaurentMonomial, Word]:
    """Apply one defining relation to the letters at ``position`` and ``position + 1``.

    Raises:
        NotReducibleError: If the pair is already ordered
    """
    word = tuple(word)
    if not 0 <= position < len(word) - 1 or word[position] <= word[position + 1]:
        raise NotReducibleError(word, position)
    a, b = word[position], word[position + 1]
    swapped = word[:position] + (b, a) + word[position + 2 :]
    return space.q(a, b), swapped


def normal_form_oracle(
    space: QuantumSpace,
    word: Sequence[int],
    strategy: Strategy = Strategy.LEFTMOST,
    seed: Optional[int] = None,
) -> NormalTerm:
    """Normal form by repeated single reductions.

    Args:
        space: Ambient quantum space
        word: Word to reduce
        strategy: Position choice among the reducible pairs
        seed: Seed for ``Strategy.RANDOM``, the configured seed when omitted

    Returns:
        NormalTerm accumulated step by step
    """
    rng = random.Random(config.seed if seed is None else seed)
    current = tuple(word)
    factors: List[LaurentMonomial] = []
    while True:
        positions = [p for p in range(len(current) - 1) if current[p] > current[p + 1]]
        if not positions:
            break
        if strategy == Strategy.LEFTMOST:
            position = positions[0]
        elif strategy == Strategy.RIGHTMOST:
            position = positions[-1]
        else:
            position = rng.choice(positions)
        factor, current = reduce_step(space, current, position)
        factors.append(factor)
        logger.debug(f"reduce at {position}: {current}")

    return NormalTerm(coeff=mono_product(factors), term=exponents_of(current, space.size))


def bullet(space: QuantumSpace, a: NormalTerm, b: NormalTerm) -> NormalTerm:
    """The product f . g := Nor(fg) on single terms."""
    product = normal_form(space, word_of(a.term) + word_of(b.term))
    return product.scaled(a.coeff * b.coeff)


def hilbert_dim(space: QuantumSpace, d: int) -> int:
    """dim A_d = binomial(n + d, d)."""
    if d < 0:
        return 0
    return math.comb(space.n + d, d)


def koszul_dual(space: QuantumSpace) -> Presentation:
    """Quantum Grassmann algebra: xi_j xi_i - q_ji^-1 xi_i xi_j and xi_j^2."""
    relations = []
    for i in range(space.size):
        for j in range(i + 1, space.size):
            relations.append(
                BinomialRelation(lead=(j, i), coeff=space.q(j, i).inverse(), tail=(i, j))
            )
    return Presentation(
        provenance=Provenance.KOSZUL_DUAL,
        header={"n": space.n},
        generator_labels=tuple(dual_labels(space.labels)),
        relations=tuple(relations),
        monomial_relations=tuple((j, j) for j in range(space.size)),
    )


def evaluate_matrix(
    matrix: DeformationMatrix, assignment: ParamAssignment
) -> List[List[Fraction]]:
    return [[mono_eval(value, assignment) for value in row] for row in matrix.entries]


def is_commutative(matrix: DeformationMatrix, assignment: ParamAssignment) -> bool:
    """Whether every entry evaluates to 1, i.e. the specialised space is commutative."""
    return all(value == 1 for row in evaluate_matrix(matrix, assignment) for value in row)
