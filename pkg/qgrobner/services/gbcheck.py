"""
Certification of quadratic binomial Gröbner bases.

Two independent routes are offered. In the free algebra every overlap
composition ab.t = a.bt is reduced along both branches and the results are
compared (Diamond Lemma). In both the free algebra and a quantum space the
number of normal words of length 3 is compared with the dimension of the
degree-3 component of the quotient.
"""

import logging
import math
import random
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from itertools import combinations_with_replacement
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from qgrobner.config import config, get_workers
from qgrobner.errors import QGrobnerError
from qgrobner.models.algebra import DeformationMatrix, Presentation, Word
from qgrobner.models.coeff import LaurentMonomial
from qgrobner.models.report import CertificationReport
from qgrobner.services.qspace import QuantumSpace, Strategy, normal_form
from qgrobner.services import segre, veronese

logger = logging.getLogger(__name__)

CORRUPTION_PARAM = "t"


class ReductionLimitError(QGrobnerError):
    """Raised when a reduction loop exceeds its step bound."""

    def __init__(self, word: Sequence[int], bound: int):
        self.word = tuple(word)
        self.bound = bound
        super().__init__(f"Reduction of {self.word} exceeded {bound} steps")


class Setting(str, Enum):
    FREE_ALGEBRA = "FreeAlgebra"
    QUANTUM_SPACE = "QuantumSpace"


class Rule(NamedTuple):
    """``lead -> coeff * tail``; a missing tail means the lead reduces to zero."""

    coeff: LaurentMonomial
    tail: Optional[Word]


class RewriteSystem:
    """Quadratic rewriting rules over an alphabet of ``alphabet_size`` letters."""

    def __init__(
        self,
        alphabet_size: int,
        rules: Dict[Word, Rule],
        setting: Setting = Setting.FREE_ALGEBRA,
        ambient: Optional[QuantumSpace] = None,
        system_id: str = "system",
    ):
        if setting == Setting.QUANTUM_SPACE and ambient is None:
            raise ValueError("A quantum-space system needs an ambient space")
        if ambient is not None and ambient.size != alphabet_size:
            raise ValueError(
                f"Ambient space has {ambient.size} generators, alphabet has {alphabet_size}"
            )
        for lead, rule in rules.items():
            if len(lead) != 2:
                raise ValueError(f"Lead {lead} is not quadratic")
            if rule.tail is not None and (len(rule.tail) != 2 or rule.tail >= lead):
                raise ValueError(f"Tail {rule.tail} is not below lead {lead}")
        self.alphabet_size = alphabet_size
        self.rules = dict(rules)
        self.setting = setting
        self.ambient = ambient
        self.system_id = system_id

    def leads(self) -> List[Word]:
        return list(self.rules)

    def step_bound(self, length: int) -> int:
        return max(1, length * length * self.alphabet_size * self.alphabet_size) * max(
            1, config.reduction_factor
        )

    def __len__(self) -> int:
        return len(self.rules)

    def __repr__(self) -> str:
        return f"RewriteSystem({self.system_id}, {self.setting.value}, {len(self.rules)} rules)"


def from_presentation(
    *presentations: Presentation,
    setting: Setting = Setting.FREE_ALGEBRA,
    ambient: Optional[QuantumSpace] = None,
    system_id: Optional[str] = None,
) -> RewriteSystem:
    """Merge the relations of one or more presentations into a rewrite system.

    Args:
        presentations: Presentations over the same generators
        setting: Free algebra or quantum space
        ambient: Quantum space the words live in, for ``Setting.QUANTUM_SPACE``
        system_id: Name used in reports

    Returns:
        RewriteSystem with one rule per relation
    """
    if not presentations:
        raise ValueError("At least one presentation is required")
    alphabet_size = len(presentations[0].generator_labels)
    rules: Dict[Word, Rule] = {}
    for presentation in presentations:
        if len(presentation.generator_labels) != alphabet_size:
            raise ValueError("Presentations use different generator sets")
        for relation in presentation.relations:
            if relation.lead in rules:
                raise ValueError(f"Duplicate lead {relation.lead}")
            rules[relation.lead] = Rule(relation.coeff, relation.tail)
        for word in presentation.monomial_relations:
            rules[tuple(word)] = Rule(LaurentMonomial.unit(), None)
    name = system_id or "+".join(p.provenance.value for p in presentations)
    return RewriteSystem(alphabet_size, rules, setting, ambient, name)


def drop_rule(sys: RewriteSystem, index: int) -> RewriteSystem:
    """Copy of the system without its ``index``-th rule."""
    leads = sys.leads()
    rules = {lead: rule for lead, rule in sys.rules.items() if lead != leads[index]}
    return RewriteSystem(
        sys.alphabet_size, rules, sys.setting, sys.ambient, f"{sys.system_id}-drop{index}"
    )


def corrupt_rule(sys: RewriteSystem, index: int, param: str = CORRUPTION_PARAM) -> RewriteSystem:
    """Copy of the system whose ``index``-th coefficient is multiplied by a fresh parameter."""
    lead = sys.leads()[index]
    rules = dict(sys.rules)
    rule = rules[lead]
    rules[lead] = Rule(rule.coeff * LaurentMonomial.param(param), rule.tail)
    return RewriteSystem(
        sys.alphabet_size, rules, sys.setting, sys.ambient, f"{sys.system_id}-corrupt{index}"
    )


class ReductionStep(NamedTuple):
    position: int
    before: Word
    after: Optional[Word]
    coeff: LaurentMonomial


def _match_positions(sys: RewriteSystem, word: Word) -> List[int]:
    return [p for p in range(len(word) - 1) if word[p : p + 2] in sys.rules]


def _reduce(
    sys: RewriteSystem,
    word: Sequence[int],
    strategy: Strategy = Strategy.LEFTMOST,
    trace: Optional[List[ReductionStep]] = None,
    seed: Optional[int] = None,
) -> List[Tuple[LaurentMonomial, Word]]:
    rng = random.Random(config.seed if seed is None else seed)
    current = tuple(word)
    coeff = LaurentMonomial.unit()
    if sys.setting == Setting.QUANTUM_SPACE:
        nf = normal_form(sys.ambient, current)
        coeff, current = nf.coeff, nf.word()

    bound = sys.step_bound(len(current))
    for _ in range(bound):
        positions = _match_positions(sys, current)
        if not positions:
            return [(coeff, current)]
        if strategy == Strategy.LEFTMOST:
            position = positions[0]
        elif strategy == Strategy.RIGHTMOST:
            position = positions[-1]
        else:
            position = rng.choice(positions)
        rule = sys.rules[current[position : position + 2]]
        if rule.tail is None:
            if trace is not None:
                trace.append(ReductionStep(position, current, None, rule.coeff))
            return []
        before = current
        current = current[:position] + rule.tail + current[position + 2 :]
        coeff = coeff * rule.coeff
        if sys.setting == Setting.QUANTUM_SPACE:
            nf = normal_form(sys.ambient, current)
            coeff, current = coeff * nf.coeff, nf.word()
        if trace is not None:
            trace.append(ReductionStep(position, before, current, rule.coeff))
        logger.debug(f"{sys.system_id}: {before} -> {current} at {position}")

    logger.error(f"Reduction of {tuple(word)} in {sys.system_id} did not terminate")
    raise ReductionLimitError(word, bound)


def reduce_word(
    sys: RewriteSystem,
    word: Sequence[int],
    strategy: Strategy = Strategy.LEFTMOST,
    seed: Optional[int] = None,
) -> List[Tuple[LaurentMonomial, Word]]:
    """Fully reduce a word modulo the rules.

    Args:
        sys: Rewrite system
        word: Word to reduce
        strategy: Rewrite the leftmost, the rightmost or a random matching factor first
        seed: Seed for the random strategy, ``QGROBNER_SEED`` when omitted

    Returns:
        Coefficient-word list in normal form; one entry for binomial
        systems, empty when the word reduces to zero

    Raises:
        ReductionLimitError: If the step bound is exceeded
    """
    return _reduce(sys, word, strategy, seed=seed)


class Composition(NamedTuple):
    """Overlap ab.t = a.bt of two rules and the result of one step on each side."""

    overlap_word: Word
    left_lead: Word
    right_lead: Word
    left_result: Optional[Tuple[LaurentMonomial, Word]]
    right_result: Optional[Tuple[LaurentMonomial, Word]]


def _require_free(sys: RewriteSystem) -> None:
    if sys.setting != Setting.FREE_ALGEBRA:
        raise ValueError("Overlap compositions are only defined in the free algebra")


def overlap_compositions(sys: RewriteSystem) -> List[Composition]:
    """All one-letter overlaps between leads, self-overlaps included."""
    _require_free(sys)
    by_first: Dict[int, List[Word]] = {}
    for lead in sys.rules:
        by_first.setdefault(lead[0], []).append(lead)

    compositions = []
    for left in sorted(sys.rules):
        for right in sorted(by_first.get(left[1], [])):
            omega = left + right[1:]
            left_rule, right_rule = sys.rules[left], sys.rules[right]
            left_result = (
                None if left_rule.tail is None else (left_rule.coeff, left_rule.tail + omega[2:])
            )
            right_result = (
                None if right_rule.tail is None else (right_rule.coeff, omega[:1] + right_rule.tail)
            )
            compositions.append(Composition(omega, left, right, left_result, right_result))
    return compositions


class Solvability(NamedTuple):
    solvable: bool
    left_normal: List[Tuple[LaurentMonomial, Word]]
    right_normal: List[Tuple[LaurentMonomial, Word]]
    trace: List[ReductionStep]


def _branch_normal(
    sys: RewriteSystem,
    branch: Optional[Tuple[LaurentMonomial, Word]],
    trace: List[ReductionStep],
) -> List[Tuple[LaurentMonomial, Word]]:
    if branch is None:
        return []
    coeff, word = branch
    return [(coeff * c, w) for c, w in _reduce(sys, word, trace=trace)]


def check_solvable(sys: RewriteSystem, comp: Composition) -> Solvability:
    """Reduce both branches of a composition and compare their normal forms."""
    _require_free(sys)
    trace: List[ReductionStep] = []
    left = _branch_normal(sys, comp.left_result, trace)
    right = _branch_normal(sys, comp.right_result, trace)
    solvable = left == right
    if not solvable:
        logger.debug(f"{sys.system_id}: composition {comp.overlap_word} is not solvable")
    return Solvability(solvable, left, right, trace)


def _transition_matrix(sys: RewriteSystem, ordered: bool) -> np.ndarray:
    size = sys.alphabet_size
    allowed = np.ones((size, size), dtype=np.int64)
    if ordered:
        allowed = np.triu(allowed)
    for lead in sys.rules:
        allowed[lead[0], lead[1]] = 0
    return allowed


def _count_paths(allowed: np.ndarray, length: int) -> int:
    if length <= 0:
        return 1
    ones = np.ones(allowed.shape[0], dtype=np.int64)
    return int(ones @ np.linalg.matrix_power(allowed, length - 1) @ ones)


def count_normal_words_free(sys: RewriteSystem, length: int = 3) -> int:
    """Words of the given length with no lead as a factor, as 1^T M^(length-1) 1."""
    return _count_paths(_transition_matrix(sys, ordered=False), length)


def count_normal_ordered_words(sys: RewriteSystem, length: int = 3) -> int:
    """Ordered words of the given length whose consecutive pairs avoid every lead."""
    return _count_paths(_transition_matrix(sys, ordered=True), length)


def enumerate_normal_ordered_words(sys: RewriteSystem, length: int = 3) -> List[Word]:
    """Explicit list of the words counted by ``count_normal_ordered_words``."""
    return [
        word
        for word in combinations_with_replacement(range(sys.alphabet_size), length)
        if not _match_positions(sys, word)
    ]


def certify_quadratic_gb(sys: RewriteSystem, expected_dim3: int) -> CertificationReport:
    """Certify a quadratic binomial system against the degree-3 dimension.

    Args:
        sys: System to certify
        expected_dim3: dim of the degree-3 component of the quotient

    Returns:
        CertificationReport; passes when the normal-word count matches and,
        in the free algebra, every overlap composition is solvable
    """
    n_overlaps = n_solvable = 0
    if sys.setting == Setting.FREE_ALGEBRA:
        normal3 = count_normal_words_free(sys, 3)
        compositions = overlap_compositions(sys)
        workers = get_workers()
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(lambda comp: check_solvable(sys, comp), compositions))
        else:
            results = [check_solvable(sys, comp) for comp in compositions]
        n_overlaps = len(compositions)
        n_solvable = sum(1 for result in results if result.solvable)
    else:
        normal3 = count_normal_ordered_words(sys, 3)

    passed = normal3 == expected_dim3 and n_solvable == n_overlaps
    report = CertificationReport(
        system_id=sys.system_id,
        setting=sys.setting.value,
        n_overlaps=n_overlaps,
        n_solvable=n_solvable,
        normal3_count=normal3,
        expected_dim3=expected_dim3,
        passed=passed,
    )
    if passed:
        logger.info(f"{sys.system_id}: PASS ({normal3} normal words of length 3)")
    else:
        logger.warning(
            f"{sys.system_id}: FAIL (count {normal3}, expected {expected_dim3}, "
            f"{n_solvable}/{n_overlaps} compositions solvable)"
        )
    return report


def quantum_space_system(space: QuantumSpace) -> RewriteSystem:
    return from_presentation(space.presentation, system_id=f"quantum-space-n{space.n}")


def veronese_kernel_system(space: QuantumSpace, d: int) -> RewriteSystem:
    """The kernel basis inside the derived quantum space."""
    return from_presentation(
        veronese.veronese_kernel_gb(space, d),
        setting=Setting.QUANTUM_SPACE,
        ambient=veronese.derived_space(space, d),
        system_id=f"veronese-kernel-n{space.n}-d{d}",
    )


def lifted_kernel_system(space: QuantumSpace, d: int) -> RewriteSystem:
    """Re1 and Re2 together in the free algebra on Y_N."""
    lifted = veronese.lifted_kernel_gb(space, d)
    return from_presentation(
        lifted.re1, lifted.re2, system_id=f"lifted-kernel-n{space.n}-d{d}"
    )


def segre_kernel_system(q: DeformationMatrix, q_prime: DeformationMatrix) -> RewriteSystem:
    """The Segre kernel basis inside the quantum space on Z."""
    return from_presentation(
        segre.segre_kernel_gb(q, q_prime),
        setting=Setting.QUANTUM_SPACE,
        ambient=segre.segre_space(q, q_prime),
        system_id=f"segre-kernel-n{q.size - 1}-m{q_prime.size - 1}",
    )


def veronese_expected_dim3(n: int, d: int) -> int:
    return math.comb(n + 3 * d, n)


def segre_expected_dim3(n: int, m: int) -> int:
    return segre.segre_hilbert_dim(n, m, 3)
