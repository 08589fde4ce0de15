import random
from fractions import Fraction

import pytest

from qgrobner.models.coeff import (
    LaurentMonomial,
    MissingParameterError,
    ParamAssignment,
    mono_eval,
    mono_inv,
    mono_mul,
    mono_product,
)

PARAMS = ["q10", "q20", "q21", "qp"]
PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def random_monomial(rng):
    names = rng.sample(PARAMS, rng.randint(0, len(PARAMS)))
    return LaurentMonomial.from_counts({name: rng.randint(-3, 3) for name in names})


def test_canonical_form_drops_zero_exponents_and_sorts():
    a = LaurentMonomial.model_validate({"q21": 1, "q10": 2, "q20": 0})
    assert a.exponents == (("q10", 2), ("q21", 1))


def test_repeated_names_are_summed():
    a = LaurentMonomial.model_validate([["q10", 1], ["q21", -1], ["q10", 1], ["q21", 1]])
    assert a == LaurentMonomial.param("q10", 2)


def test_unit():
    unit = LaurentMonomial.unit()
    assert unit.is_unit()
    assert unit.model_dump() == []
    assert LaurentMonomial.model_validate([]) == unit


def test_multiplication_adds_exponents():
    a = LaurentMonomial.model_validate({"q10": 2, "q21": -1})
    b = LaurentMonomial.model_validate({"q21": 1, "q20": 1})
    assert mono_mul(a, b) == LaurentMonomial.model_validate({"q10": 2, "q20": 1})
    assert a * b == mono_mul(b, a)


def test_inverse_cancels():
    a = LaurentMonomial.model_validate({"q10": 3, "qp": -2})
    assert (a * mono_inv(a)).is_unit()
    assert a.inverse() == LaurentMonomial.model_validate({"q10": -3, "qp": 2})


def test_power_and_product():
    q = LaurentMonomial.param("q")
    assert q ** 3 == LaurentMonomial.param("q", 3)
    assert (q ** 0).is_unit()
    assert mono_product([q, q, q.inverse()]) == q


def test_serialization_is_sorted_pairs():
    a = LaurentMonomial.model_validate({"q21": -1, "q10": 2})
    assert a.model_dump() == [["q10", 2], ["q21", -1]]
    assert LaurentMonomial.model_validate_json(a.model_dump_json()) == a


def test_eval_exact():
    a = LaurentMonomial.model_validate({"q10": 2, "q21": -1})
    s = ParamAssignment(values={"q10": Fraction(2, 3), "q21": Fraction(4)})
    assert mono_eval(a, s) == Fraction(1, 9)


def test_eval_of_unit_is_one():
    assert mono_eval(LaurentMonomial.unit(), ParamAssignment()) == 1


def test_eval_missing_parameter():
    a = LaurentMonomial.param("q10")
    with pytest.raises(MissingParameterError) as excinfo:
        mono_eval(a, ParamAssignment(values={"q20": Fraction(2)}))
    assert excinfo.value.param == "q10"


def test_parse_assignment():
    s = ParamAssignment.parse(["q=1/2", " qp = -3 "])
    assert s.values == {"q": Fraction(1, 2), "qp": Fraction(-3)}


@pytest.mark.parametrize("item", ["q", "=2", "q=abc", "q=0"])
def test_parse_assignment_rejects(item):
    with pytest.raises(ValueError):
        ParamAssignment.parse([item])


def test_constant_assignment():
    s = ParamAssignment.constant(["q10", "q20"], Fraction(1))
    assert set(s.values) == {"q10", "q20"}
    assert all(value == 1 for value in s.values.values())


def test_group_laws_on_random_monomials():
    rng = random.Random(7)
    unit = LaurentMonomial.unit()
    for _ in range(1000):
        a, b, c = random_monomial(rng), random_monomial(rng), random_monomial(rng)
        assert mono_mul(mono_mul(a, b), c) == mono_mul(a, mono_mul(b, c))
        assert mono_mul(a, b) == mono_mul(b, a)
        assert mono_mul(a, unit) == a == mono_mul(unit, a)
        assert mono_mul(a, mono_inv(a)) == unit == mono_mul(mono_inv(a), a)


def test_structural_equality_matches_evaluation_at_primes():
    rng = random.Random(11)
    for _ in range(1000):
        a = LaurentMonomial.from_counts({name: rng.randint(-1, 1) for name in PARAMS[:2]})
        b = LaurentMonomial.from_counts({name: rng.randint(-1, 1) for name in PARAMS[:2]})
        assignments = [
            ParamAssignment(
                values={name: Fraction(p) for name, p in zip(PARAMS, rng.sample(PRIMES, len(PARAMS)))}
            )
            for _ in range(5)
        ]
        agree = all(mono_eval(a, s) == mono_eval(b, s) for s in assignments)
        assert (a == b) == agree
