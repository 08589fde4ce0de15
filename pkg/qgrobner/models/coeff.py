"""
Exact coefficients for quantum-space computations.

Every coefficient produced by the Veronese and Segre constructions is a
Laurent monomial in the deformation parameters, so coefficients are stored
as sparse exponent maps keyed by parameter name and evaluated exactly over
the rationals.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_serializer, model_validator

from qgrobner.errors import QGrobnerError

logger = logging.getLogger(__name__)


class MissingParameterError(QGrobnerError):
    """Raised when a monomial is evaluated without a value for one of its parameters."""

    def __init__(self, param: str):
        self.param = param
        super().__init__(f"No value assigned to parameter '{param}'")


class LaurentMonomial(BaseModel):
    """Product of named nonzero parameters raised to integer powers.

    Zero exponents are never stored and pairs are sorted by name, so two
    monomials are equal exactly when their structures are equal.
    """

    model_config = ConfigDict(frozen=True)

    exponents: Tuple[Tuple[str, int], ...] = Field(
        default=(), description="Sorted (parameter, exponent) pairs, no zero exponents"
    )

    @model_validator(mode="before")
    @classmethod
    def _canonicalize(cls, data: Any) -> Any:
        if isinstance(data, LaurentMonomial):
            return data
        if isinstance(data, Mapping) and set(data) == {"exponents"}:
            pairs = data["exponents"]
        elif isinstance(data, Mapping):
            pairs = data.items()
        else:
            pairs = data

        totals: Dict[str, int] = {}
        for name, exponent in pairs:
            totals[str(name)] = totals.get(str(name), 0) + int(exponent)
        return {"exponents": _sorted_pairs(totals)}

    @model_serializer
    def _dump(self) -> List[List[Any]]:
        return [[name, exponent] for name, exponent in self.exponents]

    @classmethod
    def unit(cls) -> "LaurentMonomial":
        return _UNIT

    @classmethod
    def param(cls, name: str, exponent: int = 1) -> "LaurentMonomial":
        """Single parameter raised to a power."""
        return cls.from_counts({name: exponent})

    @classmethod
    def from_counts(cls, totals: Mapping[str, int]) -> "LaurentMonomial":
        """Build from an exponent map without re-running validation."""
        return cls.model_construct(exponents=_sorted_pairs(totals))

    def as_dict(self) -> Dict[str, int]:
        return dict(self.exponents)

    def is_unit(self) -> bool:
        return not self.exponents

    def params(self) -> List[str]:
        return [name for name, _ in self.exponents]

    def __mul__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        if not isinstance(other, LaurentMonomial):
            return NotImplemented
        return mono_mul(self, other)

    def __pow__(self, power: int) -> "LaurentMonomial":
        return LaurentMonomial.from_counts(
            {name: exponent * power for name, exponent in self.exponents}
        )

    def inverse(self) -> "LaurentMonomial":
        return mono_inv(self)

    def __repr__(self) -> str:
        return f"LaurentMonomial({dict(self.exponents)})"


def _sorted_pairs(totals: Mapping[str, int]) -> Tuple[Tuple[str, int], ...]:
    return tuple(sorted((name, e) for name, e in totals.items() if e != 0))


_UNIT = LaurentMonomial.model_construct(exponents=())


class ParamAssignment(BaseModel):
    """Exact nonzero rational values for named parameters."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: Dict[str, Fraction] = Field(
        default_factory=dict, description="Parameter name to nonzero rational value"
    )

    @field_validator("values")
    @classmethod
    def _nonzero(cls, values: Dict[str, Fraction]) -> Dict[str, Fraction]:
        for name, value in values.items():
            if not isinstance(value, Fraction):
                raise ValueError(f"Value of '{name}' must be a Fraction")
            if value == 0:
                raise ValueError(f"Parameter '{name}' must be nonzero")
        return values

    @classmethod
    def parse(cls, items: Iterable[str]) -> "ParamAssignment":
        """Parse ``name=rational`` strings such as ``q10=2/5``.

        Args:
            items: Assignment strings from the command line

        Returns:
            ParamAssignment with one entry per string
        """
        values: Dict[str, Fraction] = {}
        for item in items:
            name, sep, raw = item.partition("=")
            if not sep or not name.strip():
                raise ValueError(f"Malformed assignment '{item}', expected name=value")
            values[name.strip()] = Fraction(raw.strip())
        return cls(values=values)

    @classmethod
    def constant(cls, names: Iterable[str], value: Fraction) -> "ParamAssignment":
        return cls(values={name: Fraction(value) for name in names})


def mono_mul(a: LaurentMonomial, b: LaurentMonomial) -> LaurentMonomial:
    """Exponent-wise sum of two monomials."""
    if not b.exponents:
        return a
    if not a.exponents:
        return b
    totals = dict(a.exponents)
    for name, exponent in b.exponents:
        totals[name] = totals.get(name, 0) + exponent
    return LaurentMonomial.from_counts(totals)


def mono_inv(a: LaurentMonomial) -> LaurentMonomial:
    """Exponent-wise negation."""
    return LaurentMonomial.from_counts({name: -e for name, e in a.exponents})


def mono_eval(a: LaurentMonomial, s: ParamAssignment) -> Fraction:
    """Evaluate a monomial at rational parameter values.

    Args:
        a: Monomial to evaluate
        s: Values for at least every parameter of ``a``

    Returns:
        Exact rational value of the product

    Raises:
        MissingParameterError: If a parameter of ``a`` is unassigned
    """
    result = Fraction(1)
    for name, exponent in a.exponents:
        if name not in s.values:
            raise MissingParameterError(name)
        result *= s.values[name] ** exponent
    return result


def mono_product(factors: Iterable[LaurentMonomial]) -> LaurentMonomial:
    """Product of any number of monomials."""
    totals: Dict[str, int] = {}
    for factor in factors:
        for name, exponent in factor.exponents:
            totals[name] = totals.get(name, 0) + exponent
    return LaurentMonomial.from_counts(totals)
