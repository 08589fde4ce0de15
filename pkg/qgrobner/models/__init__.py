# Models package for qgrobner coefficients, relations and reports

from .algebra import (
    BadMatrixError,
    BinomialRelation,
    DeformationMatrix,
    NormalTerm,
    Presentation,
    Provenance,
)
from .coeff import LaurentMonomial, MissingParameterError, ParamAssignment
from .report import CertificationReport

__all__ = [
    "BadMatrixError",
    "BinomialRelation",
    "CertificationReport",
    "DeformationMatrix",
    "LaurentMonomial",
    "MissingParameterError",
    "NormalTerm",
    "ParamAssignment",
    "Presentation",
    "Provenance",
]
