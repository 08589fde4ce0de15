"""
Text and JSON rendering of presentations, matrices and reports.

Text output follows the usual notation ``x1*x0 - q10 x0*x1``; JSON output is
the pydantic serialization of the models, newline-terminated.
"""

import json
from fractions import Fraction
from typing import Optional, Sequence

import click
import pandas as pd

from qgrobner.models.algebra import BinomialRelation, DeformationMatrix, NormalTerm, Presentation, word_of
from qgrobner.models.coeff import LaurentMonomial, ParamAssignment, mono_eval
from qgrobner.models.report import CertificationReport

TEXT = "text"
JSON = "json"


def render_monomial(coeff: LaurentMonomial) -> str:
    """``q10^2*q21^-1``; the unit renders as an empty string."""
    parts = []
    for name, exponent in coeff.exponents:
        parts.append(name if exponent == 1 else f"{name}^{exponent}")
    return "*".join(parts)


def render_rational(value: Fraction) -> str:
    return str(value)


def render_word(word: Sequence[int], labels: Sequence[str]) -> str:
    if not word:
        return "1"
    return "*".join(labels[letter] for letter in word)


def render_relation(
    relation: BinomialRelation,
    labels: Sequence[str],
    assignment: Optional[ParamAssignment] = None,
    color: bool = False,
) -> str:
    lead = render_word(relation.lead, labels)
    tail = render_word(relation.tail, labels)
    if color:
        lead = click.style(lead, bold=True)

    sign = "-"
    if assignment is None:
        scalar = render_monomial(relation.coeff)
    else:
        value = mono_eval(relation.coeff, assignment)
        if value < 0:
            sign, value = "+", -value
        scalar = "" if value == 1 else render_rational(value)

    if scalar:
        return f"{lead} {sign} {scalar} {tail}"
    return f"{lead} {sign} {tail}"


def _header_line(presentation: Presentation) -> str:
    sizes = " ".join(f"{key}={value}" for key, value in presentation.header.items())
    return f"# {presentation.provenance.value} {sizes}".rstrip()


def render_presentation(
    presentation: Presentation,
    fmt: str = TEXT,
    assignment: Optional[ParamAssignment] = None,
    color: bool = False,
) -> str:
    """Render a presentation as text lines or JSON.

    Args:
        presentation: Presentation to render
        fmt: ``text`` or ``json``
        assignment: Numeric parameter values; coefficients become rationals
        color: Style leading words in text output

    Returns:
        Newline-terminated string
    """
    labels = presentation.generator_labels
    if fmt == JSON:
        if assignment is None:
            return presentation.model_dump_json() + "\n"
        payload = {
            "provenance": presentation.provenance.value,
            "header": presentation.header,
            "generator_labels": list(labels),
            "assignment": {name: str(value) for name, value in sorted(assignment.values.items())},
            "relations": [
                {
                    "lead": list(relation.lead),
                    "value": str(mono_eval(relation.coeff, assignment)),
                    "tail": list(relation.tail),
                }
                for relation in presentation.relations
            ],
            "monomial_relations": [list(word) for word in presentation.monomial_relations],
        }
        return json.dumps(payload, separators=(",", ":")) + "\n"

    lines = [_header_line(presentation)]
    lines.extend(
        render_relation(relation, labels, assignment, color) for relation in presentation.relations
    )
    lines.extend(render_word(word, labels) for word in presentation.monomial_relations)
    return "\n".join(lines) + "\n"


def render_matrix(
    matrix: DeformationMatrix,
    labels: Sequence[str],
    fmt: str = TEXT,
    assignment: Optional[ParamAssignment] = None,
) -> str:
    """Render a deformation matrix as a labelled table or as JSON rows."""
    if fmt == JSON:
        if assignment is None:
            rows = [[value.model_dump() for value in row] for row in matrix.entries]
        else:
            rows = [[str(mono_eval(value, assignment)) for value in row] for row in matrix.entries]
        return json.dumps({"labels": list(labels), "entries": rows}, separators=(",", ":")) + "\n"

    if assignment is None:
        cells = [[render_monomial(value) or "1" for value in row] for row in matrix.entries]
    else:
        cells = [[render_rational(mono_eval(value, assignment)) for value in row] for row in matrix.entries]
    frame = pd.DataFrame(cells, index=list(labels), columns=list(labels))
    return frame.to_string() + "\n"


def render_normal_term(
    term: NormalTerm,
    labels: Sequence[str],
    fmt: str = TEXT,
    assignment: Optional[ParamAssignment] = None,
) -> str:
    word = word_of(term.term)
    if assignment is None:
        scalar = render_monomial(term.coeff)
        value = term.coeff.model_dump()
    else:
        scalar = render_rational(mono_eval(term.coeff, assignment))
        value = scalar
    if fmt == JSON:
        return json.dumps({"coeff": value, "term": list(term.term)}, separators=(",", ":")) + "\n"
    rendered = render_word(word, labels)
    return (f"{scalar} {rendered}" if scalar and scalar != "1" else rendered) + "\n"


def render_report(report: CertificationReport, fmt: str = TEXT) -> str:
    if fmt == JSON:
        return report.to_json() + "\n"
    verdict = "PASS" if report.passed else "FAIL"
    lines = [
        f"{report.system_id} [{report.setting}]: {verdict}",
        f"  normal words of length 3: {report.normal3_count} (expected {report.expected_dim3})",
    ]
    if report.setting == "FreeAlgebra":
        lines.append(f"  solvable compositions: {report.n_solvable}/{report.n_overlaps}")
    return "\n".join(lines) + "\n"
