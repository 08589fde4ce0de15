"""
qgrobner command line

Builds quantum spaces, emits Veronese and Segre presentations and kernel
bases, certifies them as Gröbner bases and regenerates the worked examples.
"""

import functools
import logging
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

import click

from qgrobner import __version__
from qgrobner.config import config, use_color
from qgrobner.errors import QGrobnerError
from qgrobner.models.algebra import DeformationMatrix
from qgrobner.models.coeff import ParamAssignment
from qgrobner.services import gbcheck, segre, veronese
from qgrobner.services.examples_service import get_examples_service
from qgrobner.services.qspace import hilbert_dim, koszul_dual, new_quantum_space, normal_form
from qgrobner.utils.naming import QP_PREFIX, x_labels, z_labels
from qgrobner.utils.render import (
    JSON,
    TEXT,
    render_matrix,
    render_normal_term,
    render_presentation,
    render_report,
)

logging.basicConfig(level=config.log_level)
logger = logging.getLogger(__name__)

SYSTEMS = ("veronese", "lifted", "segre", "quantum")


def _parse_assignment(ctx, param, value: Tuple[str, ...]) -> Optional[ParamAssignment]:
    if not value:
        return None
    try:
        return ParamAssignment.parse(value)
    except (ValueError, ZeroDivisionError) as e:
        raise click.BadParameter(str(e))


def _parse_word(ctx, param, value: Optional[str]) -> Tuple[int, ...]:
    if value is None or not value.strip():
        return ()
    try:
        letters = tuple(int(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter(f"'{value}' is not a comma separated list of indices")
    if any(letter < 0 for letter in letters):
        raise click.BadParameter("generator indices must be non-negative")
    return letters


def output_options(func: Callable) -> Callable:
    """Attach --format, --assign and --output to a sub-command."""
    func = click.option(
        "--output", "-o", type=click.Path(dir_okay=False, path_type=Path),
        help="Write to this file instead of standard output",
    )(func)
    func = click.option(
        "--assign", "-a", multiple=True, callback=_parse_assignment,
        help="Parameter value as name=rational, repeatable",
    )(func)
    func = click.option(
        "--format", "fmt", type=click.Choice([TEXT, JSON]), default=TEXT, show_default=True,
        help="Output format",
    )(func)
    return func


def handle_errors(func: Callable) -> Callable:
    """Log library errors and exit with status 1."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except QGrobnerError as e:
            logger.error(str(e))
            click.echo(f"Error: {e}", err=True)
            raise SystemExit(1)

    return wrapper


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        click.echo(text, nl=False, color=use_color() or None)
        return
    output.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {output}")


def _color(output: Optional[Path]) -> bool:
    return use_color() and output is None


n_option = click.option("--n", type=click.IntRange(min=0), required=True, help="Largest index n")
d_option = click.option("--d", type=click.IntRange(min=1), required=True, help="Veronese degree d")
m_option = click.option(
    "--m", type=click.IntRange(min=0), required=True, help="Largest index m of the second factor"
)


@click.group()
@click.version_option(version=__version__, prog_name="qgrobner")
def cli():
    """Exact Gröbner bases for Veronese and Segre maps of quantum spaces."""


@cli.command("veronese-present")
@n_option
@d_option
@click.option("--derived", is_flag=True, help="Also emit the derived-space relations R1'")
@output_options
@handle_errors
def veronese_present(n: int, d: int, derived: bool, fmt: str, assign, output):
    """Quadratic presentation R1 + R2 of the d-Veronese subalgebra."""
    presentation = veronese.veronese_presentation(new_quantum_space(n), d)
    parts = [presentation.r1, presentation.r2]
    if derived:
        parts.append(presentation.r1_prime)
    color = _color(output)
    _emit("".join(render_presentation(p, fmt, assign, color) for p in parts), output)


@cli.command("veronese-kernel")
@n_option
@d_option
@click.option("--lifted", is_flag=True, help="Emit Re1 + Re2 in the free algebra instead")
@output_options
@handle_errors
def veronese_kernel(n: int, d: int, lifted: bool, fmt: str, assign, output):
    """Reduced Gröbner basis of the kernel of the Veronese map."""
    space = new_quantum_space(n)
    color = _color(output)
    if lifted:
        kernel = veronese.lifted_kernel_gb(space, d)
        text = render_presentation(kernel.re1, fmt, assign, color) + render_presentation(
            kernel.re2, fmt, assign, color
        )
    else:
        text = render_presentation(veronese.veronese_kernel_gb(space, d), fmt, assign, color)
    _emit(text, output)


@cli.command("veronese-matrix")
@n_option
@d_option
@output_options
@handle_errors
def veronese_matrix(n: int, d: int, fmt: str, assign, output):
    """Deformation matrix of the derived quantum space on y_0 .. y_N."""
    space = new_quantum_space(n)
    table = veronese.term_table(n, d)
    _emit(render_matrix(veronese.derived_matrix(space, d), table.labels(), fmt, assign), output)


def _segre_factors(n: int, m: int) -> Tuple[DeformationMatrix, DeformationMatrix]:
    return DeformationMatrix.generic(n + 1), DeformationMatrix.generic(m + 1, prefix=QP_PREFIX)


@cli.command("segre-matrix")
@n_option
@m_option
@output_options
@handle_errors
def segre_matrix(n: int, m: int, fmt: str, assign, output):
    """Kronecker product of the two deformation matrices."""
    q, q_prime = _segre_factors(n, m)
    labels = z_labels(n + 1, m + 1)
    _emit(render_matrix(segre.segre_matrix(q, q_prime), labels, fmt, assign), output)


@cli.command("segre-kernel")
@n_option
@m_option
@output_options
@handle_errors
def segre_kernel(n: int, m: int, fmt: str, assign, output):
    """Reduced Gröbner basis of the kernel of the Segre map."""
    q, q_prime = _segre_factors(n, m)
    _emit(render_presentation(segre.segre_kernel_gb(q, q_prime), fmt, assign, _color(output)), output)


@cli.command("koszul-dual")
@n_option
@output_options
@handle_errors
def koszul_dual_command(n: int, fmt: str, assign, output):
    """Quantum Grassmann algebra dual to A^n_q."""
    _emit(render_presentation(koszul_dual(new_quantum_space(n)), fmt, assign, _color(output)), output)


def _build_system(system: str, n: int, d: Optional[int], m: Optional[int]):
    if system in ("veronese", "lifted") and d is None:
        raise click.UsageError(f"--d is required for --system {system}")
    if system == "segre" and m is None:
        raise click.UsageError("--m is required for --system segre")

    if system == "segre":
        q, q_prime = _segre_factors(n, m)
        return gbcheck.segre_kernel_system(q, q_prime), gbcheck.segre_expected_dim3(n, m)
    space = new_quantum_space(n)
    if system == "veronese":
        return gbcheck.veronese_kernel_system(space, d), gbcheck.veronese_expected_dim3(n, d)
    if system == "lifted":
        return gbcheck.lifted_kernel_system(space, d), gbcheck.veronese_expected_dim3(n, d)
    return gbcheck.quantum_space_system(space), hilbert_dim(space, 3)


def _check_rule_index(sys, index: int, flag: str) -> None:
    if not 0 <= index < len(sys):
        raise click.UsageError(f"{flag} {index} is out of range, the system has {len(sys)} rules")


@cli.command()
@click.option("--system", type=click.Choice(SYSTEMS), required=True, help="System to certify")
@n_option
@click.option("--d", type=click.IntRange(min=1), default=None, help="Veronese degree d")
@click.option("--m", type=click.IntRange(min=0), default=None, help="Largest index m")
@click.option("--drop-rule", type=click.IntRange(min=0), default=None, help="Remove rule K first")
@click.option("--corrupt-rule", type=click.IntRange(min=0), default=None, help="Corrupt rule K first")
@click.option("--format", "fmt", type=click.Choice([TEXT, JSON]), default=TEXT, show_default=True)
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path))
@handle_errors
def certify(system: str, n: int, d, m, drop_rule, corrupt_rule, fmt: str, output):
    """Certify a kernel basis or quantum space as a quadratic Gröbner basis."""
    sys, expected = _build_system(system, n, d, m)
    if drop_rule is not None:
        _check_rule_index(sys, drop_rule, "--drop-rule")
        sys = gbcheck.drop_rule(sys, drop_rule)
    if corrupt_rule is not None:
        _check_rule_index(sys, corrupt_rule, "--corrupt-rule")
        sys = gbcheck.corrupt_rule(sys, corrupt_rule)

    report = gbcheck.certify_quadratic_gb(sys, expected)
    _emit(render_report(report, fmt), output)
    if not report.passed:
        logger.error(f"Certification of {report.system_id} failed")
        raise SystemExit(1)


@cli.command("eval")
@n_option
@click.option("--word", "-w", callback=_parse_word, required=True, help="Letters such as 1,0,1")
@click.option("--d", type=click.IntRange(min=1), default=None, help="Read the word over y_0 .. y_N")
@output_options
@handle_errors
def eval_command(n: int, word: Sequence[int], d: Optional[int], fmt: str, assign, output):
    """Normal form of a word in A^n_q, optionally through the Veronese map."""
    space = new_quantum_space(n)
    alphabet = space.size if d is None else len(veronese.term_table(n, d))
    if any(letter >= alphabet for letter in word):
        raise click.BadParameter(f"letters must be below {alphabet}", param_hint="--word")

    if d is None:
        term = normal_form(space, word)
    else:
        term = veronese.veronese_eval(space, d, word)
    _emit(render_normal_term(term, x_labels(space.size), fmt, assign), output)


@cli.command()
@click.option("--update", is_flag=True, help="Rewrite the committed corpus from the constructions")
@handle_errors
def examples(update: bool):
    """Regenerate the worked examples and compare them with the corpus."""
    service = get_examples_service()
    if update:
        for name in service.names():
            click.echo(f"wrote {service.write(name)}")
        return

    results = service.check_all()
    failed: List[str] = []
    for name, ok in results.items():
        click.echo(f"{name}: {'ok' if ok else 'MISMATCH'}")
        if not ok:
            failed.append(name)
    if failed:
        logger.error(f"{len(failed)} example(s) differ from the corpus: {', '.join(failed)}")
        raise SystemExit(1)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
