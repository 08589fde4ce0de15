"""Parameter and generator naming conventions."""

from typing import Sequence

Q_PREFIX = "q"
QP_PREFIX = "qp"


def param_name(prefix: str, j: int, i: int, single: bool = False) -> str:
    """Name of the free parameter sitting at matrix entry (j, i), j > i.

    Args:
        prefix: ``q`` for a quantum space, ``qp`` for the second Segre factor
        j: Row index (the larger generator)
        i: Column index (the smaller generator)
        single: The space has exactly one free parameter

    Returns:
        ``q``, ``q10`` or ``q12_3`` style name
    """
    if single:
        return prefix
    if j >= 10 or i >= 10:
        return f"{prefix}{j}_{i}"
    return f"{prefix}{j}{i}"


def x_labels(size: int, letter: str = "x") -> list:
    return [f"{letter}{k}" for k in range(size)]


def z_labels(rows: int, cols: int) -> list:
    """Segre generator labels ``z{i}{alpha}`` in flat order."""
    sep = "_" if rows > 10 or cols > 10 else ""
    return [f"z{i}{sep}{alpha}" for i in range(rows) for alpha in range(cols)]


def dual_labels(labels: Sequence[str]) -> list:
    return [f"xi{k}" for k in range(len(labels))]
