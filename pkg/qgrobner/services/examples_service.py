"""
Worked examples: generated fixtures and the committed corpus they are checked against.
"""

import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from qgrobner.config import get_data_dir
from qgrobner.errors import QGrobnerError
from qgrobner.models.algebra import DeformationMatrix, Presentation
from qgrobner.services import segre, veronese
from qgrobner.services.qspace import new_quantum_space
from qgrobner.utils.naming import QP_PREFIX

logger = logging.getLogger(__name__)


class FixtureMismatchError(QGrobnerError):
    """Raised when a generated example differs from the committed corpus."""

    def __init__(self, name: str, reason: str = "differs from the committed corpus"):
        self.name = name
        super().__init__(f"Example {name} {reason}")


class ExampleFixture(BaseModel):
    """One worked example: a kernel basis and the deformation matrix it lives in."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Corpus file stem")
    description: str = Field("", description="Human readable summary")
    n: int = Field(..., ge=0, description="Largest generator index of the base space")
    d: Optional[int] = Field(None, ge=1, description="Veronese degree")
    m: Optional[int] = Field(None, ge=0, description="Largest index of the second Segre factor")
    kernel: Presentation = Field(..., description="Reduced Gröbner basis of the kernel")
    matrix: DeformationMatrix = Field(..., description="Derived or Kronecker matrix")


def _veronese_fixture(name: str, description: str, n: int, d: int) -> ExampleFixture:
    space = new_quantum_space(n)
    return ExampleFixture(
        name=name,
        description=description,
        n=n,
        d=d,
        kernel=veronese.veronese_kernel_gb(space, d),
        matrix=veronese.derived_matrix(space, d),
    )


def _segre_fixture(name: str, description: str, n: int, m: int) -> ExampleFixture:
    q = DeformationMatrix.generic(n + 1)
    q_prime = DeformationMatrix.generic(m + 1, prefix=QP_PREFIX)
    return ExampleFixture(
        name=name,
        description=description,
        n=n,
        m=m,
        kernel=segre.segre_kernel_gb(q, q_prime),
        matrix=segre.segre_matrix(q, q_prime),
    )


EXAMPLES: Dict[str, Callable[[], ExampleFixture]] = {
    "twisted_cubic": lambda: _veronese_fixture(
        "twisted_cubic",
        "Veronese map v_{1,3}: the non-commutative twisted cubic curve",
        1,
        3,
    ),
    "rational_normal_curve_d4": lambda: _veronese_fixture(
        "rational_normal_curve_d4",
        "Veronese map v_{1,4}: the non-commutative rational normal curve of degree 4",
        1,
        4,
    ),
    "veronese_surface": lambda: _veronese_fixture(
        "veronese_surface",
        "Veronese map v_{2,2}: the non-commutative Veronese surface",
        2,
        2,
    ),
    "segre_quadric": lambda: _segre_fixture(
        "segre_quadric",
        "Segre map s_{1,1}: the Segre quadric",
        1,
        1,
    ),
    "segre_threefold": lambda: _segre_fixture(
        "segre_threefold",
        "Segre map s_{2,1}: the non-commutative Segre threefold",
        2,
        1,
    ),
}


class ExamplesService:

    def __init__(self, data_dir: Optional[Path] = None):
        self.data_dir = Path(data_dir) if data_dir is not None else get_data_dir()
        self._cache: Dict[str, Any] = {}

    def _load_json(self, filename: str) -> Any:
        if filename in self._cache:
            return self._cache[filename]

        filepath = self.data_dir / filename
        try:
            with open(filepath, "r", encoding="utf-8") as f:
                data = json.load(f)
            self._cache[filename] = data
            return data
        except FileNotFoundError:
            logger.warning(f"Fixture file not found: {filepath}")
            return None
        except json.JSONDecodeError as e:
            logger.error(f"Error parsing {filepath}: {e}")
            return None

    def names(self) -> List[str]:
        return list(EXAMPLES)

    def build(self, name: str) -> ExampleFixture:
        """Regenerate one example from the constructions.

        Raises:
            KeyError: If the example is unknown
        """
        if name not in EXAMPLES:
            raise KeyError(f"Unknown example {name}; choose from {', '.join(EXAMPLES)}")
        return EXAMPLES[name]()

    def load(self, name: str) -> Optional[ExampleFixture]:
        """Committed fixture, or None when the file is missing or unreadable."""
        data = self._load_json(f"{name}.json")
        if data is None:
            return None
        return ExampleFixture.model_validate(data)

    def check(self, name: str) -> ExampleFixture:
        """Regenerate an example and compare it structurally with the corpus.

        Args:
            name: Example name

        Returns:
            The generated fixture

        Raises:
            FixtureMismatchError: If the corpus file is missing or differs
        """
        generated = self.build(name)
        committed = self.load(name)
        if committed is None:
            raise FixtureMismatchError(name, "has no committed fixture")
        if generated != committed:
            if generated.kernel != committed.kernel:
                logger.warning(f"{name}: kernel basis differs from the corpus")
            if generated.matrix != committed.matrix:
                logger.warning(f"{name}: deformation matrix differs from the corpus")
            raise FixtureMismatchError(name)
        logger.info(f"{name}: matches the committed corpus")
        return generated

    def check_all(self) -> Dict[str, bool]:
        """Check every example; a mismatch is recorded, not raised."""
        results = {}
        for name in EXAMPLES:
            try:
                self.check(name)
                results[name] = True
            except FixtureMismatchError as e:
                logger.warning(str(e))
                results[name] = False
        return results

    def write(self, name: str) -> Path:
        """Regenerate an example and overwrite its corpus file."""
        fixture = self.build(name)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        filepath = self.data_dir / f"{name}.json"
        filepath.write_text(fixture.model_dump_json(indent=2) + "\n", encoding="utf-8")
        self._cache.pop(f"{name}.json", None)
        logger.info(f"Wrote {filepath}")
        return filepath


_examples_service = None


def get_examples_service() -> ExamplesService:
    global _examples_service
    if _examples_service is None:
        _examples_service = ExamplesService()
    return _examples_service
