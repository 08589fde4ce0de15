import shutil

import pytest

from qgrobner.config import FALLBACK_DATA_DIR
from qgrobner.models.coeff import LaurentMonomial
from qgrobner.services.examples_service import (
    EXAMPLES,
    ExampleFixture,
    ExamplesService,
    FixtureMismatchError,
    get_examples_service,
)


@pytest.fixture
def corpus():
    return ExamplesService(FALLBACK_DATA_DIR)


@pytest.mark.parametrize("name", list(EXAMPLES))
def test_generated_example_matches_corpus(corpus, name):
    fixture = corpus.check(name)
    assert fixture == corpus.load(name)


def test_check_all(corpus):
    assert corpus.check_all() == {name: True for name in EXAMPLES}


def test_singleton():
    assert get_examples_service() is get_examples_service()


def test_twisted_cubic_fixture(corpus):
    fixture = corpus.load("twisted_cubic")
    assert (fixture.n, fixture.d, fixture.m) == (1, 3, None)
    assert fixture.matrix.entry(3, 0) == LaurentMonomial.param("q", 9)
    assert len(fixture.kernel) == 3


def test_segre_threefold_fixture(corpus):
    fixture = corpus.load("segre_threefold")
    assert fixture.matrix.entry(3, 4) == LaurentMonomial.model_validate({"q21": -1, "qp": 1})


def test_unknown_example(corpus):
    with pytest.raises(KeyError):
        corpus.build("cayley_cubic")


def test_missing_file_is_a_mismatch(tmp_path):
    service = ExamplesService(tmp_path)
    assert service.load("segre_quadric") is None
    with pytest.raises(FixtureMismatchError):
        service.check("segre_quadric")


def test_wrong_content_is_a_mismatch(tmp_path):
    shutil.copy(FALLBACK_DATA_DIR / "segre_quadric.json", tmp_path / "twisted_cubic.json")
    with pytest.raises(FixtureMismatchError) as excinfo:
        ExamplesService(tmp_path).check("twisted_cubic")
    assert excinfo.value.name == "twisted_cubic"


def test_corrupted_json_is_a_mismatch(tmp_path):
    (tmp_path / "veronese_surface.json").write_text("{not json", encoding="utf-8")
    service = ExamplesService(tmp_path)
    assert service.check_all()["veronese_surface"] is False


def test_write_round_trip(tmp_path):
    service = ExamplesService(tmp_path)
    path = service.write("veronese_surface")
    assert path.exists()
    assert ExampleFixture.model_validate_json(path.read_text(encoding="utf-8")) == service.build(
        "veronese_surface"
    )
    service.check("veronese_surface")
