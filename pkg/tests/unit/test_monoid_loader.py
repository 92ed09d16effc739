"""
Unit тесты загрузки моноидов и полуколец из YAML
"""
import pytest

from src.domain.exceptions import AxiomViolationError, MonoidFileError
from src.domain.services import grothendieck
from src.infrastructure.loaders.monoid_loader import MonoidFileLoader, load_monoid_file


class TestValidFiles:
    """Тесты корректных файлов из tests/fixtures/data"""

    def test_boolean_semiring(self, data_dir):
        document = load_monoid_file(data_dir / "boolean_semiring.yaml")
        assert document.is_semiring
        assert document.structure.name == "boolean"
        assert not document.cancellative
        assert grothendieck.groth_ring(document.structure).is_zero_ring

    def test_additive_group(self, data_dir):
        document = load_monoid_file(data_dir / "z6_additive.yaml")
        assert not document.is_semiring
        assert document.cancellative
        assert grothendieck.groth_completion(document.structure).order == 6

    def test_semiring_with_target(self, data_dir):
        document = load_monoid_file(data_dir / "z6_semiring.yaml")
        assert document.target == "Z/3"
        assert document.phi is None
        assert document.structure.one == 1

    def test_truncated_naturals(self, data_dir):
        document = load_monoid_file(data_dir / "truncated_naturals.yaml")
        assert document.structure.name == "N3"
        assert grothendieck.groth_completion(document.structure).order == 1

    def test_name_defaults_to_file_stem(self, tmp_path):
        path = tmp_path / "tiny.yaml"
        path.write_text('elements: ["e"]\nadd: [[0]]\n', encoding="utf-8")
        document = MonoidFileLoader().load(path)
        assert document.structure.name == "tiny"
        assert document.structure.size == 1


class TestInvalidFiles:
    """Тесты ошибок чтения, схемы и аксиом"""

    def test_missing_file(self, tmp_path):
        with pytest.raises(MonoidFileError):
            load_monoid_file(tmp_path / "absent.yaml")

    def test_broken_yaml(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("add: [[0, 1]\n", encoding="utf-8")
        with pytest.raises(MonoidFileError):
            load_monoid_file(path)

    def test_top_level_list(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")
        with pytest.raises(MonoidFileError):
            load_monoid_file(path)

    def test_table_size_mismatch(self, data_dir):
        with pytest.raises(MonoidFileError):
            load_monoid_file(data_dir / "bad_schema.yaml")

    @pytest.mark.parametrize("body", [
        'elements: ["0", "0"]\nadd: [[0, 1], [1, 1]]\n',
        'elements: ["0", "1"]\nadd: [[0, 1], [1, 1]]\nzero: "2"\n',
        'elements: ["0", "1"]\nadd: [[0, 1], [1, 1]]\nphi: ["0", "1"]\n',
        'elements: ["0", "1"]\nadd: [[0, 1], [1, 5]]\n',
    ])
    def test_schema_violations(self, tmp_path, body):
        path = tmp_path / "monoid.yaml"
        path.write_text(body, encoding="utf-8")
        with pytest.raises(MonoidFileError):
            load_monoid_file(path)

    def test_axiom_violation_carries_witness(self, data_dir):
        with pytest.raises(AxiomViolationError) as exc_info:
            load_monoid_file(data_dir / "nonassociative.yaml")
        assert exc_info.value.witness == (1, 1, 2)
