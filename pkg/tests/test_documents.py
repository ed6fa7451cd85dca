"""JSON document parsing, canonical form, and strict validation."""

import json

import pytest

import splitsuper as ss

from helpers import FIVE_DIM_DOC, case2i_doc


def base_doc() -> dict:
    return json.loads(json.dumps(FIVE_DIM_DOC))


class TestRoundTrip:
    def test_parse_then_rebuild_is_canonical_fixed_point(self) -> None:
        first = ss.canonical_json(FIVE_DIM_DOC)
        alg, cartan, meta = ss.parse_document(json.loads(first))
        second = ss.canonical_json(ss.document_from_algebra(alg, cartan, meta))
        assert first == second

    def test_scalar_spelling_is_normalized(self) -> None:
        doc = base_doc()
        doc["products"][0][2] = [[2, "3/3"]]
        assert ss.canonical_json(doc) == ss.canonical_json(FIVE_DIM_DOC)

    def test_key_order_is_irrelevant(self) -> None:
        doc = base_doc()
        shuffled = dict(reversed(list(doc.items())))
        assert ss.canonical_json(shuffled) == ss.canonical_json(doc)

    def test_canonical_output_shape(self) -> None:
        text = ss.canonical_json(FIVE_DIM_DOC)
        assert text.endswith("\n")
        parsed = json.loads(text)
        assert list(parsed) == sorted(parsed)
        # Scalars stay strings after canonicalization.
        assert parsed["products"][0][2][0][1] == "1"

    def test_zero_scalars_dropped(self) -> None:
        doc = base_doc()
        doc["products"].append([0, 0, [[0, "0"]]])
        assert ss.canonical_json(doc) == ss.canonical_json(FIVE_DIM_DOC)

    def test_save_and_load(self, tmp_path) -> None:
        target = tmp_path / "alg.json"
        ss.save_path(case2i_doc(), target)
        alg, cartan, meta = ss.load_path(target)
        assert alg.dim == 7
        assert meta == {"name": "case2i"}
        assert alg.validate() == []

    def test_invalid_json_file(self, tmp_path) -> None:
        target = tmp_path / "broken.json"
        target.write_text("{not json", encoding="utf-8")
        with pytest.raises(ss.DocumentError):
            ss.load_path(target)


class TestStrictValidation:
    def test_non_object_rejected(self) -> None:
        with pytest.raises(ss.DocumentError):
            ss.parse_document([1, 2, 3])

    def test_unknown_key_rejected(self) -> None:
        doc = base_doc()
        doc["extra"] = True
        with pytest.raises(ss.DocumentError, match="unknown keys"):
            ss.parse_document(doc)

    def test_missing_key_rejected(self) -> None:
        doc = base_doc()
        del doc["parity"]
        with pytest.raises(ss.DocumentError, match="missing keys"):
            ss.parse_document(doc)

    def test_bad_dim_rejected(self) -> None:
        for bad in (-1, "5", 2.5, True):
            doc = base_doc()
            doc["dim"] = bad
            with pytest.raises(ss.DocumentError):
                ss.parse_document(doc)

    def test_parity_entries_checked(self) -> None:
        doc = base_doc()
        doc["parity"] = [0, 0, 0, 1, 2]
        with pytest.raises(ss.DocumentError, match="parity"):
            ss.parse_document(doc)
        doc["parity"] = [0, 0, 1]
        with pytest.raises(ss.DocumentError, match="length"):
            ss.parse_document(doc)

    def test_index_bounds_checked(self) -> None:
        doc = base_doc()
        doc["products"].append([0, 5, [[0, "1"]]])
        with pytest.raises(ss.DocumentError, match="out of range"):
            ss.parse_document(doc)

    def test_boolean_indices_rejected(self) -> None:
        doc = base_doc()
        doc["products"].append([True, 0, [[0, "1"]]])
        with pytest.raises(ss.DocumentError, match="integer"):
            ss.parse_document(doc)

    def test_duplicate_product_entry_rejected(self) -> None:
        doc = base_doc()
        doc["products"].append(list(doc["products"][0]))
        with pytest.raises(ss.DocumentError, match="duplicate product"):
            ss.parse_document(doc)

    def test_duplicate_coefficient_rejected(self) -> None:
        doc = base_doc()
        doc["products"][0][2] = [[2, "1"], [2, "1"]]
        with pytest.raises(ss.DocumentError, match="duplicate coefficient"):
            ss.parse_document(doc)

    def test_numeric_scalar_rejected(self) -> None:
        doc = base_doc()
        doc["products"][0][2] = [[2, 1]]
        with pytest.raises(ss.DocumentError, match="string"):
            ss.parse_document(doc)

    def test_grading_violation_names_the_triple(self) -> None:
        doc = base_doc()
        # b0 and b1 are even, b3 is odd: even*even landing on odd.
        doc["products"][0][2] = [[3, "1"]]
        with pytest.raises(ss.DocumentError, match=r"\(0, 1, 3\) violates the grading"):
            ss.parse_document(doc)

    def test_cartan_vector_length_checked(self) -> None:
        doc = base_doc()
        doc["cartan"] = [["1", "0"]]
        with pytest.raises(ss.DocumentError, match="coordinates"):
            ss.parse_document(doc)

    def test_cartan_mixed_parity_rejected(self) -> None:
        doc = base_doc()
        doc["cartan"] = [["0", "0", "1", "1", "0"]]
        with pytest.raises(ss.DocumentError, match="mixes parities"):
            ss.parse_document(doc)

    def test_meta_must_be_object(self) -> None:
        doc = base_doc()
        doc["meta"] = "name"
        with pytest.raises(ss.DocumentError, match="meta"):
            ss.parse_document(doc)

    def test_unknown_field_descriptor(self) -> None:
        doc = base_doc()
        doc["field"] = "R"
        with pytest.raises(ss.DocumentError):
            ss.parse_document(doc)

    def test_error_carries_location(self) -> None:
        doc = base_doc()
        doc["products"][3] = [3, 1, [[4, 7]]]
        with pytest.raises(ss.DocumentError) as exc:
            ss.parse_document(doc)
        assert "products[3]" in str(exc.value)


class TestFieldReinterpretation:
    def test_rational_doc_over_f5(self) -> None:
        alg, cartan, _ = ss.reinterpret(FIVE_DIM_DOC, ss.PrimeField(5))
        assert alg.field.characteristic == 5
        assert alg.validate() == []
        # -2 becomes 3 mod 5.
        assert alg.basis_product(0, 2)[0] == 3

    def test_fraction_scalars_become_inverses(self) -> None:
        doc = {
            "field": "Q",
            "dim": 2,
            "parity": [0, 0],
            "products": [[0, 1, [[0, "1/2"]]], [1, 0, [[0, "-1/2"]]]],
        }
        alg, _, _ = ss.reinterpret(doc, ss.PrimeField(7))
        assert alg.basis_product(0, 1)[0] == 4

    def test_denominator_divisible_by_p_rejected(self) -> None:
        doc = {
            "field": "Q",
            "dim": 1,
            "parity": [0],
            "products": [[0, 0, [[0, "1/5"]]]],
        }
        with pytest.raises(ss.DocumentError):
            ss.reinterpret(doc, ss.PrimeField(5))

    def test_override_changes_emitted_field(self) -> None:
        alg, cartan, meta = ss.reinterpret(FIVE_DIM_DOC, ss.PrimeField(11))
        doc = ss.document_from_algebra(alg, cartan, meta)
        assert doc["field"] == {"Fp": 11}
