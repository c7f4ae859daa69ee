#!/usr/bin/env python3
"""
End-to-end tests for the levelable-kit command line
"""

import io
import json
import os

import pytest

from documents import ComplexDocument, dump
import levelable_kit
from levelable_kit import cmd_census, cmd_family, cmd_levelable

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


def fixture(name):
    return os.path.join(FIXTURES, name)


def run(capsys, *argv):
    code = levelable_kit.main(list(argv))
    out = capsys.readouterr().out
    return json.loads(out), code, out


class TestSocle:
    def test_level_forest(self, capsys):
        payload, code, _ = run(capsys, "socle", fixture("forest.json"))
        assert code == 0
        assert payload["is_level"] is True
        assert payload["socle_vector"] == [0, 0, 0, 2]
        assert payload["h_vector"] == [1, 4, 5, 2]
        assert payload["socle_degree"] == 3
        assert payload["type"] == 2
        assert payload["inverse_system_generators"] == [{"x1": 1, "x2": 1, "x3": 1}, {"x3": 1, "x4": 2}]

    def test_not_level(self, capsys):
        payload, _, _ = run(capsys, "socle", fixture("forest_not_level.json"))
        assert payload["is_level"] is False
        assert payload["socle_vector"] == [0, 0, 1, 1]

    def test_single_facet_is_gorenstein(self, capsys):
        payload, _, _ = run(capsys, "socle", fixture("simplex.json"))
        assert payload["is_gorenstein"] is True
        assert payload["type"] == 1

    def test_unit_exponent_needs_normalize(self, capsys):
        payload, code, _ = run(capsys, "socle", fixture("with_unit_exponent.json"))
        assert code == 2
        assert payload["error"] == "BadExponent"
        assert "--normalize" in payload["hint"]

    def test_normalize_flag(self, capsys):
        payload, code, _ = run(capsys, "socle", "--normalize", fixture("with_unit_exponent.json"))
        assert code == 0
        assert payload["vertices"] == ["x1", "x3", "x4"]
        assert payload["is_level"] is True

    def test_missing_exponents(self, capsys):
        payload, code, _ = run(capsys, "socle", fixture("disjoint.json"))
        assert code == 2
        assert payload["error"] == "DocumentError"
        assert payload["field"] == "exponents"

    def test_standard_input(self, capsys, monkeypatch):
        with open(fixture("forest.json"), "rb") as handle:
            monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(handle.read()), encoding="utf-8"))
        payload, code, _ = run(capsys, "socle", "-")
        assert code == 0
        assert payload["socle_vector"] == [0, 0, 0, 2]

    def test_output_is_byte_identical(self, capsys):
        _, _, first = run(capsys, "socle", fixture("forest.json"))
        _, _, second = run(capsys, "socle", fixture("forest.json"))
        assert first == second
        assert first.endswith("}\n")


class TestLevelable:
    def test_delta5(self, capsys):
        payload, code, _ = run(capsys, "levelable", fixture("delta5.json"))
        assert code == 1
        assert payload["verdict"] == "NOT_LEVELABLE"
        assert "certificate" not in payload
        assert payload["system"]["rhs"] == [1, 0, 0]
        assert payload["report"]["forced_zero"] == ["x3"]

    def test_delta6(self, capsys):
        payload, code, _ = run(capsys, "levelable", fixture("delta6.json"))
        assert code == 1
        assert payload["verdict"] == "NOT_LEVELABLE"

    def test_pure_complex(self, capsys, tmp_path):
        doc = tmp_path / "pure.json"
        doc.write_text(json.dumps({"vertices": ["a", "b", "c"], "facets": [["a", "b"], ["b", "c"]]}))
        payload, code, _ = run(capsys, "levelable", str(doc))
        assert code == 0
        assert payload["verdict"] == "LEVELABLE"
        assert payload["certificate"] == [2, 2, 2]

    def test_one_facet(self, capsys):
        payload, code, _ = run(capsys, "levelable", fixture("simplex.json"))
        assert code == 0
        assert payload["verdict"] == "TRIVIALLY_GORENSTEIN"
        assert payload["system"] == {"rhs": [], "rows": []}

    def test_singleton_facet(self, capsys, tmp_path):
        doc = tmp_path / "single.json"
        doc.write_text(json.dumps({"vertices": ["a", "b", "c"], "facets": [["a", "b"], ["c"]]}))
        payload, code, _ = run(capsys, "levelable", str(doc))
        assert code == 2
        assert payload["error"] == "SingletonFacet"
        assert "--normalize" in payload["hint"]

    def test_singleton_facet_normalized(self, capsys, tmp_path):
        doc = tmp_path / "single.json"
        doc.write_text(json.dumps({"vertices": ["a", "b", "c"], "facets": [["a", "b"], ["c"]]}))
        payload, code, _ = run(capsys, "levelable", "--normalize", str(doc))
        assert code == 0
        assert payload["vertices"] == ["a", "b"]
        assert payload["verdict"] == "TRIVIALLY_GORENSTEIN"

    @pytest.mark.parametrize("n", range(5, 13))
    def test_family_round_trip(self, n):
        family, _ = cmd_family(n)
        payload, code = cmd_levelable(ComplexDocument.from_json(family))
        assert payload["verdict"] == "NOT_LEVELABLE"
        assert code == 1


class TestConstruct:
    def test_forest(self, capsys):
        payload, code, _ = run(capsys, "construct", "--strategy", "forest", fixture("forest.json"))
        assert code == 0
        assert payload["certificate"] == [2, 2, 2, 3]
        assert payload["verified"] is True
        assert payload["strategy"] == "forest"

    def test_disjoint(self, capsys):
        payload, code, _ = run(capsys, "construct", "--strategy", "disjoint", fixture("disjoint.json"))
        assert code == 0
        assert payload["certificate"] == [3, 2, 2, 2, 2]
        assert payload["verified"] is True

    def test_pure_with_d(self, capsys, tmp_path):
        doc = tmp_path / "pure.json"
        doc.write_text(json.dumps({"vertices": ["a", "b", "c"], "facets": [["a", "b"], ["b", "c"]]}))
        payload, _, _ = run(capsys, "construct", "--strategy", "pure", "--d", "4", str(doc))
        assert payload["certificate"] == [4, 4, 4]

    def test_auto_on_delta5(self, capsys):
        payload, code, _ = run(capsys, "construct", fixture("delta5.json"))
        assert code == 1
        assert payload["strategy"] == "solver"
        assert payload["verdict"] == "NOT_LEVELABLE"
        assert payload["certificate"] is None
        assert len(payload["skipped"]) == 3

    def test_explicit_strategy_failure(self, capsys):
        payload, code, _ = run(capsys, "construct", "--strategy", "forest", fixture("delta5.json"))
        assert code == 2
        assert payload["error"] == "StrategyInapplicable"


class TestFamily:
    def test_n5_display_order(self, capsys):
        payload, code, _ = run(capsys, "family", "5")
        assert code == 0
        assert payload["facets"] == [["x1", "x3", "x5"], ["x2", "x4"], ["x1", "x4"], ["x2", "x5"]]

    def test_n6_display_order(self, capsys):
        payload, _, _ = run(capsys, "family", "6")
        assert payload["facets"] == [["x1", "x3", "x5", "x6"], ["x2", "x5", "x6"], ["x1", "x4"], ["x2", "x4"]]

    def test_matches_fixture(self, capsys):
        _, _, out = run(capsys, "family", "5")
        with open(fixture("delta5.json"), encoding="utf-8") as handle:
            assert json.loads(out) == json.load(handle)

    def test_too_small(self, capsys):
        payload, code, _ = run(capsys, "family", "4")
        assert code == 2
        assert payload["error"] == "TooSmall"


class TestGraph:
    @pytest.mark.parametrize("name, tail, kind", [
        ("path_graph.json", [[4, 1], [5, 1]], 2),
        ("triangle_graph.json", [[4, 3]], 3),
        ("edgeless_graph.json", [[6, 1]], 1),
    ])
    def test_betti_tail(self, capsys, name, tail, kind):
        payload, code, _ = run(capsys, "graph", fixture(name))
        assert code == 0
        assert [[p["shift"], p["multiplicity"]] for p in payload["betti_tail"]] == tail
        assert payload["type"] == kind
        assert payload["max_independent_set_count"] == kind

    def test_independence_complex_of_path(self, capsys):
        payload, _, _ = run(capsys, "graph", fixture("path_graph.json"))
        assert payload["independence_complex"] == [["x1", "x3"], ["x2"]]

    def test_loop_rejected(self, capsys, tmp_path):
        doc = tmp_path / "loop.json"
        doc.write_text(json.dumps({"vertices": ["a", "b"], "edges": [["a", "a"]]}))
        payload, code, _ = run(capsys, "graph", str(doc))
        assert code == 2
        assert payload["field"] == "edges[0]"


class TestOracle:
    def test_path(self, capsys):
        payload, code, _ = run(capsys, "oracle", fixture("path_complex.json"))
        assert code == 0
        assert payload["monomials"] == [{"x1": 1, "x2": 1}, {"x2": 1, "x3": 1}]
        assert payload["match"] is True

    def test_forest(self, capsys):
        payload, _, _ = run(capsys, "oracle", fixture("forest.json"))
        assert payload["match"] is True

    def test_box_cap(self, capsys):
        payload, code, _ = run(capsys, "oracle", "--max-box", "4", fixture("forest.json"))
        assert code == 2
        assert payload["error"] == "BoxTooLarge"


class TestNormalizeAndCensus:
    def test_normalize(self, capsys):
        payload, code, _ = run(capsys, "normalize", fixture("with_unit_exponent.json"))
        assert code == 0
        assert payload == {
            "exponents": [2, 2, 2],
            "facets": [["x1", "x3"], ["x3", "x4"]],
            "vertices": ["x1", "x3", "x4"],
        }

    def test_census_is_reproducible(self):
        first, _ = cmd_census(4, samples=20, seed=7)
        second, _ = cmd_census(4, samples=20, seed=7)
        assert dump(first) == dump(second)
        assert sum(sum(tally.values()) for tally in first["classes"].values()) == 20

    def test_small_census_is_all_levelable(self):
        payload, _ = cmd_census(4, samples=30, seed=1)
        for tally in payload["classes"].values():
            assert "NOT_LEVELABLE" not in tally


class TestDocuments:
    def test_invalid_json_reports_line(self, capsys, tmp_path):
        doc = tmp_path / "bad.json"
        doc.write_text('{\n  "vertices": ["a",\n}')
        payload, code, _ = run(capsys, "levelable", str(doc))
        assert code == 2
        assert payload["error"] == "DocumentError"
        assert payload["line"] == 3

    def test_undeclared_label(self, capsys, tmp_path):
        doc = tmp_path / "bad.json"
        doc.write_text(json.dumps({"vertices": ["a", "b"], "facets": [["a", "z"]]}))
        payload, _, _ = run(capsys, "levelable", str(doc))
        assert payload["field"] == "facets[0][1]"

    def test_missing_file(self, capsys):
        payload, code, _ = run(capsys, "levelable", fixture("nope.json"))
        assert code == 2
        assert payload["error"] == "DocumentError"

    @pytest.mark.parametrize("command", ["socle", "levelable", "construct", "graph", "oracle", "normalize"])
    def test_invalid_utf8_file_is_a_document_error(self, capsys, tmp_path, command):
        doc = tmp_path / "bad.json"
        doc.write_bytes(b'{"vertices": ["x\xff", "y"], "facets": [["x\xff", "y"]], "exponents": [2, 2]}')
        payload, code, _ = run(capsys, command, str(doc))
        assert code == 2
        assert payload["error"] == "DocumentError"
        assert "UTF-8" in payload["message"]

    def test_invalid_utf8_on_standard_input(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.TextIOWrapper(io.BytesIO(b'{"vertices": ["\xff"]}'), encoding="utf-8"))
        payload, code, _ = run(capsys, "levelable", "-")
        assert code == 2
        assert payload["error"] == "DocumentError"

    def test_boolean_exponent(self, capsys, tmp_path):
        doc = tmp_path / "bad.json"
        doc.write_text(json.dumps({"vertices": ["a", "b"], "facets": [["a", "b"]], "exponents": [2, True]}))
        payload, _, _ = run(capsys, "socle", str(doc))
        assert payload["field"] == "exponents[1]"


def main():
    """Run the CLI tests"""
    return pytest.main([__file__, "-v"])


if __name__ == "__main__":
    main()
