"""Tests for the command-line interface and certificate documents."""

import json

import pytest

from treeconn.cli import (
    CertificateDocument,
    DocumentTree,
    emit_dot,
    emit_json,
    packing_document,
    parse_document,
    run,
    verify_document,
    witness_document,
)
from treeconn import InvalidArgumentError, build_packing, build_witness, normalize


def _run(capsys, *args):
    code = run(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestKappaCommand:
    def test_prints_value(self, capsys):
        code, out, _ = _run(capsys, "kappa", "--a", "3", "--b", "4", "--k", "7")
        assert code == 0
        assert out == "2\n"

    def test_breakdown_json(self, capsys):
        code, out, _ = _run(capsys, "kappa", "--a", "3", "--b", "4", "--k", "5", "--breakdown", "--i", "2")
        assert code == 0
        assert json.loads(out) == {"i": 2, "a2": 1, "a1": 0, "a1_side": "none", "a0": 1, "kappa": 2}

    def test_breakdown_defaults_to_minimizing_profile(self, capsys):
        code, out, _ = _run(capsys, "kappa", "--a", "3", "--b", "3", "--k", "3", "--breakdown")
        assert code == 0
        payload = json.loads(out)
        assert payload["i"] == 1 and payload["kappa"] == 2

    def test_single_profile_value(self, capsys):
        code, out, _ = _run(capsys, "kappa", "--a", "5", "--b", "5", "--k", "4", "--i", "0")
        assert code == 0
        assert out == "5\n"

    def test_swapped_orientation_flips_sides(self, capsys):
        # caller's first part is the larger one; i counts its vertices
        _, straight, _ = _run(capsys, "kappa", "--a", "3", "--b", "4", "--k", "5", "--breakdown", "--i", "1")
        _, swapped, _ = _run(capsys, "kappa", "--a", "4", "--b", "3", "--k", "5", "--breakdown", "--i", "4")
        left, right = json.loads(straight), json.loads(swapped)
        assert left["kappa"] == right["kappa"]
        assert left["a1_side"] == "X" and right["a1_side"] == "Y"

    def test_bad_arguments_exit_one(self, capsys):
        code, _, err = _run(capsys, "kappa", "--a", "0", "--b", "4", "--k", "2")
        assert code == 1
        assert "error" in err
        code, _, _ = _run(capsys, "kappa", "--a", "3", "--b", "3", "--k", "9")
        assert code == 1

    def test_usage_error_exits_one(self, capsys):
        code, _, _ = _run(capsys, "kappa", "--a", "3")
        assert code == 1
        code, _, _ = _run(capsys, "nonsense")
        assert code == 1


class TestPackCommand:
    def test_golden_two_by_two(self, capsys):
        code, out, _ = _run(capsys, "pack", "--a", "2", "--b", "2")
        assert code == 0
        assert out == '{"kind":"packing","a":2,"b":2,"trees":[{"edges":[[1,1],[1,2],[2,2]]}]}\n'

    def test_byte_identical_runs(self, capsys):
        _, first, _ = _run(capsys, "pack", "--a", "7", "--b", "9")
        _, second, _ = _run(capsys, "pack", "--a", "7", "--b", "9")
        assert first == second

    def test_dot_output_colors_trees(self, capsys):
        code, out, _ = _run(capsys, "pack", "--a", "3", "--b", "4", "--format", "dot")
        assert code == 0
        edge_lines = [line for line in out.splitlines() if "--" in line]
        assert len(edge_lines) == 12
        colors = {line.split('color="')[1].split('"')[0] for line in edge_lines}
        assert len(colors) == 2
        for color in colors:
            assert sum(1 for line in edge_lines if color in line) == 6

    def test_single_tree_single_color(self, capsys):
        _, out, _ = _run(capsys, "pack", "--a", "2", "--b", "2", "--format", "dot")
        edge_lines = [line for line in out.splitlines() if "--" in line]
        assert len(edge_lines) == 3
        assert len({line.split('color="')[1].split('"')[0] for line in edge_lines}) == 1


class TestWitnessCommand:
    def test_golden_witness(self, capsys):
        code, out, _ = _run(capsys, "witness", "--a", "2", "--b", "3", "--k", "3", "--i", "1")
        assert code == 0
        assert out == (
            '{"kind":"witness","a":2,"b":3,"k":3,"i":1,"trees":'
            '[{"class":"A2","edges":[[1,3],[2,1],[2,2],[2,3]]},'
            '{"class":"A0","edges":[[1,1],[1,2]]}]}\n'
        )

    def test_default_profile_attains_kappa(self, capsys):
        code, out, _ = _run(capsys, "witness", "--a", "3", "--b", "3", "--k", "3")
        doc = json.loads(out)
        assert code == 0
        assert doc["i"] == 1
        assert len(doc["trees"]) == 2

    def test_dot_boxes_terminals(self, capsys):
        _, out, _ = _run(capsys, "witness", "--a", "2", "--b", "3", "--k", "3", "--i", "1", "--format", "dot")
        edge_lines = [line for line in out.splitlines() if "--" in line]
        assert len(edge_lines) == 6
        boxed = {line.split()[0] for line in out.splitlines() if "shape=box" in line}
        assert boxed == {"x1", "y1", "y2"}

    def test_class_counts_match_breakdown(self, capsys):
        _, out, _ = _run(capsys, "witness", "--a", "5", "--b", "5", "--k", "4", "--i", "2")
        doc = json.loads(out)
        assert sum(1 for t in doc["trees"] if t["class"] == "A2") == 3
        assert sum(1 for t in doc["trees"] if t["class"] == "A0") == 1


class TestVerifyCommand:
    def test_round_trip(self, capsys, tmp_path):
        _, out, _ = _run(capsys, "pack", "--a", "3", "--b", "4")
        path = tmp_path / "pack.json"
        path.write_text(out)
        code, out, err = _run(capsys, "verify", "--input", str(path))
        assert code == 0
        assert out == "ok\n"

    def test_swapped_round_trip(self, capsys, tmp_path):
        for args in (["pack", "--a", "6", "--b", "4"],
                     ["witness", "--a", "6", "--b", "4", "--k", "7"]):
            _, out, _ = _run(capsys, *args)
            path = tmp_path / "doc.json"
            path.write_text(out)
            code, _, _ = _run(capsys, "verify", "--input", str(path))
            assert code == 0

    def test_cross_tree_duplicate_edge(self, capsys, tmp_path):
        _, out, _ = _run(capsys, "pack", "--a", "3", "--b", "4")
        doc = json.loads(out)
        edges = doc["trees"][1]["edges"]
        assert [3, 2] in edges and [1, 2] in doc["trees"][0]["edges"]
        edges.remove([3, 2])
        edges.append([1, 2])  # steal an edge of tree 0; tree 1 stays a spanning tree
        path = tmp_path / "corrupt.json"
        path.write_text(json.dumps(doc))
        code, _, err = _run(capsys, "verify", "--input", str(path))
        assert code == 2
        assert "edge-overlap" in err

    def test_duplicated_whole_tree(self, capsys, tmp_path):
        _, out, _ = _run(capsys, "pack", "--a", "3", "--b", "4")
        doc = json.loads(out)
        doc["trees"][1] = doc["trees"][0]
        path = tmp_path / "corrupt.json"
        path.write_text(json.dumps(doc))
        code, _, err = _run(capsys, "verify", "--input", str(path))
        assert code == 2
        assert "edge-overlap" in err

    def test_shared_hub_in_witness(self, capsys, tmp_path):
        _, out, _ = _run(capsys, "witness", "--a", "3", "--b", "3", "--k", "3", "--i", "0")
        doc = json.loads(out)
        doc["trees"][1] = doc["trees"][0]
        path = tmp_path / "corrupt.json"
        path.write_text(json.dumps(doc))
        code, _, err = _run(capsys, "verify", "--input", str(path))
        assert code == 2
        assert "vertex-overlap" in err

    def test_missing_file_exits_one(self, capsys, tmp_path):
        code, _, err = _run(capsys, "verify", "--input", str(tmp_path / "absent.json"))
        assert code == 1

    def test_rejects_dot_input(self, capsys, tmp_path):
        _, out, _ = _run(capsys, "pack", "--a", "2", "--b", "2", "--format", "dot")
        path = tmp_path / "pack.dot"
        path.write_text(out)
        code, _, err = _run(capsys, "verify", "--input", str(path))
        assert code == 1
        assert "error" in err


class TestOracleCommand:
    def test_spanning_count(self, capsys):
        code, out, _ = _run(capsys, "oracle", "--a", "3", "--b", "4")
        assert code == 0 and out == "2\n"

    def test_kappa_count(self, capsys):
        code, out, _ = _run(capsys, "oracle", "--a", "3", "--b", "3", "--k", "3")
        assert code == 0 and out == "2\n"

    def test_guard_exits_one(self, capsys):
        code, _, err = _run(capsys, "oracle", "--a", "6", "--b", "6")
        assert code == 1
        assert "guard" in err


class TestTableCommand:
    def test_line_count_and_shape(self, capsys):
        code, out, _ = _run(capsys, "table", "--a", "3", "--b", "4")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 6
        assert lines[0] == "2\t3"
        assert lines[-1] == "7\t2"


class TestDocumentLayer:
    def test_packing_document_round_trips(self):
        order = normalize(5, 3)
        doc = packing_document(build_packing(order))
        assert (doc.a, doc.b) == (5, 3)
        parsed = parse_document(emit_json(doc))
        assert parsed == doc
        assert verify_document(parsed).ok

    def test_witness_document_round_trips(self):
        order = normalize(4, 6)
        doc = witness_document(order, build_witness(order, 5, 2))
        parsed = parse_document(emit_json(doc))
        assert parsed == doc
        assert verify_document(parsed).ok

    def test_rejects_malformed_documents(self):
        for text in (
            "not json",
            "[1,2]",
            '{"kind":"nope","a":1,"b":1,"trees":[]}',
            '{"kind":"packing","a":1,"trees":[]}',
            '{"kind":"packing","a":1,"b":"x","trees":[]}',
            '{"kind":"packing","a":1,"b":1,"trees":[{"edges":[[1]]}]}',
            '{"kind":"packing","a":1,"b":1,"trees":[{"edges":[[1,true]]}]}',
            '{"kind":"packing","a":1,"b":1,"trees":[{"class":"A9","edges":[]}]}',
            '{"kind":"witness","a":2,"b":2,"trees":[]}',
        ):
            with pytest.raises(InvalidArgumentError):
                parse_document(text)

    def test_witness_profile_errors_are_reported(self):
        doc = CertificateDocument(
            kind="witness", a=2, b=2, k=3, i=3,
            trees=(DocumentTree(edges=((1, 1),)),),
        )
        assert verify_document(doc).first_kind == "wrong-terminals"

    def test_emit_dot_is_deterministic(self):
        order = normalize(3, 4)
        doc = witness_document(order, build_witness(order, 5, 1))
        assert emit_dot(doc) == emit_dot(doc)
