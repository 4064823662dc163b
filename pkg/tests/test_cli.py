import json

import pytest

from kgraphsem import documents, fixtures
from kgraphsem.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_doc(tmp_path, name, filename="doc.json"):
    path = tmp_path / filename
    path.write_text(
        documents.canonical_json(documents.document_for(fixtures.named(name))),
        encoding="utf-8",
    )
    return str(path)


def test_example_writes_canonical_document(capsys):
    code, out, err = run(capsys, "example", "o2")
    assert code == 0 and err == ""
    obj = json.loads(out)
    assert obj["format"] == "kgraph-matrix/1"
    assert obj["matrices"] == [[[2]]]


def test_example_parametrized_names(capsys):
    for name in ("torus(2,3)", "cycle(2,3)", "bridge(b=[2,2], r=[1,1])"):
        code, out, _ = run(capsys, "example", name)
        assert code == 0
        documents.parse_document(out)


def test_example_unknown_name(capsys):
    code, out, err = run(capsys, "example", "mystery")
    assert code == 2
    assert out.startswith("invalid: unknown example")


def test_validate_ok(capsys, tmp_path):
    path = write_doc(tmp_path, "o2")
    code, out, err = run(capsys, "validate", path)
    assert code == 0
    assert out == "valid kgraph-matrix/1 document: k = 1, 1 vertex\n"


def test_validate_json_format(capsys, tmp_path):
    path = write_doc(tmp_path, "cycle(2,3)")
    code, out, err = run(capsys, "validate", path, "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["valid"] is True
    assert obj["vertices"] == ["v0", "v1", "v2"]


def test_validate_ray(capsys, tmp_path):
    path = write_doc(tmp_path, "bridge(b=[2,2], r=[1,1])")
    code, out, err = run(capsys, "validate", path)
    assert code == 0
    assert "kgraph-ray/1" in out


def test_validate_non_commuting_is_exit_2(capsys, tmp_path):
    doc = {
        "format": "kgraph-matrix/1",
        "k": 2,
        "vertices": ["a", "b"],
        "matrices": [[[1, 0], [1, 0]], [[0, 1], [0, 1]]],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, err = run(capsys, "validate", str(path))
    assert code == 2
    assert out == "invalid: matrices 1 and 2 do not commute\n"
    assert err == ""


def test_validate_zero_row_is_exit_2(capsys, tmp_path):
    doc = {
        "format": "kgraph-matrix/1",
        "k": 1,
        "vertices": ["a", "b"],
        "matrices": [[[0, 0], [1, 1]]],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, err = run(capsys, "validate", str(path))
    assert code == 2
    assert "zero row at vertex 'a'" in out


def test_truncated_document_is_exit_3(capsys, tmp_path):
    text = documents.canonical_json(documents.graph_document(fixtures.o2()))
    path = tmp_path / "cut.json"
    path.write_text(text[:25], encoding="utf-8")
    code, out, err = run(capsys, "validate", str(path))
    assert code == 3
    assert err.startswith("error:")
    assert out == ""


def test_unknown_tag_is_exit_3(capsys, tmp_path):
    path = tmp_path / "odd.json"
    path.write_text('{"format": "other/1"}', encoding="utf-8")
    code, out, err = run(capsys, "classify", str(path))
    assert code == 3
    assert "unknown format tag" in err


def test_missing_file_is_exit_4(capsys, tmp_path):
    code, out, err = run(capsys, "validate", str(tmp_path / "absent.json"))
    assert code == 4
    assert err.startswith("error:")


def test_resource_limit_is_exit_5(capsys, tmp_path):
    path = write_doc(tmp_path, "cycle(1,8)")
    code, out, err = run(capsys, "semigroup", str(path))
    assert code == 5
    assert err.startswith("resource limit:")


def test_classify_text(capsys, tmp_path):
    path = write_doc(tmp_path, "cycle(2,3)")
    code, out, err = run(capsys, "classify", path)
    assert code == 0
    assert "semigroup verdict: stably finite" in out
    assert "algebra verdict: stably finite" in out
    assert "trace: v0=1 v1=1 v2=1" in out


def test_classify_json_is_loadable_report(capsys, tmp_path):
    path = write_doc(tmp_path, "o2")
    code, out, err = run(capsys, "classify", path, "--format", "json")
    assert code == 0
    report = documents.report_from_json(out)
    assert report.semigroup.verdict.value == "purely infinite"


def test_classify_assume_aperiodic_flag(capsys, tmp_path):
    path = write_doc(tmp_path, "torus(2,3)")
    code, out, _ = run(capsys, "classify", path)
    assert "algebra verdict: dichotomy unresolved" in out
    code, out, _ = run(capsys, "classify", path, "--assume-aperiodic")
    assert "algebra verdict: purely infinite" in out
    assert "aperiodicity: assumed (user flag, k >= 2)" in out


def test_classify_ray_document(capsys, tmp_path):
    path = write_doc(tmp_path, "bridge(b=[2,2], r=[2,2])")
    code, out, err = run(capsys, "classify", path)
    assert code == 0
    assert "semigroup verdict: stably finite" in out
    assert "algebra verdict" not in out


def test_trace_text_both_sides(capsys, tmp_path):
    path = write_doc(tmp_path, "cycle(2,3)")
    code, out, _ = run(capsys, "trace", path)
    assert code == 0
    assert out == "trace: v0=1 v1=1 v2=1\n"
    path = write_doc(tmp_path, "o2", "o2.json")
    code, out, _ = run(capsys, "trace", path)
    assert code == 0
    assert out.splitlines()[0] == "trace: none"
    assert "witness: v=1" in out


def test_trace_json(capsys, tmp_path):
    path = write_doc(tmp_path, "o2")
    code, out, _ = run(capsys, "trace", path, "--format", "json")
    obj = json.loads(out)
    assert obj["side"] == "lattice"
    assert obj["trace"] is None
    assert obj["witness"]["witness"] == [1]


def test_trace_rejects_ray(capsys, tmp_path):
    path = write_doc(tmp_path, "bridge(b=[2,2], r=[1,1])")
    code, out, err = run(capsys, "trace", path)
    assert code == 2
    assert "needs a finite graph document" in out


def test_semigroup_rejects_ray(capsys, tmp_path):
    path = write_doc(tmp_path, "bridge(b=[2,2], r=[1,1])")
    code, out, err = run(capsys, "semigroup", path)
    assert code == 2


def test_semigroup_text(capsys, tmp_path):
    path = write_doc(tmp_path, "o2")
    code, out, _ = run(capsys, "semigroup", path, "--box", "4")
    assert code == 0
    assert "class count: 2" in out
    assert "conical: pass" in out
    assert "cross-check [properly-infinite-probes]: consistent" in out


def test_semigroup_skips_cross_check_without_cofinality(capsys, tmp_path):
    path = write_doc(tmp_path, "hereditary2")
    code, out, _ = run(capsys, "semigroup", path, "--box", "3", "--max-degree", "3")
    assert code == 0
    assert "cross-check: skipped (needs cofinality)" in out


def test_semigroup_json(capsys, tmp_path):
    path = write_doc(tmp_path, "cycle(2,3)")
    code, out, _ = run(
        capsys, "semigroup", path, "--box", "2", "--max-degree", "3"
    )
    assert code == 0
    assert "class count: 7" in out
    code, out, _ = run(
        capsys, "semigroup", path, "--box", "2", "--max-degree", "3",
        "--format", "json",
    )
    obj = json.loads(out)
    assert obj["oracle"]["class_count"] == 7
    assert obj["oracle"]["conical_passed"] is True
    assert obj["input"]["format"] == "kgraph-matrix/1"


def test_reruns_are_byte_identical(capsys, tmp_path):
    path = write_doc(tmp_path, "torus(2,3)")
    first = run(capsys, "classify", path, "--format", "json")
    second = run(capsys, "classify", path, "--format", "json")
    assert first == second
    path2 = write_doc(tmp_path, "o2", "o2.json")
    a = run(capsys, "semigroup", path2, "--box", "4", "--format", "json")
    b = run(capsys, "semigroup", path2, "--box", "4", "--format", "json")
    assert a == b


def test_bad_box_value_is_exit_2(capsys, tmp_path):
    path = write_doc(tmp_path, "o2")
    code, out, err = run(capsys, "semigroup", path, "--box", "0")
    assert code == 2
    assert out.startswith("invalid:")
