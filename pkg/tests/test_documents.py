import json

import pytest

from kgraphsem import documents, fixtures
from kgraphsem.errors import CertificateError, DocumentError, PresentationError
from kgraphsem.model import KGraphPresentation, RayPresentation
from kgraphsem.oracle import Box


def graph_doc_text(name="o2"):
    return documents.canonical_json(
        documents.document_for(fixtures.named(name))
    )


# parsing


def test_parse_graph_document():
    p = documents.parse_document(graph_doc_text("cycle(2,3)"))
    assert isinstance(p, KGraphPresentation)
    assert p == fixtures.cycle(2, 3)


def test_parse_ray_document():
    r = fixtures.bridge((2, 2), (1, 1), prefix_length=0)
    text = documents.canonical_json(documents.ray_document(r))
    assert documents.parse_document(text) == r


def test_parse_rejects_bad_json():
    with pytest.raises(DocumentError, match="not valid JSON"):
        documents.parse_document("{ not json")


def test_parse_rejects_non_object():
    with pytest.raises(DocumentError, match="must be a JSON object"):
        documents.parse_document("[1, 2]")


def test_parse_rejects_unknown_tag():
    with pytest.raises(DocumentError, match="unknown format tag"):
        documents.parse_document('{"format": "kgraph-matrix/9"}')


def test_parse_rejects_missing_field():
    obj = json.loads(graph_doc_text())
    del obj["matrices"]
    with pytest.raises(DocumentError, match="missing the 'matrices' field"):
        documents.parse_document(json.dumps(obj))


def test_parse_rejects_malformed_matrices():
    obj = json.loads(graph_doc_text())
    obj["matrices"] = 5
    with pytest.raises(DocumentError, match="malformed graph document"):
        documents.parse_document(json.dumps(obj))


def test_parse_content_errors_are_presentation_errors():
    obj = json.loads(graph_doc_text())
    obj["matrices"] = [[[-1]]]
    with pytest.raises(PresentationError):
        documents.parse_document(json.dumps(obj))


def test_canonical_json_shape():
    text = graph_doc_text()
    assert text.endswith("\n")
    obj = json.loads(text)
    assert list(obj) == sorted(obj)


def test_emit_parse_round_trip_bytes():
    for name in ("o2", "hereditary2", "torus(2,3)", "bridge(b=[2,2], r=[1,1])"):
        text = documents.canonical_json(
            documents.document_for(fixtures.named(name))
        )
        p = documents.parse_document(text)
        again = documents.canonical_json(documents.document_for(p))
        assert again == text


# reports


@pytest.mark.parametrize(
    "name",
    ["o2", "cycle(2,3)", "hereditary2", "funnel3", "torus(2,3)",
     "bridge(b=[2,2], r=[1,1])", "bridge(b=[2,2], r=[2,2])"],
)
def test_report_json_round_trip(name):
    p = fixtures.named(name)
    report = documents.build_report(p)
    text = documents.report_to_json(report)
    loaded = documents.report_from_json(text)
    assert documents.report_to_json(loaded) == text
    assert loaded.input_kind == report.input_kind
    assert loaded.semigroup.verdict == report.semigroup.verdict


def test_report_with_oracle_round_trip():
    report = documents.build_report(
        fixtures.o2(), with_oracle=Box(max_entry=4, max_degree=4)
    )
    assert report.oracle_summary is not None
    assert report.oracle_summary.class_count == 2
    text = documents.report_to_json(report)
    loaded = documents.report_from_json(text)
    assert documents.report_to_json(loaded) == text
    assert loaded.oracle_summary.class_count == 2
    assert loaded.oracle_summary.cross_check.status == "consistent"


def test_report_build_determinism():
    a = documents.report_to_json(documents.build_report(fixtures.cycle(2, 3)))
    b = documents.report_to_json(documents.build_report(fixtures.cycle(2, 3)))
    assert a == b


def test_report_text_mentions_key_facts():
    text = documents.report_to_text(documents.build_report(fixtures.o2()))
    assert "semigroup verdict: purely infinite" in text
    assert "algebra verdict: purely infinite" in text
    assert "witness: v=1" in text
    assert "twist:" in text


def test_report_text_for_rays_has_no_algebra_section():
    report = documents.build_report(fixtures.bridge((2, 2), (1, 1)))
    text = documents.report_to_text(report)
    assert "algebra verdict" not in text
    assert "semigroup verdict: purely infinite" in text


def test_trace_serialized_as_strings():
    report = documents.build_report(fixtures.cycle(2, 3))
    obj = json.loads(documents.report_to_json(report))
    assert obj["semigroup"]["trace"]["values"] == {
        "v0": "1", "v1": "1", "v2": "1"
    }


# tamper rejection


def tampered(report_obj):
    return json.dumps(report_obj)


def test_tampered_witness_rejected():
    obj = json.loads(documents.report_to_json(documents.build_report(fixtures.o2())))
    obj["semigroup"]["witness"]["witness"] = [2]
    with pytest.raises(CertificateError):
        documents.report_from_json(tampered(obj))


def test_tampered_trace_rejected():
    obj = json.loads(
        documents.report_to_json(documents.build_report(fixtures.cycle(2, 3)))
    )
    obj["semigroup"]["trace"]["values"]["v1"] = "2"
    with pytest.raises(CertificateError):
        documents.report_from_json(tampered(obj))


def test_tampered_infinite_element_rejected():
    obj = json.loads(
        documents.report_to_json(documents.build_report(fixtures.hereditary2()))
    )
    obj["semigroup"]["infinite_element"]["u"] = [2, 2]
    with pytest.raises(CertificateError):
        documents.report_from_json(tampered(obj))


def test_tampered_input_rejected():
    # changing the embedded input invalidates the certificates against it
    obj = json.loads(documents.report_to_json(documents.build_report(fixtures.o2())))
    obj["input"]["matrices"] = [[[3]]]
    with pytest.raises(CertificateError):
        documents.report_from_json(tampered(obj))


def test_unknown_verdict_rejected():
    obj = json.loads(documents.report_to_json(documents.build_report(fixtures.o2())))
    obj["semigroup"]["verdict"] = "sideways"
    with pytest.raises(DocumentError):
        documents.report_from_json(tampered(obj))


def test_ray_report_with_certificate_rejected():
    obj = json.loads(
        documents.report_to_json(
            documents.build_report(fixtures.bridge((2, 2), (2, 2)))
        )
    )
    obj["semigroup"]["trace"] = {"values": {}}
    with pytest.raises(DocumentError, match="no finite certificates"):
        documents.report_from_json(tampered(obj))


def test_report_wrong_tag_rejected():
    with pytest.raises(DocumentError, match="unknown format tag"):
        documents.report_from_json('{"format": "kgraph-matrix/1"}')
