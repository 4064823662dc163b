"""JSON document formats and the report model.

Three tagged formats exist: "kgraph-matrix/1" for finite presentations,
"kgraph-ray/1" for eventually periodic rays, and "kgraph-report/1" for
classification reports. Reports embed the input document, so a report file
is self-contained; on load every certificate inside is re-verified against
that embedded input, and any mismatch is rejected rather than trusted.

Emission is canonical (sorted keys, two-space indent, trailing newline), so
equal inputs produce byte-identical documents and reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import classify, model, oracle
from .classify import (
    CstarVerdict,
    CstarVerdictKind,
    GraphTrace,
    InfiniteElement,
    LatticeWitness,
    SemigroupVerdict,
    SemigroupVerdictKind,
    verify_graph_trace,
    verify_infinite_element,
    verify_lattice_witness,
)
from .errors import CertificateError, DocumentError, PresentationError
from .model import (
    KGraphPresentation,
    RayPresentation,
    RayReport,
    StructuralReport,
    Tri,
)

GRAPH_TAG = "kgraph-matrix/1"
RAY_TAG = "kgraph-ray/1"
REPORT_TAG = "kgraph-report/1"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _load_object(text: str, what: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{what} is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise DocumentError(f"{what} must be a JSON object")
    return obj


def _need(obj: dict, key: str, what: str):
    if key not in obj:
        raise DocumentError(f"{what} is missing the {key!r} field")
    return obj[key]


def _graph_from_obj(obj: dict) -> KGraphPresentation:
    try:
        return KGraphPresentation(
            k=_need(obj, "k", "graph document"),
            vertices=_need(obj, "vertices", "graph document"),
            matrices=_need(obj, "matrices", "graph document"),
        )
    except PresentationError:
        raise
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"malformed graph document: {exc}") from exc


def _ray_from_obj(obj: dict) -> RayPresentation:
    try:
        return RayPresentation(
            k=_need(obj, "k", "ray document"),
            level_sizes=_need(obj, "level_sizes", "ray document"),
            blocks=_need(obj, "blocks", "ray document"),
            prefix_length=_need(obj, "prefix_length", "ray document"),
            period=_need(obj, "period", "ray document"),
        )
    except PresentationError:
        raise
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"malformed ray document: {exc}") from exc


def parse_document(text: str):
    """Parse a graph or ray document; the format tag picks the kind.

    Structural problems (bad JSON, missing fields, unknown tag) raise
    DocumentError; content problems (bad entries, shape mismatches) raise
    PresentationError from the presentation constructors.
    """
    obj = _load_object(text, "document")
    tag = _need(obj, "format", "document")
    if tag == GRAPH_TAG:
        return _graph_from_obj(obj)
    if tag == RAY_TAG:
        return _ray_from_obj(obj)
    raise DocumentError(f"unknown format tag {tag!r}")


def graph_document(g: KGraphPresentation) -> dict:
    return {
        "format": GRAPH_TAG,
        "k": g.k,
        "vertices": list(g.vertices),
        "matrices": [[list(row) for row in mat] for mat in g.matrices],
    }


def ray_document(r: RayPresentation) -> dict:
    return {
        "format": RAY_TAG,
        "k": r.k,
        "level_sizes": list(r.level_sizes),
        "blocks": [
            [[list(row) for row in block] for block in color]
            for color in r.blocks
        ],
        "prefix_length": r.prefix_length,
        "period": r.period,
    }


def document_for(p) -> dict:
    if isinstance(p, KGraphPresentation):
        return graph_document(p)
    if isinstance(p, RayPresentation):
        return ray_document(p)
    raise TypeError(f"no document form for {type(p).__name__}")


@dataclass(frozen=True)
class OracleSummary:
    box: oracle.Box
    universe_size: int
    class_count: int
    representatives: tuple[tuple[tuple[int, ...], int], ...]
    omitted_classes: int
    probes: tuple[tuple[str, tuple[int, ...] | None], ...]
    conical_passed: bool
    cross_check: oracle.OracleCrossCheck | None
    chains_verified: bool


@dataclass(frozen=True)
class Report:
    input_kind: str  # "graph" or "ray"
    document: dict
    assume_aperiodic: bool
    structural: StructuralReport | RayReport
    semigroup: SemigroupVerdict
    cstar: CstarVerdict | None
    oracle_summary: OracleSummary | None


_REPRESENTATIVE_CAP = 100


def oracle_summary(
    g: KGraphPresentation,
    box: oracle.Box,
    universe_cap: int = 2_000_000,
) -> OracleSummary:
    """Build a class table and package the standard battery of checks."""
    table = oracle.build_class_table(g, box, universe_cap)
    table.verify_all()
    audit = oracle.conical_audit(table)
    classes = table.classes()
    reps = tuple(
        (table.vector_at(cls[0]), len(cls))
        for cls in classes[:_REPRESENTATIVE_CAP]
    )
    probes = []
    for v in range(g.size):
        unit = tuple(1 if j == v else 0 for j in range(g.size))
        probes.append((g.vertices[v], oracle.detect_properly_infinite(g, table, unit)))
    cof, _ = model.is_cofinal(g)
    cross = (
        oracle.oracle_cross_check(g, box, universe_cap)
        if cof is Tri.YES
        else None
    )
    return OracleSummary(
        box=box,
        universe_size=table.universe_size,
        class_count=len(classes),
        representatives=reps,
        omitted_classes=max(0, len(classes) - _REPRESENTATIVE_CAP),
        probes=tuple(probes),
        conical_passed=audit.passed,
        cross_check=cross,
        chains_verified=True,
    )


def build_report(
    p,
    assume_aperiodic: bool = False,
    with_oracle: oracle.Box | None = None,
    universe_cap: int = 2_000_000,
) -> Report:
    """Classification report for an already validated presentation."""
    if isinstance(p, KGraphPresentation):
        return Report(
            input_kind="graph",
            document=graph_document(p),
            assume_aperiodic=assume_aperiodic,
            structural=model.structure_report(p, assume_aperiodic),
            semigroup=classify.classify_semigroup(p),
            cstar=classify.classify_cstar(p, assume_aperiodic),
            oracle_summary=(
                oracle_summary(p, with_oracle, universe_cap)
                if with_oracle is not None
                else None
            ),
        )
    if isinstance(p, RayPresentation):
        return Report(
            input_kind="ray",
            document=ray_document(p),
            assume_aperiodic=assume_aperiodic,
            structural=model.validate_ray(p),
            semigroup=classify.classify_ray(p),
            cstar=None,
            oracle_summary=None,
        )
    raise TypeError(f"no report form for {type(p).__name__}")


# serialization helpers


def _tri(value: Tri | None):
    return None if value is None else value.value


def _tri_back(value, where: str) -> Tri | None:
    if value is None:
        return None
    try:
        return Tri(value)
    except ValueError:
        raise DocumentError(f"{where} has no state {value!r}") from None


def _structural_obj(s) -> dict:
    if isinstance(s, RayReport):
        return {
            "kind": "ray",
            "commuting": s.commuting,
            "no_sources": s.no_sources,
            "cofinal": _tri(s.cofinal),
            "commuting_failure": list(s.commuting_failure)
            if s.commuting_failure
            else None,
            "source_failure": list(s.source_failure) if s.source_failure else None,
        }
    return {
        "kind": "graph",
        "commuting": s.commuting,
        "no_sources": s.no_sources,
        "commuting_failure": list(s.commuting_failure)
        if s.commuting_failure
        else None,
        "source_failure": list(s.source_failure) if s.source_failure else None,
        "cofinal": _tri(s.cofinal),
        "cofinal_counterexample": list(s.cofinal_counterexample)
        if s.cofinal_counterexample is not None
        else None,
        "strongly_connected": s.strongly_connected,
        "full_degree_cycle": [s.full_degree_cycle[0], list(s.full_degree_cycle[1])]
        if s.full_degree_cycle is not None
        else None,
        "condition_L": _tri(s.condition_L),
        "condition_L_witness": list(s.condition_L_witness)
        if s.condition_L_witness is not None
        else None,
        "simplicity": _tri(s.simplicity),
        "simplicity_provenance": list(s.simplicity_provenance),
        "nontrivial_saturated_hereditary": list(s.nontrivial_saturated_hereditary)
        if s.nontrivial_saturated_hereditary is not None
        else None,
    }


def _structural_back(obj: dict, where: str):
    kind = _need(obj, "kind", where)
    if kind == "ray":
        return RayReport(
            commuting=bool(_need(obj, "commuting", where)),
            no_sources=bool(_need(obj, "no_sources", where)),
            cofinal=_tri_back(_need(obj, "cofinal", where), where),
            commuting_failure=tuple(obj["commuting_failure"])
            if obj.get("commuting_failure")
            else None,
            source_failure=tuple(obj["source_failure"])
            if obj.get("source_failure")
            else None,
        )
    if kind != "graph":
        raise DocumentError(f"{where} has unknown kind {kind!r}")
    fdc = obj.get("full_degree_cycle")
    return StructuralReport(
        commuting=bool(_need(obj, "commuting", where)),
        no_sources=bool(_need(obj, "no_sources", where)),
        commuting_failure=tuple(obj["commuting_failure"])
        if obj.get("commuting_failure")
        else None,
        source_failure=tuple(obj["source_failure"])
        if obj.get("source_failure")
        else None,
        cofinal=_tri_back(obj.get("cofinal"), where),
        cofinal_counterexample=tuple(obj["cofinal_counterexample"])
        if obj.get("cofinal_counterexample") is not None
        else None,
        strongly_connected=obj.get("strongly_connected"),
        full_degree_cycle=(fdc[0], tuple(fdc[1])) if fdc is not None else None,
        condition_L=_tri_back(obj.get("condition_L"), where),
        condition_L_witness=tuple(obj["condition_L_witness"])
        if obj.get("condition_L_witness") is not None
        else None,
        simplicity=_tri_back(obj.get("simplicity"), where),
        simplicity_provenance=tuple(obj.get("simplicity_provenance", ())),
        nontrivial_saturated_hereditary=tuple(
            obj["nontrivial_saturated_hereditary"]
        )
        if obj.get("nontrivial_saturated_hereditary") is not None
        else None,
    )


def trace_obj(t: GraphTrace | None):
    if t is None:
        return None
    return {
        "values": {v: str(x) for v, x in zip(t.vertices, t.values)},
    }


def _trace_back(obj, vertices, where: str) -> GraphTrace | None:
    if obj is None:
        return None
    values = _need(obj, "values", where)
    if not isinstance(values, dict) or set(values) != set(vertices):
        raise CertificateError(f"{where} names the wrong vertices")
    try:
        ordered = tuple(Fraction(values[v]) for v in vertices)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise DocumentError(f"{where} has a malformed rational: {exc}") from exc
    return GraphTrace(tuple(vertices), ordered)


def _int_vector(obj, size: int, where: str) -> tuple[int, ...]:
    if not isinstance(obj, list) or len(obj) != size:
        raise DocumentError(f"{where} must be a list of {size} integers")
    out = []
    for x in obj:
        if isinstance(x, bool) or not isinstance(x, int):
            raise DocumentError(f"{where} must contain integers only")
        out.append(x)
    return tuple(out)


def witness_obj(w: LatticeWitness | None):
    if w is None:
        return None
    return {
        "witness": list(w.witness),
        "combination": [list(xi) for xi in w.combination],
    }


def _witness_back(obj, vertices, k: int, where: str) -> LatticeWitness | None:
    if obj is None:
        return None
    size = len(vertices)
    combo = _need(obj, "combination", where)
    if not isinstance(combo, list) or len(combo) != k:
        raise DocumentError(f"{where} needs {k} combination vectors")
    return LatticeWitness(
        vertices=tuple(vertices),
        witness=_int_vector(_need(obj, "witness", where), size, where),
        combination=tuple(
            _int_vector(xi, size, f"{where} combination") for xi in combo
        ),
    )


def element_obj(e: InfiniteElement | None):
    if e is None:
        return None
    return {
        "p": [list(xi) for xi in e.p],
        "q": [list(xi) for xi in e.q],
        "u": list(e.u),
        "w": list(e.w),
        "f": list(e.f),
    }


def _element_back(obj, vertices, k: int, where: str) -> InfiniteElement | None:
    if obj is None:
        return None
    size = len(vertices)

    def parts(key):
        val = _need(obj, key, where)
        if not isinstance(val, list) or len(val) != k:
            raise DocumentError(f"{where} needs {k} vectors under {key!r}")
        return tuple(_int_vector(xi, size, f"{where} {key}") for xi in val)

    return InfiniteElement(
        vertices=tuple(vertices),
        p=parts("p"),
        q=parts("q"),
        u=_int_vector(_need(obj, "u", where), size, where),
        w=_int_vector(_need(obj, "w", where), size, where),
        f=_int_vector(_need(obj, "f", where), size, where),
    )


def _semigroup_obj(v: SemigroupVerdict) -> dict:
    return {
        "verdict": v.verdict.value,
        "rules_fired": [list(rule) for rule in v.rules_fired],
        "s_iso_naturals": v.s_iso_naturals,
        "trace": trace_obj(v.trace),
        "witness": witness_obj(v.witness),
        "infinite_element": element_obj(v.infinite_element),
    }


def _semigroup_back(obj: dict, vertices, k: int) -> SemigroupVerdict:
    where = "semigroup verdict"
    try:
        kind = SemigroupVerdictKind(_need(obj, "verdict", where))
    except ValueError:
        raise DocumentError(
            f"{where} has no kind {obj.get('verdict')!r}"
        ) from None
    rules = _need(obj, "rules_fired", where)
    if not isinstance(rules, list):
        raise DocumentError(f"{where} rules must be a list")
    return SemigroupVerdict(
        verdict=kind,
        rules_fired=tuple((str(r[0]), str(r[1])) for r in rules),
        trace=_trace_back(obj.get("trace"), vertices, f"{where} trace"),
        witness=_witness_back(
            obj.get("witness"), vertices, k, f"{where} witness"
        ),
        infinite_element=_element_back(
            obj.get("infinite_element"), vertices, k, f"{where} element"
        ),
        s_iso_naturals=bool(obj.get("s_iso_naturals", False)),
    )


def _cstar_obj(v: CstarVerdict | None):
    if v is None:
        return None
    return {
        "verdict": v.verdict.value,
        "rule": v.rule,
        "assumptions": list(v.assumptions),
        "notes": list(v.notes),
        "twist_note": v.twist_note,
    }


def _cstar_back(obj, semigroup: SemigroupVerdict) -> CstarVerdict | None:
    if obj is None:
        return None
    where = "algebra verdict"
    try:
        kind = CstarVerdictKind(_need(obj, "verdict", where))
    except ValueError:
        raise DocumentError(
            f"{where} has no kind {obj.get('verdict')!r}"
        ) from None
    return CstarVerdict(
        verdict=kind,
        rule=str(_need(obj, "rule", where)),
        assumptions=tuple(str(a) for a in _need(obj, "assumptions", where)),
        notes=tuple(str(n) for n in _need(obj, "notes", where)),
        twist_note=str(_need(obj, "twist_note", where)),
        semigroup=semigroup,
    )


def oracle_obj(s: OracleSummary | None):
    if s is None:
        return None
    return {
        "box": {"max_entry": s.box.max_entry, "max_degree": s.box.max_degree},
        "universe_size": s.universe_size,
        "class_count": s.class_count,
        "representatives": [
            [list(vec), size] for vec, size in s.representatives
        ],
        "omitted_classes": s.omitted_classes,
        "probes": [
            [name, list(w) if w is not None else None] for name, w in s.probes
        ],
        "conical_passed": s.conical_passed,
        "cross_check": {
            "status": s.cross_check.status,
            "mode": s.cross_check.mode,
            "details": list(s.cross_check.details),
        }
        if s.cross_check is not None
        else None,
        "chains_verified": s.chains_verified,
    }


def _oracle_back(obj) -> OracleSummary | None:
    if obj is None:
        return None
    where = "oracle summary"
    box_obj = _need(obj, "box", where)
    cross_obj = obj.get("cross_check")
    return OracleSummary(
        box=oracle.Box(
            max_entry=_need(box_obj, "max_entry", where),
            max_degree=_need(box_obj, "max_degree", where),
        ),
        universe_size=int(_need(obj, "universe_size", where)),
        class_count=int(_need(obj, "class_count", where)),
        representatives=tuple(
            (tuple(vec), int(size))
            for vec, size in _need(obj, "representatives", where)
        ),
        omitted_classes=int(obj.get("omitted_classes", 0)),
        probes=tuple(
            (str(name), tuple(w) if w is not None else None)
            for name, w in _need(obj, "probes", where)
        ),
        conical_passed=bool(_need(obj, "conical_passed", where)),
        cross_check=oracle.OracleCrossCheck(
            status=str(_need(cross_obj, "status", where)),
            mode=str(_need(cross_obj, "mode", where)),
            details=tuple(str(d) for d in _need(cross_obj, "details", where)),
        )
        if cross_obj is not None
        else None,
        chains_verified=bool(_need(obj, "chains_verified", where)),
    )


def report_to_obj(report: Report) -> dict:
    return {
        "format": REPORT_TAG,
        "input": report.document,
        "assume_aperiodic": report.assume_aperiodic,
        "structural": _structural_obj(report.structural),
        "semigroup": _semigroup_obj(report.semigroup),
        "cstar": _cstar_obj(report.cstar),
        "oracle": oracle_obj(report.oracle_summary),
    }


def report_to_json(report: Report) -> str:
    return canonical_json(report_to_obj(report))


def report_from_json(text: str) -> Report:
    """Load a report and re-verify every certificate against its input.

    A report whose trace, witness, or infinite element fails exact
    re-verification against the embedded presentation is rejected with
    CertificateError; structural damage raises DocumentError.
    """
    obj = _load_object(text, "report")
    if _need(obj, "format", "report") != REPORT_TAG:
        raise DocumentError(f"unknown format tag {obj.get('format')!r}")
    input_obj = _need(obj, "input", "report")
    if not isinstance(input_obj, dict):
        raise DocumentError("report input must be an object")
    tag = _need(input_obj, "format", "report input")
    if tag == GRAPH_TAG:
        p = _graph_from_obj(input_obj)
        kind = "graph"
        vertices = p.vertices
        k = p.k
    elif tag == RAY_TAG:
        p = _ray_from_obj(input_obj)
        kind = "ray"
        vertices = ()
        k = p.k
    else:
        raise DocumentError(f"unknown format tag {tag!r}")
    sem_obj = _need(obj, "semigroup", "report")
    if not isinstance(sem_obj, dict):
        raise DocumentError("report semigroup must be an object")
    semigroup = _semigroup_back(sem_obj, vertices, k)
    if kind == "graph":
        if semigroup.trace is not None:
            verify_graph_trace(p, semigroup.trace)
        if semigroup.witness is not None:
            verify_lattice_witness(p, semigroup.witness)
        if semigroup.infinite_element is not None:
            verify_infinite_element(p, semigroup.infinite_element)
    elif (
        semigroup.trace is not None
        or semigroup.witness is not None
        or semigroup.infinite_element is not None
    ):
        raise DocumentError("ray reports carry no finite certificates")
    structural = _structural_back(
        _need(obj, "structural", "report"), "structural report"
    )
    if isinstance(structural, RayReport) != (kind == "ray"):
        raise DocumentError("structural report kind does not match the input")
    return Report(
        input_kind=kind,
        document=input_obj,
        assume_aperiodic=bool(obj.get("assume_aperiodic", False)),
        structural=structural,
        semigroup=semigroup,
        cstar=_cstar_back(obj.get("cstar"), semigroup),
        oracle_summary=_oracle_back(obj.get("oracle")),
    )


# text rendering


def _vector_text(vertices, vec) -> str:
    return " ".join(f"{v}={x}" for v, x in zip(vertices, vec))


def _structural_text(report: Report, lines: list[str]) -> None:
    s = report.structural
    if report.input_kind == "ray":
        lines.append(f"commuting: {'yes' if s.commuting else 'no'}")
        lines.append(f"no sources: {'yes' if s.no_sources else 'no'}")
        lines.append(f"cofinal: {s.cofinal.value}")
        return
    lines.append(f"commuting: {'yes' if s.commuting else 'no'}")
    lines.append(f"no sources: {'yes' if s.no_sources else 'no'}")
    if s.cofinal is not None:
        lines.append(f"cofinal: {s.cofinal.value}")
        if s.cofinal_counterexample is not None:
            lines.append(
                "  proper saturated hereditary subset: {"
                + ", ".join(s.cofinal_counterexample)
                + "}"
            )
        lines.append(
            f"strongly connected: {'yes' if s.strongly_connected else 'no'}"
        )
        v, n = s.full_degree_cycle
        lines.append(f"full-degree cycle: at {v} with degree {tuple(n)}")
        lines.append(f"every cycle has an entrance: {s.condition_L.value}")
        if s.condition_L_witness is not None:
            lines.append(
                "  entranceless cycle: "
                + " -> ".join(s.condition_L_witness)
            )
        lines.append(f"simple: {s.simplicity.value}")
        for line in s.simplicity_provenance:
            lines.append(f"  {line}")


def _semigroup_text(report: Report, lines: list[str]) -> None:
    sem = report.semigroup
    vertices = report.document.get("vertices", ())
    lines.append(f"semigroup verdict: {sem.verdict.value}")
    if sem.s_iso_naturals:
        lines.append("  the semigroup is a copy of the naturals")
    for rule, detail in sem.rules_fired:
        lines.append(f"  rule {rule}: {detail}")
    if sem.trace is not None:
        lines.append(
            "  trace: " + _vector_text(sem.trace.vertices, sem.trace.values)
        )
    if sem.witness is not None:
        lines.append("  witness: " + _vector_text(vertices, sem.witness.witness))
        for i, xi in enumerate(sem.witness.combination):
            lines.append(
                f"  combination color {i + 1}: " + _vector_text(vertices, xi)
            )
    if sem.infinite_element is not None:
        e = sem.infinite_element
        lines.append(
            "  absorbing identity: u = w + f with "
            f"u={list(e.u)}, w={list(e.w)}, f={list(e.f)}"
        )


def _cstar_text(report: Report, lines: list[str]) -> None:
    if report.cstar is None:
        return
    c = report.cstar
    lines.append(f"algebra verdict: {c.verdict.value}")
    lines.append(f"  rule: {c.rule}")
    for a in c.assumptions:
        lines.append(f"  assumption: {a}")
    for n in c.notes:
        lines.append(f"  note: {n}")
    lines.append(f"  twist: {c.twist_note}")


def oracle_lines(s: OracleSummary, vertices) -> list[str]:
    lines = [
        f"oracle box: entries <= {s.box.max_entry}, degrees <= {s.box.max_degree}",
        f"universe size: {s.universe_size}",
        f"class count: {s.class_count}",
        f"merge chains verified: {'yes' if s.chains_verified else 'no'}",
        f"conical: {'pass' if s.conical_passed else 'FAIL'}",
    ]
    for vec, size in s.representatives:
        lines.append(
            f"  class of {_vector_text(vertices, vec)}: {size} vectors"
        )
    if s.omitted_classes:
        lines.append(f"  ... and {s.omitted_classes} more classes")
    for name, witness in s.probes:
        if witness is None:
            lines.append(
                f"properly infinite probe at {name}: no witness in the box"
            )
        else:
            lines.append(
                f"properly infinite probe at {name}: yes, order witness "
                + _vector_text(vertices, witness)
            )
    if s.cross_check is None:
        lines.append("cross-check: skipped (needs cofinality)")
    else:
        lines.append(
            f"cross-check [{s.cross_check.mode}]: {s.cross_check.status}"
        )
        for d in s.cross_check.details:
            lines.append(f"  {d}")
    return lines


def _oracle_text(report: Report, lines: list[str]) -> None:
    if report.oracle_summary is None:
        return
    vertices = report.document.get("vertices", ())
    lines.extend(oracle_lines(report.oracle_summary, vertices))


def report_to_text(report: Report) -> str:
    doc = report.document
    lines = [f"document: {doc['format']}"]
    lines.append(f"k: {doc['k']}")
    if report.input_kind == "graph":
        lines.append("vertices: " + ", ".join(doc["vertices"]))
    else:
        lines.append(
            "levels: "
            + ", ".join(str(x) for x in doc["level_sizes"])
            + f" (prefix {doc['prefix_length']}, period {doc['period']})"
        )
    _structural_text(report, lines)
    _semigroup_text(report, lines)
    _cstar_text(report, lines)
    _oracle_text(report, lines)
    return "\n".join(lines) + "\n"
