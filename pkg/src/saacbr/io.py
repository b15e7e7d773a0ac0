"""Reading and writing casebases, and exporting debates as DOT graphs.

Two casebase formats are understood:

* CSV: one 0/1 column per feature plus a ``label`` column, and optionally an
  ``id`` column (ids ``R1``, ``R2``, ... are generated otherwise);
* JSON: ``{"default": {"features": [...], "outcome": tok}, "cases": [{"id":
  ..., "features": [...], "outcome": tok}, ...]}``.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from pathlib import Path
from typing import NamedTuple, Optional, Union

from .core import DEFAULT_ID, Case, Casebase, CasebaseError, FeatureSet, default_case
from .mining import BipolarFramework, EdgeKind
from .translation import AttackFramework

logger = logging.getLogger(__name__)

LABEL_COLUMN = "label"
ID_COLUMN = "id"


class LoadError(CasebaseError):
    pass


class MalformedRowError(LoadError):
    pass


class TooManyLabelsError(LoadError):
    pass


class DuplicateIdError(LoadError):
    pass


class DuplicateFeatureError(LoadError):
    pass


class UnknownOutcomeError(LoadError):
    pass


class Loaded(NamedTuple):
    casebase: Casebase
    default: Case
    features: tuple  # every feature name seen in the file, sorted


def _guess_format(path: Path, fmt: Optional[str]) -> str:
    if fmt:
        fmt = fmt.lower()
    else:
        fmt = path.suffix.lower().lstrip(".")
    if fmt not in ("csv", "json"):
        raise LoadError(f"cannot tell the format of {path}; pass csv or json explicitly")
    return fmt


def _check_labels(labels: set, default_outcome: str, where: str) -> None:
    if len(labels) > 2:
        raise TooManyLabelsError(
            f"{where}: expected two outcome labels, found {len(labels)}: "
            + ", ".join(repr(l) for l in sorted(labels))
        )
    if len(labels) == 2 and default_outcome not in labels:
        raise UnknownOutcomeError(
            f"{where}: default outcome {default_outcome!r} is not one of the labels "
            + ", ".join(repr(l) for l in sorted(labels))
        )


def _finish(cases: list, default: Case, features, where: str) -> Loaded:
    ids = [c.id for c in cases]
    dupes = sorted({i for i in ids if ids.count(i) > 1})
    if dupes:
        raise DuplicateIdError(f"{where}: duplicate case ids: {', '.join(dupes)}")
    if default.id in ids:
        raise DuplicateIdError(f"{where}: case id {default.id!r} is taken by the default argument")
    _check_labels({c.outcome for c in cases}, default.outcome, where)
    casebase = Casebase.build(cases, default)
    if casebase.duplicates_dropped:
        logger.info("%s: dropped %d duplicate case(s)", where, casebase.duplicates_dropped)
    return Loaded(casebase, default, tuple(sorted(features)))


def parse_csv(text: str, default_outcome: str, default_features=(), where: str = "<csv>") -> Loaded:
    rows = [r for r in csv.reader(io.StringIO(text)) if any(cell.strip() for cell in r)]
    if not rows:
        raise MalformedRowError(f"{where}: empty file")
    header = [h.strip() for h in rows[0]]
    if LABEL_COLUMN not in header:
        raise MalformedRowError(f"{where}: no {LABEL_COLUMN!r} column in header")
    seen = set()
    for h in header:
        if h in seen:
            raise DuplicateFeatureError(f"{where}: column {h!r} appears twice")
        if not h:
            raise MalformedRowError(f"{where}: empty column name in header")
        seen.add(h)
    features = [h for h in header if h not in (LABEL_COLUMN, ID_COLUMN)]
    label_at = header.index(LABEL_COLUMN)
    id_at = header.index(ID_COLUMN) if ID_COLUMN in header else None

    cases = []
    for lineno, row in enumerate(rows[1:], start=2):
        row = [cell.strip() for cell in row]
        if len(row) != len(header):
            raise MalformedRowError(
                f"{where}: row {lineno} has {len(row)} cells, header has {len(header)}")
        label = row[label_at]
        if not label:
            raise MalformedRowError(f"{where}: row {lineno} has an empty label")
        present = []
        for name, cell in zip(header, row):
            if name in (LABEL_COLUMN, ID_COLUMN):
                continue
            if cell not in ("0", "1"):
                raise MalformedRowError(
                    f"{where}: row {lineno}, column {name!r}: expected 0 or 1, got {cell!r}")
            if cell == "1":
                present.append(name)
        case_id = row[id_at] if id_at is not None else f"R{lineno - 1}"
        if not case_id:
            raise MalformedRowError(f"{where}: row {lineno} has an empty id")
        cases.append(Case(case_id, FeatureSet(present), label))

    default = default_case(FeatureSet(default_features), default_outcome)
    return _finish(cases, default, set(features) | set(default_features), where)


def parse_json(text: str, default_outcome: Optional[str] = None, default_features=None,
               where: str = "<json>") -> Loaded:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedRowError(f"{where}: invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("cases"), list):
        raise MalformedRowError(f"{where}: expected an object with a 'cases' list")

    def features_of(entry, what):
        feats = entry.get("features", [])
        if not isinstance(feats, list) or not all(isinstance(f, str) for f in feats):
            raise MalformedRowError(f"{where}: {what}: 'features' must be a list of strings")
        return feats

    spec = doc.get("default") or {}
    if not isinstance(spec, dict):
        raise MalformedRowError(f"{where}: 'default' must be an object")
    outcome = default_outcome if default_outcome is not None else spec.get("outcome")
    if not isinstance(outcome, str) or not outcome:
        raise UnknownOutcomeError(f"{where}: no default outcome in the file or on the command line")
    dfeats = default_features if default_features is not None else features_of(spec, "default")
    default = default_case(FeatureSet(dfeats), outcome, str(spec.get("id", DEFAULT_ID)))

    cases = []
    universe = set(dfeats)
    for i, entry in enumerate(doc["cases"], start=1):
        if not isinstance(entry, dict):
            raise MalformedRowError(f"{where}: case #{i} is not an object")
        case_id = entry.get("id", f"R{i}")
        label = entry.get("outcome")
        if not isinstance(case_id, str) or not case_id:
            raise MalformedRowError(f"{where}: case #{i} has no usable id")
        if not isinstance(label, str) or not label:
            raise MalformedRowError(f"{where}: case {case_id} has no outcome")
        feats = features_of(entry, f"case {case_id}")
        universe.update(feats)
        cases.append(Case(case_id, FeatureSet(feats), label))
    return _finish(cases, default, universe, where)


def load_casebase(path: Union[str, Path], format: Optional[str] = None,
                  default_outcome: Optional[str] = None, default_features=None) -> Loaded:
    path = Path(path)
    fmt = _guess_format(path, format)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LoadError(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "csv":
        return parse_csv(text, default_outcome if default_outcome is not None else "-",
                         default_features or (), where=str(path))
    return parse_json(text, default_outcome, default_features, where=str(path))


def casebase_to_json(casebase: Casebase, default: Case) -> str:
    doc = {
        "default": {
            "id": default.id,
            "features": default.characterisation.sorted(),
            "outcome": default.outcome,
        },
        "cases": [
            {"id": c.id, "features": c.characterisation.sorted(), "outcome": c.outcome}
            for c in casebase
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def casebase_to_csv(casebase: Casebase, features=()) -> str:
    universe = sorted(set(features).union(*(c.characterisation.features for c in casebase)))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([ID_COLUMN] + universe + [LABEL_COLUMN])
    for c in casebase:
        feats = c.characterisation.features
        writer.writerow([c.id] + ["1" if f in feats else "0" for f in universe] + [c.outcome])
    return buf.getvalue()


def save_casebase(path: Union[str, Path], casebase: Casebase, default: Case,
                  format: Optional[str] = None, features=()) -> None:
    path = Path(path)
    fmt = _guess_format(path, format)
    text = casebase_to_json(casebase, default) if fmt == "json" else casebase_to_csv(casebase, features)
    path.write_text(text, encoding="utf-8")


# -- graph export -------------------------------------------------------------

_EDGE_STYLE = {
    EdgeKind.DIRECT: 'style=solid',
    EdgeKind.EQUAL: 'style=solid',
    EdgeKind.IRRELEVANCE: 'style=solid, color=gray50, irrelevance=true',
    EdgeKind.SUPPORTED: 'style=dashed',
    EdgeKind.SECONDARY: 'style=dotted',
}
_SUPPORT_STYLE = 'style=bold, color="black:white:black"'


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _node_label(arg) -> str:
    outcome = "?" if arg.outcome is None else arg.outcome
    return f"{arg.id}: {arg.characterisation} / {outcome}"


def export_graph(framework, stage: str = "translated") -> str:
    """Render a framework as DOT text with canonical ordering.

    ``framework`` may be a :class:`BipolarFramework`, an
    :class:`AttackFramework` or a prediction carrying both.
    """
    if stage not in ("bipolar", "translated"):
        raise ValueError(f"unknown stage {stage!r}")
    if hasattr(framework, "bipolar") and hasattr(framework, "framework"):
        framework = framework.bipolar if stage == "bipolar" else framework.framework
    if stage == "bipolar" and not isinstance(framework, BipolarFramework):
        raise TypeError("the bipolar stage needs the mined bipolar framework")
    if stage == "translated" and not isinstance(framework, AttackFramework):
        raise TypeError("the translated stage needs an attack framework")

    lines = [f"digraph {stage} {{", "  rankdir=BT;", "  node [shape=box];"]
    for a in sorted(framework.arguments):
        lines.append(f"  {_quote(a)} [label={_quote(_node_label(framework.arguments[a]))}];")
    edges = framework.attacks if stage == "bipolar" else framework.edges
    for s, t, kind in sorted(edges, key=lambda e: (e.source, e.target, e.kind.value)):
        lines.append(f"  {_quote(s)} -> {_quote(t)} [kind={kind.value}, {_EDGE_STYLE[kind]}];")
    if stage == "bipolar":
        for s, t in sorted(framework.supports):
            lines.append(f"  {_quote(s)} -> {_quote(t)} [kind=support, {_SUPPORT_STYLE}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
