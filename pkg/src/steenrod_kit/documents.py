"""File formats: complex documents and the persisted diagonal table cache.

A complex document is a single JSON object describing either a delta-complex
(``kind: "delta"``: cells per dimension with face-index lists) or a
simplicial-set presentation (``kind: "simplicial"``: additionally degeneracy
tables, a strictness flag, and an optional basepoint).  Face identities are
validated on load by the constructors.

The diagonal table cache is a JSON file keyed "n,k" with a schema-version
header; entries are canonical and cheap to regenerate, so a version bump
invalidates the whole file.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from .diagonal import DiagonalTable
from .simplicial import DeltaComplex, SimplicialSetPresentation

ComplexLike = Union[DeltaComplex, SimplicialSetPresentation]

DOCUMENT_SCHEMA = 1
CACHE_FILENAME = "xi_table.json"
CACHE_ENV_VAR = "STEENROD_CACHE"


# ---------------------------------------------------------------------------
# Complex documents
# ---------------------------------------------------------------------------


def complex_to_document(obj: ComplexLike) -> dict:
    doc: dict = {
        "schema": DOCUMENT_SCHEMA,
        "name": obj.name,
        "truncation_dim": obj.truncation_dim,
        "cells": {str(n): [_label_out(l) for l in obj.cells[n]] for n in sorted(obj.cells)},
        "faces": {
            str(n): [list(obj.faces[(n, i)]) for i in range(len(obj.cells[n]))]
            for n in sorted(obj.cells)
        },
    }
    if isinstance(obj, SimplicialSetPresentation):
        doc["kind"] = "simplicial"
        doc["degeneracies"] = {
            str(n): [list(obj.degeneracies[(n, i)]) for i in range(len(obj.cells[n]))]
            for n in sorted(obj.cells)
            if (n, 0) in obj.degeneracies
        }
        doc["strict"] = obj.strict
        if obj.basepoint is not None:
            doc["basepoint"] = obj.basepoint
    else:
        doc["kind"] = "delta"
    return doc


def _label_out(label: object) -> object:
    if isinstance(label, tuple):
        return [_label_out(x) for x in label]
    return label


def _label_in(label: object) -> object:
    if isinstance(label, list):
        return tuple(_label_in(x) for x in label)
    return label


def document_to_complex(doc: dict) -> ComplexLike:
    try:
        kind = doc["kind"]
        cells = {int(n): [_label_in(l) for l in labels] for n, labels in doc["cells"].items()}
        faces = {
            (int(n), i): tuple(face_list)
            for n, per_cell in doc["faces"].items()
            for i, face_list in enumerate(per_cell)
        }
        truncation = int(doc.get("truncation_dim", max(cells) if cells else 0))
        name = doc.get("name", "")
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed complex document: {exc}") from exc
    if kind == "delta":
        return DeltaComplex(cells, faces, truncation, name=name)
    if kind == "simplicial":
        degeneracies = {
            (int(n), i): tuple(deg_list)
            for n, per_cell in doc.get("degeneracies", {}).items()
            for i, deg_list in enumerate(per_cell)
        }
        return SimplicialSetPresentation(
            cells,
            faces,
            degeneracies,
            truncation,
            name=name,
            strict=bool(doc.get("strict", True)),
            basepoint=doc.get("basepoint"),
        )
    raise ValueError(f"unknown complex kind: {kind!r}")


def load_complex(path: Union[str, Path]) -> ComplexLike:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValueError(f"{path}: expected a JSON object")
    return document_to_complex(doc)


def save_complex(obj: ComplexLike, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(complex_to_document(obj), fh, separators=(",", ":"))
        fh.write("\n")


# ---------------------------------------------------------------------------
# Shipped corpus
# ---------------------------------------------------------------------------


def _corpus_dir() -> Path:
    return Path(__file__).resolve().parent / "corpus"


def corpus_names() -> list:
    return sorted(p.stem for p in _corpus_dir().glob("*.json"))


def load_corpus(name: str) -> ComplexLike:
    path = _corpus_dir() / f"{name}.json"
    if not path.exists():
        raise ValueError(f"no corpus space named {name!r}; available: {', '.join(corpus_names())}")
    return load_complex(path)


# ---------------------------------------------------------------------------
# Diagonal table cache
# ---------------------------------------------------------------------------


def table_to_document(table: DiagonalTable) -> dict:
    entries = {}
    for (n, k), raw in sorted(table.entries.items()):
        entries[f"{n},{k}"] = [
            [list(a), list(b), coeff] for (a, b), coeff in sorted(raw.items())
        ]
    return {"schema": DiagonalTable.SCHEMA_VERSION, "entries": entries}


def document_to_table(doc: dict) -> DiagonalTable:
    if doc.get("schema") != DiagonalTable.SCHEMA_VERSION:
        return DiagonalTable()  # wholesale invalidation on version mismatch
    entries: Dict[Tuple[int, int], dict] = {}
    for key, rows in doc.get("entries", {}).items():
        n, k = (int(x) for x in key.split(","))
        entries[(n, k)] = {(tuple(a), tuple(b)): int(c) for a, b, c in rows}
    return DiagonalTable(entries)


def resolve_cache_dir(cli_arg: Optional[str] = None) -> Path:
    """Precedence: explicit argument > STEENROD_CACHE > ~/.cache/steenrod-kit."""
    if cli_arg:
        return Path(cli_arg)
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "steenrod-kit"


def load_table(cache_dir: Union[str, Path]) -> DiagonalTable:
    path = Path(cache_dir) / CACHE_FILENAME
    if not path.exists():
        return DiagonalTable()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return DiagonalTable()
    return document_to_table(doc)


def save_table(table: DiagonalTable, cache_dir: Union[str, Path]) -> None:
    path = Path(cache_dir)
    path.mkdir(parents=True, exist_ok=True)
    with open(path / CACHE_FILENAME, "w", encoding="utf-8") as fh:
        json.dump(table_to_document(table), fh, separators=(",", ":"))
        fh.write("\n")
