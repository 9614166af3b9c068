"""Named collections of Seifert matrices loaded from JSON, and the
cross-module consistency suite run over them.

Schema::

    {
      "seed": 0,
      "entries": [
        {"name": "left_trefoil", "seifert": {"size": 2, "rows": [[1, -1], [0, 1]]}, "fibered": true},
        ...
      ]
    }

``fibered`` is optional (default false); fibered entries become
:class:`~knotalg.infection.FiberedKnotRecord` values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .alexander import alexander_poly, invariant_factors, presentation
from .blanchfield import blanchfield_matrix, is_hermitian
from .errors import KnotAlgError, ParseError
from .infection import FiberedKnotRecord
from .seifert import CATALOG, FIBERED, SeifertMatrix, random_s_equivalent
from .signatures import signature_profile

__all__ = ["Corpus", "CorpusEntry", "load_corpus", "catalog_corpus", "corpus_check", "CheckResult"]


@dataclass
class CorpusEntry:
    name: str
    seifert: SeifertMatrix
    fibered: bool = False

    def record(self) -> FiberedKnotRecord:
        return FiberedKnotRecord(self.seifert, self.seifert.size, self.name)


@dataclass
class Corpus:
    entries: dict[str, CorpusEntry] = field(default_factory=dict)
    seed: int = 0
    # entries rejected at load time, reported by name
    rejected: dict[str, str] = field(default_factory=dict)

    def __len__(self):
        return len(self.entries)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "entries": [
                {"name": e.name, "seifert": e.seifert.to_json(), "fibered": e.fibered}
                for e in self.entries.values()
            ],
        }


def _parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid corpus JSON: {exc.msg}", exc.lineno, exc.colno) from exc


def load_corpus(source: str | Path | dict, strict: bool = False) -> Corpus:
    """Load a corpus; invalid matrices are collected in ``rejected`` unless ``strict``."""
    if isinstance(source, dict):
        data = source
    else:
        data = _parse_json(Path(source).read_text())
    if not isinstance(data, dict) or not isinstance(data.get("entries", []), list):
        raise ParseError("corpus must be an object with an 'entries' list")
    corpus = Corpus(seed=int(data.get("seed", 0)))
    for i, item in enumerate(data.get("entries", [])):
        if not isinstance(item, dict) or "name" not in item or "seifert" not in item:
            raise ParseError(f"entry {i} needs 'name' and 'seifert'")
        name = item["name"]
        if name in corpus.entries or name in corpus.rejected:
            raise ParseError(f"duplicate entry name {name!r}")
        try:
            V = SeifertMatrix.from_json(item["seifert"])
        except KnotAlgError as exc:
            if strict:
                raise
            corpus.rejected[name] = str(exc)
            continue
        corpus.entries[name] = CorpusEntry(name, V, bool(item.get("fibered", False)))
    return corpus


def catalog_corpus(seed: int = 0) -> Corpus:
    entries = {name: CorpusEntry(name, V, name in FIBERED) for name, V in CATALOG.items()}
    return Corpus(entries, seed)


@dataclass
class CheckResult:
    name: str
    ok: bool
    failures: list[str]

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "failures": self.failures}


def _check_entry(entry: CorpusEntry, seed: int, variants: int) -> CheckResult:
    V = entry.seifert
    fails: list[str] = []
    delta = alexander_poly(V)
    if abs(delta(1)) != 1:
        fails.append(f"|Delta(1)| = {abs(delta(1))}")
    if delta.involute().normalize_unit()[0] != delta:
        fails.append("Delta is not symmetric")
    if not is_hermitian(blanchfield_matrix(V)):
        fails.append("Blanchfield matrix is not Hermitian")
    if entry.fibered:
        try:
            entry.record()
        except KnotAlgError as exc:
            fails.append(f"fibered record rejected: {exc}")
    factors = invariant_factors(presentation(V))
    profile = signature_profile(V)
    for k in range(variants):
        W = random_s_equivalent(V, 1 + k % 4, seed * 1000 + k)
        if not alexander_poly(W).equal_up_to_unit(delta):
            fails.append(f"variant {k}: Alexander polynomial changed")
        if invariant_factors(presentation(W)) != factors:
            fails.append(f"variant {k}: invariant factors changed")
        if signature_profile(W) != profile:
            fails.append(f"variant {k}: signature profile changed")
        if not is_hermitian(blanchfield_matrix(W)):
            fails.append(f"variant {k}: Blanchfield matrix is not Hermitian")
    return CheckResult(entry.name, not fails, fails)


def corpus_check(corpus: Corpus, variants: int = 3) -> list[CheckResult]:
    """Validate every entry and run the invariant suite; rejected entries fail by name."""
    out = [CheckResult(name, False, [f"invalid Seifert matrix: {msg}"]) for name, msg in corpus.rejected.items()]
    for entry in corpus.entries.values():
        out.append(_check_entry(entry, corpus.seed, variants))
    return out

