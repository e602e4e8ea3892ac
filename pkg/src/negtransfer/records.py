"""JSON-lines transfer records: one self-contained record per line."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .analyzer import AnnotatedEnglishSentence, AnnotationError, PredicateFeatures, Token
from .hangul import ParticleClass, Tense
from .planner import STAGES, Constituent, FrameError, KoreanAffirmativeFrame, KoreanPredicate


class RecordError(ValueError):
    pass


@dataclass(frozen=True)
class TransferRecord:
    id: str
    english: AnnotatedEnglishSentence
    frame: KoreanAffirmativeFrame
    gold: str | None = None
    provenance: str | None = None
    expected: dict | None = None
    stages: tuple[str, ...] = STAGES


def _sentence(obj: dict) -> AnnotatedEnglishSentence:
    tokens = tuple(Token(*tok) for tok in obj["tokens"])
    return AnnotatedEnglishSentence(tokens, PredicateFeatures(**obj.get("features", {})))


def _frame(obj: dict) -> KoreanAffirmativeFrame:
    constituents = []
    for c in obj["constituents"]:
        particle = c.get("particle")
        constituents.append(Constituent(
            surface=c["surface"],
            role=c["role"],
            particle=ParticleClass.parse(particle) if particle else None,
            neg_surface=c.get("neg_surface"),
            gloss=c.get("gloss"),
        ))
    p = obj["predicate"]
    try:
        tense = Tense[p.get("tense", "Present")]
    except KeyError:
        raise RecordError(f"unknown tense {p.get('tense')!r}") from None
    predicate = KoreanPredicate(
        stem=p["stem"],
        pclass=p.get("class", "LexicalVerb"),
        tense=tense,
        perfect=bool(p.get("perfect", False)),
        modal_can=bool(p.get("modal_can", False)),
        ending=p.get("ending", "final"),
        surface=p.get("surface"),
    )
    return KoreanAffirmativeFrame(tuple(constituents), predicate,
                                  obj.get("context", "General"), obj.get("trailing"))


def parse_record(obj: dict) -> TransferRecord:
    try:
        gold = obj.get("gold")
        if gold is not None and not gold.strip():
            raise RecordError("gold must be non-empty")
        stages = tuple(obj.get("stages", STAGES))
        if set(stages) - set(STAGES):
            raise RecordError(f"unknown stages {stages}")
        return TransferRecord(
            id=str(obj["id"]),
            english=_sentence(obj["english"]),
            frame=_frame(obj["frame"]),
            gold=gold,
            provenance=obj.get("provenance"),
            expected=obj.get("expected"),
            stages=stages,
        )
    except KeyError as exc:
        raise RecordError(f"missing field {exc}") from None
    except (TypeError, AnnotationError, FrameError, ValueError) as exc:
        if isinstance(exc, RecordError):
            raise
        raise RecordError(str(exc)) from None


def read_records(path: str | Path) -> list[tuple[int, TransferRecord | RecordError]]:
    """Parse every non-blank line; failures are returned in place, not raised."""
    out = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                rec = parse_record(json.loads(line))
                if rec.id in seen:
                    raise RecordError(f"duplicate id {rec.id!r}")
                seen.add(rec.id)
                out.append((lineno, rec))
            except json.JSONDecodeError as exc:
                out.append((lineno, RecordError(f"bad JSON: {exc.msg}")))
            except RecordError as exc:
                out.append((lineno, exc))
    return out
