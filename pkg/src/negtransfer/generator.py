"""Realize a Korean sentence from a frame, optionally applying a transform plan."""

from __future__ import annotations

from dataclasses import dataclass

from .hangul import ConjugationTable, SuffixPattern, attach_particle, default_table
from .planner import FrameError, KoreanAffirmativeFrame, TransformPlan


@dataclass(frozen=True)
class RealizedSentence:
    text: str
    trace: tuple[str, ...] = ()
    # rendered predicate alone, where the negation morpheme must sit
    predicate: str = ""


def _render_constituent(frame: KoreanAffirmativeFrame, i: int, rewrite) -> str:
    c = frame.constituents[i]
    if rewrite is None:
        return attach_particle(c.surface, c.particle) if c.particle else c.surface
    if c.particle is None and not rewrite.attach:
        raise FrameError(f"particle rewrite on constituent {i} ({c.surface!r}) without a particle slot")
    surface = rewrite.replacement or c.surface
    if rewrite.prefix:
        head, sep, last = surface.rpartition(" ")
        surface = f"{head}{sep}{rewrite.prefix} {last}"
    return attach_particle(surface, rewrite.particle)


def _affirmative_predicate(frame: KoreanAffirmativeFrame) -> str:
    pred = frame.predicate
    if pred.surface is None:
        raise FrameError("frame has no affirmative predicate surface")
    if pred.pclass == "CopularNoun":
        return frame.constituents[frame.complement_index].surface + pred.surface
    return pred.surface


def _negative_predicate(frame: KoreanAffirmativeFrame, plan: TransformPlan,
                        table: ConjugationTable) -> tuple[str, str]:
    pred = frame.predicate
    wclass = pred.wclass
    if plan.suffix is SuffixPattern.Suppletive:
        stem = plan.suppletion.replacement_stem
        wclass = plan.suppletion.wclass
    elif plan.suffix in (SuffixPattern.IAnida, SuffixPattern.IEopda):
        ci = frame.complement_index
        if ci is None:
            raise FrameError(f"{plan.suffix.name} needs a PredicateComplement constituent")
        stem = frame.constituents[ci].surface
    elif pred.pclass == "CopularNoun":
        stem = frame.constituents[frame.complement_index].surface + pred.stem
    else:
        stem = pred.stem
    return table.render(stem, plan.suffix, plan.tense, wclass=wclass,
                        ending=pred.ending, perfect=pred.perfect)


def realize(frame: KoreanAffirmativeFrame, plan: TransformPlan | None = None,
            table: ConjugationTable | None = None) -> RealizedSentence:
    table = table or default_table()
    trace: list[str] = []
    rewrites = {}
    before: dict[int, list[str]] = {}
    initial: list[str] = []
    at_predicate: list[str] = []
    if plan is None:
        predicate = _affirmative_predicate(frame)
    else:
        head, tail = _negative_predicate(frame, plan, table)
        for ins in plan.adverb_inserts:
            if ins.position == "SentenceInitial":
                initial.append(ins.adverb)
            elif ins.position == "BeforeConstituent":
                before.setdefault(ins.index, []).append(ins.adverb)
            else:
                at_predicate.append(ins.adverb)
        for rw in plan.particle_rewrites:
            rewrites[rw.index] = rw
        predicate = head + " ".join(at_predicate + [tail]) if at_predicate else head + tail
        name = plan.suffix.name
        if plan.suppletion:
            name += f"({plan.suppletion.replacement})"
        trace.append(f"suffix {name}: {head + tail}")

    skip = frame.complement_index if frame.predicate.pclass == "CopularNoun" else None
    parts = list(initial)
    for i, _ in enumerate(frame.constituents):
        parts.extend(before.get(i, ()))
        if i == skip:
            continue
        rendered = _render_constituent(frame, i, rewrites.get(i))
        if i in rewrites:
            trace.append(f"particle [{i}] {rendered}")
        parts.append(rendered)
    parts.append(predicate)
    if frame.trailing:
        parts.append(frame.trailing)
    if plan is not None:
        for ins in plan.adverb_inserts:
            trace.append(f"adverb {ins.adverb} @{ins.position}")
    text = " ".join(parts)
    if not text.endswith("."):
        text += "."
    return RealizedSentence(text, tuple(trace), predicate)
