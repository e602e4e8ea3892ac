"""Turn a negation analysis plus a Korean affirmative frame into concrete edits.

The decision order below is reconstructed from the prose rules for suffix
selection and negation-related words; the original flow chart is not
available.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .analyzer import Kind, NegationAnalysis
from .hangul import PARTIAL_PATTERNS, ParticleClass, SuffixPattern, Tense
from .lexicons import CONTEXTS, RuleLexicons, SuppletivePair, WordPos

FRAME_ROLES = ("Subject", "Object", "Adverbial", "Attribute", "PredicateComplement")
PREDICATE_CLASSES = ("CopularNoun", "LexicalVerb", "Adjective", "Existential")
POSITIONS = ("BeforePredicate", "SentenceInitial", "BeforeConstituent")
STAGES = ("suffix", "particles", "adverbs")

# emphatic wrapper for a no-determiner object inside a causal clause
EMPHATIC_PREFIX = "그 어떤"
# determiner "no" on an existential subject: 음식이 ... 하나도 없다
EXISTENTIAL_NO_ADVERB = "하나도"
QUASI_SUBJECT_QUANTIFIER = "모든"


class FrameError(ValueError):
    pass


class PlanError(ValueError):
    pass


@dataclass(frozen=True)
class Constituent:
    surface: str
    role: str
    particle: ParticleClass | None = None
    # form taken when this constituent is the negated one (e.g. 그들중 누구)
    neg_surface: str | None = None
    # English word(s) this constituent translates, for context rules
    gloss: str | None = None

    def __post_init__(self):
        if self.role not in FRAME_ROLES:
            raise FrameError(f"unknown constituent role {self.role!r}")
        if not self.surface:
            raise FrameError("empty constituent surface")


@dataclass(frozen=True)
class KoreanPredicate:
    stem: str
    pclass: str = "LexicalVerb"
    tense: Tense = Tense.Present
    perfect: bool = False
    modal_can: bool = False
    ending: str = "final"
    # affirmative rendering, used when no plan applies
    surface: str | None = None

    def __post_init__(self):
        if self.pclass not in PREDICATE_CLASSES:
            raise FrameError(f"unknown predicate class {self.pclass!r}")
        if self.ending not in ("final", "causal"):
            raise FrameError(f"unknown ending {self.ending!r}")

    @property
    def wclass(self) -> str:
        return "verb" if self.pclass == "LexicalVerb" else "adj"


@dataclass(frozen=True)
class KoreanAffirmativeFrame:
    constituents: tuple[Constituent, ...]
    predicate: KoreanPredicate
    context: str = "General"
    # clause text following the predicate, carried verbatim
    trailing: str | None = None

    def __post_init__(self):
        if self.context not in CONTEXTS:
            raise FrameError(f"unknown context tag {self.context!r}")
        if self.predicate.pclass == "CopularNoun" and self.complement_index is None:
            raise FrameError("CopularNoun predicate needs a PredicateComplement constituent")

    def index_of(self, role: str) -> int | None:
        for i, c in enumerate(self.constituents):
            if c.role == role:
                return i
        return None

    def index_of_gloss(self, gloss: str) -> int | None:
        for i, c in enumerate(self.constituents):
            if c.gloss and c.gloss.lower() == gloss:
                return i
        return None

    @property
    def complement_index(self) -> int | None:
        return self.index_of("PredicateComplement")

    @property
    def existential(self) -> bool:
        return self.predicate.pclass == "Existential"


@dataclass(frozen=True)
class ParticleRewrite:
    index: int
    particle: ParticleClass
    replacement: str | None = None
    prefix: str | None = None
    # attach a particle to a constituent that has none (다시 -> 다시는)
    attach: bool = False


@dataclass(frozen=True)
class AdverbInsert:
    adverb: str
    position: str = "BeforePredicate"
    index: int | None = None


@dataclass(frozen=True)
class TransformPlan:
    suffix: SuffixPattern
    tense: Tense
    suppletion: SuppletivePair | None = None
    particle_rewrites: tuple[ParticleRewrite, ...] = ()
    adverb_inserts: tuple[AdverbInsert, ...] = field(default=())

    def check(self, kind: Kind | None = None) -> None:
        if (self.suppletion is not None) != (self.suffix is SuffixPattern.Suppletive):
            raise PlanError("suppletion present iff suffix is Suppletive")
        if kind is Kind.Partial and self.suffix not in PARTIAL_PATTERNS:
            raise PlanError(f"partial negative planned with {self.suffix.name}")
        if kind in (Kind.General, Kind.Intensified, Kind.Double) and self.suffix in PARTIAL_PATTERNS:
            raise PlanError(f"{kind.value} negative planned with partial suffix {self.suffix.name}")

    def summary(self) -> str:
        parts = [self.suffix.name]
        if self.suppletion:
            parts.append(f"->{self.suppletion.replacement}")
        for r in self.particle_rewrites:
            parts.append(f"[{r.index}]{r.particle.name}")
        for a in self.adverb_inserts:
            parts.append(f"+{a.adverb}")
        return " ".join(parts)


def _require_negative(analysis: NegationAnalysis) -> None:
    if not analysis.is_negative:
        raise PlanError("cannot plan a NonNegative analysis")


def select_suffix(analysis: NegationAnalysis, frame: KoreanAffirmativeFrame,
                  lex: RuleLexicons) -> SuffixPattern:
    _require_negative(analysis)
    pred = frame.predicate
    if analysis.kind is Kind.Partial:
        # suppletion and overrides would break the partial reading
        tcls = analysis.partial_trigger.cls
        if analysis.modal_negated or tcls in ("mass", "degree"):
            return SuffixPattern.SuNeunEopda if pred.modal_can else SuffixPattern.JiNeunAnta
        return SuffixPattern.NGeosEunAnida
    if lex.suppletive_form(pred.stem, frame.context):
        return SuffixPattern.Suppletive
    for hit in analysis.negatives:
        if hit.entry.override is not None and hit.entry.override not in PARTIAL_PATTERNS:
            return hit.entry.override
    if pred.pclass == "CopularNoun":
        return SuffixPattern.IEopda if frame.context == "Possession" else SuffixPattern.IAnida
    # modal outranks perfect when both are set
    if pred.modal_can:
        return SuffixPattern.SuEopda
    if pred.perfect and pred.pclass == "LexicalVerb":
        return SuffixPattern.NJeokIEopda
    if lex.collocation_class(pred.stem) == "Motada":
        return SuffixPattern.JiMotada
    return SuffixPattern.JiAnta


def _negated_constituents(analysis: NegationAnalysis, frame: KoreanAffirmativeFrame):
    if analysis.kind not in (Kind.Intensified, Kind.Double):
        return
    for hit in analysis.negatives:
        if hit.slot in ("Subject", "Object"):
            yield hit, frame.index_of(hit.slot)


def plan_particles(analysis: NegationAnalysis, frame: KoreanAffirmativeFrame,
                   lex: RuleLexicons) -> list[ParticleRewrite]:
    rewrites: dict[int, ParticleRewrite] = {}
    if analysis.kind is Kind.Partial and analysis.partial_trigger.cls != "degree":
        idx = frame.index_of("Subject")
        if idx is not None and frame.constituents[idx].particle not in (None, ParticleClass.Nominative):
            rewrites[idx] = ParticleRewrite(idx, ParticleClass.Nominative)
    for hit in analysis.negatives:
        if hit.context and hit.context.action == "topicalize":
            idx = frame.index_of_gloss(" ".join(hit.context.phrase))
            if idx is not None:
                rewrites[idx] = ParticleRewrite(idx, ParticleClass.Topic, attach=True)
    for hit, idx in _negated_constituents(analysis, frame):
        if idx is None:
            continue
        c = frame.constituents[idx]
        entry = hit.entry
        if entry.quasi:
            if (entry.pos is WordPos.Determiner and hit.slot == "Subject"
                    and not frame.existential and c.particle is not ParticleClass.Nominative):
                rewrites[idx] = ParticleRewrite(idx, ParticleClass.Nominative)
            continue
        if entry.pos is WordPos.Determiner and entry.surface == "no":
            if frame.predicate.ending == "causal":
                rewrites[idx] = ParticleRewrite(idx, ParticleClass.Additive, prefix=EMPHATIC_PREFIX)
            continue
        rewrites[idx] = ParticleRewrite(
            idx, ParticleClass.Additive, replacement=c.neg_surface or entry.korean)
    return [rewrites[i] for i in sorted(rewrites)]


def plan_adverbs(analysis: NegationAnalysis, frame: KoreanAffirmativeFrame | None,
                 lex: RuleLexicons) -> list[AdverbInsert]:
    inserts: list[AdverbInsert] = []

    def add(adverb, position="BeforePredicate", index=None):
        if adverb and all(a.adverb != adverb for a in inserts):
            if position == "BeforeConstituent" and index is None:
                position = "BeforePredicate"
            inserts.append(AdverbInsert(adverb, position, index))

    existential = frame is not None and frame.existential
    causal = frame is not None and frame.predicate.ending == "causal"
    for hit in analysis.negatives:
        entry = hit.entry
        if analysis.kind is Kind.Double and hit.slot in ("Predicate", "Adverbial"):
            # the Korean sentence keeps a single negation; the predicate
            # negator's adverb goes with it
            continue
        if hit.context is not None:
            if hit.context.action == "adverb":
                add(hit.context.korean)
            continue
        idx = None
        if frame is not None and hit.slot in ("Subject", "Object"):
            idx = frame.index_of(hit.slot)
        if hit.companion_adverb:
            add(hit.companion_adverb, "BeforeConstituent", idx)
        if entry.quasi:
            adverb = lex.related_adverb(entry, hit.slot)
            if entry.pos is WordPos.Pronoun or existential or idx is None:
                add(adverb)
            elif hit.slot == "Subject":
                add(f"{adverb} {QUASI_SUBJECT_QUANTIFIER}", "BeforeConstituent", idx)
            else:
                add(adverb, "BeforeConstituent", idx)
            continue
        if (entry.pos is WordPos.Determiner and entry.surface == "no"
                and hit.slot in ("Subject", "Object") and frame is not None):
            if not causal:
                add(EXISTENTIAL_NO_ADVERB if existential else lex.related_adverb(entry, hit.slot))
            continue
        add(lex.related_adverb(entry, hit.slot))
    return inserts


def plan(analysis: NegationAnalysis, frame: KoreanAffirmativeFrame, lex: RuleLexicons,
         stages: tuple[str, ...] = STAGES) -> TransformPlan:
    """Compose suffix, particle and adverb decisions into one plan.

    ``stages`` drops the particle and/or adverb steps; the suffix step always runs.
    """
    unknown = set(stages) - set(STAGES)
    if unknown:
        raise PlanError(f"unknown plan stages: {sorted(unknown)}")
    suffix = select_suffix(analysis, frame, lex)
    suppletion = None
    if suffix is SuffixPattern.Suppletive:
        suppletion = lex.suppletive_form(frame.predicate.stem, frame.context)
    result = TransformPlan(
        suffix=suffix,
        tense=frame.predicate.tense,
        suppletion=suppletion,
        particle_rewrites=tuple(plan_particles(analysis, frame, lex)) if "particles" in stages else (),
        adverb_inserts=tuple(plan_adverbs(analysis, frame, lex)) if "adverbs" in stages else (),
    )
    result.check(analysis.kind)
    return result
