"""Negative-sentence detection and classification over shallow-annotated English."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .lexicons import ContextRule, NegativeWordEntry, RuleLexicons, Trigger, WordPos, normalize

ROLES = ("Subject", "Predicate", "Auxiliary", "Object", "Adverbial", "Attribute", "Other")
POS_TAGS = ("ADV", "PRON", "DET", "NOUN", "PROPN", "VERB", "AUX", "ADJ", "ADP",
            "CONJ", "PART", "NUM", "PUNCT", "X")
SLOTS = ("Subject", "Predicate", "Object", "Adverbial")
MODALS = frozenset({"will", "would", "shall", "should", "can", "could", "may", "might", "must"})

_POS_HINT = {"ADV": WordPos.Adverb, "PRON": WordPos.Pronoun, "DET": WordPos.Determiner}


class AnnotationError(ValueError):
    pass


@dataclass(frozen=True)
class Token:
    surface: str
    pos: str
    role: str


@dataclass(frozen=True)
class PredicateFeatures:
    verb_kind: str = "Lexical"
    tense: str = "Present"
    aspect: str = "Simple"
    modal_can: bool = False

    def __post_init__(self):
        if self.verb_kind not in ("Copular", "Lexical"):
            raise AnnotationError(f"verb_kind must be Copular or Lexical, got {self.verb_kind!r}")
        if self.tense not in ("Present", "Past", "Future"):
            raise AnnotationError(f"bad tense {self.tense!r}")
        if self.aspect not in ("Simple", "Perfect"):
            raise AnnotationError(f"bad aspect {self.aspect!r}")


@dataclass(frozen=True)
class AnnotatedEnglishSentence:
    """Tokens tagged with part of speech and grammatical role.

    Role ``Other`` marks tokens outside the analyzed clause (a coordinated
    or main clause whose Korean side is carried verbatim by the frame);
    negative words there are ignored.
    """

    tokens: tuple[Token, ...]
    features: PredicateFeatures = PredicateFeatures()

    def __post_init__(self):
        for tok in self.tokens:
            if tok.pos not in POS_TAGS:
                raise AnnotationError(f"unknown pos tag {tok.pos!r} on {tok.surface!r}")
            if tok.role not in ROLES:
                raise AnnotationError(f"unknown role {tok.role!r} on {tok.surface!r}")
        marks = [i for i, t in enumerate(self.tokens) if t.role == "Predicate"]
        if not marks:
            raise AnnotationError("sentence has no Predicate token")
        if marks != list(range(marks[0], marks[-1] + 1)):
            raise AnnotationError("Predicate tokens must form one contiguous span")

    @property
    def words(self) -> list[str]:
        return [t.surface for t in self.tokens]

    @property
    def text(self) -> str:
        return " ".join(self.words)

    def run(self, index: int) -> range:
        """Maximal span of tokens around ``index`` sharing its role."""
        role = self.tokens[index].role
        lo = index
        while lo > 0 and self.tokens[lo - 1].role == role:
            lo -= 1
        hi = index + 1
        while hi < len(self.tokens) and self.tokens[hi].role == role:
            hi += 1
        return range(lo, hi)


@dataclass(frozen=True)
class NegativeHit:
    entry: NegativeWordEntry
    slot: str
    index: int
    context: ContextRule | None = None
    context_span: tuple[int, ...] = ()
    companion_adverb: str | None = None

    @property
    def span(self) -> range:
        return range(self.index, self.index + len(self.entry.words))


class Structure(Enum):
    NS_AP_AO = "NS-AP-AO"
    NS_NP_AO = "NS-NP-AO"
    NS_AP_NO = "NS-AP-NO"
    AS_AP_NO = "AS-AP-NO"
    AS_NP_AO = "AS-NP-AO"
    AS_NP_NO = "AS-NP-NO"
    # all three slots negated; not one of the six, reported under Others
    NS_NP_NO = "NS-NP-NO"
    NonNegative = "NonNegative"


class Kind(Enum):
    General = "General"
    Partial = "Partial"
    Intensified = "Intensified"
    Double = "Double"
    NonNegative = "NonNegative"


@dataclass(frozen=True)
class NegationAnalysis:
    negatives: tuple[NegativeHit, ...]
    structure: Structure
    kind: Kind
    partial_trigger: Trigger | None = None
    quasi: bool = False
    modal_negated: bool = False
    idioms: tuple[str, ...] = field(default=())

    @property
    def is_negative(self) -> bool:
        return self.kind is not Kind.NonNegative

    def check(self) -> None:
        """Raise AssertionError if the structure/kind invariants do not hold."""
        if (self.kind is Kind.Double) != (len(self.negatives) >= 2):
            raise AssertionError("Double iff two or more negatives")
        if (self.kind is Kind.NonNegative) != (self.structure is Structure.NonNegative):
            raise AssertionError("NonNegative kind iff NonNegative structure")
        if (self.structure is Structure.NonNegative) != (not self.negatives):
            raise AssertionError("NonNegative iff no surviving negative words")
        if self.kind is Kind.General and (
                self.structure is not Structure.AS_NP_AO or self.partial_trigger):
            raise AssertionError("General requires AS-NP-AO and no trigger")
        if self.kind is Kind.Partial and self.partial_trigger is None:
            raise AssertionError("Partial requires a trigger")

    def summary(self) -> str:
        words = ",".join(f"{h.entry.surface}/{h.slot}" for h in self.negatives) or "-"
        trig = self.partial_trigger.text if self.partial_trigger else "-"
        return (f"structure={self.structure.value} kind={self.kind.value} "
                f"negatives={words} trigger={trig} quasi={'yes' if self.quasi else 'no'}")


def _slot_for(token: Token) -> str:
    role = token.role
    if role in ("Predicate", "Auxiliary"):
        return "Predicate"
    if role in ("Subject", "Object"):
        return role
    return "Adverbial"


def _find_phrase(words: list[str], phrase: tuple[str, ...], skip: set[int]) -> tuple[int, ...]:
    n = len(phrase)
    for start in range(len(words) - n + 1):
        idx = tuple(range(start, start + n))
        if not skip.intersection(idx) and tuple(words[start:start + n]) == phrase:
            return idx
    return ()


def detect_negatives(s: AnnotatedEnglishSentence, lex: RuleLexicons
                     ) -> tuple[list[NegativeHit], list[str]]:
    """Negative words with their slots, plus the idioms that consumed any.

    Negative words inside a NonNegative idiom are dropped; inside a Collapse
    idiom only the last one survives, carrying the idiom's adverb.
    """
    words = s.words
    norm = [normalize(w) for w in words]
    other = {i for i, t in enumerate(s.tokens) if t.role == "Other"}
    hits: list[NegativeHit] = []
    idioms: list[str] = []
    i = 0
    while i < len(words):
        if i in other:
            i += 1
            continue
        entry = lex.lookup_negative(words[i:], _POS_HINT.get(s.tokens[i].pos))
        if entry is None:
            i += 1
            continue
        companion = None
        found = lex.match_idiom(words, i)
        if found:
            idiom, start = found
            end = start + len(idiom.pattern)
            idioms.append(idiom.text)
            if idiom.effect == "NonNegative":
                i = end
                continue
            # Collapse: keep the last negative word inside the idiom
            last = None
            j = i
            while j < end:
                e = lex.lookup_negative(words[j:end], _POS_HINT.get(s.tokens[j].pos))
                if e is not None:
                    last = (j, e)
                    j += len(e.words)
                else:
                    j += 1
            i, entry = last
            companion = idiom.adverb
        context, span = None, ()
        for rule in lex.context_rules(entry.surface):
            span = _find_phrase(norm, rule.phrase, other)
            if span:
                context = rule
                break
        hits.append(NegativeHit(entry, _slot_for(s.tokens[i]), i, context, span, companion))
        i += len(entry.words)
    return hits, idioms


def classify_structure(negatives: list[NegativeHit], s: AnnotatedEnglishSentence | None = None
                       ) -> Structure:
    if not negatives:
        return Structure.NonNegative
    slots = {h.slot for h in negatives}
    subj = "Subject" in slots
    pred = bool(slots & {"Predicate", "Adverbial"})
    obj = "Object" in slots
    code = "-".join((
        "NS" if subj else "AS",
        "NP" if pred else "AP",
        "NO" if obj else "AO",
    ))
    return Structure(code)


def detect_partial_trigger(s: AnnotatedEnglishSentence, negatives: list[NegativeHit],
                           lex: RuleLexicons) -> Trigger | None:
    """First trigger inside a negated constituent or right after a negator."""
    blocked = {i for h in negatives for i in h.context_span}
    blocked |= {i for i, t in enumerate(s.tokens) if t.role == "Other"}
    words = s.words
    for hit in negatives:
        positions = list(s.run(hit.index))
        after = hit.span.stop
        if after < len(words) and after not in positions:
            positions.append(after)
        for pos in positions:
            if pos in blocked:
                continue
            trig = lex.find_trigger(words, pos)
            if trig is not None:
                return trig
    return None


def classify_kind(structure: Structure, negatives: list[NegativeHit],
                  trigger: Trigger | None) -> Kind:
    if structure is Structure.NonNegative:
        return Kind.NonNegative
    if len(negatives) >= 2:
        return Kind.Double
    if trigger is not None:
        return Kind.Partial
    if structure is Structure.AS_NP_AO:
        return Kind.General
    return Kind.Intensified


def _modal_negated(s: AnnotatedEnglishSentence, negatives: list[NegativeHit]) -> bool:
    for hit in negatives:
        if hit.slot != "Predicate" or hit.entry.surface != "not":
            continue
        before = s.tokens[hit.index - 1] if hit.index else None
        if before and before.role == "Auxiliary" and normalize(before.surface) in MODALS:
            return True
    return False


def analyze(s: AnnotatedEnglishSentence, lex: RuleLexicons) -> NegationAnalysis:
    negatives, idioms = detect_negatives(s, lex)
    structure = classify_structure(negatives, s)
    trigger = detect_partial_trigger(s, negatives, lex) if negatives else None
    kind = classify_kind(structure, negatives, trigger)
    analysis = NegationAnalysis(
        negatives=tuple(negatives),
        structure=structure,
        kind=kind,
        partial_trigger=trigger if kind is Kind.Partial else None,
        quasi=any(h.entry.quasi for h in negatives),
        modal_negated=_modal_negated(s, negatives),
        idioms=tuple(idioms),
    )
    analysis.check()
    return analysis
