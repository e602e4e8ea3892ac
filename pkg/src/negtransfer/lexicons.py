"""Tab-separated rule tables and the lookups the analyzer and planner run over them."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .hangul import SuffixPattern


class LexiconError(Exception):
    pass


class WordPos(Enum):
    Adverb = "Adverb"
    Pronoun = "Pronoun"
    Determiner = "Determiner"


# lookup preference when the caller gives no part-of-speech hint
POS_PRIORITY = (WordPos.Pronoun, WordPos.Determiner, WordPos.Adverb)

CONTEXTS = ("Identity", "Possession", "Knowledge", "General")
TRIGGER_CLASSES = ("universal", "mass", "degree")
CONTRACTIONS = {"n't": "not", "cannot": "not"}


def normalize(token: str) -> str:
    token = token.lower()
    return CONTRACTIONS.get(token, token)


@dataclass(frozen=True)
class NegativeWordEntry:
    surface: str
    pos: WordPos
    related: tuple[tuple[str | None, str], ...] = ()
    quasi: bool = False
    korean: str | None = None
    override: SuffixPattern | None = None

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(self.surface.split())


@dataclass(frozen=True)
class IdiomEntry:
    pattern: tuple[frozenset[str], ...]
    effect: str
    adverb: str | None = None
    text: str = ""

    def matches_at(self, tokens: list[str], start: int) -> bool:
        if start < 0 or start + len(self.pattern) > len(tokens):
            return False
        return all("*" in alts or tokens[start + i] in alts
                   for i, alts in enumerate(self.pattern))


@dataclass(frozen=True)
class Trigger:
    words: tuple[str, ...]
    cls: str

    @property
    def text(self) -> str:
        return " ".join(self.words)


@dataclass(frozen=True)
class ContextRule:
    negative: str
    phrase: tuple[str, ...]
    action: str
    korean: str | None = None


@dataclass(frozen=True)
class SuppletivePair:
    stem: str
    context: str
    replacement: str
    wclass: str

    @property
    def replacement_stem(self) -> str:
        return self.replacement[:-1] if self.replacement.endswith("다") else self.replacement


def _rows(path: Path, width: int):
    if not path.is_file():
        raise LexiconError(f"missing lexicon file: {path}")
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != width:
            raise LexiconError(f"{path.name}:{lineno}: expected {width} fields, got {len(fields)}")
        yield lineno, [None if f == "-" else f for f in fields]


def _parse_related(text: str | None) -> tuple[tuple[str | None, str], ...]:
    if not text:
        return ()
    out = []
    for item in text.split(","):
        slot, sep, adverb = item.partition("=")
        out.append((slot, adverb) if sep else (None, item))
    return tuple(out)


@dataclass
class RuleLexicons:
    negatives: list[NegativeWordEntry]
    idioms: list[IdiomEntry]
    triggers: list[Trigger]
    contexts: list[ContextRule]
    collocations: dict[str, str]
    suppletives: dict[tuple[str, str], SuppletivePair]
    default_collocation: str = "Anta"
    _by_surface: dict[tuple[str, ...], list[NegativeWordEntry]] = field(
        init=False, repr=False, default_factory=dict)

    def __post_init__(self):
        seen = set()
        for entry in self.negatives:
            if (entry.surface, entry.pos) in seen:
                raise LexiconError(f"duplicate negative entry {entry.surface!r}/{entry.pos.name}")
            seen.add((entry.surface, entry.pos))
            self._by_surface.setdefault(entry.words, []).append(entry)
        for idiom in self.idioms:
            if not any(alts & set(self._all_negative_words()) for alts in idiom.pattern):
                raise LexiconError(f"idiom {idiom.text!r} contains no negative word")
        self._max_len = max((len(k) for k in self._by_surface), default=1)

    def _all_negative_words(self):
        return {e.surface for e in self.negatives if len(e.words) == 1}

    @classmethod
    def load(cls, directory: str | Path) -> "RuleLexicons":
        d = Path(directory)
        if not d.is_dir():
            raise LexiconError(f"lexicon directory not found: {d}")
        negatives = []
        for lineno, (surface, pos, related, quasi, korean, override) in _rows(d / "negatives.tsv", 6):
            try:
                negatives.append(NegativeWordEntry(
                    surface=surface.lower(),
                    pos=WordPos(pos),
                    related=_parse_related(related),
                    quasi=quasi == "yes",
                    korean=korean,
                    override=SuffixPattern[override] if override else None,
                ))
            except (KeyError, ValueError) as exc:
                raise LexiconError(f"negatives.tsv:{lineno}: {exc}") from None
        idioms = []
        for lineno, (pattern, effect, adverb) in _rows(d / "idioms.tsv", 3):
            if effect not in ("NonNegative", "Collapse"):
                raise LexiconError(f"idioms.tsv:{lineno}: unknown effect {effect!r}")
            idioms.append(IdiomEntry(
                pattern=tuple(frozenset(t.lower().split("|")) for t in pattern.split()),
                effect=effect, adverb=adverb, text=pattern))
        triggers = []
        for lineno, (words, tcls) in _rows(d / "triggers.tsv", 2):
            if tcls not in TRIGGER_CLASSES:
                raise LexiconError(f"triggers.tsv:{lineno}: unknown class {tcls!r}")
            triggers.append(Trigger(tuple(words.lower().split()), tcls))
        contexts = []
        for lineno, (neg, phrase, action, korean) in _rows(d / "contexts.tsv", 4):
            if action not in ("adverb", "topicalize"):
                raise LexiconError(f"contexts.tsv:{lineno}: unknown action {action!r}")
            contexts.append(ContextRule(neg.lower(), tuple(phrase.lower().split()), action, korean))
        collocations = {}
        for lineno, (stem, ccls) in _rows(d / "collocations.tsv", 2):
            if ccls not in ("Anta", "Motada"):
                raise LexiconError(f"collocations.tsv:{lineno}: unknown class {ccls!r}")
            collocations[stem] = ccls
        suppletives = {}
        for lineno, (stem, context, replacement, wclass) in _rows(d / "suppletives.tsv", 4):
            if context not in CONTEXTS or wclass not in ("verb", "adj"):
                raise LexiconError(f"suppletives.tsv:{lineno}: bad context/class")
            suppletives[(stem, context)] = SuppletivePair(stem, context, replacement, wclass)
        return cls(negatives, idioms, triggers, contexts, collocations, suppletives)

    # --- lookups -------------------------------------------------------------

    def lookup_negative(self, tokens: list[str], pos: WordPos | None = None
                        ) -> NegativeWordEntry | None:
        """Longest negative word starting at ``tokens[0]``.

        ``pos`` only disambiguates between entries sharing a surface
        (``nothing`` is both a pronoun and an adverb).
        """
        words = [normalize(t) for t in tokens[: self._max_len]]
        for n in range(len(words), 0, -1):
            candidates = self._by_surface.get(tuple(words[:n]))
            if not candidates:
                continue
            for entry in candidates:
                if entry.pos is pos:
                    return entry
            return min(candidates, key=lambda e: POS_PRIORITY.index(e.pos))
        return None

    def match_idiom(self, tokens: list[str], position: int) -> tuple[IdiomEntry, int] | None:
        """Idiom covering ``tokens[position]`` and its start index; longest pattern wins."""
        words = [normalize(t) for t in tokens]
        best = None
        for idiom in self.idioms:
            n = len(idiom.pattern)
            for start in range(max(0, position - n + 1), position + 1):
                if idiom.matches_at(words, start) and (best is None or n > len(best[0].pattern)):
                    best = (idiom, start)
        return best

    def collocation_class(self, stem: str) -> str:
        return self.collocations.get(stem, self.default_collocation)

    def suppletive_form(self, stem: str, context: str) -> SuppletivePair | None:
        return self.suppletives.get((stem, context))

    def related_adverb(self, entry: NegativeWordEntry, scope: str) -> str | None:
        """Korean adverb added for ``entry`` negating ``scope``; slot-specific rows win."""
        general = None
        for slot, adverb in entry.related:
            if slot == scope:
                return adverb
            if slot is None:
                general = adverb
        return general

    def find_trigger(self, tokens: list[str], start: int) -> Trigger | None:
        words = [normalize(t) for t in tokens]
        for trig in sorted(self.triggers, key=lambda t: -len(t.words)):
            if tuple(words[start:start + len(trig.words)]) == trig.words:
                return trig
        return None

    def context_rules(self, negative: str) -> list[ContextRule]:
        return [r for r in self.contexts if r.negative == negative]


def default_lexicon_dir() -> Path:
    return Path(str(resources.files("negtransfer").joinpath("data")))


@lru_cache(maxsize=None)
def load_lexicons(directory: str | None = None) -> RuleLexicons:
    return RuleLexicons.load(directory or default_lexicon_dir())
