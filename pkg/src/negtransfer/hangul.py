"""Hangul syllable arithmetic, particle allomorphy and negative-suffix conjugation."""

from __future__ import annotations

import re
from enum import Enum
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import NamedTuple

SYLLABLE_BASE = 0xAC00
SYLLABLE_LAST = 0xD7A3
LEAD_STRIDE = 588
VOWEL_STRIDE = 28

LEADS = "ㄱㄲㄴㄷㄸㄹㅁㅂㅃㅅㅆㅇㅈㅉㅊㅋㅌㅍㅎ"
VOWELS = "ㅏㅐㅑㅒㅓㅔㅕㅖㅗㅘㅙㅚㅛㅜㅝㅞㅟㅠㅡㅢㅣ"
# index 0 is the empty tail
TAILS = " ㄱㄲㄳㄴㄵㄶㄷㄹㄺㄻㄼㄽㄾㄿㅀㅁㅂㅄㅅㅆㅇㅈㅊㅋㅌㅍㅎ"

TAIL_NIEUN = TAILS.index("ㄴ")
TAIL_RIEUL = TAILS.index("ㄹ")


class HangulError(ValueError):
    pass


class ConjugationError(ValueError):
    pass


class SyllableParts(NamedTuple):
    lead: int
    vowel: int
    tail: int | None = None

    @property
    def jamo(self) -> tuple[str, str, str | None]:
        return (
            LEADS[self.lead],
            VOWELS[self.vowel],
            TAILS[self.tail] if self.tail else None,
        )


def is_syllable(ch: str) -> bool:
    return len(ch) == 1 and SYLLABLE_BASE <= ord(ch) <= SYLLABLE_LAST


def decompose_syllable(ch: str) -> SyllableParts | None:
    """Split a precomposed syllable into jamo indices; None for anything else."""
    if not is_syllable(ch):
        return None
    offset = ord(ch) - SYLLABLE_BASE
    lead, rest = divmod(offset, LEAD_STRIDE)
    vowel, tail = divmod(rest, VOWEL_STRIDE)
    return SyllableParts(lead, vowel, tail or None)


def compose_syllable(lead: int, vowel: int, tail: int | None = None) -> str:
    if not (0 <= lead < len(LEADS) and 0 <= vowel < len(VOWELS)):
        raise HangulError(f"jamo index out of range: lead={lead} vowel={vowel}")
    if tail is not None and not 1 <= tail < len(TAILS):
        raise HangulError(f"tail index out of range: {tail}")
    return chr(SYLLABLE_BASE + lead * LEAD_STRIDE + vowel * VOWEL_STRIDE + (tail or 0))


def _last_parts(word: str) -> SyllableParts:
    if not word:
        raise HangulError("empty word")
    parts = decompose_syllable(word[-1])
    if parts is None:
        raise HangulError(f"last character {word[-1]!r} of {word!r} is not a Hangul syllable")
    return parts


def has_final_consonant(word: str) -> bool:
    return _last_parts(word).tail is not None


class ParticleClass(Enum):
    Topic = ("는", "은")
    Nominative = ("가", "이")
    Accusative = ("를", "을")
    Additive = ("도", "도")
    Comitative = ("와", "과")

    @property
    def post_vowel(self) -> str:
        return self.value[0]

    @property
    def post_consonant(self) -> str:
        return self.value[1]

    @classmethod
    def parse(cls, name: str) -> "ParticleClass":
        try:
            return cls[name]
        except KeyError:
            raise ValueError(f"unknown particle class {name!r}") from None


def attach_particle(word: str, pc: ParticleClass) -> str:
    form = pc.post_consonant if has_final_consonant(word) else pc.post_vowel
    return word + form


# --- stem + ending joins -------------------------------------------------


def _with_tail(word: str, tail: int | None) -> str:
    p = _last_parts(word)
    return word[:-1] + compose_syllable(p.lead, p.vowel, tail)


def join_nieun(stem: str) -> str:
    """Adnominal/past ㄴ: 가보 -> 가본, 읽 -> 읽은, 알 -> 안."""
    p = _last_parts(stem)
    if p.tail is None or p.tail == TAIL_RIEUL:
        return _with_tail(stem, TAIL_NIEUN)
    return stem + "은"


def join_rieul(stem: str) -> str:
    """Prospective ㄹ: 대답하 -> 대답할, 믿 -> 믿을, 알 -> 알."""
    p = _last_parts(stem)
    if p.tail is None:
        return _with_tail(stem, TAIL_RIEUL)
    if p.tail == TAIL_RIEUL:
        return stem
    return stem + "을"


def join_neun(stem: str) -> str:
    """Present verbal adnominal: 실행되 -> 실행되는, 알 -> 아는."""
    if _last_parts(stem).tail == TAIL_RIEUL:
        return _with_tail(stem, None) + "는"
    return stem + "는"


def join_plain_present(stem: str) -> str:
    """Plain declarative present of a verb: 모르 -> 모른다, 먹 -> 먹는다."""
    p = _last_parts(stem)
    if p.tail is None or p.tail == TAIL_RIEUL:
        return _with_tail(stem, TAIL_NIEUN) + "다"
    return stem + "는다"


_BRIGHT = {VOWELS.index("ㅏ"), VOWELS.index("ㅗ")}


def join_past(stem: str) -> str:
    """Past stem in the uncontracted northern spelling: 하 -> 하였, 없 -> 없었, 모르 -> 몰랐."""
    p = _last_parts(stem)
    if stem.endswith("하"):
        return stem + "였"
    if stem.endswith("르") and len(stem) > 1:
        prev = _last_parts(stem[:-1])
        head = _with_tail(stem[:-1], TAIL_RIEUL)
        return head + ("랐" if prev.vowel in _BRIGHT else "렀")
    if p.tail is None and p.vowel == VOWELS.index("ㅣ"):
        return stem + "었"
    return stem + ("았" if p.vowel in _BRIGHT else "었")


def join_nominative(noun: str) -> str:
    return attach_particle(noun, ParticleClass.Nominative)


_JOINS = {
    "stem": lambda s: s,
    "stem+ㄴ": join_nieun,
    "stem+ㄹ": join_rieul,
    "stem+는": join_neun,
    "stem+ㄴ다": join_plain_present,
    "stem+었": join_past,
    "stem+이": join_nominative,
}


# --- conjugation table ----------------------------------------------------


class SuffixPattern(Enum):
    JiAnta = "~지 않다"
    JiMotada = "~지 못하다"
    IAnida = "~이 아니다"
    IEopda = "~이 없다"
    NJeokIEopda = "~ㄴ 적이 없다"
    NGeosEunAnida = "~ㄴ 것은 아니다"
    JiNeunAnta = "~지는 않다"
    SuNeunEopda = "~수는 없다"
    SuEopda = "~수 없다"
    Suppletive = "(stem replaced)"


PARTIAL_PATTERNS = frozenset(
    {SuffixPattern.NGeosEunAnida, SuffixPattern.JiNeunAnta, SuffixPattern.SuNeunEopda}
)


class Tense(Enum):
    Present = "Present"
    Past = "Past"
    Future = "Future"
    Ability = "Ability"


WORD_CLASSES = ("verb", "adj")
ENDINGS = ("final", "causal")
ADVERB_SLOT = "^"
_PLACEHOLDER = re.compile(r"\{([^}]+)\}")

# characteristic morpheme of each family of negative predicate
NEGATION_MORPHEMES = ("않", "못하", "못한", "못할", "아니", "아닐", "없", "모르", "모른", "모를", "몰랐")


def count_negation_morphemes(text: str) -> int:
    return len(re.findall("|".join(sorted(NEGATION_MORPHEMES, key=len, reverse=True)), text))


class ConjugationTable:
    """Rows of (pattern, tense, word class, ending) -> template.

    A word class of ``*`` matches both verbs and adjectives. Templates use
    ``{stem}``-style joins (see ``_JOINS``) plus ``{adn}``, the present
    adnominal form, and may contain ``^`` to mark where adverbs of the
    negated predicate are inserted (default: before the whole predicate).
    """

    def __init__(self, rows: dict[tuple[SuffixPattern, Tense, str, str], str]):
        self.rows = dict(rows)

    @classmethod
    def parse(cls, text: str, source: str = "<table>") -> "ConjugationTable":
        rows = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 5:
                raise ConjugationError(f"{source}:{lineno}: expected 5 tab-separated fields")
            pattern, tense, wclass, ending, template = fields
            try:
                key = (SuffixPattern[pattern], Tense[tense], wclass, ending)
            except KeyError as exc:
                raise ConjugationError(f"{source}:{lineno}: unknown id {exc}") from None
            if wclass not in WORD_CLASSES + ("*",) or ending not in ENDINGS:
                raise ConjugationError(f"{source}:{lineno}: bad class/ending {wclass}/{ending}")
            for name in _PLACEHOLDER.findall(template):
                if name not in _JOINS and name != "adn":
                    raise ConjugationError(f"{source}:{lineno}: unknown placeholder {{{name}}}")
            if key in rows:
                raise ConjugationError(f"{source}:{lineno}: duplicate row {key}")
            rows[key] = template
        return cls(rows)

    @classmethod
    def load(cls, path: str | Path) -> "ConjugationTable":
        path = Path(path)
        return cls.parse(path.read_text(encoding="utf-8"), str(path))

    def supports(self, pattern: SuffixPattern, tense: Tense, wclass: str = "verb",
                 ending: str = "final") -> bool:
        return self._template(pattern, tense, wclass, ending) is not None

    def supported_pairs(self, ending: str = "final") -> set[tuple[SuffixPattern, Tense]]:
        return {(p, t) for (p, t, _, e) in self.rows if e == ending}

    def _template(self, pattern, tense, wclass, ending):
        return self.rows.get((pattern, tense, wclass, ending)) or self.rows.get(
            (pattern, tense, "*", ending))

    def render(self, stem: str, pattern: SuffixPattern, tense: Tense, *,
               wclass: str = "verb", ending: str = "final",
               perfect: bool = False) -> tuple[str, str]:
        """Return the conjugated predicate split at the adverb slot."""
        template = self._template(pattern, tense, wclass, ending)
        if template is None:
            raise ConjugationError(
                f"unsupported conjugation: pattern={pattern.name} tense={tense.name} "
                f"class={wclass} ending={ending}")

        def fill(m: re.Match) -> str:
            name = m.group(1)
            if name == "adn":
                # perfect aspect and non-verbs take the ㄴ adnominal
                return join_nieun(stem) if perfect or wclass == "adj" else join_neun(stem)
            return _JOINS[name](stem)

        text = _PLACEHOLDER.sub(fill, template)
        head, _, tail = text.rpartition(ADVERB_SLOT)
        return head, tail


@lru_cache(maxsize=1)
def default_table() -> ConjugationTable:
    text = resources.files("negtransfer").joinpath("data/conjugations.tsv").read_text("utf-8")
    return ConjugationTable.parse(text, "conjugations.tsv")


def conjugate_negative(stem: str, pattern: SuffixPattern, tense: Tense, *,
                       wclass: str = "verb", ending: str = "final", perfect: bool = False,
                       table: ConjugationTable | None = None) -> str:
    head, tail = (table or default_table()).render(
        stem, pattern, tense, wclass=wclass, ending=ending, perfect=perfect)
    return head + tail
