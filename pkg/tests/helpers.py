from negtransfer.analyzer import AnnotatedEnglishSentence, PredicateFeatures, Token
from negtransfer.hangul import ParticleClass, Tense
from negtransfer.planner import Constituent, KoreanAffirmativeFrame, KoreanPredicate

ROLE = {"S": "Subject", "P": "Predicate", "A": "Auxiliary", "O": "Object",
        "D": "Adverbial", "T": "Attribute", "X": "Other"}


def sent(spec: str, **features) -> AnnotatedEnglishSentence:
    """Build a sentence from ``word/POS/R`` items, R being a one-letter role code."""
    tokens = []
    for item in spec.split():
        word, pos, role = item.rsplit("/", 2)
        tokens.append(Token(word, pos, ROLE[role]))
    return AnnotatedEnglishSentence(tuple(tokens), PredicateFeatures(**features))


def con(surface, role, particle=None, **kw) -> Constituent:
    return Constituent(surface, role, ParticleClass[particle] if particle else None, **kw)


def frame(constituents, stem, *, cls="LexicalVerb", tense="Present", context="General",
          surface=None, trailing=None, **kw) -> KoreanAffirmativeFrame:
    pred = KoreanPredicate(stem, cls, Tense[tense], surface=surface, **kw)
    return KoreanAffirmativeFrame(tuple(constituents), pred, context, trailing)
