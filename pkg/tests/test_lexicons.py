import shutil

import pytest

from negtransfer.hangul import SuffixPattern
from negtransfer.lexicons import LexiconError, RuleLexicons, WordPos, default_lexicon_dir


def test_negative_word_inventory(lex):
    by_pos = {pos: {e.surface for e in lex.negatives if e.pos is pos} for pos in WordPos}
    assert by_pos[WordPos.Adverb] == {"not", "never", "hardly", "little", "nowhere", "nothing", "none"}
    assert by_pos[WordPos.Pronoun] == {"no one", "nobody", "nothing", "none", "little"}
    assert by_pos[WordPos.Determiner] == {"no", "few", "little"}
    assert len(lex.negatives) == 15


def test_lookup_negative_examples(lex):
    e = lex.lookup_negative(["no", "one", "could"])
    assert (e.surface, e.pos) == ("no one", WordPos.Pronoun)
    e = lex.lookup_negative(["never", "been"])
    assert (e.surface, e.pos) == ("never", WordPos.Adverb)
    assert lex.related_adverb(e, "Predicate") == "전혀"
    assert lex.lookup_negative(["some", "food"]) is None


def test_lookup_is_longest_match(lex):
    assert lex.lookup_negative(["No", "one"], WordPos.Determiner).surface == "no one"
    assert lex.lookup_negative(["no", "food"]).pos is WordPos.Determiner


def test_lookup_pos_hint_and_contractions(lex):
    assert lex.lookup_negative(["nothing"], WordPos.Adverb).pos is WordPos.Adverb
    assert lex.lookup_negative(["nothing"]).pos is WordPos.Pronoun
    assert lex.lookup_negative(["n't"]).surface == "not"


def test_quasi_flags(lex):
    quasi = {(e.surface, e.pos) for e in lex.negatives if e.quasi}
    assert quasi == {("few", WordPos.Determiner), ("little", WordPos.Determiner),
                     ("little", WordPos.Pronoun)}


def test_match_idiom(lex):
    toks = "He just stopped working for no reason .".split()
    idiom, start = lex.match_idiom(toks, toks.index("no"))
    assert (idiom.text, idiom.effect, start) == ("for no reason", "NonNegative", 4)
    toks = "The victory was nothing less than a miracle .".split()
    idiom, _ = lex.match_idiom(toks, toks.index("nothing"))
    assert idiom.effect == "NonNegative" and "nothing less than" in idiom.text
    toks = "We said nothing about her .".split()
    assert lex.match_idiom(toks, toks.index("nothing")) is None


def test_match_idiom_collapse(lex):
    toks = "Their effort accomplished little or nothing .".split()
    idiom, start = lex.match_idiom(toks, 3)
    assert (idiom.effect, idiom.adverb, start) == ("Collapse", "거의", 3)
    assert lex.match_idiom(toks, 5)[1] == 3


def test_every_idiom_contains_a_negative_word(lex):
    singles = {e.surface for e in lex.negatives}
    for idiom in lex.idioms:
        assert any(alts & singles for alts in idiom.pattern)


@pytest.mark.parametrize("stem,cls", [("달성하", "Motada"), ("일어나", "Anta"), ("먹", "Anta")])
def test_collocation_class(lex, stem, cls):
    assert lex.collocation_class(stem) == cls


def test_suppletive_form(lex):
    assert lex.suppletive_form("알", "Knowledge").replacement == "모르다"
    assert lex.suppletive_form("있", "Possession").replacement == "없다"
    assert lex.suppletive_form("일어나", "General") is None
    assert lex.suppletive_form("알", "General") is None


def test_suppletives_never_carry_a_suffix(lex):
    for pair in lex.suppletives.values():
        assert not any(m in pair.replacement for m in ("지 않", "지 못", "이 아니"))


@pytest.mark.parametrize("surface,pos,scope,expected", [
    ("never", WordPos.Adverb, "Predicate", "전혀"),
    ("little", WordPos.Determiner, "Object", "거의"),
    ("not", WordPos.Adverb, "Predicate", None),
    ("nowhere", WordPos.Adverb, "Adverbial", "아무데도"),
    ("nowhere", WordPos.Adverb, "Object", None),
    ("hardly", WordPos.Adverb, "Predicate", "거의나"),
])
def test_related_adverb(lex, surface, pos, scope, expected):
    entry = lex.lookup_negative([surface], pos)
    assert lex.related_adverb(entry, scope) == expected


def test_hardly_override(lex):
    assert lex.lookup_negative(["hardly"]).override is SuffixPattern.SuEopda


def test_triggers(lex):
    toks = "It is not always true".split()
    assert lex.find_trigger(toks, 3).text == "always"
    toks = "none the worse".split()
    assert lex.find_trigger(toks, 0).cls == "degree"
    assert lex.find_trigger(["sometimes"], 0) is None


@pytest.fixture
def lexdir(tmp_path):
    d = tmp_path / "lex"
    shutil.copytree(default_lexicon_dir(), d, ignore=shutil.ignore_patterns("corpus"))
    return d


def test_missing_file_is_reported(lexdir):
    (lexdir / "idioms.tsv").unlink()
    with pytest.raises(LexiconError, match="idioms.tsv"):
        RuleLexicons.load(lexdir)


def test_idiom_without_negative_is_rejected(lexdir):
    with open(lexdir / "idioms.tsv", "a", encoding="utf-8") as fh:
        fh.write("at any rate\tNonNegative\t-\n")
    with pytest.raises(LexiconError, match="no negative word"):
        RuleLexicons.load(lexdir)


def test_duplicate_entry_is_rejected(lexdir):
    with open(lexdir / "negatives.tsv", "a", encoding="utf-8") as fh:
        fh.write("never\tAdverb\t-\tno\t-\t-\n")
    with pytest.raises(LexiconError, match="duplicate"):
        RuleLexicons.load(lexdir)


def test_lexicons_are_extensible(lexdir):
    with open(lexdir / "collocations.tsv", "a", encoding="utf-8") as fh:
        fh.write("이해하\tMotada\n")
    assert RuleLexicons.load(lexdir).collocation_class("이해하") == "Motada"
