import pytest

from negtransfer.analyzer import analyze
from negtransfer.generator import realize
from negtransfer.hangul import ParticleClass, SuffixPattern, Tense, count_negation_morphemes
from negtransfer.pipeline import translate
from negtransfer.planner import AdverbInsert, FrameError, ParticleRewrite, TransformPlan, plan

from helpers import con, frame, sent


def test_never_been_there(lex):
    a = analyze(sent("He/PRON/S has/AUX/A never/ADV/A been/VERB/P there/ADV/D ./PUNCT/X",
                     aspect="Perfect"), lex)
    f = frame([con("그", "Subject", "Topic"), con("거기에", "Adverbial")], "가보",
              perfect=True, surface="가본적이 있다")
    out = realize(f, plan(a, f, lex))
    assert out.text == "그는 거기에 가본적이 전혀 없다."
    assert out.predicate == "가본적이 전혀 없다"


def test_get_up_early(lex):
    a = analyze(sent("He/PRON/S does/AUX/A n't/ADV/A get/VERB/P up/ADP/P early/ADV/D"), lex)
    f = frame([con("그", "Subject", "Topic"), con("아침 일찍", "Adverbial")], "일어나",
              surface="일어난다")
    assert realize(f, plan(a, f, lex)).text == "그는 아침 일찍 일어나지 않는다."


def test_passthrough_is_affirmative():
    f = frame([con("나", "Subject", "Topic"), con("그것", "Object", "Accusative")], "알",
              tense="Past", surface="알고있었다")
    out = realize(f)
    assert out.text == "나는 그것을 알고있었다."
    assert out.trace == ()


def test_copular_passthrough_joins_complement():
    f = frame([con("그 승리", "Subject", "Topic"), con("그야말로 기적", "PredicateComplement")],
              "이", cls="CopularNoun", tense="Past", surface="이였다")
    assert realize(f).text == "그 승리는 그야말로 기적이였다."


def test_missing_affirmative_surface():
    with pytest.raises(FrameError, match="surface"):
        realize(frame([con("나", "Subject", "Topic")], "먹"))


def test_rewrite_without_particle_slot():
    f = frame([con("거기에", "Adverbial")], "가")
    p = TransformPlan(SuffixPattern.JiAnta, Tense.Present,
                      particle_rewrites=(ParticleRewrite(0, ParticleClass.Additive),))
    with pytest.raises(FrameError, match="particle slot"):
        realize(f, p)


def test_attach_topic_and_prefix():
    f = frame([con("다시", "Adverbial"), con("지식", "Object", "Accusative")], "가지")
    p = TransformPlan(SuffixPattern.JiAnta, Tense.Present, particle_rewrites=(
        ParticleRewrite(0, ParticleClass.Topic, attach=True),
        ParticleRewrite(1, ParticleClass.Additive, prefix="그 어떤")))
    assert realize(f, p).text == "다시는 그 어떤 지식도 가지지 않는다."


def test_adverb_positions():
    f = frame([con("그", "Subject", "Topic"), con("학생들", "Object", "Accusative")], "가르치")
    p = TransformPlan(SuffixPattern.JiAnta, Tense.Past, adverb_inserts=(
        AdverbInsert("거의", "BeforeConstituent", 1), AdverbInsert("결코", "SentenceInitial")))
    assert realize(f, p).text == "결코 그는 거의 학생들을 가르치지 않았다."


def test_trace_has_one_entry_per_component(lex, gold_records):
    for rec in gold_records.values():
        out = translate(rec, lex)
        if out.plan is None:
            continue
        p = out.plan
        assert len(out.realized.trace) == 1 + len(p.particle_rewrites) + len(p.adverb_inserts)


def test_single_negation_morpheme_in_gold_predicates(lex, gold_records):
    for rec in gold_records.values():
        out = translate(rec, lex)
        expected = 1 if out.plan else 0
        assert count_negation_morphemes(out.realized.predicate) == expected, rec.id
