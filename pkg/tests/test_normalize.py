"""Normalization stages: golden examples, properties, idempotence."""

import random
import unicodedata

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ofansiv.lexicons import LexiconKind
from ofansiv.normalize import (
    STAGE_ORDER,
    MissingLexiconError,
    PipelineConfig,
    Stage,
    clean_misc,
    convert_emoji,
    convert_emoticons,
    normalize_letters,
    preprocess,
    reduce_repeats,
    segment_hashtags,
)
from tweetgen import random_tweet


# ---------------------------------------------------------------- golden

def test_emoji_description(lexicons):
    out = convert_emoji("🤨", lexicons[LexiconKind.EMOJI])
    assert out.strip() == "وجه يعجز مع لسان"


def test_emoji_inline(lexicons):
    out = convert_emoji("مرحبا😀بكم", lexicons[LexiconKind.EMOJI])
    assert out.split() == ["مرحبا", "وجه", "مبتسم", "بكم"]


def test_emoticon_replacement(lexicons):
    out = convert_emoticons("توقف :-X الان", lexicons[LexiconKind.EMOTICON])
    assert out == "توقف معقود اللسان الان"


def test_emoticon_requires_exact_token(lexicons):
    assert convert_emoticons("abc:-Xdef", lexicons[LexiconKind.EMOTICON]) == "abc:-Xdef"


def test_hashtag_segmentation():
    assert segment_hashtags("#الهلال_التعاون") == "الهلال التعاون"
    assert segment_hashtags("نتيجة #الهلال_التعاون اليوم") == "نتيجة الهلال التعاون اليوم"
    assert segment_hashtags("بدون وسم") == "بدون وسم"


def test_letter_normalization():
    assert normalize_letters("أإآ") == "ااا"
    assert normalize_letters("مدرسة") == "مدرسه"
    assert normalize_letters("مستشفى") == "مستشفي"


def test_repeat_reduction():
    assert reduce_repeats("coooool!!") == "cool!!"
    assert reduce_repeats("ههههههه") == "هه"
    assert reduce_repeats("اا") == "اا"


def test_clean_misc():
    assert clean_misc("@USER شكرا URL") == "شكرا"
    assert clean_misc("قبل <LF> بعد") == "قبل بعد"
    assert clean_misc("نص <b>وسم</b> اخر") == "نص وسم اخر"
    # digits, punctuation and tatweel go; letters and combining marks stay
    assert clean_misc("ربّي 123 !!") == "ربّي"
    assert clean_misc("ممـدود") == "ممدود"


def test_dialect_and_category_and_stopwords(lexicons, full_config):
    cfg_dialect = PipelineConfig.of([Stage.DIALECT_NORMALIZE], lexicons)
    assert preprocess("هذا زلمة طيب", cfg_dialect).text == "هذا ولد طيب"
    assert preprocess("هذا زول طيب", cfg_dialect).text == "هذا ولد طيب"

    cfg_animal = PipelineConfig.of([Stage.WORD_CATEGORIZE], lexicons)
    assert preprocess("يا كلب", cfg_animal).text == "يا حيوان"

    cfg_stop = PipelineConfig.of([Stage.STOPWORD_REMOVE], lexicons)
    out = preprocess("هو في البيت", cfg_stop).text
    assert "في" not in out.split()


def test_order_letter_normalize_feeds_repeat_reduce(lexicons):
    # three Alif variants only collapse into a repeat run after letter
    # normalization, so the pair of stages shrinks them to two
    cfg = PipelineConfig.of([Stage.LETTER_NORMALIZE, Stage.REPEAT_REDUCE], lexicons)
    assert preprocess("أاإ", cfg).text == "اا"
    cfg_rep = PipelineConfig.of([Stage.REPEAT_REDUCE], lexicons)
    assert preprocess("أاإ", cfg_rep).text == "أاإ"


def test_full_pipeline_example(full_config):
    out = preprocess("@USER يا كـلب 😠 #الهلال_التعاون URL", full_config).text
    assert "حيوان" in out.split()
    assert "غاضب" in out
    assert "@" not in out and "#" not in out and "URL" not in out


# ------------------------------------------------------------ properties

def test_nfc_applied_even_with_no_stages():
    cfg = PipelineConfig.none()
    decomposed = "أ"  # Alif + combining hamza above
    assert preprocess(decomposed, cfg).text == unicodedata.normalize("NFC", decomposed)


def test_whitespace_collapse():
    cfg = PipelineConfig.none()
    assert preprocess("  ا\t\nب   ج ", cfg).text == "ا ب ج"


def test_missing_lexicon_raises():
    cfg = PipelineConfig.of([Stage.EMOJI_CONVERT], {})
    with pytest.raises(MissingLexiconError):
        preprocess("🤨", cfg)


def test_repeat_reduce_leaves_no_long_runs():
    rng = random.Random(7)
    for _ in range(200):
        s = "".join(rng.choice("اب هx") for _ in range(rng.randint(0, 30)))
        out = reduce_repeats(s)
        for i in range(len(out) - 2):
            assert not (out[i] == out[i + 1] == out[i + 2])


@settings(max_examples=200, deadline=None)
@given(st.text(max_size=60))
def test_stage_functions_idempotent_on_arbitrary_text(s):
    assert reduce_repeats(reduce_repeats(s)) == reduce_repeats(s)
    assert normalize_letters(normalize_letters(s)) == normalize_letters(s)
    assert clean_misc(clean_misc(s)) == clean_misc(s)


def test_preprocess_idempotent_random_subsets(lexicons):
    rng = random.Random(3)
    subsets = [frozenset(), frozenset(STAGE_ORDER)]
    subsets += [frozenset(s for s in STAGE_ORDER if rng.random() < 0.5)
                for _ in range(30)]
    for stages in subsets:
        cfg = PipelineConfig.of(stages, lexicons) if stages else \
            PipelineConfig.none(lexicons)
        for _ in range(25):
            tweet = random_tweet(rng)
            once = preprocess(tweet, cfg).text
            assert preprocess(once, cfg).text == once, (stages, tweet)


def test_applied_stages_recorded(full_config):
    out = preprocess("ا", full_config)
    assert out.applied_stages == tuple(s.value for s in STAGE_ORDER)
