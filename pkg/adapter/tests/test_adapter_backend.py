import pytest

from tagger_adapter.backends import BuiltinBackend, load_backend
from tagger_adapter.errors import BackendUnavailable


@pytest.fixture
def backend():
    return BuiltinBackend()


def test_sentence_split_on_terminators(backend):
    sents = backend.segment("你好。世界！怎么样？")
    assert len(sents) == 3
    assert sents[0][-1] == "。"


def test_han_runs_cut_into_two_char_words(backend):
    [words] = backend.segment("一二三四")
    assert words == ["一二", "三四"]
    [words] = backend.segment("一二三四五")
    assert words == ["一二", "三四五"]  # odd trailing char joins the last word
    [words] = backend.segment("一")
    assert words == ["一"]


def test_latin_and_digit_tokens_stay_whole(backend):
    [words] = backend.segment("使用GDP和3.14计算。")
    assert "GDP" in words
    assert "3.14" in words


def test_pos_tags_within_declared_inventory(backend):
    inv = backend.inventory()
    sents = backend.segment("今天天气很好，GDP增长7％。")
    for tags in backend.pos_tag(sents):
        assert all(t in inv.pos for t in tags)


def test_pos_is_deterministic(backend):
    sents = backend.segment("今天天气很好。")
    assert backend.pos_tag(sents) == BuiltinBackend().pos_tag(sents)


def test_parse_is_single_rooted_chain(backend):
    sents = backend.segment("今天天气很好，非常好。")
    for arcs in backend.dep_parse(sents):
        heads = [h for h, _ in arcs]
        assert heads[0] == 0
        assert all(h == i - 1 for i, h in enumerate(heads[1:], 2))
        assert arcs[0][1] == "HED"


def test_punctuation_tokens_get_wp(backend):
    [words] = backend.segment("你好，世界。")
    [tags] = backend.pos_tag([words])
    assert tags[words.index("，")] == "wp"
    assert tags[words.index("。")] == "wp"


def test_unknown_backend_raises():
    with pytest.raises(BackendUnavailable, match="unknown backend"):
        load_backend("nope", "x")


def test_load_builtin_backend():
    b = load_backend("builtin", "default")
    assert b.backend_id == "builtin"
    assert b.model_id == "default"
