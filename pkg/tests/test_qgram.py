import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from editdistort.approx import QGramParams, baryossef_distance, qgram_profile, sokolov_distance
from editdistort.errors import InputError

text = st.text(alphabet="abcd", min_size=1, max_size=30)


def test_profile_examples():
    p = qgram_profile("abcdefgh", 2)
    assert p.counts == {tuple(g): 1 for g in ["ab", "bc", "cd", "de", "ef", "fg", "gh"]}
    assert qgram_profile("aaaa", 2).counts == {("a", "a"): 3}
    assert qgram_profile("ab", 3).counts == {}


@given(text, st.integers(1, 6))
def test_profile_total(x, q):
    assert qgram_profile(x, q).total() == max(0, len(x) - q + 1)


@pytest.mark.parametrize("x, y, q, d", [
    ("abcdefgh", "efghabcd", 2, 2),
    ("aaaa", "aaab", 2, 2),
    ("abcabc", "abcabc", 4, 0),
])
def test_baryossef_examples(x, y, q, d):
    assert baryossef_distance(x, y, QGramParams(q)) == d


def test_sokolov_examples():
    assert sokolov_distance("ab", "ba", QGramParams(2)) == 3.0
    assert sokolov_distance("abcd", "abcd", QGramParams(4)) == 0
    with pytest.raises(InputError):
        sokolov_distance("ab", "abc")


def test_params_validation():
    with pytest.raises(InputError):
        QGramParams(0)


@given(text, text, st.integers(1, 5))
def test_symmetry(x, y, q):
    p = QGramParams(q)
    assert baryossef_distance(x, y, p) == baryossef_distance(y, x, p)
    if len(x) == len(y):
        assert sokolov_distance(x, y, p) == sokolov_distance(y, x, p)


def test_single_substitution_sensitivity():
    rng = random.Random(3)
    for _ in range(300):
        n, q = rng.randint(1, 40), rng.randint(1, 6)
        x = [rng.choice("abcd") for _ in range(n)]
        y = list(x)
        y[rng.randrange(n)] = rng.choice("abcd")
        assert baryossef_distance(x, y, QGramParams(q)) <= 2 * q
