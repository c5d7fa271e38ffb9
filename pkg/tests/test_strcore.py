import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from editdistort.errors import InputError
from editdistort.strcore import (
    Alphabet,
    SymbolString,
    edit_distance,
    edit_distance_oracle,
    levenshtein,
)

binary = st.text(alphabet="ab", max_size=7)
short = st.text(alphabet="abc", max_size=12)


def test_alphabet_invariants():
    a = Alphabet(tuple("ACGT"))
    assert a.size == 4 and a.bit_width == 2
    assert Alphabet(("x",)).bit_width == 1
    assert Alphabet(tuple("ABCDE")).bit_width == 3
    assert Alphabet(tuple(range(20))).bit_width == 5
    with pytest.raises(InputError):
        Alphabet(())
    with pytest.raises(InputError):
        Alphabet(tuple("AA"))


def test_symbol_string_encoding(dna):
    s = dna.encode("GATTACA")
    assert s.data == (2, 0, 3, 3, 0, 1, 0)
    assert s.text == "GATTACA" and len(s) == 7
    assert s[1:3].text == "AT"
    assert len(dna.encode("")) == 0
    with pytest.raises(InputError):
        dna.encode("ACGU")
    with pytest.raises(InputError):
        SymbolString(dna, (4,))


@pytest.mark.parametrize(
    "x, y, d",
    [("", "abc", 3), ("abcdefgh", "efghabcd", 8), ("kitten", "sitting", 3), ("abc", "abc", 0)],
)
def test_edit_distance_examples(x, y, d):
    assert edit_distance(x, y) == d


def test_kitten_matches_oracle():
    # frozen from the naive recursion
    assert edit_distance_oracle("kitten", "sitting") == 3


@pytest.mark.parametrize("x, y, d", [("a", "a", 0), ("ab", "ba", 2), ("abc", "", 3)])
def test_oracle_examples(x, y, d):
    assert edit_distance_oracle(x, y) == d


def test_oracle_length_cap():
    with pytest.raises(InputError):
        edit_distance_oracle("a" * 11, "a")


def test_alphabet_mismatch():
    x = SymbolString.from_text("AC", Alphabet(tuple("ACGT")))
    y = SymbolString.from_text("AC", Alphabet(tuple("AC")))
    with pytest.raises(InputError):
        edit_distance(x, y)
    with pytest.raises(InputError):
        edit_distance(x, "AC")


def test_exhaustive_binary_equivalence():
    words = ["".join(w) for n in range(5) for w in itertools.product("ab", repeat=n)]
    assert len(words) == 31
    for x in words:
        for y in words:
            assert edit_distance(x, y) == edit_distance_oracle(x, y), (x, y)


def test_symbolstring_and_plain_agree(dna):
    x, y = "GATTACA", "GCATGCT"
    assert edit_distance(dna.encode(x), dna.encode(y)) == edit_distance(x, y) == 4


def test_levenshtein_hashable_symbols():
    a = [("ab",), ("c",), ("ab",)]
    b = [("ab",), ("ab",)]
    assert levenshtein(a, b) == 1


@given(binary, binary)
def test_matches_oracle_random(x, y):
    assert edit_distance(x, y) == edit_distance_oracle(x, y)


@settings(max_examples=300)
@given(short, short, short)
def test_metric_axioms(x, y, z):
    dxy, dyz, dxz = edit_distance(x, y), edit_distance(y, z), edit_distance(x, z)
    assert dxy == edit_distance(y, x)
    assert (dxy == 0) == (x == y)
    assert dxz <= dxy + dyz


@given(short, short)
def test_length_bounds(x, y):
    d = edit_distance(x, y)
    assert abs(len(x) - len(y)) <= d <= max(len(x), len(y))
