import random

import pytest

from knotalg.errors import ParseError, RankMismatch
from knotalg.solvable import (
    FreeWord,
    TowerElement,
    commutator,
    derived_depth,
    derived_witness,
    in_derived,
    parse_word,
    tower_image,
)
from oracles import all_words, fox_vanishes_over, in_second_derived

a = FreeWord.gen(2, 1)
b = FreeWord.gen(2, 2)


def random_word(rng, rank=2, max_len=12):
    return FreeWord(rank, tuple((rng.randint(1, rank), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len))))


def random_commutator_tree(rng, depth, rank=2):
    if depth == 0:
        return random_word(rng, rank, 4)
    return commutator(random_commutator_tree(rng, depth - 1, rank), random_commutator_tree(rng, depth - 1, rank))


def test_word_ops_examples():
    assert commutator(a, a).is_identity()
    assert (a * a.inverse()).is_identity()
    ab = commutator(a, b)
    assert len(ab) == 4 and str(ab) == "A B a b"
    with pytest.raises(RankMismatch):
        a * FreeWord.gen(3, 1)


def test_parse_word():
    assert parse_word("[a,b]") == commutator(a, b)
    assert parse_word("a b A B") == a * b * a.inverse() * b.inverse()
    assert parse_word("a^3 B") == a ** 3 * b.inverse()
    assert parse_word("(a b)^-2") == (a * b) ** -2
    assert parse_word("[[a,b],A [a,b] a]") == commutator(commutator(a, b), commutator(a, b).conj(a))
    assert parse_word("1").is_identity()
    assert parse_word("c", rank=4).rank == 4
    with pytest.raises(RankMismatch):
        parse_word("c", rank=2)
    with pytest.raises(ParseError):
        parse_word("[a,b")


def test_word_text_round_trip():
    rng = random.Random(1)
    for _ in range(100):
        w = random_word(rng, 3)
        assert parse_word(str(w), rank=3) == w


def test_tower_examples():
    assert tower_image(a, 0) == TowerElement.generator(2, 1, 0)
    assert tower_image(a, 0).serialize() == [1, 0]
    assert tower_image(commutator(a, b), 0).is_identity()
    assert tower_image(FreeWord.identity(2), 3).is_identity()


def test_in_derived_examples():
    ab = commutator(a, b)
    assert not in_derived(a, 1)
    assert in_derived(ab, 1) and not in_derived(ab, 2)
    w2 = commutator(ab, ab.conj(a))
    assert in_derived(w2, 2) and not in_derived(w2, 3)


def test_level_one_matches_fox_calculus():
    # every word of length <= 6 in F_2, plus longer commutator words
    for letters in all_words(2, 6):
        w = FreeWord(2, letters)
        assert in_derived(w, 2) == in_second_derived(w.letters, 2)
    rng = random.Random(2)
    for _ in range(300):
        w = random_commutator_tree(rng, rng.randint(1, 2), rng.choice((2, 3)))
        if rng.random() < 0.5:
            w = w * random_commutator_tree(rng, 1, w.rank)
        assert in_derived(w, 2) == in_second_derived(w.letters, w.rank)


@pytest.mark.parametrize("level", [0, 1, 2])
def test_homomorphism(level):
    rng = random.Random(level)
    for _ in range(150):
        w, v = random_word(rng), random_word(rng)
        assert tower_image(w * v, level) == tower_image(w, level) * tower_image(v, level)
        assert tower_image(w.inverse(), level) == tower_image(w, level).inverse()


def test_nesting_and_normality():
    rng = random.Random(9)
    for _ in range(200):
        w = random_commutator_tree(rng, rng.randint(0, 2))
        g = random_word(rng, 2, 6)
        for n in range(4):
            if in_derived(w, n + 1):
                assert in_derived(w, n)
            if in_derived(w, n):
                assert in_derived(w.conj(g), n)


def test_commutator_depth():
    rng = random.Random(10)
    for _ in range(60):
        u = random_commutator_tree(rng, rng.randint(0, 2))
        v = random_commutator_tree(rng, rng.randint(0, 2))
        du, dv = derived_depth(u, 3), derived_depth(v, 3)
        assert derived_depth(commutator(u, v), 4) >= 1 + min(du, dv)


def test_identity_in_every_term():
    e = FreeWord.identity(3)
    assert all(in_derived(e, n) for n in range(6))


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_witnesses(n):
    w = derived_witness(2, n)
    assert in_derived(w, n) and not in_derived(w, n + 1)
    if n == 0:
        assert w == a
    if n == 1:
        assert w == commutator(a, b)


def test_witness_higher_rank():
    w = derived_witness(4, 2)
    assert w.rank == 4
    assert in_derived(w, 2) and not in_derived(w, 3)


def test_level_three_witness_against_fox_criterion():
    # w in F'' (checked via level 1); then w in F''' iff its Fox derivatives vanish in Z[F/F'']
    def image(g, e):
        x = TowerElement.generator(2, g, 1)
        return x if e > 0 else x.inverse()

    identity = TowerElement.identity(2, 1)
    w2 = derived_witness(2, 2)
    w3 = derived_witness(2, 3)
    assert in_second_derived(w2.letters, 2) and in_second_derived(w3.letters, 2)
    assert not fox_vanishes_over(w2.letters, 2, image, identity)
    assert fox_vanishes_over(w3.letters, 2, image, identity)
    assert fox_vanishes_over(commutator(w2, w2.conj(b)).letters, 2, image, identity)

    # one level up: w3 is not in F^(4) because its derivatives survive in Z[F/F''']
    def image2(g, e):
        x = TowerElement.generator(2, g, 2)
        return x if e > 0 else x.inverse()

    assert not fox_vanishes_over(w3.letters, 2, image2, TowerElement.identity(2, 2))
