"""Degeneracy word algebra against a monotone-map oracle.

A word (a_1 > ... > a_k) denotes s_{a_1} ... s_{a_k} (rightmost applied
first).  Contravariantly this is the monotone surjection
sig(a_k) o ... o sig(a_1), where sig(a) repeats the value a; faces
correspond to the coface injections.  The oracle composes these integer
functions pointwise and never touches the word algebra under test.
"""

import random

from spectralcat.simplicial import (
    compose_degeneracies,
    degeneracy_after,
    face_into_word,
    full_degeneracy,
    remove_letter,
    _admissible_words,
)


def sig(a):
    return lambda t: t if t <= a else t - 1


def delta(i):
    return lambda t: t if t < i else t + 1


def compose_fns(fs):
    """Apply the functions in list order (first entry first)."""

    def run(t):
        for f in fs:
            t = f(t)
        return t

    return run


def word_to_fn(word):
    # operator s_{a_1}..s_{a_k} corresponds to sig(a_k) o ... o sig(a_1),
    # i.e. sig(a_1) applied first
    return compose_fns([sig(a) for a in word])


def fn_table(f, n):
    return tuple(f(t) for t in range(n + 1))


def admissible(word):
    return all(word[i] > word[i + 1] for i in range(len(word) - 1))


def all_words(max_len, top):
    out = []
    for k in range(max_len + 1):
        out.extend(_admissible_words(k, top))
    return out


def test_degeneracy_after_matches_oracle():
    for word in all_words(3, 5):
        for i in range(len(word) + 3):
            got = degeneracy_after(word, i)
            assert admissible(got)
            n = len(got) + 5
            lhs = fn_table(compose_fns([sig(i), word_to_fn(word)]), n)
            rhs = fn_table(word_to_fn(got), n)
            assert lhs == rhs, (word, i, got)


def test_compose_degeneracies_matches_oracle():
    rng = random.Random(7)
    words = all_words(3, 4)
    for _ in range(300):
        w1 = rng.choice(words)
        w2 = rng.choice(words)
        got = compose_degeneracies(w1, w2)
        assert admissible(got)
        assert len(got) == len(w1) + len(w2)
        n = len(got) + 5
        lhs = fn_table(compose_fns([word_to_fn(w1), word_to_fn(w2)]), n)
        rhs = fn_table(word_to_fn(got), n)
        assert lhs == rhs, (w1, w2, got)


def test_face_into_word_matches_oracle():
    for word in all_words(3, 5):
        top_dim = len(word) + 3
        for i in range(top_dim + 1):
            w2, j = face_into_word(word, i)
            assert admissible(w2)
            n = top_dim + 3
            lhs = fn_table(compose_fns([delta(i), word_to_fn(word)]), n)
            if j is None:
                rhs = fn_table(word_to_fn(w2), n)
            else:
                rhs = fn_table(compose_fns([word_to_fn(w2), delta(j)]), n)
            assert lhs == rhs, (word, i, w2, j)


def test_remove_letter_round_trip():
    for word in all_words(4, 6):
        for ell in word:
            rest = remove_letter(word, ell)
            assert admissible(rest)
            assert degeneracy_after(rest, ell) == word


def test_full_degeneracy_is_unique_word_over_vertex():
    for d in range(5):
        assert _admissible_words(d, d) == [full_degeneracy(d)]


def test_admissible_word_count_is_binomial():
    import math

    for n in range(6):
        for m in range(n + 1):
            assert len(_admissible_words(n - m, n)) == math.comb(n, n - m)
