import random

import pytest

from wknots.freegroup import word_from_text, aut_apply
from wknots.wbraid import (BraidWord, word, braid_from_text, braid_action,
                           braid_skeleton, braid_equal, braid_distinct,
                           braid_invert, braid_delete_strand,
                           braid_clone_strand, relation_table)
from wknots.checks import random_braid


def test_braid_text_round_trip():
    for text in ("n=2", "n=3\ns1 S2 v1", "n=4 extended\nf1 s3 v2 S1"):
        b = braid_from_text(text)
        assert braid_from_text(b.to_text()) == b


def test_braid_validation():
    with pytest.raises(ValueError):
        word(2, "s2")
    with pytest.raises(ValueError):
        word(3, "f1")  # flips need the extended flag


def test_generator_action_pinned():
    act = braid_action(word(2, "s1"))
    assert aut_apply(act, word_from_text("x1")) == word_from_text("x2")
    assert aut_apply(act, word_from_text("x2")) == \
        word_from_text("x2^-1 x1 x2")
    vact = braid_action(word(2, "v1"))
    assert aut_apply(vact, word_from_text("x1")) == word_from_text("x2")
    assert aut_apply(vact, word_from_text("x2")) == word_from_text("x1")


def test_action_respects_relations():
    for n in (2, 3, 4):
        for name, lhs, rhs in relation_table(n, extended=True):
            assert braid_action(lhs) == braid_action(rhs), name


def test_word_problem_basics():
    a = word(3, "s1 s2 s1")
    b = word(3, "s2 s1 s2")
    assert braid_equal(a, b)
    assert braid_equal(word(3, "s1 S1 v2 v2"), word(3, ""))
    assert not braid_equal(word(3, "s1"), word(3, "s2"))
    assert not braid_equal(word(2, "s1"), word(2, "S1"))
    # overcrossings commute
    assert braid_equal(word(3, "s1 s2 v1"), word(3, "v2 s1 s2"))


def test_undercrossings_commute_fails():
    # the UC counterpart of the OC relation is not a w-braid relation
    lhs = word(3, "v1 s2 s1")
    rhs = word(3, "s2 s1 v2")
    assert braid_action(lhs) != braid_action(rhs)
    assert braid_distinct(lhs, rhs)


def test_v_group_refused():
    a = word(3, "s1")
    av = BraidWord(a.n, a.letters, group="v")
    with pytest.raises(ValueError):
        braid_equal(av, av)


def test_braid_invert():
    rng = random.Random(9)
    for _ in range(30):
        b = random_braid(rng, 4, 6)
        assert braid_equal(b * braid_invert(b), word(4, ""))


def test_skeleton():
    assert braid_skeleton(word(3, "s1 s2")) == (3, 1, 2)
    assert braid_skeleton(word(2, "s1 s1")) == (1, 2)


def test_delete_strand_compatible_with_action():
    """Deleting strand k commutes with the action: kill the deleted
    generator on each side and renumber."""
    from wknots.freegroup import FreeAut, word_reduce

    def project(w, kill, n):
        out = []
        for i, s in w:
            if i == kill:
                continue
            out.append((i - 1 if i > kill else i, s))
        return word_reduce(out, n - 1)

    rng = random.Random(10)
    for _ in range(150):
        n = rng.randrange(2, 5)
        b = random_braid(rng, n, rng.randrange(0, 7))
        k = rng.randrange(1, n + 1)
        pi = braid_skeleton(b)
        small = braid_delete_strand(b, k)
        act, sact = braid_action(b), braid_action(small)
        for j in range(1, n + 1):
            if j == k:
                continue
            jj = j - 1 if j > k else j
            lhs = aut_apply(sact, ((jj, 1),))
            rhs = project(aut_apply(act, ((j, 1),)), pi[k - 1], n)
            assert lhs == rhs


def test_clone_strand_compatible_with_action():
    """Cloning strand k commutes with the action after the doubling
    substitution on both sides."""
    from wknots.freegroup import word_reduce

    def double(w, k, n):
        out = []
        for i, s in w:
            i2 = i + 1 if i > k else i
            if i == k:
                if s > 0:
                    out.extend([(k, 1), (k + 1, 1)])
                else:
                    out.extend([(k + 1, -1), (k, -1)])
            else:
                out.append((i2, s))
        return word_reduce(out, n + 1)

    rng = random.Random(11)
    for _ in range(150):
        n = rng.randrange(2, 5)
        b = random_braid(rng, n, rng.randrange(0, 7))
        k = rng.randrange(1, n + 1)
        pi = braid_skeleton(b)
        big = braid_clone_strand(b, k)
        act, bact = braid_action(b), braid_action(big)
        # source doubling then big action equals action then target doubling
        for j in range(1, n + 1):
            src = double(((j, 1),), k, n)
            lhs = aut_apply(bact, src)
            rhs = double(aut_apply(act, ((j, 1),)), pi[k - 1], n)
            assert lhs == rhs
