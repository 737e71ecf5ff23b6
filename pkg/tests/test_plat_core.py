import pytest

from platcalc.braid import BraidWord, transport_to
from platcalc.errors import BridgeMismatch, ParseError
from platcalc.plat import (
    PlatLink,
    PlatTangle,
    components,
    matching_pairs,
    mirror,
    puncture_matching,
    union,
)


def T(b, text):
    return PlatTangle.from_tokens(b, text)


def test_tokens_roundtrip():
    w = BraidWord.from_tokens("s1 S2 s3", 4)
    assert w.letters == (1, -2, 3)
    assert w.tokens() == "s1 S2 s3"
    assert BraidWord.from_tokens("-", 4).letters == ()
    with pytest.raises(ParseError):
        BraidWord.from_tokens("s9", 4)
    with pytest.raises(ParseError):
        BraidWord.from_tokens("x1", 4)


def test_free_reduction_idempotent_never_grows():
    w = BraidWord(6, (1, 2, -2, -1, 3))
    r = w.free_reduce()
    assert r.letters == (3,)
    assert r.free_reduce() == r
    assert len(r) <= len(w)


def test_permutation():
    assert BraidWord(4, ()).permutation() == (1, 2, 3, 4)
    assert BraidWord(4, (2,)).permutation() == (1, 3, 2, 4)
    assert BraidWord(4, (1, 2)).permutation() == (3, 1, 2, 4)


def test_transport_to():
    g = transport_to(1, 4, 4)
    assert g.permutation()[0] == 4
    g2 = transport_to(3, 1, 4)
    assert g2.permutation()[2] == 1


def test_mirror_examples():
    t = T(1, "-")
    assert mirror(t) == t
    assert mirror(T(2, "s1")).word.letters == (-1,)
    assert mirror(T(2, "s1 s2")).word.letters == (-2, -1)
    u = T(2, "s1 S2 s3")
    assert mirror(mirror(u)) == u


def test_union_examples():
    t = T(2, "s1 s2 S3")
    self_union = union(t, t)
    assert self_union.word.letters == ()
    assert components(self_union) == 2
    with pytest.raises(BridgeMismatch):
        union(T(1, "-"), T(2, "-"))


def test_components_examples():
    assert components(PlatLink(3, BraidWord(6))) == 3
    assert components(PlatLink(2, BraidWord(4, (2,)))) == 1
    assert components(PlatLink(2, BraidWord(4, (2, 2)))) == 2


def test_puncture_matching_examples():
    assert matching_pairs(T(2, "-")) == [(1, 2), (3, 4)]
    assert matching_pairs(T(2, "s2")) == [(1, 3), (2, 4)]
    # mirror preserves the matching
    u = T(3, "s2 s4 S1")
    assert puncture_matching(mirror(u)) == puncture_matching(u)


def brute_force_matching(t):
    """Independent strand-following oracle."""
    n = 2 * t.bridge_count
    pos = {p: p for p in range(1, n + 1)}
    for g in t.word.letters:
        i = abs(g)
        for p in pos:
            if pos[p] == i:
                pos[p] = i + 1
            elif pos[p] == i + 1:
                pos[p] = i
    pairs = set()
    for k in range(t.bridge_count):
        pairs.add(frozenset((pos[2 * k + 1], pos[2 * k + 2])))
    return frozenset(pairs)


def test_matching_against_brute_force():
    import random

    rng = random.Random(7)
    for _ in range(50):
        b = rng.randint(1, 4)
        letters = tuple(rng.choice([1, -1]) * rng.randint(1, 2 * b - 1) for _ in range(rng.randint(0, 12)))
        t = PlatTangle(b, BraidWord(2 * b, letters))
        assert puncture_matching(t) == brute_force_matching(t)


def test_union_mutual_braiding_cancels():
    t = T(2, "s1 s2")
    u = T(2, "s3")
    g = BraidWord(4, (2, -1, 2))
    plain = union(t, u)
    braided = union(
        PlatTangle(2, t.word * g),
        PlatTangle(2, u.word * g),
    )
    assert braided.word.free_reduce() == plain.word.free_reduce()


def test_component_count_matches_matching_cycles():
    from platcalc.plat import cycles_of_matchings

    t = T(3, "s2 s3 S4")
    u = T(3, "s1 s5")
    link = union(t, u)
    cycles = cycles_of_matchings(puncture_matching(t), puncture_matching(u))
    assert components(link) == len(cycles)
