import math
from collections import Counter

import pytest

from ecwalk.curve import scalar_mul_naive
from ecwalk.dlp import verify_solution
from ecwalk.errors import FormatError, KeyOutOfRange
from ecwalk.keys import KeyPair, derive_public, keygen, sample_private


def test_keygen_postconditions(E17, big):
    for params in (E17, big):
        for seed in range(150):
            pair = keygen(params, seed)
            assert 1 <= pair.d <= params.n - 1
            assert derive_public(params, pair.d) == pair.Q
            assert verify_solution(params, pair.Q, pair.d)
            assert keygen(params, seed) == pair


def test_derive_public_examples(E17):
    c = E17.curve
    assert derive_public(E17, 1) == E17.G
    assert derive_public(E17, 18) == c.point(5, 16)
    assert derive_public(E17, 7) == c.point(0, 6) == scalar_mul_naive(c, 7, E17.G)
    for d in (0, 19, -1):
        with pytest.raises(KeyOutOfRange):
            derive_public(E17, d)


def test_derive_public_injective(E17):
    keys = [derive_public(E17, d) for d in range(1, 19)]
    assert len(set(keys)) == 18


def test_uniformity(E17):
    counts = Counter(sample_private(19, seed) for seed in range(19_000))
    assert set(counts) == set(range(1, 19))
    expected = 19_000 / 18
    sigma = math.sqrt(19_000 * (1 / 18) * (17 / 18))
    for d, k in counts.items():
        assert abs(k - expected) <= 5 * sigma, (d, k)


def test_file_forms(E17):
    pair = KeyPair(7, E17.curve.point(0, 6))
    assert pair.to_json() == '{"d":"7","q":["0","6"]}'
    assert pair.to_json(public_only=True) == '{"q":["0","6"]}'
    assert KeyPair.from_json(E17, pair.to_json()) == pair
    assert KeyPair.from_json(E17, '{"q":["0","6"]}') == KeyPair(None, pair.Q)
    with pytest.raises(FormatError):
        KeyPair.from_json(E17, '{"d":"7"}')
