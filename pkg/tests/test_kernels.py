import os
import random
import subprocess
import sys

import pytest

from ecwalk import _kernels
from ecwalk._kernels import _pykernels
from ecwalk.curve import scalar_mul
from ecwalk.params import curve_search

backends = _kernels.available_backends()
compiled = backends.get("cython")
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


@pytest.fixture(scope="module")
def suite():
    return curve_search(5, 400, want_prime_order=False) + curve_search(65521, 65521, True)


def test_selected_backend():
    assert _kernels.BACKEND in backends


@pytest.mark.parametrize("name", sorted(backends))
def test_count_points_backends(name):
    kernel = backends[name]
    assert kernel.count_points(17, 2, 2) == 19
    assert kernel.count_points(5, 1, 1) == 9


@needs_compiled
def test_backends_agree_on_counts():
    rng = random.Random(7)
    for p in (5, 7, 101, 10007, 65537, 1000003):
        for _ in range(4):
            a, b = rng.randrange(p), rng.randrange(p)
            assert compiled.count_points(p, a, b) == _pykernels.count_points(p, a, b)


@needs_compiled
def test_backends_agree_on_walks(suite):
    rng = random.Random(11)
    for params in suite:
        gx, gy = params.G.coords()
        for _ in range(5):
            d = rng.randrange(1, params.n)
            target = scalar_mul(params.curve, d, params.G).coords()
            args = (params.p, params.a, gx, gy, target, params.n - 1)
            assert compiled.walk(*args) == _pykernels.walk(*args) == d - 1
        # identity target: the walk runs to n*G
        args = (params.p, params.a, gx, gy, None, params.n)
        assert compiled.walk(*args) == _pykernels.walk(*args) == params.n - 1
        # limit reached first
        args = (params.p, params.a, gx, gy, None, params.n - 2)
        assert compiled.walk(*args) == _pykernels.walk(*args) == -1


@needs_compiled
def test_backends_agree_outside_subgroup():
    # the order-9 points of y^2 = x^3 + x + 1 over F_5, walked from G = (2, 1)
    for x, y in [(0, 1), (0, 4), (3, 1), (3, 4), (4, 2), (4, 3)]:
        args = (5, 1, 2, 1, (x, y), 2)
        assert compiled.walk(*args) == _pykernels.walk(*args) == -1


@needs_compiled
def test_compiled_range_guard():
    with pytest.raises(OverflowError):
        compiled.count_points(2**31 + 11, 1, 1)


def test_large_modulus_falls_back():
    # beyond the compiled word size the dispatcher must route to Python
    p = 2**61 - 1
    assert _kernels._for(p) is _pykernels


def test_pure_python_forced():
    env = dict(os.environ, ECWALK_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import ecwalk; print(ecwalk.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
