import pytest

from ecwalk.curve import INFINITY, AffinePoint, CurveParams, enumerate_points, scalar_mul
from ecwalk.errors import (
    CapExceeded,
    CofactorMismatch,
    CompositeOrder,
    NoPrimeOrderSubgroup,
    OffCurveGenerator,
    ParamsViolation,
    WrongOrder,
)
from ecwalk.field import is_prime
from ecwalk.params import (
    DomainParams,
    build_domain_params,
    check_params,
    count_points,
    curve_search,
    in_hasse_interval,
    point_order,
    random_point,
    validate_params,
)


def count_by_pairs(p, a, b):
    """Independent brute force: every (x, y) pair, plus the identity."""
    return 1 + sum(1 for x in range(p) for y in range(p) if (y * y - x**3 - a * x - b) % p == 0)


def test_count_examples(e17, f5):
    assert count_points(e17) == 19
    assert count_points(f5) == 9


@pytest.mark.parametrize("p", [q for q in range(5, 102) if is_prime(q)])
def test_count_matches_pair_enumeration(p):
    for a, b in [(1, 1), (2, 3), (0, 7), (p - 1, 1), (5, 0)]:
        c = CurveParams.of(p, a, b)
        if c.discriminant_term().value == 0:
            continue
        N = count_points(c)
        assert N == count_by_pairs(p, a % p, b % p)
        assert in_hasse_interval(N, p)


def test_count_cap(e17):
    with pytest.raises(CapExceeded):
        count_points(e17, cap=16)


def test_point_order(e17, f5):
    assert point_order(e17, e17.point(5, 1)) == 19
    assert point_order(e17, INFINITY) == 1
    for P in enumerate_points(f5):
        assert point_order(f5, P) in {1, 3, 9}
        assert 9 % point_order(f5, P) == 0
    with pytest.raises(CapExceeded):
        point_order(e17, e17.point(5, 1), cap=10)


def test_point_order_brute_force(big):
    c = big.curve
    N = big.n * big.h
    for k in (1, 2, 3, 1234):
        P = scalar_mul(c, k, big.G)
        m = point_order(c, P)
        assert scalar_mul(c, m, P) is INFINITY
        assert N % m == 0


def test_build_e17(e17):
    d = build_domain_params(e17)
    assert (d.n, d.h) == (19, 1)
    # h = 1: the first point by ascending x, smaller y
    assert d.G == e17.point(0, 6)
    assert build_domain_params(e17, seed=99) == d
    validate_params(d)


def test_build_f5(f5):
    d = build_domain_params(f5)
    assert (d.n, d.h) == (3, 3)
    assert point_order(f5, d.G) == 3
    validate_params(d)


def test_no_prime_order_subgroup():
    # an order that is a power of two leaves no prime factor >= 3
    for a in range(7):
        for b in range(7):
            c = CurveParams.of(7, a, b)
            if c.discriminant_term().value == 0:
                continue
            N = count_points(c)
            if N & (N - 1) == 0:
                with pytest.raises(NoPrimeOrderSubgroup):
                    build_domain_params(c)
                return
    pytest.fail("no curve over F_7 with a power-of-two order")


def test_validate_e17(E17):
    assert validate_params(E17) is E17


def test_validate_composite_order(E17):
    bad = DomainParams(E17.curve, E17.G, 18, 1)
    with pytest.raises(CompositeOrder) as info:
        validate_params(bad)
    kinds = {type(v) for v in info.value.violations}
    assert {CompositeOrder, WrongOrder} <= kinds


def test_validate_off_curve(E17):
    bad = DomainParams(E17.curve, AffinePoint(E17.curve.p(5), E17.curve.p(2)), 19, 1)
    with pytest.raises(OffCurveGenerator):
        validate_params(bad)
    with pytest.raises(OffCurveGenerator):
        validate_params(DomainParams(E17.curve, INFINITY, 19, 1))


def test_validate_cofactor(E17):
    with pytest.raises(CofactorMismatch):
        validate_params(DomainParams(E17.curve, E17.G, 19, 2))
    assert check_params(E17) == []


def test_violations_are_params_violations(E17):
    with pytest.raises(ParamsViolation):
        validate_params(DomainParams(E17.curve, E17.G, 23, 1))


def test_file_round_trip(E17):
    text = E17.to_json()
    assert text == '{"p":"17","a":"2","b":"2","g":["5","1"],"n":"19","h":"1"}'
    assert DomainParams.from_json(text) == E17


def test_file_off_curve_generator():
    with pytest.raises(OffCurveGenerator):
        DomainParams.from_json('{"p":"17","a":"2","b":"2","g":["5","2"],"n":"19","h":"1"}')


def test_random_point(e17):
    affine = {P.coords() for P in enumerate_points(e17)[1:]}
    for seed in range(200):
        P = random_point(e17, seed)
        assert P.coords() in affine
        assert random_point(e17, seed) == P


def test_curve_search_small():
    found = curve_search(17, 17, True)
    assert len(found) == 1 and found[0].p == 17 and is_prime(found[0].n) and found[0].h == 1
    f5 = curve_search(5, 5, True)
    assert [d.p for d in f5] == [5]
    assert is_prime(f5[0].n * f5[0].h)
    assert curve_search(17, 17, True) == found


def test_curve_search_range():
    found = curve_search(5, 200, False)
    assert [d.p for d in found] == [p for p in range(5, 201) if is_prime(p)]
    for d in found:
        validate_params(d)
        assert point_order(d.curve, d.G) == d.n
        assert scalar_mul(d.curve, d.n, d.G) is INFINITY
        assert in_hasse_interval(d.n * d.h, d.p)
    assert curve_search(5, 200, False, workers=4) == found


def test_curve_search_cap():
    with pytest.raises(CapExceeded):
        curve_search(5, 100, cap=50)
