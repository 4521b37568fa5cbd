import math

import pytest

from permstat import asymptotics as asy


def test_lambda_and_tails():
    assert [asy.lam(d) for d in range(4)] == [0, 2, 6, 12]
    assert asy.limit_tail("breadth", 2) == 1.0
    assert asy.limit_tail("breadth", 0) == 1.0
    assert asy.limit_tail("breadth", 4) == math.exp(-6)
    assert asy.limit_tail("minjump", 1) == 1.0
    assert asy.limit_tail("minjump", 3) == math.exp(-4)
    with pytest.raises(ValueError):
        asy.lam(-1)
    with pytest.raises(ValueError):
        asy.limit_tail("width", 3)


def test_limit_law_object():
    law = asy.LimitLaw.of("minjump")
    assert law.tail(2) == math.exp(-2)
    assert law.pmf(1) == pytest.approx(1 - math.exp(-2))


@pytest.mark.parametrize("kind", asy.KINDS)
def test_pmf_sums_to_one(kind):
    lo = asy.floor_value(kind)
    assert math.fsum(asy.limit_pmf(kind, v) for v in range(lo, lo + 60)) == pytest.approx(1, abs=1e-15)


def test_predicted_row():
    counts = asy.predicted_counts(10**7, "breadth", 5)
    assert [round(counts[v]) for v in range(2, 6)] == [8646647, 1328565, 24726, 61]


def test_limit_moment_constants():
    assert abs(asy.limit_moment("breadth", 1) - 2.1378201816868795778) <= 1e-15
    assert abs(asy.limit_moment("minjump", 1) - 1.1565176427496656518) <= 1e-15
    assert abs(asy.limit_moment("minjump", 1) - 1 / (1 - math.exp(-2))) <= 1e-15
    assert asy.limit_moment("breadth", 0) == 1.0


@pytest.mark.parametrize("kind", asy.KINDS)
@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_moment_matches_direct_sum(kind, a):
    lo = asy.floor_value(kind)
    direct = math.fsum(v ** a * asy.limit_pmf(kind, v) for v in range(lo, 200))
    assert asy.limit_moment(kind, a) == pytest.approx(direct, rel=1e-13)


def test_minjump_second_moment_closed_form():
    # E[Z^2] = sum (2d+1) q^d = (1+q)/(1-q)^2 with q = e^-2
    q = math.exp(-2)
    assert asy.limit_moment("minjump", 2) == pytest.approx((1 + q) / (1 - q) ** 2, rel=1e-15)


def test_partial_sums_converge():
    full = asy.limit_moment("breadth", 2)
    errs = [abs(full - asy.limit_moment_partial("breadth", 2, k)) for k in range(7)]
    assert all(a >= b for a, b in zip(errs, errs[1:]))
    assert errs[-1] < 1e-12


@pytest.mark.parametrize("lmbda", [0.5, 2.0, 6.0])
def test_truncated_exp_brackets(lmbda):
    target = math.exp(-lmbda)
    for r in range(30):
        if asy.truncated_exp_remainder(lmbda, r) < 1e-13:
            break  # below float resolution the sign is noise
        value = asy.truncated_exp(lmbda, r)
        assert (value >= target) if r % 2 == 0 else (value <= target)
        assert abs(value - target) <= asy.truncated_exp_remainder(lmbda, r) * (1 + 1e-9) + 1e-15


def test_truncation_depth():
    assert asy.truncation_depth(1, 2**10) == 100
    assert asy.truncation_depth(3, 4) == 108


def test_stirling_numbers():
    assert [asy.stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert asy.stirling2(0, 0) == 1
    for a in range(1, 10):
        # sum_k S(a,k) = Bell(a)
        bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147]
        assert sum(asy.stirling2(a, k) for k in range(a + 1)) == bell[a]
    with pytest.raises(ValueError):
        asy.stirling2(2, 3)


@pytest.mark.parametrize("a", range(7))
@pytest.mark.parametrize("x", [-2.0, -1.0, 0.5, 1.0, 3.0])
def test_exp_polynomials(a, x):
    b = asy.exp_polynomial(a)
    partial = math.fsum(m ** a * x ** m / math.factorial(m) for m in range(61))
    assert abs(b(x) * math.exp(x) - partial) <= 1e-9
    assert b.degree == a
