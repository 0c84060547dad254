import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import stats

from rtstdma.degree_dist import (
    DegreeDistribution,
    mean_degree,
    parse_distribution,
    sample_degree,
    sample_degrees,
    validate,
)
from rtstdma.exceptions import DistributionError


def test_paper_law_validates(paper_dist):
    assert validate(DegreeDistribution([(2, 0.5), (3, 0.28), (8, 0.22)])) is not None
    assert paper_dist.entries == ((2, 0.5), (3, 0.28), (8, 0.22))


def test_single_degree_validates():
    validate(DegreeDistribution([(2, 1.0)]))


@pytest.mark.parametrize("entries, reason", [
    ([(2, 0.5), (3, 0.4)], "non-unit-mass"),
    ([(1, 0.5), (1, 0.5)], "duplicate-degree"),
    ([(9, 1.0)], "degree-out-of-range"),
    ([(0, 1.0)], "degree-out-of-range"),
    ([(2, 1.2), (3, -0.2)], "non-positive-probability"),
    ([(2, 1.0), (3, 0.0)], "non-positive-probability"),
    ([], "empty"),
])
def test_validate_rejects(entries, reason):
    with pytest.raises(DistributionError) as err:
        validate(DegreeDistribution(entries))
    assert err.value.reason == reason


def test_unit_mass_tolerance():
    validate(DegreeDistribution([(2, 0.5 + 5e-10), (3, 0.5)]))
    with pytest.raises(DistributionError):
        validate(DegreeDistribution([(2, 0.5 + 5e-9), (3, 0.5)]))


def test_max_degree_is_configurable():
    validate(DegreeDistribution([(12, 1.0)], max_degree=16))


def test_parse():
    d = parse_distribution("8:0.22, 2:0.5,3:0.28")
    assert d.entries == ((2, 0.5), (3, 0.28), (8, 0.22))
    assert str(d) == "2:0.5,3:0.28,8:0.22"
    with pytest.raises(DistributionError, match="non-unit-mass"):
        parse_distribution("2:0.6,3:0.6")
    with pytest.raises(DistributionError, match="syntax"):
        parse_distribution("2-0.5")


def test_mean_degree(paper_dist):
    assert mean_degree(DegreeDistribution([(2, 1.0)])) == 2.0
    assert mean_degree(paper_dist) == pytest.approx(2 * 0.5 + 3 * 0.28 + 8 * 0.22, abs=1e-12)
    assert mean_degree(paper_dist) == pytest.approx(3.60, abs=1e-12)


def test_single_support_sample():
    d = DegreeDistribution([(2, 1.0)])
    for seed in range(20):
        assert sample_degree(d, np.random.default_rng(seed)) == 2


def test_sampling_deterministic(paper_dist):
    a = sample_degrees(paper_dist, np.random.default_rng(7), 1000)
    b = sample_degrees(paper_dist, np.random.default_rng(7), 1000)
    assert np.array_equal(a, b)


def test_inverse_cdf_mapping(paper_dist):
    class Fixed:
        def __init__(self, u):
            self.u = np.asarray(u)

        def random(self, size):
            return self.u

    got = sample_degrees(paper_dist, Fixed([0.0, 0.4999, 0.5, 0.7799, 0.78, 0.999999]), 6)
    assert got.tolist() == [2, 2, 3, 3, 8, 8]


def test_frequencies_within_3_sigma(paper_dist):
    n = 100_000
    draws = sample_degrees(paper_dist, np.random.default_rng(99), n)
    assert set(np.unique(draws)) <= {2, 3, 8}
    for degree, p in paper_dist.entries:
        freq = np.mean(draws == degree)
        assert abs(freq - p) <= 3 * np.sqrt(p * (1 - p) / n)


def test_chi_square(paper_dist):
    draws = sample_degrees(paper_dist, np.random.default_rng(3), 100_000)
    observed = [np.sum(draws == d) for d in paper_dist.degrees]
    expected = paper_dist.probabilities * len(draws)
    assert stats.chisquare(observed, expected).pvalue > 0.001


@st.composite
def distributions(draw):
    degrees = draw(st.lists(st.integers(1, 8), min_size=1, max_size=8, unique=True))
    weights = draw(st.lists(st.floats(0.01, 1.0), min_size=len(degrees), max_size=len(degrees)))
    total = sum(weights)
    return validate(DegreeDistribution(zip(degrees, [w / total for w in weights])))


@settings(max_examples=50, deadline=None)
@given(distributions(), st.integers(0, 2**32))
def test_samples_stay_in_support(dist, seed):
    draws = sample_degrees(dist, np.random.default_rng(seed), 2000)
    assert set(draws.tolist()) <= {d for d, _ in dist.entries}
