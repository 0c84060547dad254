import numpy as np
import pytest

from rtstdma.csa import CsaConfig, csa_frame
from rtstdma.exceptions import ConfigError, DistributionError
from rtstdma.degree_dist import DegreeDistribution
from rtstdma.protocol import CSA, example_config, run_cap, run_frame_rts
from rtstdma.sic import CapInstance


def test_single_user(paper_dist):
    res = csa_frame(1, CsaConfig(200, paper_dist), np.random.default_rng(0))
    assert res.scheme == CSA and res.successes == 1


def test_identical_copy_sets_collide(paper_dist):
    cap = CapInstance.from_mapping(200, {1: [4, 9], 2: [4, 9]})
    assert csa_frame(2, CsaConfig(200, paper_dist), cap=cap).successes == 0


def test_config_validation(paper_dist):
    with pytest.raises(ConfigError):
        CsaConfig(0, paper_dist)
    with pytest.raises(DistributionError):
        CsaConfig(10, DegreeDistribution([(2, 0.4)]))
    assert CsaConfig.from_timing(example_config(150), paper_dist).n_i == 200


def test_same_decoder_as_rts(paper_dist):
    rng = np.random.default_rng(21)
    cfg = example_config(180)
    for _ in range(50):
        cap = run_cap(180, cfg.n_c, paper_dist, rng)
        rts = run_frame_rts(180, cfg, paper_dist, cap=cap)
        csa = csa_frame(180, CsaConfig(cfg.n_c, paper_dist), cap=cap)
        assert set(rts.outcome.extracted) == set(csa.outcome.extracted)


def _mean_se(x):
    x = np.asarray(x, dtype=float)
    return x.mean(), x.std(ddof=1) / np.sqrt(len(x))


def test_near_threshold_regression(paper_dist):
    rng = np.random.default_rng(2024)
    x = [csa_frame(185, CsaConfig(200, paper_dist), rng).successes for _ in range(500)]
    assert sum(x) == 36772
    mean, se = _mean_se(x)
    assert 185 - mean > 3 * se


def test_throughput_falls_past_frame_size(paper_dist):
    cfg = CsaConfig(100, paper_dist)
    means = []
    for m in (100, 120, 150):
        rng = np.random.default_rng(m)
        means.append(_mean_se([csa_frame(m, cfg, rng).successes for _ in range(500)]))
    for (m1, s1), (m2, s2) in zip(means, means[1:]):
        assert m2 <= m1 + 2 * np.hypot(s1, s2)
