import numpy as np
import pytest

from hideseek.errors import InvalidArgument
from hideseek.rng import seed_stream
from hideseek.scenario import generate_scenario
from hideseek.ssp import (REPORT_CSV_HEADER, SampleSizes, aposteriori_k1,
                          aposteriori_run, apriori_n1, quantile, report_csv,
                          ssp_run)


def test_apriori_sample_counts():
    assert apriori_n1(10, 0.02, 10) == 5490
    assert apriori_n1(10, 0.02, 10, beta=2e-5) == 20820
    assert apriori_n1(1, 1.0, 1) == 1
    assert apriori_n1(10, 0.02, 10) % 10 == 0


def test_aposteriori_sample_counts():
    assert aposteriori_k1(0.02, 10) == 490
    assert aposteriori_k1(0.1, 10) == 90
    assert aposteriori_k1(0.5, 1) == 1
    assert aposteriori_k1(0.02, 10, beta=2e-5) == 5360


def test_sample_count_validation():
    with pytest.raises(InvalidArgument):
        apriori_n1(0, 0.1, 10)
    with pytest.raises(InvalidArgument):
        apriori_n1(10, 0.0, 10)
    with pytest.raises(InvalidArgument):
        apriori_n1(10, 1.5, 10)
    with pytest.raises(InvalidArgument):
        apriori_n1(10, 0.1, 0)
    with pytest.raises(InvalidArgument):
        apriori_n1(10, 0.1, 10, beta=1.0)
    with pytest.raises(InvalidArgument):
        aposteriori_k1(1.0, 10)


def test_sample_counts_monotone_in_delta():
    values = [apriori_n1(10, d, 10) for d in (0.01, 0.02, 0.05, 0.1, 0.5)]
    assert values == sorted(values, reverse=True)
    posts = [aposteriori_k1(d, 10) for d in (0.01, 0.02, 0.05, 0.1, 0.5)]
    assert posts == sorted(posts, reverse=True)


def test_quantile_order_statistic():
    data = [3.0, 1.0, 2.0]
    assert quantile(data, 0.5) == 2.0
    assert quantile(data, 1.0) == 3.0
    assert quantile(data, 0.01) == 1.0
    ten = list(range(1, 11))
    assert quantile(ten, 0.9) == 9
    assert quantile(ten, 0.95) == 10
    with pytest.raises(InvalidArgument):
        quantile([], 0.5)
    with pytest.raises(InvalidArgument):
        quantile(data, 0.0)


def test_sample_sizes_validation():
    good = SampleSizes(m1=10, n1=100, n2=10, nbar2=10, delta=0.1)
    good.validate()
    with pytest.raises(InvalidArgument):
        SampleSizes(m1=10, n1=0, n2=10, nbar2=10, delta=0.1).validate()
    with pytest.raises(InvalidArgument):
        SampleSizes(m1=10, n1=100, n2=11, nbar2=10, delta=0.1).validate()
    with pytest.raises(InvalidArgument):
        SampleSizes(m1=10, n1=100, n2=10, nbar2=10, delta=0.0).validate()
    with pytest.raises(InvalidArgument):
        SampleSizes(m1=10, n1=100, n2=10, nbar2=10, delta=0.1, k1=0).validate()


def test_ssp_run_report_contents():
    sc = generate_scenario(50.0, 6, 2, seed=13)
    sizes = SampleSizes(m1=6, n1=40, n2=5, nbar2=5, delta=0.2)
    report = ssp_run(sc, sizes, seed=31)
    again = ssp_run(sc, sizes, seed=31)
    assert report.v_bar_level == again.v_bar_level
    assert np.array_equal(report.y_star, again.y_star)
    assert report.outcome == again.outcome
    assert report.v_bar_level <= 0.0
    assert report.y_star.shape == (6,)
    assert report.y_star.sum() == pytest.approx(1.0, abs=1e-9)
    assert np.all(report.y_star >= 0.0)
    assert report.z_star_seeds == tuple(seed_stream(31, "pi2", 5))
    assert report.z_star_weights.sum() == pytest.approx(1.0, abs=1e-9)
    assert report.v_posterior is None and report.epsilon is None


def test_ssp_run_checks_m1():
    sc = generate_scenario(50.0, 6, 2, seed=13)
    sizes = SampleSizes(m1=7, n1=10, n2=5, nbar2=5, delta=0.2)
    with pytest.raises(InvalidArgument):
        ssp_run(sc, sizes, seed=0)


def test_aposteriori_run_epsilon():
    sc = generate_scenario(50.0, 6, 2, seed=17)
    sizes = SampleSizes(m1=6, n1=40, n2=5, nbar2=5, delta=0.2, k1=20)
    report = aposteriori_run(sc, sizes, seed=7)
    assert report.v_posterior is not None
    assert report.epsilon == pytest.approx(report.v_posterior - report.v_bar_level,
                                           abs=1e-12)
    # the posterior level is a max over fresh columns of payoffs against
    # y_star, so it can exceed the sampled level but never the best response
    # within the sampled game by construction of v_bar
    assert np.isfinite(report.epsilon)
    missing = SampleSizes(m1=6, n1=40, n2=5, nbar2=5, delta=0.2)
    with pytest.raises(InvalidArgument):
        aposteriori_run(sc, missing, seed=7)


def test_posterior_level_grows_with_k1():
    sc = generate_scenario(50.0, 5, 1, seed=19)
    levels = []
    for k1 in (5, 20, 60):
        sizes = SampleSizes(m1=5, n1=30, n2=4, nbar2=4, delta=0.2, k1=k1)
        levels.append(aposteriori_run(sc, sizes, seed=3).v_posterior)
    # same fresh stream prefix: the max over more columns cannot shrink
    assert levels[0] <= levels[1] <= levels[2]


def test_report_csv_shape():
    sc = generate_scenario(50.0, 4, 1, seed=23)
    sizes = SampleSizes(m1=4, n1=12, n2=3, nbar2=3, delta=0.25, k1=9)
    rows = [ssp_run(sc, sizes, seed=1), aposteriori_run(sc, sizes, seed=2)]
    text = report_csv(rows)
    lines = text.strip().splitlines()
    assert lines[0] == REPORT_CSV_HEADER
    assert len(lines) == 3
    first = lines[1].split(",")
    assert first[0] == "1" and first[1] == "4" and first[2] == "1"
    assert first[9] == "" and first[10] == ""
    second = lines[2].split(",")
    assert float(second[10]) == pytest.approx(
        float(second[9]) - float(second[8]), abs=1e-12)
