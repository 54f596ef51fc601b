"""Acceptance gate: one test per criterion, each at its pinned tolerance.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""
import io

import numpy as np
import pytest

from scintfade import (
    ClimateSample,
    LinkConfig,
    ModelVariant,
    SweepSpec,
    aperture_parameter,
    averaging_factor_x,
    averaging_radicand,
    builtin_dataset,
    effective_antenna_diameter,
    effective_path_length,
    export_csv,
    geostationary_elevation,
    load_csv,
    monthly_profile,
    predict,
    run_sweep,
    saturation_vapour_pressure,
    time_percentage_factor,
    wet_refractivity,
    annual_means,
)
from scintfade.climate import MonthlyRecord, SiteClimate

KU, KA, C_BAND = 10.95, 20.0, 6.0
BASE = LinkConfig(frequency_ghz=KU, elevation_deg=5.0, antenna_diameter_m=8.0, antenna_efficiency=0.5, time_percent=0.01)
SITES = builtin_dataset()
N = 1000


def annual_fade(config, series="max", sites=SITES):
    res = run_sweep(SweepSpec("elevation_deg", [config.elevation_deg], config, sites, series))
    return {r.site: r.fade_depth_db for r in res.rows}


def test_criterion_01_time_percentage_anchors():
    assert time_percentage_factor(1.0) == 3.0
    assert abs(time_percentage_factor(0.01) - 7.196) < 5e-4
    assert 0.0 <= time_percentage_factor(50.0) <= 0.01


def test_criterion_02_step_oracles(oracle):
    assert saturation_vapour_pressure(25.0) == pytest.approx(31.9, abs=0.05)
    assert wet_refractivity(32.0, 83.0) == pytest.approx(160.6, abs=0.3)
    assert effective_path_length(5.0) == pytest.approx(11386, abs=5)
    g, clamped = averaging_factor_x(0.0375, ModelVariant.ITU_STANDARD)
    assert not clamped
    assert g == pytest.approx(0.890, abs=0.003)
    # and against the high-precision fixtures
    assert saturation_vapour_pressure(25.0) == pytest.approx(oracle["es"]["25"], rel=1e-12)
    assert g == pytest.approx(oracle["g_x0375_itu"], rel=1e-12)


def test_criterion_03_city_ordering(oracle):
    fades = annual_fade(BASE, "max")
    print(f"\nbaseline max-series fades (dB): { {k: round(v, 3) for k, v in fades.items()} }")
    assert fades["Rajshahi"] == pytest.approx(8.5, abs=0.5)
    assert fades["Rajshahi"] > fades["Chittagong"] > fades["Dhaka"]
    for city, v in fades.items():
        assert v == pytest.approx(oracle["cities"][city]["ku_max"], rel=1e-12)


def test_criterion_04_elevation_reductions():
    f5 = annual_fade(BASE, "min")
    f10 = annual_fade(LinkConfig(elevation_deg=10.0), "min")
    f20 = annual_fade(LinkConfig(elevation_deg=20.0), "min")
    for city in f5:
        r10, r20 = f10[city] / f5[city], f20[city] / f5[city]
        print(f"\n{city}: ratio 10/5 = {r10:.4f}, 20/5 = {r20:.4f}")
        assert 0.33 <= r10 <= 0.45
        assert 0.13 <= r20 <= 0.22


def test_criterion_05_time_percentage_ratio():
    ratio = time_percentage_factor(0.1) / time_percentage_factor(0.01)
    print(f"\na(0.1)/a(0.01) = {ratio:.4f}")
    assert 0.65 <= ratio <= 0.75
    for city, v in annual_fade(LinkConfig(time_percent=0.1), "max").items():
        assert v / annual_fade(BASE, "max")[city] == pytest.approx(ratio, rel=1e-12)


def _season_ratio(site, freq):
    prof = monthly_profile(site, LinkConfig(frequency_ghz=freq)).max_series
    return prof[5:9].mean() / prof[0:3].mean()


@pytest.mark.parametrize("freq", [KU, KA], ids=["Ku", "Ka"])
@pytest.mark.parametrize("site", SITES, ids=[s.name for s in SITES])
def test_criterion_06_seasonal_doubling(site, freq):
    ratio = _season_ratio(site, freq)
    print(f"\n{site.name} @ {freq} GHz: Jun-Sep / Jan-Mar (max series) = {ratio:.4f}")
    assert 1.6 <= ratio <= 2.4, f"{site.name} at {freq} GHz: ratio {ratio:.4f} outside [1.6, 2.4]"


def _first_clamp(freq, variant):
    length = effective_path_length(5.0)
    d = np.round(np.arange(200, 3001) / 100.0, 2)  # 2.00 .. 30.00 m
    x = aperture_parameter(effective_antenna_diameter(d, 0.5), freq, length)
    clamped = np.asarray(averaging_radicand(x, variant)) < 0
    return float(d[np.argmax(clamped)]) if clamped.any() else None


def test_criterion_07_large_dish_nullification():
    d_ka = _first_clamp(KA, ModelVariant.PAPER_COMPAT)
    d_ku = _first_clamp(KU, ModelVariant.PAPER_COMPAT)
    print(f"\nfirst clamping diameter: Ka {d_ka} m, Ku {d_ku} m")
    assert d_ka is not None and 18 <= d_ka <= 21
    assert d_ku is not None and 24 <= d_ku <= 27
    assert _first_clamp(KA, ModelVariant.ITU_STANDARD) is None
    assert _first_clamp(KU, ModelVariant.ITU_STANDARD) is None
    # the fade itself goes to zero at that diameter
    tr = predict(ClimateSample(30.0, 80.0), LinkConfig(frequency_ghz=KA, antenna_diameter_m=d_ka, variant="paper"))
    assert tr.radicand_clamped and tr.fade_depth_db == 0.0


def test_criterion_08_geostationary_152E():
    elev = geostationary_elevation(26.5, 88.34, 152.0)
    print(f"\nTetulia -> 152E elevation = {elev:.4f} deg")
    assert elev == pytest.approx(15.0, abs=0.3)
    fades = annual_fade(LinkConfig(elevation_deg=elev), "max")
    print(f"fades at that elevation: { {k: round(v, 4) for k, v in fades.items()} }")
    assert all(v <= 2.1 for v in fades.values())


def test_criterion_09_property_suites():
    rng = np.random.default_rng(20240917)
    variants = list(ModelVariant)

    # fade = a(p) * sigma identity and clamp safety over random inputs
    for _ in range(N):
        cfg = LinkConfig(
            frequency_ghz=rng.uniform(1, 40),
            elevation_deg=rng.uniform(4.01, 90),
            antenna_diameter_m=rng.uniform(0.1, 40),
            antenna_efficiency=rng.uniform(0.01, 1),
            time_percent=10 ** rng.uniform(-2, np.log10(50)),
            variant=variants[rng.integers(2)],
        )
        tr = predict(ClimateSample(rng.uniform(-40, 60), rng.uniform(0, 100)), cfg)
        assert tr.fade_depth_db == pytest.approx(tr.a_p * tr.sigma_db, rel=1e-12, abs=0)
        assert tr.g >= 0
        assert tr.radicand_clamped == (averaging_radicand(tr.x, cfg.variant) < 0)
        if tr.radicand_clamped:
            assert tr.fade_depth_db == 0

    # monotonicity: elevation (ITU), frequency, humidity, percent
    elevs = np.arange(5, 91)
    freqs = np.arange(4.0, 20.01, 0.5)
    for _ in range(N):
        climate = ClimateSample(rng.uniform(-40, 60), rng.uniform(0, 100))
        f = rng.uniform(4, 20)
        by_elev = [predict(climate, LinkConfig(frequency_ghz=f, elevation_deg=e)).fade_depth_db for e in elevs]
        assert np.all(np.diff(by_elev) < 0)
    for _ in range(N):
        climate = ClimateSample(rng.uniform(-40, 60), rng.uniform(0, 100))
        by_freq = [predict(climate, LinkConfig(frequency_ghz=f)).fade_depth_db for f in freqs]
        assert np.all(np.diff(by_freq) > 0)
    for _ in range(N):
        t, h = rng.uniform(-40, 60), rng.uniform(0, 99)
        cfg = LinkConfig(frequency_ghz=rng.uniform(4, 20), elevation_deg=rng.uniform(5, 90))
        lo = predict(ClimateSample(t, h), cfg).fade_depth_db
        hi = predict(ClimateSample(t, h + rng.uniform(0.01, 1)), cfg).fade_depth_db
        assert hi > lo
    p = np.sort(10 ** rng.uniform(-2, np.log10(50), N))
    p = np.unique(p)
    assert np.all(np.diff(time_percentage_factor(p)) < 0)

    # CSV round-trip and permutation invariance of annual means
    for _ in range(N):
        t = np.sort(rng.uniform(-40, 60, (12, 2)), axis=1)
        recs = tuple(MonthlyRecord(m + 1, float(rng.uniform(0, 100)), float(t[m, 1]), float(t[m, 0])) for m in range(12))
        site = SiteClimate("S", float(rng.uniform(-90, 90)), float(rng.uniform(-180, 180)), recs)
        buf = io.BytesIO()
        export_csv([site], buf)
        buf.seek(0)
        assert load_csv(buf) == [site]
        perm = rng.permutation(12)
        shuffled = tuple(
            MonthlyRecord(i + 1, recs[j].rh_pct, recs[j].t_max_c, recs[j].t_min_c) for i, j in enumerate(perm)
        )
        other = SiteClimate("S", site.latitude_deg, site.longitude_deg, shuffled)
        assert annual_means(other) == pytest.approx(annual_means(site), rel=1e-12, abs=1e-12)


def test_criterion_10_frequency_range():
    raj = [s for s in SITES if s.name == "Rajshahi"]
    c_min = annual_fade(LinkConfig(frequency_ghz=C_BAND), "min", raj)["Rajshahi"]
    ka_max = annual_fade(LinkConfig(frequency_ghz=KA), "max", raj)["Rajshahi"]
    print(f"\nRajshahi: C-band min series {c_min:.3f} dB, 20 GHz max series {ka_max:.3f} dB")
    assert 2.5 <= c_min <= 4.5
    assert ka_max >= 11.0
