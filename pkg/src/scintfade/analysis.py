"""Parameter sweeps, seasonal profiles and geostationary geometry."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import NamedTuple, Sequence

import numpy as np

from .climate import TERRITORY_EXTREMES, SiteClimate, annual_means
from .errors import ValidationError
from .model import ClimateSample, LinkConfig, ModelVariant, predict

# Earth radius / geostationary orbit radius.
GEO_RADIUS_RATIO = 0.15127
GEO_VISIBILITY_LAT_DEG = 81.3

SWEEPABLE = (
    "elevation_deg",
    "frequency_ghz",
    "antenna_diameter_m",
    "time_percent",
    "month",
    "satellite_longitude_deg",
)
SERIES = ("max", "min")


def _series_list(temperature_series):
    if temperature_series == "both":
        return SERIES
    if temperature_series in SERIES:
        return (temperature_series,)
    raise ValidationError(
        f"temperature_series must be 'max', 'min' or 'both', got {temperature_series!r}", field="temperature_series"
    )


@dataclass(frozen=True)
class SweepSpec:
    swept: str
    values: tuple
    base: LinkConfig
    sites: tuple
    temperature_series: str = "both"
    month: int | None = None  # use this calendar month instead of annual means

    def __post_init__(self):
        if self.swept not in SWEEPABLE:
            raise ValidationError(f"cannot sweep {self.swept!r}; choose from {', '.join(SWEEPABLE)}", field="swept")
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "sites", tuple(self.sites))
        if not values:
            raise ValidationError("sweep values must not be empty", field="values")
        if not self.sites:
            raise ValidationError("sweep needs at least one site", field="sites")
        d = np.diff(values)
        if not (np.all(d > 0) or np.all(d < 0)):
            raise ValidationError("sweep values must be strictly monotone", field="values")
        _series_list(self.temperature_series)
        if self.month is not None and (self.swept == "month" or self.month not in range(1, 13)):
            raise ValidationError(f"month must be 1-12 and the swept parameter not 'month', got {self.month!r}", field="month")
        for v in values:
            if self.swept == "month":
                if not (v.is_integer() and 1 <= v <= 12):
                    raise ValidationError(f"month must be an integer in [1, 12], got {v!r}", field="month")
            elif self.swept == "satellite_longitude_deg":
                if not (-180.0 <= v <= 180.0):
                    raise ValidationError(f"satellite longitude must lie in [-180, 180], got {v!r}", field=self.swept)
            else:
                dataclasses.replace(self.base, **{self.swept: v})


class SweepRow(NamedTuple):
    site: str
    series: str
    value: float
    fade_depth_db: float
    radicand_clamped: bool
    out_of_validity: bool


@dataclass
class SweepResult:
    spec: SweepSpec
    rows: list
    variant: ModelVariant
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds"))

    def fades(self, site: str, series: str) -> np.ndarray:
        """Fade depths for one site/series, in swept-value order."""
        return np.array([r.fade_depth_db for r in self.rows if r.site == site and r.series == series])


def _climate_for(site, series, month=None):
    if month is None:
        rh, t_max, t_min = annual_means(site)
    else:
        rec = site.month(month)
        rh, t_max, t_min = rec.rh_pct, rec.t_max_c, rec.t_min_c
    return ClimateSample(t_max if series == "max" else t_min, rh)


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate the model for every (value, site, series) combination.

    Climate inputs are the site's annual means, except for a month sweep
    where the swept month's values are used. Rows are ordered by swept
    value, then by site and series in the order given.
    """
    rows = []
    series_list = _series_list(spec.temperature_series)
    for v in spec.values:
        for site in spec.sites:
            month = int(v) if spec.swept == "month" else spec.month
            if spec.swept == "month":
                cfg = spec.base
            elif spec.swept == "satellite_longitude_deg":
                elev = geostationary_elevation(site.latitude_deg, site.longitude_deg, v)
                cfg = _replace(spec.base, site, v, elevation_deg=elev)
            else:
                cfg = _replace(spec.base, site, v, **{spec.swept: v})
            for series in series_list:
                try:
                    tr = predict(_climate_for(site, series, month), cfg)
                except ValidationError as exc:
                    exc.args = (f"{site.name}/{series} at {spec.swept}={v:g}: {exc.args[0]}",) + exc.args[1:]
                    raise
                rows.append(SweepRow(site.name, series, v, tr.fade_depth_db, tr.radicand_clamped, tr.out_of_validity))
    return SweepResult(spec, rows, spec.base.variant)


def _replace(base, site, v, **changes):
    try:
        return dataclasses.replace(base, **changes)
    except ValidationError as exc:
        exc.args = (f"{site.name} at value {v:g}: {exc.args[0]}",) + exc.args[1:]
        raise


class SeasonalProfile(NamedTuple):
    site: str
    max_series: np.ndarray  # dB, January..December
    min_series: np.ndarray

    def series(self, name: str) -> np.ndarray:
        return self.max_series if name == "max" else self.min_series


def monthly_profile(site: SiteClimate, config: LinkConfig) -> SeasonalProfile:
    """Fade depth for each calendar month, with max and min temperature series."""
    out = {}
    for series in SERIES:
        out[series] = np.array([predict(_climate_for(site, series, m), config).fade_depth_db for m in range(1, 13)])
    return SeasonalProfile(site.name, out["max"], out["min"])


def monthwise_mean_fade(site: SiteClimate, config: LinkConfig, series: str = "max") -> float:
    """Average of the 12 monthly fade depths.

    Not the same as the annual figure used by :func:`run_sweep`, which runs
    the model once on annually averaged climate.
    """
    return float(np.mean(monthly_profile(site, config).series(series)))


def geostationary_elevation(site_lat_deg, site_lon_deg, satellite_lon_deg):
    """Elevation angle (deg) from a ground site to a geostationary satellite.

    Negative values mean the satellite is below the horizon. Works on numpy
    arrays as well as scalars.
    """
    lat = np.asarray(site_lat_deg, dtype=float)
    if np.any(np.abs(lat) >= GEO_VISIBILITY_LAT_DEG):
        raise ValidationError(
            f"|latitude| must be < {GEO_VISIBILITY_LAT_DEG} deg for geostationary visibility, got {site_lat_deg!r}",
            field="latitude_deg",
        )
    for name, v in (("site_lon_deg", site_lon_deg), ("satellite_lon_deg", satellite_lon_deg)):
        if np.any(np.abs(np.asarray(v, dtype=float)) > 180.0):
            raise ValidationError(f"{name} must lie in [-180, 180], got {v!r}", field=name)
    delta = np.radians(np.asarray(satellite_lon_deg, dtype=float) - np.asarray(site_lon_deg, dtype=float))
    cos_psi = np.cos(np.radians(lat)) * np.cos(delta)
    sin_psi = np.sqrt(np.clip(1.0 - cos_psi**2, 0.0, None))
    # arctan2 gives exactly 90 deg at the sub-satellite point where sin_psi == 0
    elev = np.degrees(np.arctan2(cos_psi - GEO_RADIUS_RATIO, sin_psi))
    return float(elev) if elev.ndim == 0 else elev


class LongitudeWindow(NamedTuple):
    """Satellite longitudes ``west..east`` (deg E), inclusive.

    ``west > east`` means the window crosses the antimeridian. Both are
    ``None`` for an empty window.
    """

    west: float | None
    east: float | None

    @property
    def empty(self) -> bool:
        return self.west is None

    def contains(self, lon: float) -> bool:
        if self.empty:
            return False
        if self.west <= self.east:
            return self.west <= lon <= self.east
        return lon >= self.west or lon <= self.east

    def width(self) -> float:
        if self.empty:
            return 0.0
        return self.east - self.west if self.west <= self.east else 360.0 - self.west + self.east


SCAN_STEP_DEG = 0.1


def longitude_window(min_elevation_deg: float, sites: Sequence = TERRITORY_EXTREMES) -> LongitudeWindow:
    """Largest contiguous band of geostationary longitudes seen from every site
    at ``min_elevation_deg`` or higher.

    ``sites`` is anything with ``latitude_deg`` and ``longitude_deg``; the
    default is the north-west and south-east corners of Bangladesh. The scan
    runs at 0.1 deg.
    """
    if not (4.0 < min_elevation_deg <= 90.0):
        raise ValidationError(f"min_elevation_deg must lie in (4, 90], got {min_elevation_deg!r}", field="min_elevation_deg")
    if not sites:
        raise ValidationError("longitude_window needs at least one site", field="sites")
    lons = np.arange(-1800, 1801) / 10.0
    ok = np.ones(lons.shape, dtype=bool)
    for s in sites:
        ok &= geostationary_elevation(s.latitude_deg, s.longitude_deg, lons) >= min_elevation_deg
    if not ok.any():
        return LongitudeWindow(None, None)
    if ok.all():
        return LongitudeWindow(-180.0, 180.0)

    # Runs of True as [start, stop) index pairs.
    padded = np.concatenate(([False], ok, [False])).astype(int)
    edges = np.flatnonzero(np.diff(padded))
    runs = [[int(a), int(b)] for a, b in zip(edges[::2], edges[1::2])]
    n = len(lons)
    # -180 and +180 are the same meridian: join the runs touching both ends.
    if len(runs) > 1 and runs[0][0] == 0 and runs[-1][1] == n:
        last = runs.pop()
        runs[0] = [last[0], runs[0][1] + n - 1]
    start, stop = max(runs, key=lambda r: r[1] - r[0])
    west = lons[start]
    east = lons[(stop - 1) % (n - 1)] if stop - 1 >= n else lons[stop - 1]
    return LongitudeWindow(float(west), float(east))
