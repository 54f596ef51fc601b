"""Tropospheric scintillation fade depth, ITU step-by-step procedure.

Nine steps take a month-or-longer average of surface temperature and
relative humidity, plus the link geometry, to the fade depth exceeded for
``p`` percent of the time. Each step is a separate function so that the
intermediate quantities can be audited; :func:`predict` composes them and
returns a :class:`PredictionTrace` carrying all of them.

The step functions accept floats or numpy arrays.
"""
from __future__ import annotations

import enum
from dataclasses import asdict, dataclass

import numpy as np

from .errors import UnsupportedRegimeError, ValidationError

T_MIN_C = -40.0
T_MAX_C = 60.0
MIN_ELEVATION_DEG = 4.0
F_VALID_GHZ = (4.0, 20.0)
P_RANGE = (0.01, 50.0)
DEFAULT_TURBULENCE_HEIGHT_M = 1000.0

SIGMA_REF_FLOOR_DB = 3.6e-3


class ModelVariant(enum.Enum):
    """Exponent on ``(x**2 + 1)`` inside the aperture averaging factor.

    ``ITU_STANDARD`` uses 11/12 as in the ITU recommendation.
    ``PAPER_COMPAT`` uses 1/12, which is the form that makes large dishes
    (about 20 m at 20 GHz, 26 m at 10.95 GHz) null the scintillation.
    """

    ITU_STANDARD = "itu"
    PAPER_COMPAT = "paper"

    @property
    def exponent(self) -> float:
        return 11.0 / 12.0 if self is ModelVariant.ITU_STANDARD else 1.0 / 12.0


def _check_range(name, value, lo, hi, lo_open=False, hi_open=False):
    v = np.asarray(value, dtype=float)
    bad_lo = v <= lo if lo_open else v < lo
    bad_hi = v >= hi if hi_open else v > hi
    if np.any(np.isnan(v)) or np.any(bad_lo) or np.any(bad_hi):
        lb = "(" if lo_open else "["
        rb = ")" if hi_open else "]"
        raise ValidationError(f"{name} must lie in {lb}{lo:g}, {hi:g}{rb}, got {value!r}", field=name)


def _check_positive(name, value):
    v = np.asarray(value, dtype=float)
    if np.any(np.isnan(v)) or np.any(v <= 0):
        raise ValidationError(f"{name} must be > 0, got {value!r}", field=name)


def _check_elevation(elevation_deg):
    v = np.asarray(elevation_deg, dtype=float)
    if np.any(np.isnan(v)) or np.any(v <= MIN_ELEVATION_DEG):
        raise UnsupportedRegimeError(
            f"elevation must be > {MIN_ELEVATION_DEG:g} deg, got {elevation_deg!r}; "
            "the low-elevation scintillation procedure is not implemented"
        )
    if np.any(v > 90):
        raise ValidationError(f"elevation must be <= 90 deg, got {elevation_deg!r}", field="elevation_deg")


def _scalar(v):
    return float(v) if np.ndim(v) == 0 else v


@dataclass(frozen=True)
class ClimateSample:
    """Surface temperature and relative humidity averaged over a month or longer."""

    temperature_c: float
    relative_humidity_pct: float

    def __post_init__(self):
        _check_range("temperature_c", self.temperature_c, T_MIN_C, T_MAX_C)
        _check_range("relative_humidity_pct", self.relative_humidity_pct, 0.0, 100.0)


@dataclass(frozen=True)
class LinkConfig:
    """Earth-station link parameters.

    Frequencies outside 4-20 GHz are accepted; the resulting trace carries
    ``out_of_validity=True``.
    """

    frequency_ghz: float = 10.95
    elevation_deg: float = 5.0
    antenna_diameter_m: float = 8.0
    antenna_efficiency: float = 0.5
    time_percent: float = 0.01
    turbulence_height_m: float = DEFAULT_TURBULENCE_HEIGHT_M
    variant: ModelVariant = ModelVariant.ITU_STANDARD

    def __post_init__(self):
        _check_positive("frequency_ghz", self.frequency_ghz)
        _check_elevation(self.elevation_deg)
        _check_positive("antenna_diameter_m", self.antenna_diameter_m)
        _check_range("antenna_efficiency", self.antenna_efficiency, 0.0, 1.0, lo_open=True)
        _check_range("time_percent", self.time_percent, *P_RANGE)
        _check_positive("turbulence_height_m", self.turbulence_height_m)
        if not isinstance(self.variant, ModelVariant):
            object.__setattr__(self, "variant", ModelVariant(self.variant))

    @property
    def out_of_validity(self) -> bool:
        return not (F_VALID_GHZ[0] <= self.frequency_ghz <= F_VALID_GHZ[1])


@dataclass(frozen=True)
class PredictionTrace:
    """Every intermediate of one fade-depth prediction."""

    e_s_hpa: float
    n_wet_ppm: float
    sigma_ref_db: float
    path_length_m: float
    d_eff_m: float
    x: float
    g: float
    sigma_db: float
    a_p: float
    fade_depth_db: float
    radicand_clamped: bool
    out_of_validity: bool

    def as_dict(self) -> dict:
        return asdict(self)


def saturation_vapour_pressure(t):
    """Saturation water vapour pressure in hPa for temperature ``t`` in deg C."""
    _check_range("temperature_c", t, T_MIN_C, T_MAX_C)
    t = np.asarray(t, dtype=float)
    return _scalar(6.11 * np.exp(19.7 * t / (t + 273.0)))


def wet_refractivity(t, h):
    """Wet term of the radio refractivity (ppm).

    ``h`` is relative humidity in percent (0-100), not a fraction.
    """
    _check_range("relative_humidity_pct", h, 0.0, 100.0)
    e_s = saturation_vapour_pressure(t)
    t = np.asarray(t, dtype=float)
    return _scalar(3730.0 * np.asarray(h, dtype=float) * e_s / (t + 273.0) ** 2)


def reference_sigma(n_wet):
    """Reference standard deviation of the signal amplitude (dB)."""
    n = np.asarray(n_wet, dtype=float)
    if np.any(np.isnan(n)) or np.any(n < 0):
        raise ValidationError(f"n_wet must be >= 0, got {n_wet!r}", field="n_wet")
    return _scalar(SIGMA_REF_FLOOR_DB + 1e-4 * n)


def effective_path_length(elevation_deg, h_l=DEFAULT_TURBULENCE_HEIGHT_M):
    """Slant path length (m) through a turbulent layer of height ``h_l``."""
    _check_elevation(elevation_deg)
    _check_positive("turbulence_height_m", h_l)
    s = np.sin(np.radians(np.asarray(elevation_deg, dtype=float)))
    return _scalar(2.0 * np.asarray(h_l, dtype=float) / (np.sqrt(s**2 + 2.35e-4) + s))


def effective_antenna_diameter(d, efficiency):
    _check_positive("antenna_diameter_m", d)
    _check_range("antenna_efficiency", efficiency, 0.0, 1.0, lo_open=True)
    return _scalar(np.sqrt(np.asarray(efficiency, dtype=float)) * np.asarray(d, dtype=float))


def aperture_parameter(d_eff, frequency_ghz, path_length_m):
    """``x = 1.22 * d_eff**2 * f / L`` with f in GHz and L in metres."""
    for name, v in (("d_eff_m", d_eff), ("frequency_ghz", frequency_ghz), ("path_length_m", path_length_m)):
        _check_positive(name, v)
    d_eff = np.asarray(d_eff, dtype=float)
    return _scalar(1.22 * d_eff**2 * np.asarray(frequency_ghz, dtype=float) / np.asarray(path_length_m, dtype=float))


def averaging_radicand(x, variant=ModelVariant.ITU_STANDARD):
    """Expression under the square root of the averaging factor."""
    variant = ModelVariant(variant)
    x = np.asarray(x, dtype=float)
    return _scalar(
        3.86 * (x**2 + 1.0) ** variant.exponent * np.sin(11.0 / 6.0 * np.arctan(1.0 / x))
        - 7.08 * x ** (5.0 / 6.0)
    )


def averaging_factor_x(x, variant=ModelVariant.ITU_STANDARD):
    """Averaging factor as a function of the aperture parameter ``x``.

    Returns ``(g, radicand_clamped)``. Once the aperture is large enough for
    the radicand to go negative, ``g`` is 0 and the flag is set.
    """
    _check_positive("x", x)
    r = np.asarray(averaging_radicand(x, variant))
    clamped = r < 0
    g = np.sqrt(np.where(clamped, 0.0, r))
    if g.ndim == 0:
        return float(g), bool(clamped)
    return g, clamped


def averaging_factor(d_eff, frequency_ghz, path_length_m, variant=ModelVariant.ITU_STANDARD):
    """Antenna aperture averaging factor, ``(g, radicand_clamped)``."""
    return averaging_factor_x(aperture_parameter(d_eff, frequency_ghz, path_length_m), variant)


def signal_sigma(sigma_ref, frequency_ghz, g, elevation_deg):
    """Signal standard deviation (dB) for the period and path."""
    _check_positive("sigma_ref_db", sigma_ref)
    _check_positive("frequency_ghz", frequency_ghz)
    gv = np.asarray(g, dtype=float)
    if np.any(np.isnan(gv)) or np.any(gv < 0):
        raise ValidationError(f"g must be >= 0, got {g!r}", field="g")
    _check_elevation(elevation_deg)
    s = np.sin(np.radians(np.asarray(elevation_deg, dtype=float)))
    return _scalar(np.asarray(sigma_ref, dtype=float) * np.asarray(frequency_ghz, dtype=float) ** (7.0 / 12.0) * gv / s**1.2)


def time_percentage_factor(p):
    """Multiplier from signal sigma to the fade exceeded for ``p`` % of the time.

    Valid for 0.01 <= p <= 50.
    """
    _check_range("time_percent", p, *P_RANGE)
    lg = np.log10(np.asarray(p, dtype=float))
    return _scalar(-0.061 * lg**3 + 0.072 * lg**2 - 1.71 * lg + 3.0)


def fade_depth(a_p, sigma):
    for name, v in (("a_p", a_p), ("sigma_db", sigma)):
        arr = np.asarray(v, dtype=float)
        if np.any(np.isnan(arr)) or np.any(arr < 0):
            raise ValidationError(f"{name} must be >= 0, got {v!r}", field=name)
    return _scalar(np.asarray(a_p, dtype=float) * np.asarray(sigma, dtype=float))


_STEPS = {
    1: "saturation vapour pressure",
    2: "wet refractivity",
    3: "reference sigma",
    4: "effective path length",
    5: "effective antenna diameter",
    6: "averaging factor",
    7: "signal sigma",
    8: "time percentage factor",
    9: "fade depth",
}


def _step(n, func, *args):
    try:
        return func(*args)
    except ValidationError as exc:
        exc.step = n
        exc.args = (f"step {n} ({_STEPS[n]}): {exc.args[0]}",) + exc.args[1:]
        raise


def predict(climate: ClimateSample, config: LinkConfig) -> PredictionTrace:
    """Run all nine steps for one climate sample and link."""
    t, h = climate.temperature_c, climate.relative_humidity_pct
    e_s = _step(1, saturation_vapour_pressure, t)
    n_wet = _step(2, wet_refractivity, t, h)
    sigma_ref = _step(3, reference_sigma, n_wet)
    length = _step(4, effective_path_length, config.elevation_deg, config.turbulence_height_m)
    d_eff = _step(5, effective_antenna_diameter, config.antenna_diameter_m, config.antenna_efficiency)
    x = _step(6, aperture_parameter, d_eff, config.frequency_ghz, length)
    g, clamped = _step(6, averaging_factor, d_eff, config.frequency_ghz, length, config.variant)
    sigma = _step(7, signal_sigma, sigma_ref, config.frequency_ghz, g, config.elevation_deg)
    a_p = _step(8, time_percentage_factor, config.time_percent)
    a_s = _step(9, fade_depth, a_p, sigma)
    return PredictionTrace(
        e_s_hpa=e_s,
        n_wet_ppm=n_wet,
        sigma_ref_db=sigma_ref,
        path_length_m=length,
        d_eff_m=d_eff,
        x=x,
        g=g,
        sigma_db=sigma,
        a_p=a_p,
        fade_depth_db=a_s,
        radicand_clamped=clamped,
        out_of_validity=config.out_of_validity,
    )
