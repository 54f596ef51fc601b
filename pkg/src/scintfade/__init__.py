"""Tropospheric scintillation fade depth for earth-to-satellite links."""

__version__ = "0.1.0"

from .errors import (
    CompletenessError,
    CsvFormatError,
    ScintfadeError,
    UnsupportedRegimeError,
    ValidationError,
)
from .model import (
    ClimateSample,
    LinkConfig,
    ModelVariant,
    PredictionTrace,
    aperture_parameter,
    averaging_factor,
    averaging_factor_x,
    averaging_radicand,
    effective_antenna_diameter,
    effective_path_length,
    fade_depth,
    predict,
    reference_sigma,
    saturation_vapour_pressure,
    signal_sigma,
    time_percentage_factor,
    wet_refractivity,
)
from .climate import (
    TERRITORY_EXTREMES,
    Location,
    MonthlyRecord,
    SiteClimate,
    annual_means,
    builtin_dataset,
    dump_csv,
    export_csv,
    find_site,
    load_csv,
    validate_csv,
)
from .analysis import (
    LongitudeWindow,
    SeasonalProfile,
    SweepResult,
    SweepRow,
    SweepSpec,
    geostationary_elevation,
    longitude_window,
    monthly_profile,
    monthwise_mean_fade,
    run_sweep,
)
