#!/usr/bin/env python3
"""Month-by-month fade depth, and two ways of getting an "annual" figure."""
import numpy as np

import scintfade as sf
from scintfade.climate import MONTH_NAMES

ka = sf.LinkConfig(frequency_ghz=20.0)
ku = sf.LinkConfig(frequency_ghz=10.95)

for site in sf.builtin_dataset():
    p_ka, p_ku = sf.monthly_profile(site, ka), sf.monthly_profile(site, ku)
    print(f"\n{site.name}: fade (dB), max-temperature series")
    print("       " + " ".join(f"{m:>6}" for m in MONTH_NAMES))
    print("  Ka   " + " ".join(f"{v:6.2f}" for v in p_ka.max_series))
    print("  Ku   " + " ".join(f"{v:6.2f}" for v in p_ku.max_series))
    for series in ("max", "min"):
        v = p_ka.series(series)
        print(f"  Jun-Sep / Jan-Mar ({series} series): {v[5:9].mean() / v[0:3].mean():.2f}")

    annual = sf.run_sweep(sf.SweepSpec("elevation_deg", [5.0], ku, [site], "max")).rows[0].fade_depth_db
    monthwise = sf.monthwise_mean_fade(site, ku, "max")
    print(f"  Ku annual: model on annual-mean climate {annual:.2f} dB, mean of monthly fades {monthwise:.2f} dB")
