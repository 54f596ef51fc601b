#!/usr/bin/env python3
"""Compare the four built-in cities across elevation, time percentage and band.

Climate inputs are annual means of the monthly tables; "max" and "min"
use the average daily maximum and minimum temperature respectively.
"""
import numpy as np

import scintfade as sf

sites = sf.builtin_dataset()
base = sf.LinkConfig()  # Ku 10.95 GHz, 5 deg, 8 m, eta 0.5, 0.01 %

print("Annual means (rh %, t_max C, t_min C)")
for s in sites:
    rh, tmax, tmin = sf.annual_means(s)
    print(f"  {s.name:<11} {rh:6.2f} {tmax:6.2f} {tmin:6.2f}")

res = sf.run_sweep(sf.SweepSpec("elevation_deg", np.arange(5, 31, 5), base, sites, "both"))
print("\nFade depth (dB) vs elevation, Ku band, 0.01 % of time")
print("  " + " " * 16 + "".join(f"{v:>7.0f}" for v in res.spec.values))
for s in sites:
    for series in ("max", "min"):
        row = res.fades(s.name, series)
        print(f"  {s.name:<11} {series:<4}" + "".join(f"{v:7.2f}" for v in row))

res = sf.run_sweep(sf.SweepSpec("time_percent", [0.01, 0.1, 1.0], base, sites, "min"))
print("\nMinimum-series fade (dB) vs time percentage, 5 deg")
for s in sites:
    f = res.fades(s.name, "min")
    print(f"  {s.name:<11} " + "  ".join(f"{v:5.2f}" for v in f) + f"   (0.1 % / 0.01 % = {f[1] / f[0]:.2f})")

bands = {"C": 6.0, "Ku": 10.95, "Ka": 20.0}
res = sf.run_sweep(sf.SweepSpec("frequency_ghz", list(bands.values()), base, sites, "both"))
print("\nFade (dB) by band at 5 deg, min / max series")
for s in sites:
    lo, hi = res.fades(s.name, "min"), res.fades(s.name, "max")
    cells = "  ".join(f"{b}: {a:5.2f}/{c:5.2f}" for b, a, c in zip(bands, lo, hi))
    print(f"  {s.name:<11} {cells}")
