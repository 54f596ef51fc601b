#!/usr/bin/env python3
"""Fade depth against dish size, for both forms of the averaging factor.

With the 1/12 exponent the averaging-factor radicand turns negative for a
large enough dish, and the fade is clamped to zero. The ITU 11/12 form
keeps decreasing smoothly instead.
"""
import numpy as np

import scintfade as sf

site = sf.find_site("Dhaka")
diameters = np.arange(2.0, 30.5, 2.0)

for variant in sf.ModelVariant:
    print(f"\nvariant: {variant.value}  (exponent {variant.exponent:.4f})")
    for name, f in (("Ku", 10.95), ("Ka", 20.0)):
        base = sf.LinkConfig(frequency_ghz=f, variant=variant)
        res = sf.run_sweep(sf.SweepSpec("antenna_diameter_m", diameters, base, [site], "max"))
        cells = " ".join(("  0*" if r.radicand_clamped else f"{r.fade_depth_db:4.1f}") for r in res.rows)
        print(f"  {name}: {cells}")
print("\ndiameters (m):", " ".join(f"{d:4.0f}" for d in diameters), "   * = clamped")

L = sf.effective_path_length(5.0)
for name, f in (("Ka", 20.0), ("Ku", 10.95)):
    d = np.arange(2.0, 30.0, 0.01)
    x = sf.aperture_parameter(sf.effective_antenna_diameter(d, 0.5), f, L)
    g, clamped = sf.averaging_factor_x(x, "paper")
    print(f"first clamping diameter, {name}, paper variant: {d[np.argmax(clamped)]:.2f} m")
