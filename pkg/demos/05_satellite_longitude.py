#!/usr/bin/env python3
"""Which geostationary slots keep the whole country above a given elevation?

The north-west (Tetulia) and south-east (Teknaf) corners bound Bangladesh;
checking those two is enough for the eastern edge of the window.
"""
import scintfade as sf
from scintfade.climate import TEKNAF, TETULIA

for sat in (90.0, 120.0, 150.0, 152.0, 157.0):
    els = [sf.geostationary_elevation(p.latitude_deg, p.longitude_deg, sat) for p in (TETULIA, TEKNAF)]
    print(f"satellite at {sat:5.1f} E: Tetulia {els[0]:5.2f} deg, Teknaf {els[1]:5.2f} deg")

for min_el in (5.0, 10.0, 15.0, 20.0):
    w = sf.longitude_window(min_el)
    print(f"elevation >= {min_el:4.1f} deg everywhere: {w.west:.1f} E .. {w.east:.1f} E")

el = sf.geostationary_elevation(TETULIA.latitude_deg, TETULIA.longitude_deg, 152.0)
sites = sf.builtin_dataset()
res = sf.run_sweep(sf.SweepSpec("elevation_deg", [el], sf.LinkConfig(), sites, "max"))
print(f"\nKu fade at {el:.2f} deg (satellite at 152 E seen from Tetulia):")
for r in res.rows:
    print(f"  {r.site:<11} {r.fade_depth_db:.2f} dB")

res = sf.run_sweep(sf.SweepSpec("satellite_longitude_deg", [100, 120, 140, 152], sf.LinkConfig(), sites, "max"))
print("\nKu fade using each city's own elevation to the satellite:")
for r in res.rows:
    print(f"  {r.value:5.0f} E  {r.site:<11} {r.fade_depth_db:.2f} dB")
