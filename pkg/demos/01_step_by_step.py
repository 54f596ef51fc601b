#!/usr/bin/env python3
"""Walk through the nine steps for one month at one site.

Dhaka in June (average maximum temperature 32 C, relative humidity 83 %)
on a Ku-band hub station: 8 m dish, efficiency 0.5, 5 deg elevation, and
the fade exceeded for 0.01 % of the time.
"""
import scintfade as sf

t, h = 32.0, 83.0
cfg = sf.LinkConfig(frequency_ghz=10.95, elevation_deg=5.0, antenna_diameter_m=8.0,
                    antenna_efficiency=0.5, time_percent=0.01)

e_s = sf.saturation_vapour_pressure(t)
n_wet = sf.wet_refractivity(t, h)
sigma_ref = sf.reference_sigma(n_wet)
L = sf.effective_path_length(cfg.elevation_deg)
d_eff = sf.effective_antenna_diameter(cfg.antenna_diameter_m, cfg.antenna_efficiency)
x = sf.aperture_parameter(d_eff, cfg.frequency_ghz, L)
g, clamped = sf.averaging_factor(d_eff, cfg.frequency_ghz, L)
sigma = sf.signal_sigma(sigma_ref, cfg.frequency_ghz, g, cfg.elevation_deg)
a_p = sf.time_percentage_factor(cfg.time_percent)
fade = sf.fade_depth(a_p, sigma)

print(f"1. saturation vapour pressure  e_s     = {e_s:10.4f} hPa")
print(f"2. wet refractivity            N_wet   = {n_wet:10.4f} ppm")
print(f"3. reference sigma             s_ref   = {sigma_ref:10.6f} dB")
print(f"4. effective path length       L       = {L:10.2f} m")
print(f"5. effective antenna diameter  D_eff   = {d_eff:10.4f} m")
print(f"6. aperture averaging          x, g    = {x:.5f}, {g:.5f} (clamped: {clamped})")
print(f"7. signal sigma                sigma   = {sigma:10.5f} dB")
print(f"8. time percentage factor      a(p)    = {a_p:10.4f}")
print(f"9. fade depth                  A_s     = {fade:10.4f} dB")

# The same thing in one call, with every intermediate kept:
trace = sf.predict(sf.ClimateSample(t, h), cfg)
assert trace.fade_depth_db == fade
print("\npredict() trace:", trace)
