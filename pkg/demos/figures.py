#!/usr/bin/env python3
"""Regenerate the data behind each case-study plot as CSV files.

Each entry below is the exact ``scintfade`` command line for one plot.
Run from anywhere:

    python demos/figures.py [output-dir]

and plot the CSVs with whatever tool you like.
"""
import shlex
import sys
from pathlib import Path

from scintfade.cli import main

FIGURES = {
    # annual max and min fade vs elevation, Ku, 0.01 %
    "elevation_ku_both.csv": "sweep --sweep elev --from 5 --to 30 --step 1 --band Ku --series both",
    # annual min fade vs time percentage at 5, 10 and 20 deg
    "percent_min_elev5.csv": "sweep --sweep percent --values 0.01,0.1,1,10 --elev 5 --series min",
    "percent_min_elev10.csv": "sweep --sweep percent --values 0.01,0.1,1,10 --elev 10 --series min",
    "percent_min_elev20.csv": "sweep --sweep percent --values 0.01,0.1,1,10 --elev 20 --series min",
    # annual max fade vs elevation, Ku
    "elevation_ku_max_coarse.csv": "sweep --sweep elev --from 5 --to 30 --step 5 --band Ku --series max",
    # C / Ku / Ka at 5 deg, min and max series
    "bands_min.csv": "sweep --sweep freq --values 6,10.95,20 --elev 5 --series min",
    "bands_max.csv": "sweep --sweep freq --values 6,10.95,20 --elev 5 --series max",
    # month-by-month fade, Ka and Ku
    "season_dhaka_ka.csv": "season --site Dhaka --band Ka",
    "season_dhaka_ku.csv": "season --site Dhaka --band Ku",
    # fade vs antenna diameter; the 1/12 exponent form is what nulls it at 20 m / 26 m
    "diameter_ka_paper.csv": "sweep --sweep diameter --from 2 --to 30 --step 0.5 --band Ka --variant paper --sites Dhaka",
    "diameter_ku_paper.csv": "sweep --sweep diameter --from 2 --to 30 --step 0.5 --band Ku --variant paper --sites Dhaka",
    "diameter_ka_itu.csv": "sweep --sweep diameter --from 2 --to 30 --step 0.5 --band Ka --sites Dhaka",
    "diameter_ku_itu.csv": "sweep --sweep diameter --from 2 --to 30 --step 0.5 --band Ku --sites Dhaka",
}


def run(outdir):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for name, cmd in FIGURES.items():
        argv = shlex.split(cmd) + ["--format", "csv", "-o", str(outdir / name)]
        code = main(argv)
        if code:
            raise SystemExit(f"{name}: scintfade {cmd} exited with {code}")
        print(f"{outdir / name}  <-  scintfade {cmd} --format csv")


if __name__ == "__main__":
    run(sys.argv[1] if len(sys.argv) > 1 else "figures_out")
