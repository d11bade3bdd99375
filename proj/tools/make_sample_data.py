#!/usr/bin/env python3
"""Generate the synthetic California-like sample dataset in data/.

The grid is 110 x 100 cells of 10 x 10 km centred on (37.25, -119.25).
Cell centres come from an equirectangular projection about that point, which
is the projection firelink uses to recover the lattice. Cells outside a rough
state outline get zero biomass; inside it, only the 3500 most vegetated cells
keep a positive value. Fires are drawn with probability proportional to the
ignition model so the catalog concentrates where sensors are worth placing.

Usage: python3 tools/make_sample_data.py [--out data] [--seed 2020]
"""

import argparse
import math
from pathlib import Path

import numpy as np
from matplotlib.path import Path as Polygon

EARTH_RADIUS_KM = 6371.0
ROWS, COLS, SIDE_KM = 110, 100, 10.0
LAT0, LON0 = 37.25, -119.25
QUALIFYING = 3500
FIRES = 255
TOTAL_RECORDED_KM2 = 10202.0
P_HUMAN = 0.5
# Vegetated cells carry at least this much biomass on top of the smooth field.
BIOMASS_FLOOR = 0.6
# Spread rate (km/h) is log-normal around this median; clipped so q > 0 at T = 4.
SPREAD_MEDIAN, SPREAD_SIGMA = 0.6, 0.2

# Model constants the sample config uses; theta values are synthetic.
B_LOW, B_UP = 0.2, 1.0
THETA_WILT, THETA_FIELD, BETA_E = 0.10, 0.35, 0.35
L_LOW, L_UP = 0.02, 0.85

OUTLINE = [
    (-124.2, 42.0), (-120.0, 42.0), (-120.0, 39.0), (-114.6, 35.0), (-114.1, 34.3),
    (-114.7, 32.7), (-117.1, 32.5), (-118.5, 34.0), (-120.6, 34.5), (-121.9, 36.6),
    (-122.5, 37.5), (-123.7, 38.9), (-124.4, 40.3), (-124.2, 42.0),
]


def to_geo(x_km, y_km):
    lat = LAT0 + np.degrees(y_km / EARTH_RADIUS_KM)
    lon = LON0 + np.degrees(x_km / (EARTH_RADIUS_KM * math.cos(math.radians(LAT0))))
    return lat, lon


def smooth_noise(rng, scale_cells):
    """Gaussian-blurred white noise with unit standard deviation."""
    noise = rng.standard_normal((ROWS, COLS))
    k = np.arange(-3 * scale_cells, 3 * scale_cells + 1)
    kernel = np.exp(-0.5 * (k / scale_cells) ** 2)
    kernel /= kernel.sum()
    out = np.apply_along_axis(lambda r: np.convolve(r, kernel, mode="same"), 1, noise)
    out = np.apply_along_axis(lambda c: np.convolve(c, kernel, mode="same"), 0, out)
    return (out - out.mean()) / out.std()


def ramp(v, lo, hi):
    return np.clip((v - lo) / (hi - lo), 0.0, 1.0)


def ignition_probability(biomass, soil, lightning, p_human):
    p_b = ramp(biomass, B_LOW, B_UP)
    p_m = 1.0 - np.tanh(1.75 * ramp(soil, THETA_WILT, THETA_FIELD) / BETA_E) ** 2
    beta_l = ramp(lightning, L_LOW, L_UP)
    intensity = beta_l / (beta_l + np.exp(1.5 - 6.0 * beta_l))
    return p_b * p_m * (intensity + (1.0 - intensity) * p_human)


def fmt(v):
    return repr(round(float(v), 8))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data"))
    parser.add_argument("--seed", type=int, default=2020)
    args = parser.parse_args()
    rng = np.random.default_rng(args.seed)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    rows, cols = np.meshgrid(np.arange(ROWS), np.arange(COLS), indexing="ij")
    x = (cols + 0.5) * SIDE_KM - COLS * SIDE_KM / 2
    y = (rows + 0.5) * SIDE_KM - ROWS * SIDE_KM / 2
    lat, lon = to_geo(x, y)
    inside = Polygon(OUTLINE).contains_points(np.column_stack([lon.ravel(), lat.ravel()])).reshape(ROWS, COLS)

    north = (lat - 32.5) / 9.5             # 0 in the south, 1 at the northern border
    coast = np.clip((lon + 114.0) / 10.0, 0, 1)  # 0 in the east, 1 on the coast
    biomass = np.exp(0.3 + 1.1 * north + 0.6 * coast - 1.2 * (1 - north) * (1 - coast) + 0.35 * smooth_noise(rng, 4))
    biomass = np.where(inside, biomass, 0.0)
    cutoff = np.sort(biomass[inside])[::-1][QUALIFYING - 1]
    biomass = np.where(biomass >= cutoff, biomass, 0.0)
    biomass = np.where(biomass > 0, biomass + BIOMASS_FLOOR, 0.0)

    soil = np.clip(0.05 + 0.2 * north + 0.08 * coast + 0.05 * smooth_noise(rng, 5), 0.05, 0.40)
    lightning = np.clip(0.25 + 0.2 * (1 - coast) + 0.12 * smooth_noise(rng, 6), 0.0, 0.6)
    p_human = np.full((ROWS, COLS), P_HUMAN)
    spread = np.clip(SPREAD_MEDIAN * np.exp(SPREAD_SIGMA * smooth_noise(rng, 5)), 0.05, 1.2)

    ids = np.arange(ROWS * COLS).reshape(ROWS, COLS)
    with open(out / "regions.csv", "w", encoding="ascii") as f:
        f.write("id,lat,lon,biomass,soil_moisture,lightning,p_human,spread_rate\n")
        for r in range(ROWS):
            for c in range(COLS):
                f.write(",".join([str(ids[r, c]), fmt(lat[r, c]), fmt(lon[r, c]), fmt(biomass[r, c]),
                                  fmt(soil[r, c]), fmt(lightning[r, c]), fmt(p_human[r, c]),
                                  fmt(spread[r, c])]) + "\n")

    p_i = ignition_probability(biomass, soil, lightning, p_human).ravel()
    cells = rng.choice(p_i.size, size=FIRES, replace=True, p=p_i / p_i.sum())
    margin = 0.05
    fx = x.ravel()[cells] + rng.uniform(-SIDE_KM / 2 + margin, SIDE_KM / 2 - margin, FIRES)
    fy = y.ravel()[cells] + rng.uniform(-SIDE_KM / 2 + margin, SIDE_KM / 2 - margin, FIRES)
    flat, flon = to_geo(fx, fy)
    area = rng.lognormal(mean=0.0, sigma=1.6, size=FIRES)
    area *= TOTAL_RECORDED_KM2 / area.sum()
    with open(out / "fires.csv", "w", encoding="ascii") as f:
        f.write("fire_id,lat,lon,recorded_area_km2\n")
        for i in range(FIRES):
            f.write(f"{i},{fmt(flat[i])},{fmt(flon[i])},{fmt(area[i])}\n")

    print(f"inside cells: {int(inside.sum())}, qualifying: {int((biomass > 0).sum())}, "
          f"fires: {FIRES}, recorded total: {area.sum():.3f} km2")


if __name__ == "__main__":
    main()
