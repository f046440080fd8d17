#!/usr/bin/env python3
"""Regenerate the standard diagnostic figures from wronsk CSV output.

Run make_csvs.sh first (or pass --cli to point at the binary); then:

    python3 plot_figures.py [--indir out] [--outdir out]

Produces:
    plateau.png      Wronskians vs the read point x (fixed energy)
    energy_scan.png  even/odd conditions vs energy, zeros = bound states
    coupling_scan.png  conditions at threshold vs well depth
    wavefunction.png   |phi| on a log scale with the divergent-tail line
"""

import argparse
import csv
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def read_table(path):
    cols, rows, meta = [], [], {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                text = line[1:].strip()
                if ":" in text:
                    key, value = text.split(":", 1)
                    meta[key.strip()] = value.strip()
                continue
            cells = line.split(",")
            if not cols:
                cols = cells
            else:
                rows.append([float(c) for c in cells])
    data = {name: [r[j] for r in rows] for j, name in enumerate(cols)}
    return data, meta


def plot_plateau(indir, outdir):
    data, _ = read_table(indir / "plateau.csv")
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(data["x"], data["even"], label="W(R_c, C)")
    ax.plot(data["x"], data["odd"], label="W(R_c, S)")
    ax.set_xlabel("x")
    ax.set_ylabel("Wronskian")
    ax.set_title("Asymptotic Wronskians settle beyond the well")
    ax.legend()
    fig.tight_layout()
    fig.savefig(outdir / "plateau.png", dpi=150)


def plot_energy_scan(indir, outdir):
    data, _ = read_table(indir / "energy_scan.csv")
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.axhline(0.0, color="gray", lw=0.6)
    ax.plot(data["eps"], data["even"], label="even condition")
    ax.plot(data["eps"], data["odd"], label="odd condition")
    ax.set_xlabel("eps")
    ax.set_ylabel("Wronskian at x_eval")
    ax.set_title("Zeros mark the bound-state energies")
    ax.legend()
    fig.tight_layout()
    fig.savefig(outdir / "energy_scan.png", dpi=150)


def plot_coupling_scan(indir, outdir):
    data, _ = read_table(indir / "coupling_scan.csv")
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.axhline(0.0, color="gray", lw=0.6)
    ax.plot(data["v0"], data["even"], label="even condition")
    ax.plot(data["v0"], data["odd"], label="odd condition")
    ax.set_xlabel("v0")
    ax.set_ylabel("Wronskian at threshold")
    ax.set_title("Zeros mark the critical couplings")
    ax.legend()
    fig.tight_layout()
    fig.savefig(outdir / "coupling_scan.png", dpi=150)


def plot_wavefunction(indir, outdir):
    import math

    data, meta = read_table(indir / "wavefunction.csv")
    k = float(meta.get("k", "0"))
    b3 = float(meta.get("B3", "0"))
    trunc = float(meta.get("truncation_x", "0"))
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(data["x"], [abs(p) for p in data["phi"]], label="|phi|")
    if k > 0 and b3 != 0:
        xs = [x for x in data["x"] if x >= trunc - 0.5]
        ax.semilogy(xs, [abs(b3) * math.exp(k * x) for x in xs], "--",
                    label="|B3| e^{kx}")
    ax.axvline(trunc, color="gray", lw=0.6, label="truncation_x")
    ax.set_xlabel("x")
    ax.set_ylabel("|phi| (unnormalized)")
    ax.set_title("Decay, turnaround, and the spurious divergent tail")
    ax.legend()
    fig.tight_layout()
    fig.savefig(outdir / "wavefunction.png", dpi=150)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--indir", default="out", type=pathlib.Path)
    ap.add_argument("--outdir", default="out", type=pathlib.Path)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    plot_plateau(args.indir, args.outdir)
    plot_energy_scan(args.indir, args.outdir)
    plot_coupling_scan(args.indir, args.outdir)
    plot_wavefunction(args.indir, args.outdir)
    print(f"wrote 4 figures to {args.outdir}/")


if __name__ == "__main__":
    main()
