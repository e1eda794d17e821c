"""Render spectra to image files next to the CSV output.

Matplotlib is imported lazily and through the object-oriented Agg canvas,
so the simulation paths never touch a plotting backend.
"""

from __future__ import annotations

from pathlib import Path

from .lineshape import SpectrumGrid


def save_spectrum_plot(
    spectrum: SpectrumGrid, path: str | Path, title: str = ""
) -> Path:
    """Plot per-line profiles and their sum; returns the written path."""
    from matplotlib.backends.backend_agg import FigureCanvasAgg
    from matplotlib.figure import Figure

    fig = Figure(figsize=(8.0, 4.5))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    for label, values in spectrum.per_line.items():
        ax.plot(spectrum.energies, values, lw=0.9, alpha=0.8, label=label)
    ax.plot(spectrum.energies, spectrum.total, color="black", lw=1.6, label="total")
    ax.set_xlabel(r"energy (cm$^{-1}$)")
    ax.set_ylabel("absorption (arb. units)")
    if title:
        ax.set_title(title)
    if len(spectrum.per_line) <= 8:
        ax.legend(fontsize=8, frameon=False)
    ax.margins(x=0)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    return path
