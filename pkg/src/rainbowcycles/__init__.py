"""Rainbow cycle spectra of edge-colored complete graphs."""

__version__ = "0.1.0"
