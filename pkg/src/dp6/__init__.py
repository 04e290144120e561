"""Sextic du Val del Pezzo surfaces: lattice arithmetic, exceptional collections and family classifiers."""

__version__ = "0.1.0"
