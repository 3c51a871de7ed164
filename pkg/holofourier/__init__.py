"""Holographic Fourier representations of 1D signals and 2D images."""
