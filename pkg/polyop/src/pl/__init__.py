"""Piecewise-linear spheres, balls and neat pairs."""
