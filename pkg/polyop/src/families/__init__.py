"""Families of subsets of [n] and simplicial complexes."""
