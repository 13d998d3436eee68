"""Operads on permutations, subsets, hypergraphs and simplicial complexes."""
