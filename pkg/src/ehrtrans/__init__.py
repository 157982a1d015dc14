"""Translated lattice point enumerators of rational polytopes."""
