"""Exact computation with tracts, pastures, hyperfields, partial fields and
matroids over tracts."""
