"""Refinery: backtrack search for stabilisers, transporters and normalisers in Sym(n)."""
