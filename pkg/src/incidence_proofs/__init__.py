"""Bracket-algebra, quad-tiling and Ceva/Menelaus proofs of projective incidence theorems."""

__version__ = "0.1.0"
