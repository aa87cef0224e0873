"""Finiteness of Nichols algebras of Yetter-Drinfeld modules over symmetric groups.

Layers, bottom up: ``permcore`` (permutations, classes, centralizers),
``cyclo`` (exact cyclotomic numbers), ``reps`` (centralizer
representations), ``ydmod`` (the modules M(C, ρ) and their braidings),
``diagonal`` (Cartan matrices of diagonal braidings), ``nichols``
(symmetrizer ranks), ``criteria`` (the verdict engine) and ``cli``.
"""

__version__ = "0.1.0"
