"""artin-homology - H1/H2 bases and products for even Artin and Coxeter groups."""

__version__ = "0.1.0"
