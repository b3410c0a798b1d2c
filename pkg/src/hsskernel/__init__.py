"""Exact Szegő/Bergman kernel expansions for disc bundles over compact
Hermitian symmetric spaces, with numeric and topological cross-checks."""

__version__ = "0.1.0"
