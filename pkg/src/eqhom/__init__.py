"""Equivariant Hochschild homology of finite group actions on rings: exact integer computations."""

__version__ = "0.1.0"
