"""Nilpotent orbits, Slodowy slices and orbit volumes for small classical Lie algebras."""

__version__ = "0.1.0"
