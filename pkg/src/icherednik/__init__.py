"""Verification kernel for infinitesimal Cherednik algebras of gl2."""

__version__ = "0.1.0"
