"""Twisted Alexander polynomials of 3-manifold groups over finite quotients."""

__version__ = "0.1.0"
