"""Differential and component-degree analysis of vectorial Boolean functions."""

__version__ = "0.1.0"
