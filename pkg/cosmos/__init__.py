"""Computational toolkit for finite categories, quasi-categories and their cosmos calculus."""

__version__ = "0.1.0"
