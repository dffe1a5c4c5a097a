"""Shared models, errors and the abstract cosmos interface."""
