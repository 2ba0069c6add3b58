"""Geninv engine package."""
