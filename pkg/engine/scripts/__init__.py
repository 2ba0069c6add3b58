"""Executable scripts and utilities."""

