"""Geninv command line: argument parsing and the JSON codec."""
