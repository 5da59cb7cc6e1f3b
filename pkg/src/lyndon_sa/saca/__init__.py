"""Suffix array construction."""
