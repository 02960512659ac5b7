"""Exact generating functions for universal blowup formulae."""
