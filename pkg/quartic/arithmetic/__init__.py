"""Exact integer, rational and polynomial arithmetic."""
