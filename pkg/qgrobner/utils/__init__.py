"""Naming and rendering helpers."""
