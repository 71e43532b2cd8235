"""Shared constants for orthorec."""
