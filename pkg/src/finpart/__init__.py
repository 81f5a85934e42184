"""Exact truncated q-series and finite partition identities."""

__version__ = "0.1.0"
