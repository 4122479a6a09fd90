"""Splice-unknotting numbers and spanning-surface genera of link diagrams."""

from __future__ import annotations

__version__ = "0.1.0"
