from __future__ import annotations

"""
Small shared helpers:
- rational parsing, bit lengths and formatting
- input digests
"""

from src.core import hashing, rationals

__all__ = [
    "hashing",
    "rationals",
]
