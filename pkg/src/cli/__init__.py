from __future__ import annotations

"""
Command-line entry point `convexpoly`.
"""

from src.cli import main

__all__ = ["main"]
