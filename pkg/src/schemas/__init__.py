from __future__ import annotations

"""
Pydantic documents for solver input and output.
"""

from src.schemas import io_schema

__all__ = ["io_schema"]
