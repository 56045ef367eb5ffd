"""
Command-line front end.
"""

from .main import create_parser, main

__all__ = ["create_parser", "main"]
