"""
Dirichlet characters modulo an odd prime.
"""

from .models import Character, CharacterTable, Parity
from .sums import RootTable, accumulate_by_exponent, character_sum, fold_exponent_sums, root_table
from .table import build_table, character, character_value, legendre, odd_characters, quadratic_character

__all__ = [
    "Character",
    "CharacterTable",
    "Parity",
    "RootTable",
    "accumulate_by_exponent",
    "build_table",
    "character",
    "character_sum",
    "character_value",
    "fold_exponent_sums",
    "legendre",
    "odd_characters",
    "quadratic_character",
    "root_table",
]
