"""
KummerX Test Suite

Unit tests for ball arithmetic, characters, Hurwitz zeta, L-functions,
class numbers, bound verification, configuration, storage and the CLI.
"""
