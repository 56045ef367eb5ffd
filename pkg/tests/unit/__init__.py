"""Unit tests for kummerx subsystems."""
