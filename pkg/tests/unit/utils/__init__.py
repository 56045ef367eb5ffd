"""Tests for kummerx utilities."""
