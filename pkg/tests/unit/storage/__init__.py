"""Unit tests for the result cache and exports."""
