"""Unit tests for run configuration."""
