"""Unit tests for ball arithmetic, exceptions and precision escalation."""
