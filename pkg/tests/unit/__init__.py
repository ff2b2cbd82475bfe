"""Unit tests for the twistlab modules."""
