"""twistlab tests."""
