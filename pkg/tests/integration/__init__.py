"""End-to-end tests of the twistlab command line."""
