"""Command-line harness for twistlab."""

__all__ = ["main", "verify_all", "check", "degree", "winding", "profile", "list_checks"]
