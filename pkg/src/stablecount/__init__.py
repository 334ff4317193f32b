"""Exact stable-set counting and extremal checks for small graphs."""
