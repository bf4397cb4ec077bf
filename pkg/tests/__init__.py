"""Tests for the quartic solutions toolkit."""
