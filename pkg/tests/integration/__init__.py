"""Integration tests for birkhoff-gm."""
