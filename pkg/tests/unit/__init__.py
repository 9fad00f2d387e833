"""Unit tests for birkhoff-gm."""
