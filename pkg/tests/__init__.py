"""Tests for birkhoff-gm."""
