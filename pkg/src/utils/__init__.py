"""Utility functions for intervalsep."""
