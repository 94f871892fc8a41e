"""Command-line front end for intervalsep."""
