# src/signet/cli/__init__.py
"""JSON command line: codec, command table, batch mode and acceptance suites."""
