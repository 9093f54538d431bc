"""Services package for the knot-width pipeline.

High-level orchestration: stage runner, artifact writers, parameter grids,
triangulation targets and the SUMMARY/progress surface used by the CLI.
"""
