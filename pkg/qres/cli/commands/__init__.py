"""
Subcommands, grouped by area.
"""
