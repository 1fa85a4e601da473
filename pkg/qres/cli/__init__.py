"""
Command-line layer: argparse subcommands registered from routers.
"""
