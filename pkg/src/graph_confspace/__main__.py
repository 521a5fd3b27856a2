#!/usr/bin/env python3
"""
graph-confspace - entry point for `python -m graph_confspace`
"""

from graph_confspace.cli import main

if __name__ == "__main__":
    main()
