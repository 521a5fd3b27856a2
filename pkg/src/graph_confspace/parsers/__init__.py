#!/usr/bin/env python3
"""
Graph Parsers Module

This module contains the parser for the line-based graph file format.
"""

from .graph_parser import GraphParser, GraphParsingResult, canonical_text, fingerprint, parse_graph

__all__ = [
    'GraphParser',
    'GraphParsingResult',
    'canonical_text',
    'fingerprint',
    'parse_graph'
]
