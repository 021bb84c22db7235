"""Command-line front end: ``biquat <subcommand> ...``."""

from ..syntax import ParseError, format_element, parse_element
from .dispatch import EXIT_NEGATIVE, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE, CommandRequest, UsageError, dispatch
from .main import build_parser, main

__all__ = ["CommandRequest", "UsageError", "dispatch", "main", "build_parser", "parse_element",
           "format_element", "ParseError", "EXIT_OK", "EXIT_NEGATIVE", "EXIT_UNKNOWN", "EXIT_USAGE"]
