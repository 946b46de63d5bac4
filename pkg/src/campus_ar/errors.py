"""Shared error base so the CLI can map any domain failure to exit code 1."""


class CampusArError(Exception):
    """Base class for all domain errors raised by this package."""
