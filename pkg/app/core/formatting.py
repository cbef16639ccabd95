import math


def format_number(value):
    """Shared number format for Markdown, CSV and JSON output."""
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, int):
        return str(value)
    return f'{value:.12g}'


def json_number(value):
    """A JSON value that prints exactly like ``format_number``."""
    if isinstance(value, (bool, int)):
        return value
    return float(format_number(value))


def floor_decimals(value, places=3):
    scale = 10 ** places
    return math.floor(round(value * scale, 6)) / scale
