import logging

from rich.console import Console
from rich.logging import RichHandler
from rich.theme import Theme

version = "0.1.0"


# Define and apply a custom theme
custom_theme = Theme({
    "success": "green bold",
    "error": "bold red",
    "header": "bold underline cyan",
    "muted": "dim",
})

# stdout is reserved for JSON; human-facing output goes to stderr
console = Console(theme=custom_theme, stderr=True)


def write(text, style=None):
    """Prints styled text using Rich console."""
    if style and style in custom_theme.styles:
        console.print(text, style=style)
    else:
        console.print(text)


def setup_logging(verbose: bool = False) -> None:
    """Route engine log records through a single RichHandler on stderr."""
    level = logging.DEBUG if verbose else logging.WARNING
    root = logging.getLogger("engine")
    for h in list(root.handlers):
        root.removeHandler(h)
    handler = RichHandler(console=console, show_path=False, rich_tracebacks=True)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root.addHandler(handler)
    root.setLevel(level)
    root.propagate = False
