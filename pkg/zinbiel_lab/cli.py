"""
Rich-based rendering for zinbiel-lab.

JSON is the machine interface on stdout; the views here are for people:
the catalog index, invariant reports and the current configuration.
Progress logging goes to a stderr console so piped JSON stays clean.
"""

from typing import Callable

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from . import __version__
from .config import Config, get_config_dir


console = Console()
err_console = Console(stderr=True)


def print_header(title: str = ""):
    """Print application header."""
    suffix = f" [dim]{title}[/]" if title else ""
    console.print(Panel.fit(f"[bold cyan]zinbiel-lab[/] v{__version__}{suffix}", border_style="cyan"))
    console.print()


def make_logger(verbose: bool) -> Callable[[str], None]:
    """Log callback for AlgebraLab; silent unless verbose."""
    if not verbose:
        return lambda msg: None
    return lambda msg: err_console.print(f"[dim]{msg}[/]", highlight=False)


def _flag(value) -> str:
    if value is True or value == "yes":
        return "[green]yes[/]"
    if value is False or value == "no":
        return "[red]no[/]"
    if value is None:
        return "[yellow]n/a[/]"
    return f"[yellow]{value}[/]"


def show_catalog(families: list):
    """Catalog index with parameters and citations."""
    print_header("catalog")
    table = Table(title="Families", border_style="blue")
    table.add_column("Family", style="cyan", no_wrap=True)
    table.add_column("Dims")
    table.add_column("Params")
    table.add_column("Citation")

    for family in families:
        dims = "({}|{})".format(*family["dims"]) if family["dims"] else "[dim]any[/]"
        table.add_row(family["family"], dims, ", ".join(family["params"]) or "-", family["citation"])

    console.print(table)
    console.print()


def _render(value) -> str:
    if isinstance(value, list):
        return "(" + ", ".join(_render(v) for v in value) + ")"
    if value is None:
        return "[yellow]n/a[/]"
    return str(value)


def show_report(payload: dict):
    """Invariant report of one algebra."""
    print_header(payload["name"])

    table = Table(title="Properties", show_header=False, border_style="blue")
    table.add_column("Key", style="cyan")
    table.add_column("Value")
    table.add_row("Graded dims", "({}|{})".format(*payload["dims"]))
    table.add_row("Zinbiel", _flag(payload["zinbiel"]))
    table.add_row("Right supercommutative", _flag(payload["right_supercommutative"]))
    table.add_row("Null-filiform", _flag(payload["null_filiform"]))
    if "filiform" in payload:
        table.add_row("Filiform", _flag(payload["filiform"]))
    console.print(table)
    console.print()

    invariants = Table(title="Invariants", show_header=False, border_style="green")
    invariants.add_column("Invariant", style="cyan")
    invariants.add_column("Value")
    for name, value in payload["invariants"].items():
        invariants.add_row(name.replace("_", " "), _render(value))
    console.print(invariants)
    console.print()


def show_config(config: Config):
    """Display current configuration."""
    table = Table(title="Configuration", show_header=False, border_style="green")
    table.add_column("Setting", style="cyan")
    table.add_column("Value")

    table.add_row("Seed", str(config.seed))
    table.add_row("Candidate Samples", str(config.candidate_samples))
    table.add_row("Candidate Steps", ", ".join(config.get_steps()) or "[yellow](none)[/]")
    table.add_row("Family Samples", str(config.family_samples))
    table.add_row("Cross-check Samples", str(config.crossval_samples))
    table.add_row("Transport Samples", str(config.transport_samples))
    table.add_row("JSON Indent", "compact" if config.json_indent is None else str(config.json_indent))
    table.add_row("Verbose", "[green]Yes[/]" if config.verbose else "[red]No[/]")

    console.print(table)
    console.print()
    console.print(f"[dim]Config file: {get_config_dir() / 'config.json'}[/]")
    console.print()
