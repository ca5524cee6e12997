"""
Terminal output for the command-line surface.

Machine-readable results (values, csv, json) are written plainly to stdout
so they stay byte-identical between runs; summaries, statistics and errors
go through rich.
"""

import sys
from typing import Dict, List, Optional

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn, TimeElapsedColumn
from rich.table import Table

from ..core.models import SuiteResult


class ConsoleReporter:
    """Prints results, verification summaries and errors."""

    def __init__(self):
        """Initialize reporter with rich consoles for stdout and stderr."""
        self.console = Console(highlight=False)
        self.error_console = Console(stderr=True, highlight=False)

    def write(self, text: str) -> None:
        """Write machine-readable text to stdout unchanged."""
        sys.stdout.write(text)
        if text and not text.endswith("\n"):
            sys.stdout.write("\n")

    def show_methods(self, values: Dict[str, str], agreement: Optional[bool]) -> None:
        """
        Print one line per computation path and the agreement status.

        Args:
            values: Method name -> rendered value or "skipped: <reason>"
            agreement: Whether every computed value is equal (None if under two values)
        """
        lines = [f"{method} {value}" for method, value in values.items()]
        if agreement is not None:
            lines.append(f"agreement={'true' if agreement else 'false'}")
        self.write("\n".join(lines))

    def show_suite_results(self, results: List[SuiteResult]) -> None:
        """Display a verification summary table, then notes and failures."""
        table = Table(title="Verification", show_header=True, header_style="bold cyan")
        table.add_column("Suite")
        table.add_column("Checks", justify="right")
        table.add_column("Result")
        for result in results:
            status = "[green]passed[/green]" if result.passed else "[bold red]FAILED[/bold red]"
            table.add_row(result.name, str(result.checks), status)
        self.console.print(table)

        for result in results:
            for note in result.notes:
                self.console.print(f"[dim]{result.name}:[/dim] {escape(note)}")
            if result.first_failure:
                self.console.print(Panel(
                    f"[bold red]{result.name}[/bold red]\n\n{escape(result.first_failure)}",
                    title="First failure",
                    border_style="red"
                ))

    def show_stats(self, stats: Dict[str, int], title: str = "Memo cache") -> None:
        """Display memo statistics on stderr."""
        table = Table(title=title, show_header=True, header_style="bold cyan")
        table.add_column("Counter")
        table.add_column("Value", justify="right")
        for key, value in stats.items():
            table.add_row(key, str(value))
        self.error_console.print(table)

    def progress(self) -> Progress:
        """
        Progress bar for parallel enumeration.

        Returns:
            Progress context manager on stderr
        """
        return Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TaskProgressColumn(),
            TimeElapsedColumn(),
            console=self.error_console
        )

    def display_error(self, error: Exception) -> None:
        """
        Display error message.

        Args:
            error: Exception that occurred
        """
        self.error_console.print(Panel(
            f"[bold red]Error:[/bold red]\n\n{escape(str(error))}",
            border_style="red"
        ))
