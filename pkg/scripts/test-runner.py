#!/usr/bin/env python3
"""Staged test runner with a live progress table.

Stages run in order and stop at the first failure: unit tests, the fast
acceptance runs, then the order-16 bar-complex runs marked ``slow``.
"""

import argparse
import os
import re
import subprocess
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from rich.console import Console
from rich.live import Live
from rich.table import Table
from rich.text import Text

PYTEST = ["uv", "run", "pytest", "-q", "--tb=short"]

COLLECTED = re.compile(r"collected (\d+) items?")
PROGRESS = re.compile(r"\[\s*(\d+)%\]")
PASSED = re.compile(r"(\d+) passed")
FAILED = re.compile(r"(\d+) failed")
NODE = re.compile(r"(tests/\S+::\S+)")


@dataclass
class Stage:
    name: str
    args: list[str]
    state: str = "pending"  # pending | running | passed | failed
    total: int = 0
    percent: int = 0
    passed: int = 0
    failed: int = 0
    current: str = ""
    seconds: float = 0.0
    output: list[str] = field(default_factory=list)

    def feed(self, line: str) -> None:
        self.output.append(line)
        if m := COLLECTED.search(line):
            self.total = int(m.group(1))
        if m := PROGRESS.search(line):
            self.percent = int(m.group(1))
        if m := NODE.search(line):
            self.current = m.group(1)
        if m := PASSED.search(line):
            self.passed = int(m.group(1))
        if m := FAILED.search(line):
            self.failed = int(m.group(1))


ICONS = {
    "pending": Text("○", style="dim"),
    "running": Text("●", style="yellow"),
    "passed": Text("✓", style="green"),
    "failed": Text("✗", style="red"),
}


def render(stages: list[Stage]) -> Table:
    table = Table(show_header=False, box=None, padding=(0, 1))
    table.add_column("", width=3)
    table.add_column("stage", width=22)
    table.add_column("progress", width=34)
    table.add_column("time", width=8)
    for stage in stages:
        if stage.state == "running":
            filled = stage.percent // 5
            progress = Text(f"{'━' * filled}{'░' * (20 - filled)} {stage.percent:3d}%")
            if stage.current:
                progress.append(f"\n      → {stage.current[:40]}", style="dim")
        elif stage.state == "pending":
            progress = Text("pending", style="dim")
        elif stage.state == "passed":
            progress = Text(f"{stage.passed} passed", style="green")
        else:
            progress = Text(f"{stage.passed} passed, {stage.failed} failed", style="red")
        elapsed = Text(f"{stage.seconds:.1f}s", style="dim") if stage.seconds else Text("")
        table.add_row(ICONS[stage.state], stage.name, progress, elapsed)
    return table


def run_stage(stage: Stage, stages: list[Stage], live: Live, root: Path, verbose: bool, console: Console) -> bool:
    stage.state = "running"
    live.update(render(stages))
    env = {**os.environ, "PYTHONUNBUFFERED": "1"}
    start = time.time()
    try:
        process = subprocess.Popen(
            PYTEST + stage.args,
            stdout=subprocess.PIPE,
            stderr=subprocess.STDOUT,
            text=True,
            cwd=root,
            env=env,
        )
        for line in process.stdout:
            stage.feed(line.rstrip())
            stage.seconds = time.time() - start
            live.update(render(stages))
            if verbose:
                console.print(line.rstrip(), markup=False)
        process.wait()
        ok = process.returncode == 0
    except OSError as e:
        stage.output.append(str(e))
        ok = False
    stage.seconds = time.time() - start
    stage.state = "passed" if ok else "failed"
    live.update(render(stages))
    return ok


def main() -> None:
    parser = argparse.ArgumentParser(description="Run the test stages with a progress display")
    parser.add_argument("-v", "--verbose", action="store_true", help="echo pytest output")
    parser.add_argument("--unit-only", action="store_true", help="stop after the unit tests")
    parser.add_argument("--skip-slow", action="store_true", help="leave out the order-16 runs")
    args = parser.parse_args()

    stages = [Stage("Unit tests", ["tests/unit", "-m", "not slow"])]
    if not args.unit_only:
        stages.append(Stage("Acceptance", ["tests/integration", "-m", "not slow"]))
        if not args.skip_slow:
            stages.append(Stage("Order-16 oracle", ["tests", "-m", "slow"]))

    console = Console()
    root = Path(__file__).parent.parent
    console.print()
    with Live(render(stages), console=console, refresh_per_second=4) as live:
        for stage in stages:
            if not run_stage(stage, stages, live, root, args.verbose, console):
                break
    console.print()

    failed = [s for s in stages if s.state == "failed"]
    if not failed:
        console.print("[green]All stages passed[/green]")
        sys.exit(0)
    for stage in failed:
        console.print(f"[red]Failures in {stage.name}:[/red]")
        for line in stage.output[-20:]:
            console.print(f"  {line}", markup=False)
    sys.exit(1)


if __name__ == "__main__":
    main()
