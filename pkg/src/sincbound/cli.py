"""Command-line front end.

    sincbound sweep  --example f1 --variant se --n-min 4 --n-max 100 --n-step 4
    sincbound bound  --example f3 --variant de --n-min 10 --n-max 10
    sincbound verify
    sincbound grid   --interval half

Exit status: 0 on success, 1 on a domain or precondition error (or a
failed lemma check), 2 on an I/O error.
"""
from __future__ import annotations

import io
import sys

import click

from . import experiments, verify as verify_mod
from .errors import SincError
from .theory import error_bound, bound_value

CSV_HEADER = ("n", "h", "M", "N", "max_error", "bound", "transform")


def fmt(x) -> str:
    return "" if x is None else format(x, ".17g")


def sweep_csv(records) -> str:
    buf = io.StringIO()
    buf.write(",".join(CSV_HEADER) + "\n")
    for r in records:
        row = (str(r.n), fmt(r.h), str(r.M), str(r.N), fmt(r.max_error), fmt(r.bound), r.transform)
        buf.write(",".join(row) + "\n")
    return buf.getvalue()


def _emit(text: str, output: str) -> None:
    if output == "-":
        click.echo(text, nl=False)
        return
    with open(output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _n_values(n_min, n_max, n_step):
    if n_min < 1 or n_step < 1 or n_min > n_max:
        raise click.UsageError("need 1 <= n-min <= n-max and n-step >= 1")
    return list(range(n_min, n_max + 1, n_step))


class _ExitOnError(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except SincError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(1)
        except OSError as exc:
            click.echo(f"I/O error: {exc}", err=True)
            ctx.exit(2)


_example = click.option(
    "--example", type=click.Choice(["f1", "f2", "f3", "f4"]), default="f1", show_default=True
)
_variant = click.option("--variant", type=click.Choice(["se", "de"]), default="se", show_default=True)
_n_min = click.option("--n-min", type=int, default=4, show_default=True)
_n_max = click.option("--n-max", type=int, default=100, show_default=True)
_n_step = click.option("--n-step", type=int, default=2, show_default=True)
_output = click.option("--output", "-o", default="-", show_default=True, help="File path, or - for stdout.")


@click.group(cls=_ExitOnError)
def main():
    """Explicit error bounds for SE/DE-Sinc approximation."""


@main.command()
@_example
@_variant
@_n_min
@_n_max
@_n_step
@_output
@click.option(
    "--precision", type=click.Choice(["auto", "double", "extended"]), default="auto", show_default=True,
    help="Arithmetic for the error measurement.",
)
def sweep(example, variant, n_min, n_max, n_step, output, precision):
    """Measure max errors over n and write CSV records."""
    records = experiments.sweep(example, variant, _n_values(n_min, n_max, n_step), precision)
    _emit(sweep_csv(records), output)


@main.command()
@_example
@_variant
@_n_min
@_n_max
@_n_step
@_output
def bound(example, variant, n_min, n_max, n_step, output):
    """Print n, the constant C and the bound C*rate(n), one line per n."""
    ex = experiments.example(example)
    cls = ex.se_class if variant == "se" else ex.de_class
    if cls is None:
        click.echo(
            f"error: {example} does not satisfy the DE case-1 assumptions "
            "(it is analytic on no strip of the DE1 image); no explicit bound exists",
            err=True,
        )
        sys.exit(1)
    b = error_bound(cls)
    lines = [f"{n},{fmt(b.constant)},{fmt(bound_value(b, n))}\n" for n in _n_values(n_min, n_max, n_step)]
    _emit("".join(lines), output)


@main.command()
@click.option("--count", type=int, default=100_000, show_default=True, help="Random points per lemma.")
@click.option("--seed", type=int, default=0, show_default=True)
def verify(count, seed):
    """Check the auxiliary inequalities on random and edge-case inputs."""
    reports = verify_mod.run_all(count=count, seed=seed)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        click.echo(f"{status} {r.name}: {r.checked - len(r.failures)}/{r.checked}")
    if not all(r.passed for r in reports):
        sys.exit(1)


@main.command()
@click.option("--interval", type=click.Choice(["whole", "half"]), default="whole", show_default=True)
@_output
def grid(interval, output):
    """Dump the evaluation grid (403 points on the line, 201 on the half line)."""
    pts = experiments.whole_line_grid() if interval == "whole" else experiments.half_line_grid()
    _emit("".join(fmt(t) + "\n" for t in pts), output)


if __name__ == "__main__":
    main()
