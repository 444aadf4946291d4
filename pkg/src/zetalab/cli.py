"""Command-line front end.

The CLI is a thin client of the HTTP service: by default it mounts the
app in-process (no socket); --server points it at a running instance
instead.  Reports and sequence rows are emitted as an aligned table,
CSV, or JSON.  Exit codes: 0 all checks passed, 1 a check failed,
2 usage/parameter error.
"""
from __future__ import annotations

import csv
import json
import sys

import click

from .checks import VERIFY_TARGETS
from .precision import DEFAULT_DIGITS
from .sequences import SEQUENCE_FAMILIES

FORMATS = ("table", "csv", "json")


def _post(server: str | None, path: str, payload: dict) -> dict:
    if server:
        import httpx

        with httpx.Client(base_url=server, timeout=600.0) as client:
            resp = client.post(path, json=payload)
    else:
        import warnings

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            from starlette.testclient import TestClient

            from .service import app

            with TestClient(app) as client:
                resp = client.post(path, json=payload)
    if resp.status_code == 422:
        detail = resp.json().get("detail")
        raise click.UsageError(
            detail if isinstance(detail, str) else json.dumps(detail)
        )
    resp.raise_for_status()
    return resp.json()


def _flatten_report(report: dict) -> dict:
    row = {"id": report["id"]}
    row["params"] = " ".join(
        f"{k}={v}" for k, v in sorted(report["params"].items())
    )
    for key in ("numeric", "reference", "residual", "tolerance", "status"):
        row[key] = report[key]
    row["runtime_ms"] = str(report["runtime_ms"])
    return row


def _emit(rows: list[dict], fmt: str, json_payload=None):
    """Write rows to stdout.  json_payload overrides the JSON rendering
    (used to pass through full nested report objects)."""
    if fmt == "json":
        click.echo(json.dumps(json_payload if json_payload is not None else rows,
                              indent=2))
        return
    if not rows:
        return
    header = list(rows[0].keys())
    if fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([row[h] for h in header])
        return
    widths = {
        h: max(len(h), *(len(str(row[h])) for row in rows)) for h in header
    }
    click.echo("  ".join(h.ljust(widths[h]) for h in header).rstrip())
    for row in rows:
        click.echo(
            "  ".join(str(row[h]).ljust(widths[h]) for h in header).rstrip()
        )


digits_option = click.option(
    "--digits", type=int, default=DEFAULT_DIGITS, envvar="ZETALAB_DIGITS",
    show_default=True, help="Posted decimal precision (env: ZETALAB_DIGITS).",
)
format_option = click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default="table",
    show_default=True, help="Output format.",
)
server_option = click.option(
    "--server", default=None, metavar="URL",
    help="Base URL of a running service (default: run in-process).",
)


@click.group()
def main():
    """Verification toolkit for hypercube integral representations of
    odd zeta values."""


@main.command()
@click.argument("target", type=click.Choice(VERIFY_TARGETS))
@click.option("--n", type=int, default=1, show_default=True)
@click.option("--r", type=int, default=1, show_default=True)
@click.option("--k", type=int, default=None, help="Family index (default 1; 2 for kontsevich).")
@click.option("--m", type=int, default=1, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True, help="Monte Carlo seed.")
@click.option("--samples", type=int, default=10 ** 6, show_default=True)
@click.option("--timings", is_flag=True, help="Include measured runtimes (breaks byte-identical reruns).")
@digits_option
@format_option
@server_option
def verify(target, n, r, k, m, seed, samples, timings, digits, fmt, server):
    """Run one verification target and report pass/fail."""
    if k is None:
        k = 2 if target == "kontsevich" else 1
    data = _post(server, "/verify", {
        "target": target, "digits": digits, "n": n, "r": r, "k": k, "m": m,
        "seed": seed, "samples": samples, "timings": timings,
    })
    reports = data["reports"]
    _emit([_flatten_report(rep) for rep in reports], fmt, json_payload=reports)
    sys.exit(0 if data["all_pass"] else 1)


@main.command()
@click.argument("family", type=click.Choice(SEQUENCE_FAMILIES))
@click.option("--k-max", type=int, default=10, show_default=True)
@click.option("--m", type=int, default=3, show_default=True, help="Z-family log power.")
@click.option("--errata", is_flag=True, help="Append the errata table.")
@digits_option
@format_option
@server_option
def sequence(family, k_max, m, errata, digits, fmt, server):
    """Emit one row per k for a sequence family."""
    data = _post(server, "/sequence", {
        "family": family, "k_max": k_max, "m": m, "digits": digits,
        "errata": errata,
    })
    if fmt == "json":
        payload = (
            {"rows": data["rows"], "errata": data["errata"]}
            if errata else data["rows"]
        )
        click.echo(json.dumps(payload, indent=2))
        return
    _emit(data["rows"], fmt)
    if errata and data.get("errata"):
        click.echo("")
        _emit(data["errata"], fmt)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
