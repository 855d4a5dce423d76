"""Command-line client for the concurrency service.

Every command builds a request, posts it to the service (in-process by
default, or a remote server via --url), and maps the response onto the exit
code contract:

    0  affirmative verdict (concurrent / found / membership holds)
    1  negative verdict
    2  input or usage error
    3  criterion and oracle disagree (reserved; should never occur)

The report written to stdout is deterministic for fixed inputs and seeds
except for the wall_time_s field.
"""

from __future__ import annotations

import asyncio
import json
import sys
import time
from pathlib import Path
from typing import Any

import click
import httpx

from .instances import payload_digest

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2
EXIT_DISAGREEMENT = 3


class ServiceClient:
    """Posts JSON to the service; in-process ASGI unless a URL is given."""

    def __init__(self, url: str | None = None):
        self.url = url

    def post(self, path: str, payload: dict) -> tuple[int, Any]:
        if self.url is not None:
            with httpx.Client(base_url=self.url, timeout=300.0) as client:
                response = client.post(path, json=payload)
            return response.status_code, response.json()
        return asyncio.run(self._post_in_process(path, payload))

    async def _post_in_process(self, path: str, payload: dict) -> tuple[int, Any]:
        from .service import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, base_url="http://cevageo") as client:
            response = await client.post(path, json=payload)
        return response.status_code, response.json()


def _read_payload(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        _fail(f"cannot read {path}: {exc}")


def _fail(message: str) -> None:
    click.echo(json.dumps({"error": "InputError", "message": message}), err=True)
    sys.exit(EXIT_ERROR)


def _emit(report: dict, out: str | None) -> None:
    text = json.dumps(report, indent=2, sort_keys=True)
    click.echo(text)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")


def _request(client: ServiceClient, path: str, payload: dict) -> tuple[dict, Any, float]:
    """Post and time one request; 4xx/5xx terminate with exit code 2."""
    started = time.perf_counter()
    status, body = client.post(path, payload)
    elapsed = time.perf_counter() - started
    if status != 200:
        detail = body.get("detail", body) if isinstance(body, dict) else body
        click.echo(json.dumps({"http_status": status, "detail": detail}), err=True)
        sys.exit(EXIT_ERROR)
    return body, status, elapsed


def _report(command: list[str], digest: str, result: Any, elapsed: float) -> dict:
    return {
        "command": command,
        "input_digest": digest,
        "result": result,
        "wall_time_s": round(elapsed, 6),
    }


@click.group()
def main() -> None:
    """Exact concurrency checks for cevian configurations."""


@main.command("check2d")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Also write the report here.")
@click.option("--url", default=None, help="Remote service URL (in-process by default).")
def check2d(input_path: str, out: str | None, url: str | None) -> None:
    """Decide concurrency for a planar triangle instance file."""
    payload = _read_payload(input_path)
    client = ServiceClient(url)
    body, _, elapsed = _request(client, "/check2d", {"instance": payload})
    report = _report(["check2d", input_path], payload_digest(payload), body, elapsed)
    _emit(report, out)
    sys.exit(EXIT_OK if body["concurrent"] else EXIT_NEGATIVE)


def _check_one(client: ServiceClient, path: str, oracle: bool) -> tuple[dict, int, float]:
    payload = _read_payload(path)
    body, _, elapsed = _request(client, "/check", {"instance": payload, "oracle": oracle})
    if oracle and body.get("oracle_agrees") is False:
        code = EXIT_DISAGREEMENT
    elif body["verdict"]:
        code = EXIT_OK
    else:
        code = EXIT_NEGATIVE
    report = _report(["check", path], payload_digest(payload), body, elapsed)
    return report, code, elapsed


@main.command("check")
@click.argument("input_path", type=click.Path(exists=True))
@click.option("--oracle", is_flag=True, help="Cross-check against the geometric oracle.")
@click.option("--batch", is_flag=True, help="Treat the input as a directory of instance files.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--url", default=None)
def check(input_path: str, oracle: bool, batch: bool, out: str | None, url: str | None) -> None:
    """Decide concurrency for a face instance file (or a directory of them)."""
    client = ServiceClient(url)
    if not batch:
        report, code, _ = _check_one(client, input_path, oracle)
        _emit(report, out)
        sys.exit(code)
    directory = Path(input_path)
    if not directory.is_dir():
        _fail(f"{input_path} is not a directory")
    files = sorted(str(p) for p in directory.glob("*.json"))
    if not files:
        _fail(f"no .json instances under {input_path}")
    reports = []
    worst = EXIT_OK
    for path in files:
        report, code, _ = _check_one(client, path, oracle)
        report["exit_code"] = code
        reports.append(report)
        worst = max(worst, code)
    _emit({"command": ["check", "--batch", input_path], "reports": reports}, out)
    sys.exit(worst)


@main.command("random")
@click.argument("n", type=int)
@click.argument("k", type=int)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--kind",
    type=click.Choice(["positive", "perturbed"]),
    default="positive",
    show_default=True,
)
@click.option("--out", type=click.Path(dir_okay=False), required=True, help="Instance file to write.")
@click.option("--url", default=None)
def random_command(n: int, k: int, seed: int, kind: str, out: str, url: str | None) -> None:
    """Generate a seeded instance with known ground truth and write it."""
    client = ServiceClient(url)
    body, _, elapsed = _request(
        client, "/random", {"n": n, "k": k, "seed": seed, "kind": kind}
    )
    instance = body["instance"]
    text = json.dumps(instance, indent=2, sort_keys=True) + "\n"
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        _fail(f"cannot write {out}: {exc}")
    report = _report(
        ["random", str(n), str(k), f"--seed={seed}", f"--kind={kind}"],
        payload_digest(instance),
        {"label": body["label"], "out": out},
        elapsed,
    )
    _emit(report, None)
    sys.exit(EXIT_OK)


@main.group("dp6")
def dp6() -> None:
    """Blowup-surface membership and lifting for line triples."""


@dp6.command("check")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--url", default=None)
def dp6_check(input_path: str, out: str | None, url: str | None) -> None:
    """Check the surface and hypersurface equations for a (x, d, e, f) file."""
    payload = _read_payload(input_path)
    client = ServiceClient(url)
    body, _, elapsed = _request(client, "/dp6/check", payload)
    report = _report(["dp6", "check", input_path], payload_digest(payload), body, elapsed)
    _emit(report, out)
    membership = body["on_surface"] if body["on_surface"] is not None else body["on_hypersurface"]
    sys.exit(EXIT_OK if membership else EXIT_NEGATIVE)


@dp6.command("lift")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--url", default=None)
def dp6_lift(input_path: str, out: str | None, url: str | None) -> None:
    """Recover the plane point over a (d, e, f) triple, when one exists."""
    payload = _read_payload(input_path)
    client = ServiceClient(url)
    body, _, elapsed = _request(client, "/dp6/lift", payload)
    report = _report(["dp6", "lift", input_path], payload_digest(payload), body, elapsed)
    _emit(report, out)
    sys.exit(EXIT_OK if body["status"] == "ok" else EXIT_NEGATIVE)


@main.command("rank-search")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--r", "r", type=int, required=True, help="Target projective dimension of the transversal.")
@click.option("--tol", type=float, default=1e-8, show_default=True)
@click.option("--max-iter", type=int, default=500, show_default=True)
@click.option("--restarts", type=int, default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--url", default=None)
def rank_search(
    input_path: str,
    r: int,
    tol: float,
    max_iter: int,
    restarts: int,
    seed: int,
    out: str | None,
    url: str | None,
) -> None:
    """Search for a rank-(r+1) completion; Found is a verified certificate,
    a miss only means the budget ran out."""
    payload = _read_payload(input_path)
    client = ServiceClient(url)
    body, _, elapsed = _request(
        client,
        "/rank-search",
        {
            "instance": payload,
            "r": r,
            "tol": tol,
            "max_iter": max_iter,
            "restarts": restarts,
            "seed": seed,
        },
    )
    report = _report(
        ["rank-search", input_path, f"--r={r}"], payload_digest(payload), body, elapsed
    )
    _emit(report, out)
    if body["status"] != "found":
        click.echo("not found within budget; this does not prove infeasibility", err=True)
    sys.exit(EXIT_OK if body["status"] == "found" else EXIT_NEGATIVE)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("cevageo.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
