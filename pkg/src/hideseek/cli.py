"""Command line client for the experiment service.

Subcommands mirror the experiment harnesses (``quantiles``, ``compare``,
``heuristic-bounds``, ``scenario-dump``) plus ``serve`` to run the HTTP
service.  By default requests are executed in-process against the service
app; ``--server URL`` sends them to a running instance instead, so outputs
are identical either way.

Option precedence: command-line flag, then config file (plain ``key = value``
lines), then the ``HIDESEEK_SEED`` environment variable (seed only), then
the built-in default.  Exit codes: 0 success, 1 configuration or argument
error, 2 numerical or server failure.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import httpx

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_FAILURE = 2

_SUBCOMMAND_PATHS = {
    "quantiles": "/api/experiments/quantiles",
    "compare": "/api/experiments/compare",
    "heuristic-bounds": "/api/experiments/heuristic-bounds",
    "scenario-dump": "/api/experiments/scenario-dump",
}

# flag name -> (parser, is_list) for experiment payload fields
_FIELDS: dict[str, tuple] = {
    "region_side": (float, False),
    "m": (int, False),
    "s": (int, False),
    "trials": (int, False),
    "alpha": (float, False),
    "deltas": (float, True),
    "beta": (float, False),
    "nbar2": (int, False),
    "n1_sweep": (int, True),
    "geometries": (int, False),
    "m_values": (int, True),
    "master_seed": (int, False),
    "workers": (int, False),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hideseek",
        description="Hider-vs-seeker sampled-game experiments.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="plain key = value config file")
    common.add_argument("--server", help="base URL of a running service; "
                                         "default runs in-process")
    common.add_argument("--output", help="write the response body here "
                                         "instead of stdout")
    common.add_argument("--region-side", type=float, dest="region_side")
    common.add_argument("--m", type=int)
    common.add_argument("--s", type=int)
    common.add_argument("--trials", type=int)
    common.add_argument("--alpha", type=float)
    common.add_argument("--deltas", help="comma-separated list")
    common.add_argument("--beta", type=float)
    common.add_argument("--nbar2", type=int)
    common.add_argument("--n1-sweep", dest="n1_sweep", help="comma-separated list")
    common.add_argument("--geometries", type=int)
    common.add_argument("--m-values", dest="m_values", help="comma-separated list")
    common.add_argument("--seed", type=int, dest="master_seed")
    common.add_argument("--workers", type=int)

    for name in _SUBCOMMAND_PATHS:
        sub.add_parser(name, parents=[common],
                       help=f"run the {name.replace('-', ' ')} experiment")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _parse_config_file(path: str) -> dict[str, str]:
    """Read ``key = value`` lines; '#' starts a comment, blank lines ignored."""
    values: dict[str, str] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        key, value = line.split("=", 1)
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def _coerce(name: str, raw: str):
    kind, is_list = _FIELDS[name]
    try:
        if is_list:
            return [kind(part) for part in raw.split(",") if part.strip()]
        return kind(raw)
    except ValueError as exc:
        raise ValueError(f"bad value for {name}: {raw!r}") from exc


def _build_payload(args: argparse.Namespace) -> dict:
    file_values: dict[str, str] = {}
    if args.config:
        file_values = _parse_config_file(args.config)
        unknown = set(file_values) - set(_FIELDS)
        if unknown:
            raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")

    payload: dict = {}
    for name in _FIELDS:
        flag_value = getattr(args, name, None)
        if flag_value is not None:
            if isinstance(flag_value, str):
                flag_value = _coerce(name, flag_value)
            payload[name] = flag_value
        elif name in file_values:
            payload[name] = _coerce(name, file_values[name])

    if "master_seed" not in payload and "HIDESEEK_SEED" in os.environ:
        raw = os.environ["HIDESEEK_SEED"]
        try:
            payload["master_seed"] = int(raw)
        except ValueError:
            raise ValueError(f"HIDESEEK_SEED must be an integer, got {raw!r}")
    return payload


def _post(server: str | None, path: str, payload: dict) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            return client.post(path, json=payload)
    # In-process request against the service app; no socket involved.
    from fastapi.testclient import TestClient

    from .service.app import app
    with TestClient(app, raise_server_exceptions=False) as client:
        return client.post(path, json=payload)


def _emit(args: argparse.Namespace, body: bytes) -> None:
    if args.output:
        Path(args.output).write_bytes(body)
    else:
        sys.stdout.write(body.decode("utf-8"))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its message; remap usage errors to 1
        return EXIT_OK if exc.code in (0, None) else EXIT_CONFIG

    if args.command == "serve":
        import uvicorn

        from .service.app import app
        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK

    try:
        payload = _build_payload(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        response = _post(args.server, _SUBCOMMAND_PATHS[args.command], payload)
    except httpx.HTTPError as exc:
        print(f"error: request failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE

    if response.status_code == 200:
        _emit(args, response.content)
        return EXIT_OK
    detail = _error_detail(response)
    print(f"error: {detail}", file=sys.stderr)
    if response.status_code in (400, 422):
        return EXIT_CONFIG
    return EXIT_FAILURE


def _error_detail(response: httpx.Response) -> str:
    try:
        return str(response.json().get("detail"))
    except Exception:
        return f"HTTP {response.status_code}"


if __name__ == "__main__":
    raise SystemExit(main())
