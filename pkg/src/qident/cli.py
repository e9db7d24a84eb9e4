"""Command-line front end.

The CLI is a thin HTTP client for the service in service.py.  By default
it mounts the app in process through an ASGI transport, so no socket is
opened and no server needs to be running; --server points the same client
at a live instance instead.

Exit codes: 0 success (verify: all cases passed), 1 verify found a
counterexample, 2 usage or parse error (bad arguments, HTTP 4xx,
unreachable server), 3 internal arithmetic error (HTTP 5xx).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_ARITHMETIC = 3

_FORMATS = ("pretty", "coeffs", "json")


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=_FORMATS,
        default="pretty",
        help="pretty = readable polynomial, coeffs = integers from q^0 up, json = {var, coeffs}",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qident",
        description="Exact q-series kernel: Gaussian binomials, identity sweeps, oracles.",
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="base URL of a running service (default: run the service in process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qbin", help="print the Gaussian binomial [n, k]")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    _add_format(p)

    p = sub.add_parser("verify", help="sweep an identity and report as JSON")
    p.add_argument("identity", help="identity ID, or 'all'")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-max", type=int, default=None)

    p = sub.add_parser("series", help="truncated series coefficients")
    p.add_argument("kind", choices=("rr1", "rr2", "euler"))
    p.add_argument("--order", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("eval", help="evaluate a mini-language expression")
    p.add_argument("expr")
    p.add_argument(
        "--bind",
        action="append",
        default=[],
        metavar="NAME=INT",
        help="bind a free variable (repeatable)",
    )
    _add_format(p)

    p = sub.add_parser("oracle", help="run a brute-force partition-counting oracle")
    p.add_argument("kind", choices=("box", "rr1", "rr2"))
    p.add_argument("--n", type=int, default=None, help="box: row bound n")
    p.add_argument("--k", type=int, default=None, help="box: column bound k")
    p.add_argument("--order", type=int, default=None, help="rr1/rr2: truncation order")
    _add_format(p)

    p = sub.add_parser("serve", help="run the HTTP service on a socket")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


async def _request(server: str | None, method: str, path: str, payload: dict | None) -> httpx.Response:
    if server is None:
        from . import service

        transport = httpx.ASGITransport(app=service.app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://qident.internal", timeout=None
        ) as client:
            return await client.request(method, path, json=payload)
    async with httpx.AsyncClient(base_url=server, timeout=None) as client:
        return await client.request(method, path, json=payload)


def _call(server: str | None, method: str, path: str, payload: dict | None = None) -> httpx.Response:
    return asyncio.run(_request(server, method, path, payload))


def _print_poly(data: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"var": data["var"], "coeffs": data["coeffs"]}))
    elif fmt == "coeffs":
        print(" ".join(data["coeffs"]))
    else:
        print(data["pretty"])


def _fail(response: httpx.Response) -> int:
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = response.text
    rendered = json.dumps(detail) if isinstance(detail, (dict, list)) else detail
    print(f"error: {rendered}", file=sys.stderr)
    return EXIT_ARITHMETIC if response.status_code >= 500 else EXIT_USAGE


def _parse_bindings(pairs: list[str]) -> dict[str, int]:
    bindings: dict[str, int] = {}
    for pair in pairs:
        name, eq, value = pair.partition("=")
        if not eq or not name:
            raise ValueError(f"--bind expects NAME=INT, got {pair!r}")
        bindings[name] = int(value)
    return bindings


def _poly_command(args: argparse.Namespace, path: str, payload: dict) -> int:
    response = _call(args.server, "POST", path, payload)
    if response.status_code != 200:
        return _fail(response)
    _print_poly(response.json(), args.format)
    return EXIT_OK


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "serve":
        import uvicorn

        from . import service

        uvicorn.run(service.app, host=args.host, port=args.port)
        return EXIT_OK

    if args.command == "qbin":
        return _poly_command(args, "/qbin", {"n": args.n, "k": args.k})

    if args.command == "series":
        return _poly_command(args, "/series", {"kind": args.kind, "order": args.order})

    if args.command == "eval":
        try:
            bindings = _parse_bindings(args.bind)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        return _poly_command(args, "/eval", {"expr": args.expr, "bindings": bindings})

    if args.command == "oracle":
        payload: dict = {"kind": args.kind}
        for field in ("n", "k", "order"):
            value = getattr(args, field)
            if value is not None:
                payload[field] = value
        return _poly_command(args, "/oracle", payload)

    # verify
    payload = {"identity": args.identity, "n_max": args.n_max}
    if args.k_max is not None:
        payload["k_max"] = args.k_max
    response = _call(args.server, "POST", "/verify", payload)
    if response.status_code != 200:
        return _fail(response)
    body = response.json()
    if args.identity == "all":
        print(json.dumps(body, indent=2))
    else:
        print(json.dumps(body["reports"][0], indent=2))
    return EXIT_OK if body["passed"] else EXIT_COUNTEREXAMPLE


def main(argv: list[str]) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except httpx.TransportError as exc:
        print(f"error: cannot reach server: {exc}", file=sys.stderr)
        return EXIT_USAGE


def app_main() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    app_main()
