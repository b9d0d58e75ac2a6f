"""MCP server exposing the homology computations as tools, over SSE."""

import json
import logging
import os
import time

import uvicorn
from mcp.server import Server
from mcp.server.sse import SseServerTransport
from mcp.types import TextContent, Tool
from starlette.responses import JSONResponse
from starlette.types import Receive, Scope, Send

from artin_homology.config import DEFAULT_SEED, Limits, RunConfig
from artin_homology.coxmat import even_presentation, parse_matrix
from artin_homology.errors import ArtinHomologyError
from artin_homology.logging import extract_stats, format_check_log, get_logger, setup_logging, summarize_matrix
from artin_homology import reports

logger = get_logger("server")

_MATRIX = {"type": "string", "description": "Coxeter matrix document, e.g. 'n=2; 1 2 4'"}
_GROUP = {"type": "string", "enum": ["artin", "coxeter"], "default": "artin"}

# tool name -> command name used in logs and extract_stats
_COMMANDS = {
    "validate": "validate",
    "h1": "h1",
    "h2": "h2",
    "cup": "cup",
    "pontryagin": "pontryagin",
    "relator_class": "class",
    "verify": "verify",
}


def _tools() -> list[Tool]:
    return [
        Tool(
            name="validate",
            description="Parse a Coxeter matrix and report its labels, B and canonical form",
            inputSchema={"type": "object", "properties": {"matrix": _MATRIX}, "required": ["matrix"]},
        ),
        Tool(
            name="h1",
            description="Basis of H_1 of the even Artin group, or invariants of H_1 of the Coxeter group",
            inputSchema={
                "type": "object",
                "properties": {"matrix": _MATRIX, "group": _GROUP},
                "required": ["matrix"],
            },
        ),
        Tool(
            name="h2",
            description="Basis of H_2 with representative commutator words",
            inputSchema={
                "type": "object",
                "properties": {"matrix": _MATRIX, "group": _GROUP},
                "required": ["matrix"],
            },
        ),
        Tool(
            name="cup",
            description="Cup product table on H^1 of the even Artin group",
            inputSchema={"type": "object", "properties": {"matrix": _MATRIX}, "required": ["matrix"]},
        ),
        Tool(
            name="pontryagin",
            description="Commuting pairs whose Pontryagin products form the H_2 basis",
            inputSchema={
                "type": "object",
                "properties": {"matrix": _MATRIX, "group": _GROUP},
                "required": ["matrix"],
            },
        ),
        Tool(
            name="relator_class",
            description="H_2 coordinates of a product of conjugated relators",
            inputSchema={
                "type": "object",
                "properties": {
                    "matrix": _MATRIX,
                    "factors": {
                        "type": "string",
                        "description": "One factor per line: pair=(i,j) exp=+-1 conj=<word>",
                    },
                },
                "required": ["matrix", "factors"],
            },
        ),
        Tool(
            name="verify",
            description="Run the invariant suite, including the finite-group oracle when it applies",
            inputSchema={
                "type": "object",
                "properties": {"matrix": _MATRIX, "seed": {"type": "integer"}},
                "required": ["matrix"],
            },
        ),
    ]


def _matrix_summary(text: str) -> str:
    try:
        return summarize_matrix(even_presentation(text))
    except ArtinHomologyError:
        return "-"


def dispatch(name: str, arguments: dict, limits: Limits, seed: int) -> dict:
    """Run one tool synchronously; raises on bad input."""
    if name not in _COMMANDS:
        raise KeyError(name)
    text = arguments["matrix"]
    if name == "validate":
        return reports.validate_report(parse_matrix(text))
    p = even_presentation(text)
    group = arguments.get("group", "artin")
    if group not in ("artin", "coxeter"):
        raise ValueError(f"Unknown group kind: {group}")
    if name == "h1":
        return reports.h1_report(p, group)
    if name == "h2":
        return reports.h2_report(p, group)
    if name == "cup":
        return reports.cup_report(p)
    if name == "pontryagin":
        return reports.pontryagin_report(p, group, limits)
    if name == "relator_class":
        return reports.class_report(p, arguments["factors"])
    return reports.verify_report(p, limits, int(arguments.get("seed", seed)))


def create_server(limits: Limits | None = None, seed: int = DEFAULT_SEED) -> Server:
    """Create and configure the MCP server.

    Args:
        limits: Resource caps applied to every tool call.
        seed: Default seed for ``verify`` when a call does not pass one.

    Returns:
        Configured MCP Server instance.
    """
    server = Server("artin-homology")
    _limits = limits or Limits()

    @server.list_tools()
    async def list_tools() -> list[Tool]:
        return _tools()

    @server.call_tool()
    async def call_tool(name: str, arguments: dict) -> list[TextContent]:
        start_time = time.time()
        command = _COMMANDS.get(name, name)
        logger.debug(format_check_log(command, "-", None, f"args: {json.dumps(arguments)}", "started", 0))

        if name not in _COMMANDS:
            return [TextContent(type="text", text=f"Unknown tool: {name}")]

        try:
            result = dispatch(name, arguments, _limits, seed)
        except (ArtinHomologyError, ValueError, KeyError) as e:
            duration_ms = int((time.time() - start_time) * 1000)
            code = getattr(e, "code", "INVALID_INPUT")
            message = getattr(e, "message", str(e))
            logger.warning(format_check_log(command, "-", None, "-", "error", duration_ms, f"[{code}] {message}"))
            return [TextContent(type="text", text=f"Error [{code}]: {message}")]
        except Exception as e:
            duration_ms = int((time.time() - start_time) * 1000)
            logger.error(format_check_log(command, "-", None, "-", "error", duration_ms, str(e)))
            return [TextContent(type="text", text=f"Error [INTERNAL_ERROR]: {e}")]

        duration_ms = int((time.time() - start_time) * 1000)
        matrix = _matrix_summary(arguments["matrix"])
        logger.info(format_check_log(command, matrix, None, extract_stats(command, result), "success", duration_ms))
        return [TextContent(type="text", text=json.dumps({"schema": reports.SCHEMA, **result}))]

    return server


async def send_json_response(scope: Scope, receive: Receive, send: Send, status: int, data: dict) -> None:
    """Send a JSON response."""
    await JSONResponse(data, status_code=status)(scope, receive, send)


def create_app(limits: Limits | None = None, seed: int = DEFAULT_SEED):
    """Create the ASGI application."""
    sse = SseServerTransport("/messages")

    async def handle_sse(scope: Scope, receive: Receive, send: Send) -> None:
        server = create_server(limits, seed)
        async with sse.connect_sse(scope, receive, send) as streams:
            await server.run(
                streams[0], streams[1], server.create_initialization_options()
            )

    async def handle_messages(scope: Scope, receive: Receive, send: Send) -> None:
        await sse.handle_post_message(scope, receive, send)

    async def app(scope: Scope, receive: Receive, send: Send) -> None:
        if scope["type"] != "http":
            return

        path = scope["path"]
        method = scope["method"]

        if path == "/health" and method == "GET":
            await send_json_response(scope, receive, send, 200, {"status": "ok"})
        elif path == "/sse" and method == "GET":
            await handle_sse(scope, receive, send)
        elif path == "/messages" and method == "POST":
            await handle_messages(scope, receive, send)
        else:
            await send_json_response(scope, receive, send, 404, {"error": "Not found"})

    return app


class UvicornAccessFilter(logging.Filter):
    """Suppress uvicorn access logs unless LOG_LEVEL is DEBUG."""

    def filter(self, record: logging.LogRecord) -> bool:
        return os.environ.get("LOG_LEVEL", "INFO").upper() == "DEBUG"


def run_server(cfg: RunConfig) -> None:
    """Serve the tools until interrupted."""
    setup_logging()
    logging.getLogger("uvicorn.access").addFilter(UvicornAccessFilter())

    logger.info(f"Starting artin-homology SSE server on port {cfg.port}")
    logger.info(f"  SSE endpoint: http://{cfg.host}:{cfg.port}/sse")
    logger.info(f"  Messages endpoint: http://{cfg.host}:{cfg.port}/messages")

    app = create_app(cfg.limits, cfg.seed)

    log_config = uvicorn.config.LOGGING_CONFIG
    log_config["formatters"]["default"]["fmt"] = "%(message)s"
    log_config["formatters"]["access"]["fmt"] = "%(message)s"

    uvicorn.run(app, host=cfg.host, port=cfg.port, log_config=log_config)
