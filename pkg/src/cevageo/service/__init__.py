"""FastAPI application exposing the geometry core to any number of clients."""

from __future__ import annotations

from fastapi import FastAPI

from .. import __version__


def create_app() -> FastAPI:
    from .routes import router

    app = FastAPI(
        title="cevageo",
        description="Exact concurrency checks for cevian spans of a simplex",
        version=__version__,
    )
    app.include_router(router)
    return app


app = create_app()
