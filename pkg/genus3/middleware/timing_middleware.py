import logging
import time

from fastapi import Request
from starlette.middleware.base import BaseHTTPMiddleware

from genus3.config import settings

logger = logging.getLogger(__name__)


class TimingMiddleware(BaseHTTPMiddleware):
    async def dispatch(self, request: Request, call_next):
        started = time.perf_counter()
        response = await call_next(request)
        elapsed_ms = (time.perf_counter() - started) * 1000

        response.headers['X-Process-Time-Ms'] = f"{elapsed_ms:.1f}"
        response.headers['X-Genus3-Version'] = settings.api_version
        logger.info(f"{request.method} {request.url.path} -> {response.status_code} "
                    f"in {elapsed_ms:.1f} ms")
        return response
