import logging
from contextlib import asynccontextmanager

import uvicorn
from fastapi import Depends, FastAPI

from genus3.config import Settings, settings
from genus3.dependencies import get_settings
from genus3.middleware.timing_middleware import TimingMiddleware
from genus3.routers import classification, invariants, surfaces, verification
from genus3.services.fixtures import load_branches, load_cited_caps

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    logging.basicConfig(level=logging.DEBUG if settings.debug else settings.log_level)
    # broken fixtures fail here instead of on the first request
    load_cited_caps()
    load_branches()
    logger.info(f"{settings.api_title} {settings.api_version} ready, fixtures in {settings.fixtures_dir}")
    yield

app = FastAPI(
    title=settings.api_title,
    description="Intersection numbers and classification tables for polarized manifolds "
                "of sectional genus three",
    version=settings.api_version,
    lifespan=lifespan
)

app.add_middleware(TimingMiddleware)

app.include_router(invariants.router)
app.include_router(classification.router)
app.include_router(surfaces.router)
app.include_router(verification.router)


@app.get("/")
async def root(config: Settings = Depends(get_settings)):
    return {"message": config.api_title, "version": config.api_version, "status": "running"}


@app.get("/health")
async def health_check():
    return {"status": "healthy"}

if __name__ == '__main__':
    uvicorn.run(app, host="0.0.0.0", port=8000)
