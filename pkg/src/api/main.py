from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from .routes import groups, refiners, search
from ..config import settings

app = FastAPI(
    title="Refinery",
    description="Backtrack search for stabilisers, transporters and normalisers in Sym(n)",
    version="1.0.0",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(search.router, prefix="/api/v1/search", tags=["search"])
app.include_router(groups.router, prefix="/api/v1/groups", tags=["groups"])
app.include_router(refiners.router, prefix="/api/v1/refiners", tags=["refiners"])


@app.get("/")
async def root():
    return {"message": "Refinery API", "version": "1.0.0"}


@app.get("/health")
async def health_check():
    return {"status": "healthy", "environment": settings.environment, "oracle_cap": settings.oracle_cap}


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host=settings.host, port=settings.port)
