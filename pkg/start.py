#!/usr/bin/env python3
"""
Refinery startup script
Runs the API server, the tree-size benchmark, or a single command-line query
"""
import logging
import sys
from pathlib import Path

# Add src to path
sys.path.append(str(Path(__file__).parent / "src"))

from src.config import settings

logging.basicConfig(level=settings.log_level.upper())
logger = logging.getLogger(__name__)


def run_benchmark(path=None) -> bool:
    """Print plain and refined tree sizes for every benchmark query"""
    from src.search.benchmark import run_benchmark as benchmark_rows

    try:
        rows = benchmark_rows(path)
    except (ValueError, OSError) as e:
        logger.error(f"Benchmark failed: {e}")
        return False
    for row in rows:
        print(
            f"{row.name}: n={row.degree} plain={row.plain_nodes} refined={row.refined_nodes} "
            f"perfect={str(row.perfect).lower()} order={row.order}"
        )
    return all(row.monotone for row in rows)


def health_check() -> bool:
    """Solve a known stabiliser and compare its order"""
    from src.encoders.factory import Query
    from src.models import QueryVerb, SourceKind
    from src.search.queries import solve_query

    logger.info("Performing health check...")
    try:
        q = Query(QueryVerb.STABILISER, SourceKind.SET_OF_SETS, 4, frozenset({frozenset({1, 4}), frozenset({2, 3})}))
        order = solve_query(q).order()
    except ValueError as e:
        logger.error(f"Health check failed: {e}")
        return False
    logger.info(f"Stabiliser of {{{{1,4}},{{2,3}}}} has order {order}")
    return order == 8


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Refinery system manager")
    parser.add_argument("--health", action="store_true", help="Run health check")
    parser.add_argument("--start", action="store_true", help="Start the API server")
    parser.add_argument("--benchmark", nargs="?", const="", default=None, help="Run the benchmark (optional query file)")
    parser.add_argument("--cli", nargs=argparse.REMAINDER, help="Run one command-line query")

    args = parser.parse_args()

    if args.cli is not None:
        from src.cli import run

        sys.exit(run(args.cli))
    elif args.health:
        sys.exit(0 if health_check() else 1)
    elif args.benchmark is not None:
        sys.exit(0 if run_benchmark(args.benchmark or None) else 1)
    elif args.start:
        logger.info("Starting Refinery API server...")
        import uvicorn
        from src.api.main import app

        uvicorn.run(app, host=settings.host, port=settings.port, log_level=settings.log_level.lower())
    else:
        print("Refinery - backtrack search in Sym(n)")
        print("Usage:")
        print("  python start.py --start                 # Start API server")
        print("  python start.py --health                # Run health check")
        print("  python start.py --benchmark [FILE]      # Tree sizes with and without refiners")
        print('  python start.py --cli stab --degree 6 --kind perm-conj --object "(1 2)(3 6 5)"')
