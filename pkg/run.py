# run.py
"""
HTTP server runner.

Usage:
    python run.py           # development (auto-reload)
    python run.py --prod    # production (multiple workers)
"""
import sys
import uvicorn

from wirtinger.core.config import settings


def main() -> None:
    is_prod = "--prod" in sys.argv or "-p" in sys.argv

    if is_prod:
        print("Starting in PRODUCTION mode...")
        uvicorn.run(
            "wirtinger.main:app",
            host=settings.HOST,
            port=settings.PORT,
            workers=4,
            log_level="info",
            timeout_keep_alive=30,
        )
    else:
        print("Starting in DEVELOPMENT mode...")
        uvicorn.run(
            "wirtinger.main:app",
            host=settings.HOST,
            port=settings.PORT,
            reload=True,
            reload_dirs=["wirtinger"],
            log_level="debug",
        )


if __name__ == "__main__":
    main()
