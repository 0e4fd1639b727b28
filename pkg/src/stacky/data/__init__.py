from pathlib import Path

ASSETS = Path(__file__).parent / "assets"

def asset_path(name: str) -> Path:
    """Path of a packaged example document, e.g. asset_path("triangle")."""
    return ASSETS / f"{name}.json"

__all__ = ["ASSETS", "asset_path"]
