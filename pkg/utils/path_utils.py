from pathlib import Path


def get_app_root():
    """Root directory of the repository (the parent of utils/)."""
    return Path(__file__).resolve().parents[1]


def ensure_directory(directory_path):
    """Create directory_path (str or Path) and its parents if missing; returns the Path."""
    path = Path(directory_path)
    path.mkdir(parents=True, exist_ok=True)
    return path


def get_data_path(subpath=None, data_dir="data"):
    """
    Get a path inside the data directory.

    A relative data_dir is taken relative to the repository root.

    Args:
        subpath: Optional file or subdirectory within the data directory
        data_dir: Data directory name or path

    Returns:
        Path object for the requested data location
    """
    data_path = Path(data_dir)
    if not data_path.is_absolute():
        data_path = get_app_root() / data_path
    ensure_directory(data_path)

    if subpath:
        full_path = data_path / subpath
        ensure_directory(full_path.parent)
        return full_path
    return data_path
