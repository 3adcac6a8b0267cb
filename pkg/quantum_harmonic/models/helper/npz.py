from pathlib import Path


def npz_path(path) -> Path:
    """The file ``numpy.savez`` actually writes for ``path``."""
    path = Path(path)
    if path.suffix == ".npz":
        return path
    return path.with_name(path.name + ".npz")
