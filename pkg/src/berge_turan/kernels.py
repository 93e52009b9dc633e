"""Backend dispatch for the search kernels.

The compiled core (``_ckernels``) is used when it was built and the
instance fits in 64-bit vertex masks; otherwise the pure-Python
reference kernels run.  :func:`use_backend` switches globally, which the
benchmark and the backend-equivalence tests rely on.
"""

from __future__ import annotations

from contextlib import contextmanager
from typing import Iterator, Optional, Sequence

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # pragma: no cover - depends on the build
    _ckernels = None

PATH_EXACT = _pykernels.PATH_EXACT
CYCLE_AT_LEAST = _pykernels.CYCLE_AT_LEAST
CYCLE_THROUGH = _pykernels.CYCLE_THROUGH
PATH_LONGEST = _pykernels.PATH_LONGEST

_MAX_COMPILED = 64
_active = "compiled" if _ckernels is not None else "python"


def compiled_available() -> bool:
    return _ckernels is not None


def backend_name() -> str:
    return _active


def use_backend(name: str) -> None:
    """Select ``"compiled"`` or ``"python"`` kernels for this process."""
    global _active
    if name not in ("compiled", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and _ckernels is None:
        raise RuntimeError("compiled kernels are not built")
    _active = name


@contextmanager
def backend(name: str) -> Iterator[None]:
    previous = _active
    use_backend(name)
    try:
        yield
    finally:
        use_backend(previous)


def _impl(n: int):
    if _active == "compiled" and n <= _MAX_COMPILED:
        return _ckernels
    return _pykernels


def longest_path_order(adj: Sequence[int]) -> int:
    return _impl(len(adj)).longest_path_order(adj)


def longest_cycle_order(adj: Sequence[int]) -> int:
    return _impl(len(adj)).longest_cycle_order(adj)


def longest_path_from(adj: Sequence[int], v: int, target: int = 0) -> list[int]:
    return _impl(len(adj)).longest_path_from(adj, v, target)


def longest_path_between(adj: Sequence[int], x: int, y: int) -> int:
    return _impl(len(adj)).longest_path_between(adj, x, y)


def count_cliques(adj: Sequence[int], j: int) -> int:
    return _impl(len(adj)).count_cliques(adj, j)


def pstar_bruteforce(m: int, clique_masks: Sequence[int]) -> int:
    return _impl(0).pstar_bruteforce(m, clique_masks)


def berge_search(
    n: int,
    edge_masks: Sequence[int],
    mode: int,
    k: int,
    u: int = -1,
    v: int = -1,
    twin: Optional[Sequence[int]] = None,
) -> Optional[tuple[list[int], list[int]]]:
    if twin is None:
        twin = list(range(n))
    return _impl(n).berge_search(n, list(edge_masks), mode, k, u, v, list(twin))
