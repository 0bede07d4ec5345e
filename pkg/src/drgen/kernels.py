"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise the pure-Python
twin. ``use_backend`` switches at runtime (tests and the benchmark exercise
both).
"""
from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_backends = {"python": _pykernels}
if _ckernels is not None:
    _backends["compiled"] = _ckernels

_active = _ckernels if _ckernels is not None else _pykernels


def available_backends() -> list[str]:
    return sorted(_backends)


def backend_name() -> str:
    return "compiled" if _active is _ckernels and _ckernels is not None else "python"


def use_backend(name: str) -> None:
    global _active
    try:
        _active = _backends[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}") from None


def dinic(n, tails, heads, caps, source, sink):
    return _active.dinic(n, tails, heads, caps, source, sink)


def hopcroft_karp(n_left, n_right, indptr, indices):
    return _active.hopcroft_karp(n_left, n_right, indptr, indices)
