"""Hot-loop kernels: compiled when available, pure Python otherwise.

The backend is chosen once at import. Setting ``ECWALK_PURE_PYTHON=1``
forces the pure-Python kernels. Calls whose modulus is beyond the compiled
kernel's word size always run on the pure-Python kernels.
"""

import os

from . import _pykernels

try:
    if os.environ.get("ECWALK_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python kernels forced by ECWALK_PURE_PYTHON")
    from . import _ckernels as _compiled
except ImportError:
    _compiled = None

BACKEND = _compiled.NAME if _compiled is not None else _pykernels.NAME


def _for(p):
    if _compiled is not None and p < _compiled.MAX_MODULUS:
        return _compiled
    return _pykernels


def walk(p, a, gx, gy, target, max_adds):
    return _for(p).walk(p, a, gx, gy, target, max_adds)


def count_points(p, a, b):
    return _for(p).count_points(p, a, b)


def available_backends():
    """Kernel modules that can be imported in this environment, by name."""
    backends = {_pykernels.NAME: _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        backends[_ckernels.NAME] = _ckernels
    return backends
