"""Backend selection for the bitmask kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module is loaded. Set ``THETAEXT_BACKEND=python`` to force the fallback.
"""

import os

if os.environ.get("THETAEXT_BACKEND", "").lower() == "python":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        from . import _kernels_py as _impl

BACKEND = "compiled" if _impl.__name__.endswith("._kernels") else "python"

hits = _impl.hits
spread = _impl.spread
hull_chain = _impl.hull_chain
closed_hull_tables = _impl.closed_hull_tables
shrink = _impl.shrink
image = _impl.image
maps_into = _impl.maps_into
extensions = _impl.extensions
family_violation = _impl.family_violation

__all__ = [
    "BACKEND",
    "hits",
    "spread",
    "hull_chain",
    "closed_hull_tables",
    "shrink",
    "image",
    "maps_into",
    "extensions",
    "family_violation",
]
