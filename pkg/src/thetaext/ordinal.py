"""Hull/closure depth: a natural number or ``OMEGA``."""

from __future__ import annotations

import functools


@functools.total_ordering
class _Omega:
    """The first infinite ordinal. Compares above every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "OMEGA"

    def __str__(self) -> str:
        return "omega"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("omega")

    def __lt__(self, other) -> bool:
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()

Alpha = int | _Omega


def check_alpha(alpha) -> Alpha:
    if alpha is OMEGA:
        return alpha
    if isinstance(alpha, bool) or not isinstance(alpha, int) or alpha < 0:
        raise ValueError(f"depth must be a natural number or OMEGA, got {alpha!r}")
    return alpha


def parse_alpha(text: str | int) -> Alpha:
    """Parse ``"omega"`` or a decimal natural number."""
    if isinstance(text, int) or text is OMEGA:
        return check_alpha(text)
    token = text.strip().lower()
    if token in ("omega", "w", "ω"):
        return OMEGA
    if not token.isdigit():
        raise ValueError(f"bad depth {text!r}: expected a natural number or 'omega'")
    return int(token)


def add(a: Alpha, b: Alpha) -> Alpha:
    """Saturating sum; OMEGA absorbs on either side."""
    if a is OMEGA or b is OMEGA:
        return OMEGA
    return a + b


def clamp(alpha: Alpha, n: int) -> int:
    """Finite depth equivalent to ``alpha`` in an ``n``-point space.

    Every increasing chain of subsets of an n-point set is constant after n
    steps, so any depth >= n (OMEGA included) behaves like n.
    """
    if alpha is OMEGA:
        return max(n, 1)
    return min(alpha, max(n, 1))


def to_json(alpha: Alpha):
    return "omega" if alpha is OMEGA else alpha
