"""The inductive local multiplicity bound mubar(a, b) and its table."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import DomainError, InadmissiblePairError, require_admissible


@lru_cache(maxsize=None)
def _mubar(a: int, b: int) -> int:
    # Every recursive call passes through here, so an inadmissible query raises.
    if a < b * b:
        raise InadmissiblePairError(a, b)
    if b == 0:
        return 1
    if b == 1:
        return a + 1
    drop = _mubar(a - (2 * b - 1), b - 1)
    if a < b * (b + 1):
        return 2 * drop
    return drop + max(drop, _mubar(a - b, b))


def mubar(a: int, b: int) -> int:
    """Upper bound for the local multiplicity per unit degree at codimension ``a``, defect ``b``.

    Defined on a >= b**2 by mubar(a, 0) = 1, mubar(a, 1) = a + 1 and, for b >= 2,
    ``2*mubar(a-2b+1, b-1)`` when a < b(b+1), otherwise
    ``mubar(a-2b+1, b-1) + max(mubar(a-2b+1, b-1), mubar(a-b, b))``.

    >>> mubar(36, 4)
    966
    """
    require_admissible(a, b)
    return _mubar(a, b)


def clear_cache() -> None:
    _mubar.cache_clear()


def closed_form_b1(a: int) -> int:
    if a < 1:
        raise DomainError(f"closed form for b=1 needs a >= 1, got {a}")
    return a + 1


def closed_form_b2(a: int) -> int:
    """2 + u(u-1) for a = 2u, 2 + u^2 for a = 2u + 1."""
    if a < 4:
        raise DomainError(f"closed form for b=2 needs a >= 4, got {a}")
    u, odd = divmod(a, 2)
    return 2 + u * u if odd else 2 + u * (u - 1)


@dataclass(frozen=True)
class LocalTable:
    a_max: int
    b_max: int
    cells: dict[tuple[int, int], int | None]
    column_max: dict[int, int]

    def value(self, a: int, b: int) -> int | None:
        return self.cells[(a, b)]

    def defined_cells(self) -> dict[tuple[int, int], int]:
        return {k: v for k, v in self.cells.items() if v is not None}


def local_table(a_max: int, b_max: int) -> LocalTable:
    """Columns a = 1..a_max, rows b = 0..b_max; ``None`` marks an inadmissible cell.

    The column maximum goes to the smallest b among equal values.
    """
    if a_max < 1 or b_max < 0:
        raise DomainError(f"need a_max >= 1 and b_max >= 0, got ({a_max}, {b_max})")
    cells: dict[tuple[int, int], int | None] = {}
    column_max: dict[int, int] = {}
    for a in range(1, a_max + 1):
        best_b, best = None, -1
        for b in range(b_max + 1):
            v = mubar(a, b) if a >= b * b else None
            cells[(a, b)] = v
            if v is not None and v > best:
                best_b, best = b, v
        column_max[a] = best_b
    return LocalTable(a_max, b_max, cells, column_max)
