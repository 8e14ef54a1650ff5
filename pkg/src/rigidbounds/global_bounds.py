"""Defect profiles, the codimension function phi and the global bound mubar_total(a).

A profile (b_1 >= ... >= b_r) lists the rank defects at the r common zeros of a
tuple of polynomials.  It is admissible at codimension a when
phi(b) + r <= a and every point satisfies a - b_i >= b_i^2; it then scores
sum_i mubar(a - b_i, b_i).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .core import DomainError
from .local_bounds import mubar


class NotSortedError(ValueError):
    pass


class InadmissibleProfileError(ValueError):
    pass


def _check_sorted(b: Sequence[int]) -> None:
    if any(x < 0 for x in b):
        raise NotSortedError(f"defects must be non-negative: {tuple(b)}")
    if any(x < y for x, y in zip(b, b[1:])):
        raise NotSortedError(f"defect tuple is not non-increasing: {tuple(b)}")


@dataclass(frozen=True, order=True)
class Profile:
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))
        if not self.b:
            raise DomainError("a profile has at least one point")
        _check_sorted(self.b)

    @property
    def r(self) -> int:
        return len(self.b)

    def __str__(self) -> str:
        if len(set(self.b)) == 1:
            return f"r={self.r}, b={self.b[0]}x{self.r}"
        return f"r={self.r}, b=({','.join(map(str, self.b))})"


def r_star(b: Sequence[int]) -> int:
    """max{j : b_j >= j} (1-based), or 0 when no entry qualifies."""
    b = tuple(b)
    _check_sorted(b)
    j = 0
    # b non-increasing and j increasing: {j : b_j >= j} is an initial segment
    while j < len(b) and b[j] >= j + 1:
        j += 1
    return j


def phi(b: Sequence[int]) -> int:
    """sum_{j <= r*} (b_j + 1)(b_j + 1 - j)."""
    b = tuple(b)
    return sum((b[j - 1] + 1) * (b[j - 1] + 1 - j) for j in range(1, r_star(b) + 1))


def _as_profile(p: Profile | Sequence[int]) -> Profile:
    return p if isinstance(p, Profile) else Profile(tuple(p))


def is_admissible_profile(a: int, p: Profile | Sequence[int]) -> bool:
    p = _as_profile(p)
    return phi(p.b) + p.r <= a and all(a - x >= x * x for x in p.b)


def profile_score(a: int, p: Profile | Sequence[int]) -> int:
    p = _as_profile(p)
    if not is_admissible_profile(a, p):
        raise InadmissibleProfileError(f"profile {p} is not admissible at a={a}")
    return sum(mubar(a - x, x) for x in p.b)


def max_defect(a: int) -> int:
    """Largest b with b(b+1) <= a, i.e. (a - b, b) admissible."""
    b = 0
    while (b + 1) * (b + 2) <= a:
        b += 1
    return b


def admissible_profiles(a: int, r_cap: int | None = None) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield every admissible profile at ``a`` with its score.

    Tuples are grown one entry at a time; any prefix of an admissible tuple is
    itself admissible, so a branch is cut as soon as phi + length exceeds a.
    """
    cap = a if r_cap is None else min(a, r_cap)
    local = [mubar(a - x, x) for x in range(max_defect(a) + 1)]

    def grow(prefix: tuple[int, ...], ph: int, score: int, top: int):
        j = len(prefix) + 1
        if j > cap:
            return
        for x in range(top, -1, -1):
            nph = ph + (x + 1) * (x + 1 - j) if x >= j else ph
            if nph + j > a:
                continue
            t = prefix + (x,)
            yield t, score + local[x]
            yield from grow(t, nph, score + local[x], x)

    yield from grow((), 0, 0, max_defect(a))


@dataclass(frozen=True)
class GlobalRow:
    a: int
    value: int
    maximizers: list[Profile]
    printed_value: int | None = None
    printed_profile: Profile | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def matches_printed(self) -> bool | None:
        if self.printed_value is None:
            return None
        return self.value == self.printed_value


def _canonical(p: Profile):
    return (p.r, tuple(-x for x in p.b))


def mubar_total(a: int, r_cap: int | None = None) -> GlobalRow:
    """Maximum profile score at codimension ``a``, with every maximizer.

    Maximizers are ordered by ascending r, then lexicographically descending
    tuple.  ``r_cap`` imposes an extra bound on the number of points
    (the N + 1 cap); the default is r <= a.
    """
    if a < 1:
        raise DomainError(f"need a >= 1, got {a}")
    best, arg = _maximize(a, r_cap)
    return GlobalRow(a, best, sorted((Profile(t) for t in arg), key=_canonical))


@lru_cache(maxsize=None)
def _maximize(a: int, r_cap: int | None) -> tuple[int, tuple[tuple[int, ...], ...]]:
    best, arg = -1, []
    for t, score in admissible_profiles(a, r_cap):
        if score > best:
            best, arg = score, [t]
        elif score == best:
            arg.append(t)
    return best, tuple(arg)


def global_table(a_max: int, printed: dict[int, tuple[int, Profile]] | None = None) -> list[GlobalRow]:
    """Rows a = 1..a_max; a row that disagrees with ``printed`` carries a note.

    ``printed`` maps a to the (value, profile) pair of a reference table;
    by default the bundled transcription is used.
    """
    if a_max < 1:
        raise DomainError(f"need a_max >= 1, got {a_max}")
    if printed is None:
        from .golden import load_golden

        printed = load_golden().global_rows
    rows = []
    for a in range(1, a_max + 1):
        row = mubar_total(a)
        if a not in printed:
            rows.append(row)
            continue
        value, profile = printed[a]
        notes = []
        if row.value != value:
            notes.append(f"discrepancy: computed {row.value}, printed {value}")
            if is_admissible_profile(a, profile):
                notes.append(f"printed profile {profile} is admissible and scores {profile_score(a, profile)}")
            else:
                notes.append(
                    f"printed profile {profile} violates phi + r <= a ({phi(profile.b)} + {profile.r} > {a})"
                    if phi(profile.b) + profile.r > a
                    else f"printed profile {profile} is not admissible at a={a}"
                )
            witness = row.maximizers[0]
            notes.append(f"witness {witness}: phi + r = {phi(witness.b) + witness.r} <= {a}, score {row.value}")
        elif profile not in row.maximizers:
            notes.append(f"printed profile {profile} is not among the computed maximizers")
        rows.append(
            GlobalRow(a, row.value, row.maximizers, printed_value=value, printed_profile=profile, notes=notes)
        )
    return rows
