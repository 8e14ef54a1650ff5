"""Word sets over {A, C0, C1, C2} whose leaf count realizes mubar.

Each letter moves a state (a, b).  A and C0 lower the defect: (a, b) -> (a - 2b + 1, b - 1).
C1 and C2 keep it: (a, b) -> (a - b, b).  Here every drop is taken with equality, which is
the worst case the recursion for mubar accounts for.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .core import DomainError, InadmissiblePairError, require_admissible
from .local_bounds import mubar


class Letter(Enum):
    A = "A"
    C0 = "C0"
    C1 = "C1"
    C2 = "C2"

    @property
    def nu(self) -> str:
        return "A" if self is Letter.A else "C"

    @property
    def decrements(self) -> bool:
        return self in (Letter.A, Letter.C0)

    def __str__(self) -> str:
        return self.value


_CODE = {"A": Letter.A, "0": Letter.C0, "1": Letter.C1, "2": Letter.C2}


class TerminalStateError(DomainError):
    pass


class NonTerminalWordError(DomainError):
    pass


class WordState(NamedTuple):
    a: int
    b: int


def successor(s: WordState, letter: Letter) -> WordState:
    if s.b == 0:
        raise TerminalStateError(f"state {tuple(s)} is terminal")
    if letter.decrements:
        return WordState(s.a - (2 * s.b - 1), s.b - 1)
    return WordState(s.a - s.b, s.b)


def transitions(s: WordState) -> list[tuple[Letter, WordState]]:
    """Admissible worst-case successors of ``s`` in alphabet order."""
    s = WordState(*s)
    if s.b == 0:
        raise TerminalStateError(f"state {tuple(s)} is terminal")
    out = []
    for letter in Letter:
        t = successor(s, letter)
        if t.a >= t.b * t.b:
            out.append((letter, t))
    return out


@dataclass(frozen=True, order=True)
class Word:
    letters: tuple[Letter, ...]
    final_state: WordState

    @classmethod
    def replay(cls, letters: Iterable[Letter | str], root: WordState) -> Word:
        """Build a word by applying ``letters`` to ``root``; every visited state must be admissible."""
        s = WordState(*root)
        require_admissible(*s)
        seq = tuple(x if isinstance(x, Letter) else Letter(x) for x in letters)
        for letter in seq:
            s = successor(s, letter)
            if s.a < s.b * s.b:
                raise InadmissiblePairError(*s)
        return cls(seq, s)

    @property
    def terminal(self) -> bool:
        return self.final_state.b == 0

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters)) or "<empty>"


def _child_letter(a: int, b: int) -> str:
    """Letter of the second branch: C0 when forced or not worse, else C1."""
    if a < b * (b + 1):
        return "0"
    if mubar(a - (2 * b - 1), b - 1) >= mubar(a - b, b):
        return "0"
    return "1"


@lru_cache(maxsize=None)
def _leaves(a: int, b: int) -> tuple[tuple[str, int], ...]:
    # (letter codes, final a); leaves of the same subtree are shared across roots
    if b == 0:
        return (("", a),)
    dec = _leaves(a - (2 * b - 1), b - 1)
    second = _child_letter(a, b)
    other = dec if second == "0" else _leaves(a - b, b)
    return tuple(("A" + w, fa) for w, fa in dec) + tuple((second + w, fa) for w, fa in other)


def worst_case_words(root: WordState | tuple[int, int]) -> list[Word]:
    """Terminal words of the binary worst-case tree rooted at ``root``, sorted by letters.

    Each inner node branches into A and one C-letter; the C-letter is C0 when
    a < b(b+1) and otherwise whichever of C0, C1 leads to more leaves (C0 on ties).
    """
    a, b = root
    require_admissible(a, b)
    words = [Word(tuple(_CODE[c] for c in w), WordState(fa, 0)) for w, fa in _leaves(a, b)]
    words.sort(key=lambda w: [x.value for x in w.letters])
    return words


def count_worst_case_words(root: WordState | tuple[int, int]) -> int:
    a, b = root
    require_admissible(a, b)
    return len(_leaves(a, b))


def nu_project(w: Word | Sequence[Letter]) -> str:
    letters = w.letters if isinstance(w, Word) else w
    return "".join(x.nu for x in letters)


def is_prefix_free(images: Iterable[str]) -> bool:
    """True iff the strings are distinct and none is a proper prefix of another."""
    ordered = sorted(images)
    # in sorted order a prefix sits directly before some string it prefixes
    return all(not nxt.startswith(cur) for cur, nxt in zip(ordered, ordered[1:]))


def check_prefix_free(words: Iterable[Word]) -> bool:
    return is_prefix_free(nu_project(w) for w in words)


def encode_positions(w: Word, root: WordState | tuple[int, int]) -> tuple[tuple[int, ...], tuple[Letter, ...]]:
    """Gaps between decrement letters and the decrement letters themselves.

    ``m[j]`` counts the C1/C2 letters before the (j+1)-th decrement letter
    (after the j-th one).  For a word that starts at ``(a, b)`` the result
    satisfies ``b*m[0] + (b-1)*m[1] + ... + m[b-1] <= a - b*b``.
    """
    if not w.terminal:
        raise NonTerminalWordError(f"word {w} ends at {tuple(w.final_state)}, not at b = 0")
    gaps, marks = [], []
    run = 0
    for letter in w.letters:
        if letter.decrements:
            gaps.append(run)
            marks.append(letter)
            run = 0
        else:
            run += 1
    if len(gaps) != root[1]:
        raise NonTerminalWordError(f"word {w} has {len(gaps)} decrement letters, root defect is {root[1]}")
    return tuple(gaps), tuple(marks)


def in_simplex(m: Sequence[int], a: int, b: int) -> bool:
    """Membership of an integer point in {x >= 0, b*x1 + (b-1)*x2 + ... + xb <= a - b^2}."""
    return len(m) == b and all(x >= 0 for x in m) and sum((b - i) * x for i, x in enumerate(m)) <= a - b * b
