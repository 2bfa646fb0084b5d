"""Permutations in one-line notation, as tuples.

perm[i] is the image of i, everything 0-indexed.  Right multiplication by
the adjacent transposition s_i swaps the entries at positions i and i+1.
"""

from __future__ import annotations

from itertools import permutations as _permutations

Perm = tuple[int, ...]

_word_cache: dict[Perm, tuple[int, ...]] = {}


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """(p then q): i -> q[p[i]]."""
    return tuple(q[p[i]] for i in range(len(p)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def inversions(p: Perm) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def swap_positions(p: Perm, i: int) -> Perm:
    return p[:i] + (p[i + 1], p[i]) + p[i + 2:]


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle lengths sorted in decreasing order (fixed points included)."""
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition; each cycle starts at its smallest element."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def cycle_string(p: Perm) -> str:
    """Nontrivial cycles, 1-indexed, e.g. '(2 4 7 3 6 5)'; 'id' if none."""
    parts = [
        "(" + " ".join(str(i + 1) for i in cyc) + ")"
        for cyc in cycles(p)
        if len(cyc) > 1
    ]
    return "".join(parts) if parts else "id"


def reduced_word(p: Perm) -> tuple[int, ...]:
    """A reduced word (i_1, ..., i_k) with p = s_{i_1} ... s_{i_k}.

    Generated by insertion sort on the one-line notation, always swapping at
    the leftmost descent, so the word is canonical for each permutation.
    """
    w = _word_cache.get(p)
    if w is not None:
        return w
    work = list(p)
    rev = []
    n = len(work)
    done = False
    while not done:
        done = True
        for i in range(n - 1):
            if work[i] > work[i + 1]:
                work[i], work[i + 1] = work[i + 1], work[i]
                rev.append(i)
                done = False
                break
    w = tuple(reversed(rev))
    _word_cache[p] = w
    return w


def all_perms(n: int):
    return _permutations(range(n))
