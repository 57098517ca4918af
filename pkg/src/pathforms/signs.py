"""Permutation parity for strictly increasing index tuples.

Coordinate differentials and the degree -1 generators of the inverted
exterior algebra both anticommute, so a single signed-merge routine
serves every product in the package.  Keeping one code path for signs
means one set of parity tests guards all of them.
"""

from __future__ import annotations

from typing import Optional


def merge_indices(
    left: tuple[int, ...], right: tuple[int, ...]
) -> Optional[tuple[int, tuple[int, ...]]]:
    """Merge two strictly increasing tuples, tracking sort parity.

    Returns (sign, merged) where sign is the parity of the permutation
    that sorts the concatenation left + right, or None when the tuples
    share an index (the corresponding product vanishes).
    """
    i, j = 0, 0
    inversions = 0
    merged: list[int] = []
    while i < len(left) and j < len(right):
        a, b = left[i], right[j]
        if a == b:
            return None
        if a < b:
            merged.append(a)
            i += 1
        else:
            # b jumps over every remaining element of `left`
            merged.append(b)
            j += 1
            inversions += len(left) - i
    merged.extend(left[i:])
    merged.extend(right[j:])
    sign = -1 if inversions % 2 else 1
    return sign, tuple(merged)


def sort_with_sign(indices: tuple[int, ...]) -> Optional[tuple[int, tuple[int, ...]]]:
    """Sort an index tuple, returning (parity, sorted) or None on repeats."""
    sign = 1
    out: tuple[int, ...] = ()
    for idx in indices:
        merged = merge_indices(out, (idx,))
        if merged is None:
            return None
        step, out = merged
        sign *= step
    return sign, out
