"""Z2-graded vector spaces and supersymmetric monomials.

A space of bidimension m|n has basis v_1..v_{m+n}; indices 1..m are even,
m+1..m+n odd.  A monomial is a sorted tuple of indices in which each odd
index appears at most once (odd vectors square to zero in the symmetric
algebra).  All sign conventions live here: a swap of two odd factors costs
-1, every other swap is free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, NamedTuple

Monomial = tuple[int, ...]


class Bidim(NamedTuple):
    """Dimension split by parity, printed as 'even|odd'."""

    even: int
    odd: int

    def __str__(self) -> str:
        return f"{self.even}|{self.odd}"

    @classmethod
    def parse(cls, text: str) -> "Bidim":
        even, _, odd = text.partition("|")
        return cls(int(even), int(odd))


@dataclass(frozen=True)
class GradedSpace:
    """A graded space identified by its bidimension m|n."""

    even: int
    odd: int

    def __post_init__(self) -> None:
        assert self.even >= 0 and self.odd >= 0

    @property
    def dim(self) -> int:
        return self.even + self.odd

    @property
    def bidim(self) -> Bidim:
        return Bidim(self.even, self.odd)

    def __str__(self) -> str:
        return f"{self.even}|{self.odd}"

    @classmethod
    def parse(cls, text: str) -> "GradedSpace":
        """Build from an 'm|n' string."""
        even, sep, odd = text.partition("|")
        if not sep or not even.strip().isdigit() or not odd.strip().isdigit():
            raise ValueError(f"bad space {text!r}, expected 'm|n'")
        return cls(int(even), int(odd))

    def parity(self, index: int) -> int:
        """Parity of basis vector v_index: 0 for 1..m, 1 for m+1..m+n."""
        assert 1 <= index <= self.dim, f"index {index} out of range for {self}"
        return 0 if index <= self.even else 1

    def indices(self) -> range:
        return range(1, self.dim + 1)

    def reversed(self) -> "GradedSpace":
        """The parity-reverted space (bidimension flipped)."""
        return GradedSpace(self.odd, self.even)


def is_valid_monomial(space: GradedSpace, mono: Monomial) -> bool:
    """Sorted, in range, and no odd index repeated."""
    for pos, idx in enumerate(mono):
        if not 1 <= idx <= space.dim:
            return False
        if pos > 0 and idx < mono[pos - 1]:
            return False
        if pos > 0 and idx == mono[pos - 1] and space.parity(idx) == 1:
            return False
    return True


def monomial_parity(space: GradedSpace, mono: Monomial) -> int:
    return sum(space.parity(i) for i in mono) % 2


def multiplicity(mono: Monomial, index: int) -> int:
    return mono.count(index)


def enumerate_monomials(space: GradedSpace, degree: int) -> list[Monomial]:
    """All degree-k monomials in lexicographic order (deterministic)."""
    assert degree >= 0
    out = []
    for combo in combinations_with_replacement(space.indices(), degree):
        if is_valid_monomial(space, combo):
            out.append(combo)
    return out


def count_monomials(space: GradedSpace, degree: int) -> int:
    """Closed count: choose j odd factors (no repeats), k-j even with repeats."""
    m, n, k = space.even, space.odd, degree
    total = 0
    for j in range(0, min(n, k) + 1):
        total += math.comb(n, j) * math.comb(m + (k - j) - 1, k - j)
    return total


def unshuffle_sign(space: GradedSpace, mono: Monomial, positions: Iterable[int]) -> int:
    """Koszul sign of pulling the factors at `positions` (0-based) to the front.

    Each unselected odd factor that precedes a selected odd factor is crossed
    once, costing -1.  Relative order inside the selected and unselected
    blocks is preserved, so nothing else moves past anything.
    """
    selected = set(positions)
    assert all(0 <= p < len(mono) for p in selected)
    crossings = 0
    odd_unselected_seen = 0
    for pos, idx in enumerate(mono):
        if space.parity(idx) == 1:
            if pos in selected:
                crossings += odd_unselected_seen
            else:
                odd_unselected_seen += 1
    return -1 if crossings % 2 else 1


def canonical_positions(mono: Monomial, sub: Monomial) -> list[int]:
    """Positions selecting `sub` inside `mono`: first copies of each index.

    The unshuffle sign does not depend on which copies of a repeated even
    index are picked (only odd-odd crossings count and odd indices never
    repeat), so this canonical choice is as good as any.
    """
    positions = []
    cursor = 0
    for idx in sub:
        while cursor < len(mono) and mono[cursor] != idx:
            cursor += 1
        assert cursor < len(mono), f"{sub} not contained in {mono}"
        positions.append(cursor)
        cursor += 1
    return positions


def prepend_sign(space: GradedSpace, index: int, mono: Monomial) -> int:
    """Coefficient of sorting v_index * (mono) back to canonical order.

    Returns 0 when v_index is odd and already present (the product dies),
    otherwise the Koszul sign of moving v_index right past every smaller
    factor: -1 per odd factor with smaller index when v_index is odd.
    """
    if space.parity(index) == 0:
        return 1
    if index in mono:
        return 0
    crossings = sum(1 for u in mono if u < index and space.parity(u) == 1)
    return -1 if crossings % 2 else 1


def multiply_index(space: GradedSpace, mono: Monomial, index: int) -> tuple[int, Monomial | None]:
    """Right-multiply mono by v_index: (sign, sorted monomial) or (0, None)."""
    if space.parity(index) == 1:
        if index in mono:
            return 0, None
        crossings = sum(1 for u in mono if u > index and space.parity(u) == 1)
        sign = -1 if crossings % 2 else 1
    else:
        sign = 1
    pos = 0
    while pos < len(mono) and mono[pos] <= index:
        pos += 1
    return sign, mono[:pos] + (index,) + mono[pos:]


def merge_monomials(space: GradedSpace, left: Monomial, right: Monomial) -> Monomial | None:
    """Multiset union, sorted; None when an odd index would repeat."""
    merged = tuple(sorted(left + right))
    for pos in range(1, len(merged)):
        if merged[pos] == merged[pos - 1] and space.parity(merged[pos]) == 1:
            return None
    return merged


def remove_one(mono: Monomial, index: int) -> Monomial:
    """Monomial with one copy of index removed."""
    pos = mono.index(index)
    return mono[:pos] + mono[pos + 1 :]


def sort_with_sign(space: GradedSpace, sequence: Iterable[int]) -> tuple[int, Monomial | None]:
    """Koszul sign of sorting an arbitrary index sequence into a monomial.

    Insertion-sorts the sequence, charging -1 for every odd-odd transposition;
    returns (0, None) if an odd index repeats.
    """
    out: list[int] = []
    sign = 1
    for idx in sequence:
        odd = space.parity(idx) == 1
        pos = len(out)
        while pos > 0 and out[pos - 1] > idx:
            if odd and space.parity(out[pos - 1]) == 1:
                sign = -sign
            pos -= 1
        if odd and idx in out:
            return 0, None
        out.insert(pos, idx)
    return sign, tuple(out)


def all_position_choices(mono: Monomial, sub: Monomial) -> Iterator[tuple[int, ...]]:
    """Every set of positions in mono realizing the sub-multiset, ascending."""
    from itertools import combinations

    by_index: dict[int, list[int]] = {}
    for pos, idx in enumerate(mono):
        by_index.setdefault(idx, []).append(pos)
    index_list = sorted(set(sub))
    choices_per_index = [
        list(combinations(by_index.get(idx, ()), multiplicity(sub, idx)))
        for idx in index_list
    ]
    from itertools import product

    for combo in product(*choices_per_index):
        flat: list[int] = []
        for group in combo:
            flat.extend(group)
        yield tuple(sorted(flat))
