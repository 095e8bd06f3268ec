"""Small sorting networks executed as straight-line compare-exchange code.

Each bundled network is a known size-optimal comparator sequence for its
width.  At import time every network is compiled into a specialised Python
function that loads the window into locals, runs the comparators as value
selects, and stores the result back in one slice assignment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, MutableSequence, NamedTuple


class SizeMismatchError(ValueError):
    """A window was handed to a network of a different width."""


class Comparator(NamedTuple):
    lo: int
    hi: int


def compare_exchange(window: MutableSequence, c: Comparator) -> None:
    """Put min(window[lo], window[hi]) at lo and the max at hi."""
    a = window[c.lo]
    b = window[c.hi]
    # select, not swap-on-branch: both slots are always written
    window[c.lo], window[c.hi] = (b, a) if b < a else (a, b)


def _compile(width: int, comparators: tuple[Comparator, ...]) -> Callable:
    names = [f"x{i}" for i in range(width)]
    lines = [f"def _sort_w{width}(a, lo):"]
    lines.append(f"    {', '.join(names)}, = a[lo:lo + {width}]")
    for c in comparators:
        x, y = names[c.lo], names[c.hi]
        lines.append(f"    {x}, {y} = ({y}, {x}) if {y} < {x} else ({x}, {y})")
    lines.append(f"    a[lo:lo + {width}] = ({', '.join(names)},)")
    namespace: dict = {}
    exec("\n".join(lines), namespace)
    fn = namespace[f"_sort_w{width}"]
    fn.width = width
    return fn


@dataclass(frozen=True)
class SortingNetwork:
    width: int
    comparators: tuple[Comparator, ...]
    sort_range: Callable = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        comps = tuple(Comparator(*c) for c in self.comparators)
        for c in comps:
            if not 0 <= c.lo < c.hi < self.width:
                raise ValueError(f"comparator {tuple(c)} out of bounds for width {self.width}")
        object.__setattr__(self, "comparators", comps)
        object.__setattr__(self, "sort_range", _compile(self.width, comps))

    def __len__(self) -> int:
        return len(self.comparators)


@dataclass(frozen=True)
class VarSortNetwork:
    """Sorts any window of length 0..max_width by dispatching on its length."""

    max_width: int
    networks: dict[int, SortingNetwork]

    def __post_init__(self):
        for length in range(2, self.max_width + 1):
            net = self.networks.get(length)
            if net is None or net.width != length:
                raise ValueError(f"VarSort{self.max_width} lacks a width-{length} network")
        table = [None, None] + [self.networks[n].sort_range for n in range(2, self.max_width + 1)]
        object.__setattr__(self, "_table", tuple(table))

    @property
    def name(self) -> str:
        return f"VarSort{self.max_width}"

    def sort_range(self, a: MutableSequence, lo: int, length: int) -> None:
        fn = self._table[length]
        if fn is not None:
            fn(a, lo)


def apply_network(window: MutableSequence, net: SortingNetwork) -> None:
    if len(window) != net.width:
        raise SizeMismatchError(f"window of length {len(window)} given to width-{net.width} network")
    net.sort_range(window, 0)


def apply_varsort(window: MutableSequence, net: VarSortNetwork) -> None:
    n = len(window)
    if n > net.max_width:
        raise SizeMismatchError(f"window of length {n} exceeds {net.name}")
    net.sort_range(window, 0, n)


# Size-optimal networks for widths 2..8 (1, 3, 5, 9, 12, 16, 19 comparators).
_LAYOUTS = {
    2: [(0, 1)],
    3: [(0, 2), (0, 1), (1, 2)],
    4: [(0, 2), (1, 3), (0, 1), (2, 3), (1, 2)],
    5: [(0, 3), (1, 4), (0, 2), (1, 3), (0, 1), (2, 4), (1, 2), (3, 4), (2, 3)],
    6: [(0, 5), (1, 3), (2, 4), (1, 2), (3, 4), (0, 3), (2, 5), (0, 1), (2, 3), (4, 5),
        (1, 2), (3, 4)],
    7: [(0, 6), (2, 3), (4, 5), (0, 2), (1, 4), (3, 6), (0, 1), (2, 5), (3, 4), (1, 2),
        (4, 6), (2, 3), (4, 5), (1, 2), (3, 4), (5, 6)],
    8: [(0, 2), (1, 3), (4, 6), (5, 7), (0, 4), (1, 5), (2, 6), (3, 7), (0, 1), (2, 3),
        (4, 5), (6, 7), (2, 4), (3, 5), (1, 4), (3, 6), (1, 2), (3, 4), (5, 6)],
}

NETWORKS: dict[int, SortingNetwork] = {
    w: SortingNetwork(w, tuple(Comparator(*c) for c in cs)) for w, cs in _LAYOUTS.items()
}

VARSORTS: dict[int, VarSortNetwork] = {
    m: VarSortNetwork(m, {w: NETWORKS[w] for w in range(2, m + 1)}) for m in (3, 4, 5)
}


def network(width: int) -> SortingNetwork:
    try:
        return NETWORKS[width]
    except KeyError:
        raise KeyError(f"no bundled network of width {width}") from None
