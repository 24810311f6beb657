"""The 2N-point circle poset and its Alexandrov topology.

Points are labelled ``0 .. 2N-1``. Even points sit at the bottom of the
zig-zag, odd points at the top; bottom point ``2i`` is covered by its two
cycle neighbours ``2i-1`` and ``2i+1`` (mod 2N).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np


@dataclass(frozen=True)
class CirclePoset:
    n_cells: int
    covers: frozenset[tuple[int, int]]

    @property
    def n_points(self) -> int:
        return 2 * self.n_cells

    @property
    def points(self) -> range:
        return range(self.n_points)

    @cached_property
    def order_matrix(self) -> np.ndarray:
        """Boolean ``leq[a, b]``: reflexive-transitive closure of the covers."""
        n = self.n_points
        leq = np.eye(n, dtype=bool)
        for a, b in self.covers:
            leq[a, b] = True
        # Warshall closure
        for k in range(n):
            leq |= np.outer(leq[:, k], leq[k, :])
        leq.flags.writeable = False
        return leq

    def _check(self, a: int) -> None:
        if not 0 <= a < self.n_points:
            raise IndexError(f"point {a} out of range for {self.n_points}-point poset")


def build_circle_poset(n_cells: int) -> CirclePoset:
    if n_cells < 2:
        raise ValueError(f"n_cells must be >= 2, got {n_cells}")
    size = 2 * n_cells
    covers = set()
    for i in range(n_cells):
        low = 2 * i
        covers.add((low, (low - 1) % size))
        covers.add((low, (low + 1) % size))
    return CirclePoset(n_cells=n_cells, covers=frozenset(covers))


def leq(p: CirclePoset, a: int, b: int) -> bool:
    p._check(a)
    p._check(b)
    return bool(p.order_matrix[a, b])


def minimal_open_set(p: CirclePoset, a: int) -> frozenset[int]:
    """Smallest open set containing ``a``: its up-set ``{b : a <= b}``."""
    p._check(a)
    return frozenset(int(b) for b in np.flatnonzero(p.order_matrix[a]))


def is_t0(p: CirclePoset) -> bool:
    """True iff distinct points have distinct minimal open sets."""
    rows = {p.order_matrix[a].tobytes() for a in p.points}
    return len(rows) == p.n_points


def hasse_edges(p: CirclePoset) -> list[tuple[int, int]]:
    return sorted(p.covers)


def to_dot(p: CirclePoset, name: str | None = None) -> str:
    """Hasse diagram as a DOT digraph, edges pointing lower -> upper."""
    name = name or f"P{p.n_points}"
    lines = [f"digraph {name} {{"]
    for a in p.points:
        level = "top" if a % 2 else "bottom"
        lines.append(f'  {a} [label="{a}", level="{level}"];')
    for lo, hi in hasse_edges(p):
        lines.append(f"  {lo} -> {hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
