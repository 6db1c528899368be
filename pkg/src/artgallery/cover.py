"""Unweighted set cover over integer bitsets: greedy and exhaustive."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InfeasibleInstance

__all__ = ["CoverInstance", "CoverSolution", "greedy_cover", "exact_cover",
           "bits", "to_bits"]


def to_bits(elements) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def bits(mask: int) -> list:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class CoverInstance:
    """Universe ``{0..universe_size-1}`` and ``(guard id, bitmask)`` pairs."""
    universe_size: int
    sets: tuple

    def __init__(self, universe_size, sets):
        object.__setattr__(self, "universe_size", universe_size)
        norm = []
        for gid, s in sets:
            norm.append((gid, s if isinstance(s, int) else to_bits(s)))
        object.__setattr__(self, "sets", tuple(sorted(norm)))

    @property
    def full(self) -> int:
        return (1 << self.universe_size) - 1

    def check_feasible(self):
        union = 0
        for _, s in self.sets:
            union |= s
        if union & self.full != self.full:
            missing = bits(self.full & ~union)
            raise InfeasibleInstance(f"elements {missing} are in no set")


@dataclass(frozen=True)
class CoverSolution:
    chosen: tuple
    covered_witness: tuple

    def __len__(self):
        return len(self.chosen)


def _witness(inst, chosen):
    lookup = dict(inst.sets)
    wit = []
    for e in range(inst.universe_size):
        wit.append(next(g for g in chosen if lookup[g] >> e & 1))
    return tuple(wit)


def greedy_cover(inst: CoverInstance) -> CoverSolution:
    """Chvatal's greedy rule; ties go to the smallest guard id."""
    inst.check_feasible()
    uncovered = inst.full
    chosen = []
    while uncovered:
        best_gain, best = 0, None
        for gid, s in inst.sets:
            gain = (s & uncovered).bit_count()
            if gain > best_gain:
                best_gain, best = gain, (gid, s)
        chosen.append(best[0])
        uncovered &= ~best[1]
    return CoverSolution(tuple(chosen), _witness(inst, chosen))


def exact_cover(inst: CoverInstance, limit: int) -> CoverSolution | None:
    """Minimum cover by enumeration in increasing size, or None above ``limit``.

    Among optimal covers the lexicographically first guard tuple is returned.
    """
    inst.check_feasible()
    full = inst.full
    if full == 0:
        return CoverSolution((), ())
    sets = [(g, s) for g, s in inst.sets if s]
    for k in range(1, limit + 1):
        for combo in combinations(sets, k):
            u = 0
            for _, s in combo:
                u |= s
            if u == full:
                chosen = tuple(g for g, _ in combo)
                return CoverSolution(chosen, _witness(inst, chosen))
    return None
