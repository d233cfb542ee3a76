"""The order topology on the lattice of flats: open sets are the down-closed families."""

from dataclasses import dataclass
from enum import StrEnum
from itertools import combinations

from hp0.config import HP0_FULL_TOPOLOGY_MAX_FLATS, HP0_OPEN_SET_LIMIT
from hp0.matroid import FlatLattice, GaleFrame, flats


class TopologyMode(StrEnum):
    FULL = "full"
    PRINCIPAL = "principal"


@dataclass(frozen=True)
class PosetTopology:
    lattice: FlatLattice
    opens: tuple[frozenset[int], ...]
    mode: TopologyMode

    def minimal_open(self, i: int) -> frozenset[int]:
        """U_F = {F' : F' <= F}."""
        return self.lattice.down_set(i)

    def is_open(self, subset: frozenset[int]) -> bool:
        return all(a in subset for j in subset for a in self.lattice.down_set(j))


def _down_sets(lattice: FlatLattice, limit: int) -> list[frozenset[int]] | None:
    """Every down-closed family, or None once more than ``limit`` have been found."""
    # flats are in a linear extension, so deciding them in order keeps every prefix down-closed
    found: list[frozenset[int]] = [frozenset()]
    for i in range(len(lattice)):
        below = lattice.down_set(i) - {i}
        grown = [u | {i} for u in found if below <= u]
        found.extend(grown)
        if len(found) > limit:
            return None
    return found


def build_topology(
    frame: GaleFrame,
    max_flats: int = HP0_FULL_TOPOLOGY_MAX_FLATS,
    open_limit: int = HP0_OPEN_SET_LIMIT,
) -> PosetTopology:
    """All open sets for small lattices; principal opens and their pairwise unions otherwise."""
    lattice = flats(frame)
    opens = _down_sets(lattice, open_limit) if len(lattice) <= max_flats else None
    if opens is not None:
        ordered = sorted(opens, key=lambda u: (len(u), sorted(u)))
        return PosetTopology(lattice, tuple(ordered), TopologyMode.FULL)

    principal = [lattice.down_set(i) for i in range(len(lattice))]
    family = set(principal)
    family.update(a | b for a, b in combinations(principal, 2))
    ordered = sorted(family, key=lambda u: (len(u), sorted(u)))
    return PosetTopology(lattice, tuple(ordered), TopologyMode.PRINCIPAL)
