"""Classical approximation space over a partition of the universe."""
from dataclasses import dataclass

from .exceptions import NotAnEquivalence, NotAPartition, UniverseMismatch
from .sets import SetFamily, Subset, complement, union_of_masks
from .softsets import is_partition


@dataclass(frozen=True)
class RegionReport:
    lower: Subset
    upper: Subset
    positive: Subset
    negative: Subset
    boundary: Subset
    definable: bool

    @classmethod
    def from_pair(cls, lower, upper):
        boundary = upper - lower
        return cls(
            lower=lower,
            upper=upper,
            positive=lower,
            negative=complement(upper),
            boundary=boundary,
            definable=not boundary,
        )


@dataclass(frozen=True)
class PawlakSpace:
    universe: object
    classes: SetFamily

    def __post_init__(self):
        if self.classes.universe != self.universe:
            raise UniverseMismatch('classes belong to a different universe')
        seen = 0
        for block in self.classes.masks:
            if not block or seen & block:
                raise NotAPartition(
                    'classes must be nonempty and pairwise disjoint'
                )
            seen |= block
        if seen != self.universe.full_mask:
            raise NotAPartition('classes do not cover the universe')

    def _check(self, x):
        if x.universe != self.universe:
            raise UniverseMismatch('set belongs to a different universe')


def pawlak_from_partition_soft_set(s):
    if not is_partition(s):
        raise NotAPartition(f'soft set is not a partition soft set: {s}')
    return PawlakSpace(s.universe, s.cover())


def pawlak_from_relation(universe, pairs):
    """Quotient of an explicit equivalence relation given as name pairs."""
    related = {name: {name} for name in universe}
    pairs = {(x, y) for x, y in pairs}
    for x, y in pairs:
        universe.index(x)
        universe.index(y)
    for name in universe:
        if (name, name) not in pairs:
            raise NotAnEquivalence(f'relation is not reflexive at "{name}"')
    for x, y in pairs:
        if (y, x) not in pairs:
            raise NotAnEquivalence(
                f'relation is not symmetric at ("{x}", "{y}")'
            )
        related[x].add(y)
    for x, y in pairs:
        for z in related[y]:
            if (x, z) not in pairs:
                raise NotAnEquivalence(
                    f'relation is not transitive at ("{x}", "{y}", "{z}")'
                )
    classes = SetFamily(
        universe, tuple(universe.mask_of(names) for names in related.values())
    )
    return PawlakSpace(universe, classes)


def pawlak_lower(p, x):
    p._check(x)
    return Subset(p.universe, union_of_masks(
        block for block in p.classes.masks if block & ~x.mask == 0
    ))


def pawlak_upper(p, x):
    p._check(x)
    return Subset(p.universe, union_of_masks(
        block for block in p.classes.masks if block & x.mask
    ))


def rough_pair(p, x):
    return pawlak_lower(p, x), pawlak_upper(p, x)


def pawlak_regions(p, x):
    return RegionReport.from_pair(*rough_pair(p, x))
