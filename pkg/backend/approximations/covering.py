"""Soft covering approximation space.

The upper approximation joins the lower approximation with every block of
the minimal description of each point of ``X`` the lower approximation
misses; minimal descriptions are families, so all of their blocks are
taken.
"""
import logging
from dataclasses import dataclass, field

from .exceptions import NotACovering, UniverseMismatch
from .pawlak import RegionReport
from .sets import (SetFamily, Subset, blocks_within, iter_bits,
                   union_of_masks)
from .softsets import is_covering

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinimalDescription:
    element: str
    blocks: SetFamily

    def union(self):
        return Subset(self.blocks.universe, union_of_masks(self.blocks.masks))


@dataclass(frozen=True)
class SoftCoveringSpace:
    soft_set: object
    cover: SetFamily = field(init=False, repr=False)
    _descriptions: tuple = field(init=False, repr=False, compare=False)
    _reach: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_covering(self.soft_set):
            raise NotACovering(
                f'not a covering soft set: {self.soft_set}'
            )
        cover = self.soft_set.cover()
        descriptions = []
        for index in range(len(self.universe)):
            bit = self.universe.bit(index)
            containing = [block for block in cover.masks if block & bit]
            descriptions.append(tuple(
                block for block in containing
                if not any(
                    other != block and other & ~block == 0
                    for other in containing
                )
            ))
        object.__setattr__(self, 'cover', cover)
        object.__setattr__(self, '_descriptions', tuple(descriptions))
        # indexed by bit position, the last element first
        object.__setattr__(self, '_reach', tuple(
            union_of_masks(blocks) for blocks in reversed(descriptions)
        ))
        logger.debug(
            'Soft covering space over %s elements with %s distinct blocks.',
            len(self.universe), len(cover),
        )

    @property
    def universe(self):
        return self.soft_set.universe

    def _check(self, x):
        if x.universe != self.universe:
            raise UniverseMismatch('set belongs to a different universe')

    def lower_mask(self, mask):
        return union_of_masks(blocks_within(mask, self.cover.masks))

    def upper_mask(self, mask):
        lower = self.lower_mask(mask)
        upper = lower
        for index in iter_bits(mask & ~lower):
            upper |= self._reach[index]
        return upper

    def is_block_union(self, mask):
        return self.lower_mask(mask) == mask

    def describe(self):
        return str(self.soft_set)


def minimal_description(s, x):
    index = s.universe.index(x)
    return MinimalDescription(
        x, SetFamily(s.universe, s._descriptions[index])
    )


def minimal_descriptions(s):
    return [minimal_description(s, name) for name in s.universe]


def soft_lower(s, x):
    s._check(x)
    return Subset(s.universe, s.lower_mask(x.mask))


def soft_upper(s, x):
    s._check(x)
    return Subset(s.universe, s.upper_mask(x.mask))


def rough_pair(s, x):
    return soft_lower(s, x), soft_upper(s, x)


def soft_regions(s, x):
    return RegionReport.from_pair(*rough_pair(s, x))


def block_union_decomposition(s, t):
    """Blocks whose union is ``t``, or ``None`` when ``t`` is no such union."""
    s._check(t)
    blocks = blocks_within(t.mask, s.cover.masks)
    if union_of_masks(blocks) != t.mask:
        return None
    return SetFamily(s.universe, tuple(blocks))


@dataclass(frozen=True)
class ClosureWitness:
    first: Subset
    second: Subset

    @property
    def meet(self):
        return self.first & self.second


@dataclass(frozen=True)
class ClosureReport:
    holds: bool
    witness: ClosureWitness = None

    def __bool__(self):
        return self.holds


def is_intersection_union_closed(s):
    blocks = s.cover.masks
    for position, first in enumerate(blocks):
        for second in blocks[position + 1:]:
            if not s.is_block_union(first & second):
                return ClosureReport(False, ClosureWitness(
                    Subset(s.universe, first), Subset(s.universe, second),
                ))
    return ClosureReport(True)
