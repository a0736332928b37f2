"""Exact set algebra over a fixed finite universe.

A subset is stored as an integer membership mask read as its membership
vector: the first element of the universe is the most significant bit and the
last element is bit 0. Ascending masks are then lexicographic membership
vectors, the canonical order for families, enumeration and witnesses.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property, reduce
from operator import or_

from django.conf import settings

from .exceptions import UniverseMismatch, UniverseTooLarge, UnknownElement

logger = logging.getLogger(__name__)


def exhaustive_limit(limit=None):
    if limit is not None:
        return limit
    return settings.SOFTROUGH['MAX_EXHAUSTIVE']


def ensure_exhaustive(universe, limit=None):
    limit = exhaustive_limit(limit)
    if len(universe) > limit:
        raise UniverseTooLarge(len(universe), limit)
    if len(universe) > limit - 2:
        logger.warning(
            'Exhaustive sweep over %s subsets is close to the limit.',
            1 << len(universe),
        )


def popcount(mask):
    return bin(mask).count('1')


def iter_bits(mask):
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def union_of_masks(masks):
    return reduce(or_, masks, 0)


@dataclass(frozen=True)
class Universe:
    elements: tuple

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, 'elements', elements)
        if not elements:
            raise ValueError('universe must contain at least one element')
        if len(set(elements)) != len(elements):
            duplicates = sorted(
                {name for name in elements if elements.count(name) > 1}
            )
            raise ValueError(
                f'duplicate element names: {", ".join(duplicates)}'
            )
        limit = settings.SOFTROUGH['MAX_UNIVERSE']
        if len(elements) > limit:
            raise UniverseTooLarge(
                len(elements), limit, setting='SOFTROUGH_MAX_UNIVERSE',
            )

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, name):
        return name in self.positions

    @cached_property
    def positions(self):
        return {name: index for index, name in enumerate(self.elements)}

    @property
    def full_mask(self):
        return (1 << len(self.elements)) - 1

    def bit(self, index):
        return 1 << (len(self.elements) - 1 - index)

    def index(self, name):
        try:
            return self.positions[name]
        except KeyError:
            raise UnknownElement(name) from None

    def mask_of(self, names):
        mask = 0
        for name in names:
            mask |= self.bit(self.index(name))
        return mask

    def subset(self, names=()):
        return Subset(self, self.mask_of(names))

    def parse(self, text):
        """Read a comma separated list such as ``h2,h3,h4``."""
        names = [name.strip() for name in text.strip('{} ').split(',')]
        return self.subset(name for name in names if name)

    def empty(self):
        return Subset(self, 0)

    def full(self):
        return Subset(self, self.full_mask)

    def names_of(self, mask):
        return tuple(
            name for index, name in enumerate(self.elements)
            if mask & self.bit(index)
        )


@dataclass(frozen=True)
class Subset:
    universe: Universe
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask > self.universe.full_mask:
            raise ValueError(f'mask {self.mask} is outside the universe')

    def _other_mask(self, other):
        if not isinstance(other, Subset):
            raise TypeError(f'expected a Subset, got {type(other).__name__}')
        if other.universe != self.universe:
            raise UniverseMismatch('subsets belong to different universes')
        return other.mask

    def __or__(self, other):
        return Subset(self.universe, self.mask | self._other_mask(other))

    def __and__(self, other):
        return Subset(self.universe, self.mask & self._other_mask(other))

    def __sub__(self, other):
        return Subset(self.universe, self.mask & ~self._other_mask(other))

    def __le__(self, other):
        return self.mask & ~self._other_mask(other) == 0

    def __lt__(self, other):
        return self <= other and self.mask != other.mask

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def __len__(self):
        return popcount(self.mask)

    def __bool__(self):
        return self.mask != 0

    def __iter__(self):
        return iter(self.universe.names_of(self.mask))

    def __contains__(self, name):
        return bool(self.mask & self.universe.bit(self.universe.index(name)))

    def __str__(self):
        return '{' + ','.join(self) + '}'

    def __repr__(self):
        return f'{self.__class__.__name__}({self})'


@dataclass(frozen=True)
class SetFamily:
    universe: Universe
    masks: tuple = field(default=())

    def __post_init__(self):
        full = self.universe.full_mask
        masks = tuple(sorted(set(self.masks)))
        if masks and (masks[0] < 0 or masks[-1] > full):
            raise ValueError('family contains a mask outside the universe')
        object.__setattr__(self, 'masks', masks)

    @classmethod
    def of(cls, universe, subsets):
        masks = []
        for subset in subsets:
            if subset.universe != universe:
                raise UniverseMismatch(
                    'family member belongs to a different universe'
                )
            masks.append(subset.mask)
        return cls(universe, tuple(masks))

    @property
    def blocks(self):
        return tuple(Subset(self.universe, mask) for mask in self.masks)

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.masks)

    def __contains__(self, subset):
        return subset.universe == self.universe and subset.mask in self.masks

    def __str__(self):
        return '\n'.join(str(block) for block in self)


def complement(x):
    return Subset(x.universe, x.universe.full_mask & ~x.mask)


def intersection(x, y):
    return x & y


def union(x, y):
    return x | y


def difference(x, y):
    return x - y


def is_subset(x, y):
    return x <= y


def family_union(blocks, universe=None):
    if isinstance(blocks, SetFamily):
        return Subset(blocks.universe, union_of_masks(blocks.masks))
    blocks = list(blocks)
    if universe is None:
        if not blocks:
            raise ValueError(
                'an empty union needs an explicit universe, '
                'call family_union([], universe)'
            )
        universe = blocks[0].universe
    for block in blocks:
        if block.universe != universe:
            raise UniverseMismatch('blocks belong to different universes')
    return Subset(universe, union_of_masks(block.mask for block in blocks))


def blocks_within(mask, masks):
    return [block for block in masks if block & ~mask == 0]


def is_union_of_blocks(t, f):
    """True when ``t`` is the union of the blocks of ``f`` it contains."""
    if t.universe != f.universe:
        raise UniverseMismatch('set and family belong to different universes')
    return union_of_masks(blocks_within(t.mask, f.masks)) == t.mask


def enumerate_subsets(universe, limit=None):
    ensure_exhaustive(universe, limit)
    for mask in range(1 << len(universe)):
        yield Subset(universe, mask)
