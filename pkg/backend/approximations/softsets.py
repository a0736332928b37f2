"""Soft sets over a universe and their correspondence with binary relations."""
from dataclasses import dataclass

from .exceptions import UniverseMismatch
from .sets import SetFamily, Subset, Universe, union_of_masks


@dataclass(frozen=True)
class SoftSet:
    universe: Universe
    parameters: tuple
    images: tuple

    def __post_init__(self):
        parameters = tuple(self.parameters)
        images = tuple(self.images)
        object.__setattr__(self, 'parameters', parameters)
        object.__setattr__(self, 'images', images)
        if len(set(parameters)) != len(parameters):
            raise ValueError('parameter names must be distinct')
        if len(parameters) != len(images):
            raise ValueError('every parameter needs exactly one image')
        for image in images:
            if image.universe != self.universe:
                raise UniverseMismatch(
                    'soft set image belongs to a different universe'
                )

    @classmethod
    def from_mapping(cls, universe, mapping):
        """Build ``F`` from ``{parameter: iterable of element names}``."""
        return cls(
            universe,
            tuple(mapping),
            tuple(universe.subset(names) for names in mapping.values()),
        )

    @classmethod
    def from_partition(cls, universe, classes, prefix='e'):
        soft_set = cls(
            universe,
            tuple(
                f'{prefix}{number}' for number in range(1, len(classes) + 1)
            ),
            tuple(classes),
        )
        if not is_partition(soft_set):
            raise ValueError('classes do not form a partition')
        return soft_set

    @property
    def assignment(self):
        return dict(zip(self.parameters, self.images))

    def image(self, parameter):
        try:
            return self.images[self.parameters.index(parameter)]
        except ValueError:
            raise KeyError(parameter) from None

    def cover(self):
        """The family C_G of distinct block values."""
        return SetFamily(
            self.universe, tuple(image.mask for image in self.images),
        )

    def __str__(self):
        return ', '.join(
            f'F({parameter})={image}'
            for parameter, image in zip(self.parameters, self.images)
        )


@dataclass(frozen=True)
class BinaryRelation:
    domain: tuple
    codomain: Universe
    pairs: frozenset

    def __post_init__(self):
        object.__setattr__(self, 'domain', tuple(self.domain))
        object.__setattr__(self, 'pairs', frozenset(self.pairs))
        parameters = set(self.domain)
        for parameter, element in self.pairs:
            if parameter not in parameters:
                raise ValueError(f'unknown parameter "{parameter}"')
            if element not in self.codomain:
                raise ValueError(f'unknown element "{element}"')

    def __len__(self):
        return len(self.pairs)


def is_full(s):
    covered = union_of_masks(image.mask for image in s.images)
    return covered == s.universe.full_mask


def is_covering(s):
    return is_full(s) and all(s.images)


def is_partition(s):
    blocks = s.cover().masks
    if not blocks or 0 in blocks:
        return False
    seen = 0
    for block in blocks:
        if seen & block:
            return False
        seen |= block
    return seen == s.universe.full_mask


def induced_relation(s):
    return BinaryRelation(
        s.parameters,
        s.universe,
        frozenset(
            (parameter, element)
            for parameter, image in zip(s.parameters, s.images)
            for element in image
        ),
    )


def soft_set_from_relation(r):
    images = {parameter: [] for parameter in r.domain}
    for parameter, element in r.pairs:
        images[parameter].append(element)
    return SoftSet(
        r.codomain,
        r.domain,
        tuple(Subset(r.codomain, r.codomain.mask_of(images[parameter]))
              for parameter in r.domain),
    )


def soft_approximation_relation(s):
    """The soft approximation space (U, R_G) as a universe/relation pair."""
    return s.universe, induced_relation(s)
