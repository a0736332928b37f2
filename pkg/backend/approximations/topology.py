"""Finite topologies generated from a soft covering.

Three constructions are provided: the covering taken as a subbase, the
fixed points of the lower approximation and the fixed points of the upper
approximation. Families are scanned directly for interior and closure.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .exceptions import NotATopology, UniverseMismatch
from .sets import SetFamily, Subset, ensure_exhaustive, union_of_masks

logger = logging.getLogger(__name__)

OPEN_SET_CLOSURES = ((int.__or__, 'union'), (int.__and__, 'intersection'))


class Origin(str, Enum):
    SUBBASE = 'subbase'
    LOWER_FIXED = 'lower-fixed'
    UPPER_FIXED = 'upper-fixed'
    EXPLICIT = 'explicit'


@dataclass(frozen=True)
class AxiomReport:
    holds: bool
    axiom: str = ''
    witness: tuple = ()

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class TopologyFamily:
    universe: object
    opens: SetFamily
    origin: Origin = Origin.EXPLICIT

    @classmethod
    def explicit(cls, universe, subsets):
        return cls(universe, SetFamily.of(universe, subsets), Origin.EXPLICIT)

    def __iter__(self):
        return iter(self.opens)

    def __len__(self):
        return len(self.opens)

    def __contains__(self, subset):
        return subset in self.opens

    @cached_property
    def axioms(self):
        return _open_set_axioms(self.universe, self.opens.masks)

    @cached_property
    def closed_masks(self):
        full = self.universe.full_mask
        return tuple(sorted(full & ~mask for mask in self.opens.masks))


def _pairwise(masks, combine, label, members):
    for position, first in enumerate(masks):
        for second in masks[position + 1:]:
            if combine(first, second) not in members:
                return label, (first, second)
    return None


def _open_set_axioms(universe, masks):
    members = set(masks)
    if 0 not in members:
        return AxiomReport(False, 'contains-empty')
    if universe.full_mask not in members:
        return AxiomReport(False, 'contains-universe')
    for combine, label in OPEN_SET_CLOSURES:
        violation = _pairwise(masks, combine, label, members)
        if violation is not None:
            axiom, (first, second) = violation
            return AxiomReport(False, axiom, (
                Subset(universe, first), Subset(universe, second),
            ))
    return AxiomReport(True)


def generate_base(s):
    """All finite intersections of blocks; ``U`` is the empty intersection."""
    base = {s.universe.full_mask}
    for block in s.cover.masks:
        base |= {member & block for member in base}
    return SetFamily(s.universe, tuple(base))


def generate_from_subbase(s, limit=None):
    """Every union of base members. The family can hold ``2 ** n`` sets."""
    ensure_exhaustive(s.universe, limit)
    opens = {0}
    for member in generate_base(s).masks:
        opens |= {mask | member for mask in opens}
    logger.info('Subbase generated a topology of %s open sets.', len(opens))
    return TopologyFamily(
        s.universe, SetFamily(s.universe, tuple(opens)), Origin.SUBBASE,
    )


def _fixed_points(s, operator, origin, limit):
    ensure_exhaustive(s.universe, limit)
    masks = tuple(
        mask for mask in range(1 << len(s.universe)) if operator(mask) == mask
    )
    logger.info('%s family holds %s sets.', origin.value, len(masks))
    return TopologyFamily(s.universe, SetFamily(s.universe, masks), origin)


def lower_fixed_point_family(s, limit=None):
    return _fixed_points(s, s.lower_mask, Origin.LOWER_FIXED, limit)


def upper_fixed_point_family(s, limit=None):
    return _fixed_points(s, s.upper_mask, Origin.UPPER_FIXED, limit)


def is_topology(f, limit=None):
    ensure_exhaustive(f.universe, limit)
    return f.axioms


def closed_system_report(f, limit=None):
    """Check ``f`` as a family of closed sets.

    On a finite universe closure under arbitrary intersections reduces to
    pairwise intersections, so the checks mirror the open-set ones in the
    other order.
    """
    ensure_exhaustive(f.universe, limit)
    masks = f.opens.masks
    members = set(masks)
    if 0 not in members:
        return AxiomReport(False, 'contains-empty')
    if f.universe.full_mask not in members:
        return AxiomReport(False, 'contains-universe')
    for combine, label in reversed(OPEN_SET_CLOSURES):
        violation = _pairwise(masks, combine, label, members)
        if violation is not None:
            axiom, (first, second) = violation
            return AxiomReport(False, axiom, (
                Subset(f.universe, first), Subset(f.universe, second),
            ))
    return AxiomReport(True)


def _require_topology(t, x):
    if x.universe != t.universe:
        raise UniverseMismatch('set belongs to a different universe')
    report = t.axioms
    if not report:
        raise NotATopology(
            f'family is not a topology: {report.axiom} fails'
            + (f' for {report.witness[0]} and {report.witness[1]}'
               if report.witness else '')
        )


def closed_sets(t):
    return SetFamily(t.universe, t.closed_masks)


def interior(t, x):
    _require_topology(t, x)
    return Subset(t.universe, union_of_masks(
        mask for mask in t.opens.masks if mask & ~x.mask == 0
    ))


def closure(t, x):
    _require_topology(t, x)
    result = t.universe.full_mask
    for mask in t.closed_masks:
        if x.mask & ~mask == 0:
            result &= mask
    return Subset(t.universe, result)


def boundary(t, x):
    return closure(t, x) - interior(t, x)


def generate(s, method, limit=None):
    """Build the topology named by ``method`` (an ``Origin`` value)."""
    method = Origin(method)
    if method is Origin.SUBBASE:
        return generate_from_subbase(s, limit)
    if method is Origin.LOWER_FIXED:
        return lower_fixed_point_family(s, limit)
    if method is Origin.UPPER_FIXED:
        return upper_fixed_point_family(s, limit)
    raise ValueError(f'cannot generate a topology by method "{method.value}"')


GENERATED_ORIGINS = [Origin.SUBBASE.value, Origin.LOWER_FIXED.value,
                     Origin.UPPER_FIXED.value]
