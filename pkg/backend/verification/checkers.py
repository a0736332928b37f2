"""Entry points of the verification harness.

``check_property`` and ``check_space`` run the catalog on one space; the
remaining checkers sweep families of spaces or compare operator pairs and
return their own small reports.
"""
import logging
import random
import time
from dataclasses import dataclass, field
from itertools import combinations

from django.conf import settings

from approximations.covering import SoftCoveringSpace  # isort: skip
from approximations.exceptions import (  # isort: skip
    NotAPartition, UniverseTooLarge)
from approximations.pawlak import (  # isort: skip
    pawlak_from_partition_soft_set, pawlak_lower, pawlak_upper)
from approximations.sets import (  # isort: skip
    Subset, Universe, ensure_exhaustive, exhaustive_limit, union_of_masks)
from approximations.softsets import SoftSet  # isort: skip
from .properties import (  # isort: skip
    CATALOG, FIXED, NESTED, PointwiseProperty, PropertyId, SpaceContext)
from .reports import Mode, VerificationReport  # isort: skip

logger = logging.getLogger(__name__)

BICONDITIONALS = (
    PropertyId.MEET_IFF_CLOSED,
    PropertyId.MONOTONE_IFF_CLOSED,
    PropertyId.JOIN_IFF_CLOSED,
    PropertyId.MONOTONE_IFF_JOIN,
)
MAX_ENUMERATED_UNIVERSE = 4


def _workers(workers):
    if workers is None:
        workers = settings.SOFTROUGH['WORKERS']
    return max(1, int(workers))


def check_property(space, property_id, mode=None, workers=None,
                   context=None):
    prop = CATALOG[PropertyId.lookup(property_id)]
    mode = mode or Mode()
    context = context or SpaceContext(space)
    logger.info('Checking %s (%s).', prop.id.value, mode)
    return prop.check(context, mode, _workers(workers))


def check_space(space, mode=None, properties=None, workers=None,
                limit=None):
    """Run ``properties`` (the whole catalog by default) on one space.

    In sampled mode, properties that can only be decided by a full sweep
    are skipped when the universe is above the exhaustive limit.
    """
    mode = mode or Mode()
    started = time.perf_counter()
    ids = [PropertyId.lookup(name) for name in properties or CATALOG]
    if mode.exhaustive:
        ensure_exhaustive(space.universe, limit)
    report = VerificationReport(space=space.describe(), mode=mode)
    context = SpaceContext(space)
    too_large = len(space.universe) > exhaustive_limit(limit)
    for property_id in ids:
        if too_large and CATALOG[property_id].needs_exhaustive:
            report.skipped.append(property_id.value)
            continue
        report.entries.append(
            check_property(space, property_id, mode, workers, context)
        )
    report.elapsed = time.perf_counter() - started
    logger.info(
        'Verified %s properties in %.3fs, %s violated.',
        len(report.entries), report.elapsed, len(report.violations()),
    )
    return report


def confirm_witness(space, entry):
    """Feed a failing entry's witness back through the operators."""
    if entry.witness is None:
        return False
    return CATALOG[entry.property].confirms(SpaceContext(space),
                                            entry.witness)


def evaluate_at(space, property_id, x, y=None):
    """Evaluate a pointwise property at one point.

    Returns the witness when the property fails there and ``None``
    otherwise.
    """
    prop = CATALOG[PropertyId.lookup(property_id)]
    if not isinstance(prop, PointwiseProperty) or prop.domain == FIXED:
        raise ValueError(f'{prop.id.value} is not evaluated at a point')
    context = SpaceContext(space)
    x_mask = x.mask
    y_mask = None if y is None else y.mask
    if prop.domain == NESTED and x_mask & ~y_mask:
        raise ValueError('the first set must be contained in the second')
    found = prop.violation(context, x_mask, y_mask)
    if found is None:
        return None
    return prop.witness(context, x_mask, y_mask, found)


def enumerate_coverings(universe, max_blocks=None):
    """Every covering of ``universe`` with at most ``max_blocks`` blocks.

    Coverings are deduplicated by their block family; each one is returned
    as a space whose parameters are ``e1``, ``e2``, ...
    """
    if len(universe) > MAX_ENUMERATED_UNIVERSE:
        raise UniverseTooLarge(
            len(universe), MAX_ENUMERATED_UNIVERSE, setting=None,
        )
    full = universe.full_mask
    candidates = range(1, full + 1)
    max_blocks = len(candidates) if max_blocks is None else max_blocks
    for count in range(1, max_blocks + 1):
        for blocks in combinations(candidates, count):
            if union_of_masks(blocks) != full:
                continue
            yield SoftCoveringSpace(_soft_set(universe, blocks))


def _soft_set(universe, blocks):
    return SoftSet(
        universe,
        tuple(f'e{number}' for number in range(1, len(blocks) + 1)),
        tuple(Subset(universe, mask) for mask in blocks),
    )


def random_covering(rng, size, blocks):
    """A random covering space over ``u1 .. u<size>`` with ``blocks`` blocks.

    Every element missed by the random blocks is added to one of them, so
    the result always covers the universe and has no empty block.
    """
    universe = Universe(tuple(f'u{number}' for number in range(1, size + 1)))
    masks = [rng.getrandbits(size) for _ in range(blocks)]
    for index in range(size):
        if not any(mask >> index & 1 for mask in masks):
            masks[rng.randrange(blocks)] |= 1 << index
    for position, mask in enumerate(masks):
        if not mask:
            masks[position] = 1 << rng.randrange(size)
    return SoftCoveringSpace(_soft_set(universe, masks))


@dataclass
class BiconditionalReport:
    universe_size: int
    spaces: int = 0
    violations: list = field(default_factory=list)

    def __bool__(self):
        return not self.violations


def check_biconditionals(universe_size, max_blocks=None, samples=None,
                         seed=None):
    """Check the closure-condition equivalences on enumerated coverings.

    ``max_blocks`` defaults to every block count for three or fewer
    elements and to four blocks above that. With ``samples`` only that many
    coverings, drawn with ``seed``, are checked.
    """
    if universe_size > MAX_ENUMERATED_UNIVERSE:
        raise UniverseTooLarge(
            universe_size, MAX_ENUMERATED_UNIVERSE, setting=None,
        )
    if max_blocks is None and universe_size > 3:
        max_blocks = 4
    universe = Universe(tuple('abcd'[:universe_size]))
    spaces = list(enumerate_coverings(universe, max_blocks))
    if samples is not None and samples < len(spaces):
        defaults = settings.SOFTROUGH
        rng = random.Random(defaults['SEED'] if seed is None else seed)
        spaces = rng.sample(spaces, samples)
    report = BiconditionalReport(universe_size)
    for space in spaces:
        report.spaces += 1
        entries = check_space(space, properties=BICONDITIONALS, workers=1)
        report.violations.extend(
            (space.describe(), entry) for entry in entries.violations()
        )
    logger.info(
        'Checked %s coverings over %s elements, %s violations.',
        report.spaces, universe_size, len(report.violations),
    )
    return report


@dataclass(frozen=True)
class Disagreement:
    x: Subset
    operator: str
    values: tuple


@dataclass
class CoincidenceReport:
    examined: int = 0
    disagreements: list = field(default_factory=list)

    def __bool__(self):
        return not self.disagreements


def check_partition_coincidence(space, limit=None):
    """Compare soft, classical and topological operators on every subset."""
    ensure_exhaustive(space.universe, limit)
    context = SpaceContext(space)
    if not context.partition:
        raise NotAPartition(
            f'soft set is not a partition soft set: {space.describe()}'
        )
    pawlak = pawlak_from_partition_soft_set(space.soft_set)
    report = CoincidenceReport()
    for mask in range(1 << context.size):
        x = context.subset(mask)
        lower = context.lower(mask)
        upper = context.upper(mask)
        inner = context.interior(mask)
        outer = context.closure(mask)
        triples = (
            ('lower', (lower, pawlak_lower(pawlak, x).mask, inner)),
            ('upper', (upper, pawlak_upper(pawlak, x).mask, outer)),
            ('boundary', (upper & ~lower, upper & ~lower, outer & ~inner)),
        )
        report.examined += 1
        for operator, values in triples:
            if len(set(values)) > 1:
                report.disagreements.append(Disagreement(
                    x, operator, tuple(context.subset(v) for v in values),
                ))
    return report


UPPER_WITHIN_CLOSURE = 'upper-within-closure'
CLOSURE_WITHIN_UPPER = 'closure-within-upper'
SOFT_BOUNDARY_WITHIN_BOUNDARY = 'soft-boundary-within-boundary'
BOUNDARY_WITHIN_SOFT_BOUNDARY = 'boundary-within-soft-boundary'
EQUAL = 'equal'
INCOMPARABLE = 'incomparable'

OPERATOR_LABELS = (UPPER_WITHIN_CLOSURE, CLOSURE_WITHIN_UPPER)
BOUNDARY_LABELS = (SOFT_BOUNDARY_WITHIN_BOUNDARY,
                   BOUNDARY_WITHIN_SOFT_BOUNDARY)


def classify(soft, topological, labels=OPERATOR_LABELS):
    within, beyond = labels
    if soft == topological:
        return EQUAL
    if soft & ~topological == 0:
        return within
    if topological & ~soft == 0:
        return beyond
    return INCOMPARABLE


@dataclass
class UpperClosureReport:
    counts: dict = field(default_factory=lambda: {
        EQUAL: 0, UPPER_WITHIN_CLOSURE: 0,
        CLOSURE_WITHIN_UPPER: 0, INCOMPARABLE: 0,
    })
    witnesses: dict = field(default_factory=dict)
    boundary_witnesses: dict = field(default_factory=dict)

    @property
    def incomparable(self):
        """Both strict directions occur somewhere on the space."""
        return all(label in self.witnesses for label in OPERATOR_LABELS)

    @property
    def boundaries_incomparable(self):
        return all(
            label in self.boundary_witnesses for label in BOUNDARY_LABELS
        )


def compare_upper_closure(space, limit=None):
    """Classify every subset by how its upper approximation meets cl.

    The soft boundary and the topological boundary are compared the same
    way; their first strict witnesses land in ``boundary_witnesses``.
    """
    ensure_exhaustive(space.universe, limit)
    context = SpaceContext(space)
    report = UpperClosureReport()
    for mask in range(1 << context.size):
        upper, outer = context.upper(mask), context.closure(mask)
        label = classify(upper, outer)
        report.counts[label] += 1
        if label != EQUAL and label not in report.witnesses:
            report.witnesses[label] = context.subset(mask)
        soft_boundary = upper & ~context.lower(mask)
        boundary = outer & ~context.interior(mask)
        label = classify(soft_boundary, boundary, BOUNDARY_LABELS)
        if label != EQUAL and label not in report.boundary_witnesses:
            report.boundary_witnesses[label] = context.subset(mask)
    return report
