"""Closed catalog of approximation laws and the sweeps that check them.

Every property is evaluated on integer masks. A pointwise property names a
domain of one or two subsets and two sides that must be equal (or the first
contained in the second); the first failing point in canonical order is
reported as the witness.
"""
import logging
import time
from enum import Enum
from functools import cached_property

from approximations.covering import is_intersection_union_closed  # isort: skip
from approximations.exceptions import UnknownProperty  # isort: skip
from approximations.pawlak import (  # isort: skip
    pawlak_from_partition_soft_set)
from approximations.sets import (  # isort: skip
    Subset, ensure_exhaustive, iter_bits, union_of_masks)
from approximations.softsets import is_partition  # isort: skip
from approximations.topology import (  # isort: skip
    closed_system_report, generate_base, is_topology,
    lower_fixed_point_family, upper_fixed_point_family)
from .reports import ReportEntry, Status, Witness  # isort: skip

logger = logging.getLogger(__name__)

EQUAL = 'equal'
SUBSET = 'subset'

SINGLE = 'single'
PAIR = 'pair'
NESTED = 'nested'
FIXED = 'fixed'


class PropertyId(str, Enum):
    UNIT_FIXED = 'unit-fixed'
    EMPTY_FIXED = 'empty-fixed'
    LOWER_SET_UPPER = 'lower-within-set-within-upper'
    LOWER_MONOTONE = 'lower-monotone'
    LOWER_IDEMPOTENT = 'lower-idempotent'
    UPPER_IDEMPOTENT = 'upper-idempotent'
    LOWER_FIXES_BLOCKS = 'lower-fixes-blocks'
    UPPER_FIXES_BLOCKS = 'upper-fixes-blocks'
    LOWER_MEET = 'lower-distributes-over-intersection'
    UPPER_JOIN = 'upper-distributes-over-union'
    UPPER_MONOTONE = 'upper-monotone'
    LOWER_DUAL = 'lower-is-dual-of-upper'
    UPPER_DUAL = 'upper-is-dual-of-lower'
    LOWER_COMPLEMENT = 'lower-fixes-complement-of-lower'
    UPPER_COMPLEMENT = 'upper-fixes-complement-of-upper'
    LOWER_FIXED_UNION = 'lower-fixed-iff-block-union'
    UPPER_FIXED_UNION = 'upper-fixed-iff-block-union'
    MEET_IFF_CLOSED = 'intersection-law-iff-closed'
    MONOTONE_IFF_CLOSED = 'upper-monotone-iff-closed'
    MONOTONE_IFF_JOIN = 'upper-monotone-iff-union-law'
    JOIN_IFF_CLOSED = 'union-law-iff-closed'
    LOWER_TOPOLOGY = 'lower-fixed-family-is-topology'
    UPPER_TOPOLOGY = 'upper-fixed-family-is-topology'
    LOWER_INTERIOR = 'lower-within-interior'
    UPPER_CLOSURE = 'upper-incomparable-with-closure'
    PARTITION_PAWLAK = 'partition-matches-pawlak'
    PARTITION_TOPOLOGY = 'partition-matches-topology'

    @classmethod
    def lookup(cls, name):
        """Accept an identifier or its short catalog code (``T15.1``)."""
        if name in SHORT_CODES:
            return SHORT_CODES[name]
        try:
            return cls(name)
        except ValueError:
            raise UnknownProperty(name) from None


SHORT_CODES = {
    'T14.1': PropertyId.UNIT_FIXED,
    'T14.2': PropertyId.EMPTY_FIXED,
    'T14.3': PropertyId.LOWER_SET_UPPER,
    'T14.4': PropertyId.LOWER_MONOTONE,
    'T14.5': PropertyId.LOWER_IDEMPOTENT,
    'T14.6': PropertyId.UPPER_IDEMPOTENT,
    'T14.7': PropertyId.LOWER_FIXES_BLOCKS,
    'T14.8': PropertyId.UPPER_FIXES_BLOCKS,
    'T15.1': PropertyId.LOWER_MEET,
    'T15.2': PropertyId.UPPER_JOIN,
    'T15.3': PropertyId.UPPER_MONOTONE,
    'T15.4': PropertyId.LOWER_DUAL,
    'T15.5': PropertyId.UPPER_DUAL,
    'T15.6': PropertyId.LOWER_COMPLEMENT,
    'T15.7': PropertyId.UPPER_COMPLEMENT,
    'P19.lower': PropertyId.LOWER_FIXED_UNION,
    'P19.upper': PropertyId.UPPER_FIXED_UNION,
    'T20': PropertyId.MEET_IFF_CLOSED,
    'T21': PropertyId.MONOTONE_IFF_CLOSED,
    'T22': PropertyId.MONOTONE_IFF_JOIN,
    'C23': PropertyId.JOIN_IFF_CLOSED,
    'T24': PropertyId.LOWER_TOPOLOGY,
    'T25': PropertyId.UPPER_TOPOLOGY,
    'P28.lower_subset_interior': PropertyId.LOWER_INTERIOR,
    'P29.upper_vs_closure': PropertyId.UPPER_CLOSURE,
    'T33': PropertyId.PARTITION_PAWLAK,
    'T34': PropertyId.PARTITION_TOPOLOGY,
}


class SpaceContext:
    """Per-space caches shared by the properties of one verification run."""

    def __init__(self, space):
        self.space = space
        self.universe = space.universe
        self.size = len(space.universe)
        self.full = space.universe.full_mask
        self.blocks = space.cover.masks
        self.lower = space.lower_mask
        self.upper = space.upper_mask

    def subset(self, mask):
        return None if mask is None else Subset(self.universe, mask)

    @cached_property
    def closed(self):
        return is_intersection_union_closed(self.space)

    @cached_property
    def partition(self):
        return is_partition(self.space.soft_set)

    @cached_property
    def pawlak(self):
        return pawlak_from_partition_soft_set(self.space.soft_set)

    @cached_property
    def base(self):
        return generate_base(self.space).masks

    def interior(self, mask):
        """Interior in the subbase topology, read off its base."""
        return union_of_masks(
            member for member in self.base if member & ~mask == 0
        )

    def closure(self, mask):
        return self.full & ~self.interior(self.full & ~mask)

    def covered_by_blocks(self, mask):
        """Every point of ``mask`` lies in some block inside ``mask``."""
        return all(
            any(block >> index & 1 and block & ~mask == 0
                for block in self.blocks)
            for index in iter_bits(mask)
        )


def violates(relation, lhs, rhs):
    if relation == EQUAL:
        return lhs != rhs
    return lhs & ~rhs != 0


def exhaustive_domain(kind, size):
    count = 1 << size
    if kind == SINGLE:
        return ((x, None) for x in range(count))
    if kind == PAIR:
        return ((x, y) for x in range(count) for y in range(count))
    return (
        (x, x | 1 << index)
        for x in range(count) for index in range(size) if not x >> index & 1
    )


def chunk_domain(kind, size, start, stop):
    """The exhaustive domain restricted to first coordinates in a range."""
    count = 1 << size
    if kind == SINGLE:
        return ((x, None) for x in range(start, stop))
    if kind == PAIR:
        return ((x, y) for x in range(start, stop) for y in range(count))
    return (
        (x, x | 1 << index)
        for x in range(start, stop)
        for index in range(size) if not x >> index & 1
    )


def sampled_domain(kind, size, mode):
    rng = mode.rng()
    for _ in range(mode.samples):
        x = rng.getrandbits(size)
        if kind == SINGLE:
            yield x, None
        elif kind == PAIR:
            yield x, rng.getrandbits(size)
        else:
            yield x, x | rng.getrandbits(size)


class Property:
    id = None
    claim = ''
    sides = ('lhs', 'rhs')
    expected_to_fail = False
    needs_exhaustive = False

    def check(self, context, mode, workers=1):
        started = time.perf_counter()
        status, witness, examined, vacuous = self.run(context, mode, workers)
        elapsed = time.perf_counter() - started
        logger.info(
            '%s: %s after %s points in %.3fs.',
            self.id.value, status.value, examined, elapsed,
        )
        return ReportEntry(
            property=self.id,
            claim=self.claim,
            status=status,
            witness=witness,
            examined=examined,
            elapsed=elapsed,
            vacuous=vacuous,
            expected_to_fail=self.expected_to_fail,
            sides=self.sides,
        )

    def run(self, context, mode, workers):
        raise NotImplementedError

    def confirms(self, context, witness):
        """Re-evaluate ``witness`` and tell whether it is a real violation."""
        raise NotImplementedError


class PointwiseProperty(Property):
    domain = SINGLE
    relation = EQUAL

    def premise(self, context):
        return True

    def sides_at(self, context, x, y):
        raise NotImplementedError

    def fixed_domain(self, context):
        raise NotImplementedError

    def violation(self, context, x, y):
        lhs, rhs = self.sides_at(context, x, y)
        if violates(self.relation, lhs, rhs):
            return lhs, rhs
        return None

    def witness(self, context, x, y, found):
        lhs, rhs = found
        return Witness(
            x=context.subset(x),
            y=context.subset(y),
            lhs=context.subset(lhs),
            rhs=context.subset(rhs),
            relation=self.relation,
        )

    def sweep(self, context, points):
        examined = 0
        for x, y in points:
            examined += 1
            found = self.violation(context, x, y)
            if found is not None:
                return examined, (x, y, found)
        return examined, None

    def run(self, context, mode, workers):
        if not self.premise(context):
            return Status.HOLDS_EXHAUSTIVE, None, 0, True
        if self.domain == FIXED:
            points = self.fixed_domain(context)
            status = Status.HOLDS_EXHAUSTIVE
        elif mode.exhaustive:
            ensure_exhaustive(context.universe)
            if workers > 1 and self.domain != SINGLE:
                from .async_elements import AsyncSweeper
                examined, first = AsyncSweeper(
                    context.space, self.id, workers,
                ).run()
                return self.finish(context, examined, first,
                                   Status.HOLDS_EXHAUSTIVE)
            points = exhaustive_domain(self.domain, context.size)
            status = Status.HOLDS_EXHAUSTIVE
        else:
            points = sampled_domain(self.domain, context.size, mode)
            status = Status.HOLDS_SAMPLED
        examined, first = self.sweep(context, points)
        return self.finish(context, examined, first, status)

    def finish(self, context, examined, first, status):
        if first is None:
            return status, None, examined, False
        x, y, found = first
        witness = self.witness(context, x, y, found)
        return Status.FAILS, witness, examined, False

    def confirms(self, context, witness):
        y = None if witness.y is None else witness.y.mask
        if self.domain == NESTED and witness.x.mask & ~y:
            return False
        return self.violation(context, witness.x.mask, y) is not None


class UnitFixed(PointwiseProperty):
    id = PropertyId.UNIT_FIXED
    claim = 'lower(U) = upper(U) = U'
    sides = ('approximation(U)', 'U')
    domain = FIXED

    def fixed_domain(self, context):
        return [(context.full, None)]

    def violation(self, context, x, y):
        for value in (context.lower(x), context.upper(x)):
            if value != x:
                return value, x
        return None


class EmptyFixed(UnitFixed):
    id = PropertyId.EMPTY_FIXED
    claim = 'lower({}) = upper({}) = {}'
    sides = ('approximation({})', '{}')

    def fixed_domain(self, context):
        return [(0, None)]


class LowerSetUpper(PointwiseProperty):
    id = PropertyId.LOWER_SET_UPPER
    claim = 'lower(X) <= X <= upper(X)'
    sides = ('smaller', 'larger')
    relation = SUBSET

    def violation(self, context, x, y):
        lower = context.lower(x)
        if lower & ~x:
            return lower, x
        upper = context.upper(x)
        if x & ~upper:
            return x, upper
        return None


class LowerMonotone(PointwiseProperty):
    id = PropertyId.LOWER_MONOTONE
    claim = 'X <= Y implies lower(X) <= lower(Y)'
    sides = ('lower(X)', 'lower(Y)')
    domain = NESTED
    relation = SUBSET

    def sides_at(self, context, x, y):
        return context.lower(x), context.lower(y)


class LowerIdempotent(PointwiseProperty):
    id = PropertyId.LOWER_IDEMPOTENT
    claim = 'lower(lower(X)) = lower(X)'
    sides = ('lower(lower(X))', 'lower(X)')

    def sides_at(self, context, x, y):
        lower = context.lower(x)
        return context.lower(lower), lower


class UpperIdempotent(PointwiseProperty):
    id = PropertyId.UPPER_IDEMPOTENT
    claim = 'upper(upper(X)) = upper(X)'
    sides = ('upper(upper(X))', 'upper(X)')

    def sides_at(self, context, x, y):
        upper = context.upper(x)
        return context.upper(upper), upper


class LowerFixesBlocks(PointwiseProperty):
    id = PropertyId.LOWER_FIXES_BLOCKS
    claim = 'lower(B) = B for every block B'
    sides = ('lower(B)', 'B')
    domain = FIXED

    def fixed_domain(self, context):
        return [(block, None) for block in context.blocks]

    def sides_at(self, context, x, y):
        return context.lower(x), x


class UpperFixesBlocks(LowerFixesBlocks):
    id = PropertyId.UPPER_FIXES_BLOCKS
    claim = 'upper(B) = B for every block B'
    sides = ('upper(B)', 'B')

    def sides_at(self, context, x, y):
        return context.upper(x), x


class LowerMeet(PointwiseProperty):
    id = PropertyId.LOWER_MEET
    claim = 'lower(X & Y) = lower(X) & lower(Y)'
    sides = ('lower(X & Y)', 'lower(X) & lower(Y)')
    domain = PAIR
    expected_to_fail = True

    def sides_at(self, context, x, y):
        return context.lower(x & y), context.lower(x) & context.lower(y)


class UpperJoin(PointwiseProperty):
    id = PropertyId.UPPER_JOIN
    claim = 'upper(X | Y) = upper(X) | upper(Y)'
    sides = ('upper(X | Y)', 'upper(X) | upper(Y)')
    domain = PAIR
    expected_to_fail = True

    def sides_at(self, context, x, y):
        return context.upper(x | y), context.upper(x) | context.upper(y)


class UpperMonotone(PointwiseProperty):
    id = PropertyId.UPPER_MONOTONE
    claim = 'X <= Y implies upper(X) <= upper(Y)'
    sides = ('upper(X)', 'upper(Y)')
    domain = NESTED
    relation = SUBSET
    expected_to_fail = True

    def sides_at(self, context, x, y):
        return context.upper(x), context.upper(y)


class LowerDual(PointwiseProperty):
    id = PropertyId.LOWER_DUAL
    claim = 'lower(X) = -upper(-X)'
    sides = ('lower(X)', '-upper(-X)')
    expected_to_fail = True

    def sides_at(self, context, x, y):
        full = context.full
        return context.lower(x), full & ~context.upper(full & ~x)


class UpperDual(PointwiseProperty):
    id = PropertyId.UPPER_DUAL
    claim = 'upper(X) = -lower(-X)'
    sides = ('upper(X)', '-lower(-X)')
    expected_to_fail = True

    def sides_at(self, context, x, y):
        full = context.full
        return context.upper(x), full & ~context.lower(full & ~x)


class LowerComplement(PointwiseProperty):
    id = PropertyId.LOWER_COMPLEMENT
    claim = 'lower(-lower(X)) = -lower(X)'
    sides = ('lower(-lower(X))', '-lower(X)')
    expected_to_fail = True

    def sides_at(self, context, x, y):
        outside = context.full & ~context.lower(x)
        return context.lower(outside), outside


class UpperComplement(PointwiseProperty):
    id = PropertyId.UPPER_COMPLEMENT
    claim = 'upper(-upper(X)) = -upper(X)'
    sides = ('upper(-upper(X))', '-upper(X)')
    expected_to_fail = True

    def sides_at(self, context, x, y):
        outside = context.full & ~context.upper(x)
        return context.upper(outside), outside


class LowerFixedUnion(PointwiseProperty):
    id = PropertyId.LOWER_FIXED_UNION
    claim = 'lower(X) = X iff X is a union of blocks'
    sides = ('lower(X)', 'X')
    relation = 'iff'

    def operator(self, context):
        return context.lower

    def violation(self, context, x, y):
        value = self.operator(context)(x)
        if (value == x) != context.covered_by_blocks(x):
            return value, x
        return None


class UpperFixedUnion(LowerFixedUnion):
    id = PropertyId.UPPER_FIXED_UNION
    claim = 'upper(X) = X iff X is a union of blocks'
    sides = ('upper(X)', 'X')

    def operator(self, context):
        return context.upper


class LowerInterior(PointwiseProperty):
    id = PropertyId.LOWER_INTERIOR
    claim = 'lower(X) <= int(X) in the subbase topology'
    sides = ('lower(X)', 'int(X)')
    relation = SUBSET

    def sides_at(self, context, x, y):
        return context.lower(x), context.interior(x)


class PartitionPawlak(PointwiseProperty):
    id = PropertyId.PARTITION_PAWLAK
    claim = 'on a partition, soft and classical approximations agree'
    sides = ('soft', 'classical')

    def premise(self, context):
        return context.partition

    def violation(self, context, x, y):
        classes = context.pawlak.classes.masks
        lower = union_of_masks(c for c in classes if c & ~x == 0)
        upper = union_of_masks(c for c in classes if c & x)
        if context.lower(x) != lower:
            return context.lower(x), lower
        if context.upper(x) != upper:
            return context.upper(x), upper
        return None


class PartitionTopology(PointwiseProperty):
    id = PropertyId.PARTITION_TOPOLOGY
    claim = 'on a partition, lower = int, upper = cl and the boundaries agree'
    sides = ('approximation', 'topological operator')

    def premise(self, context):
        return context.partition

    def violation(self, context, x, y):
        lower, upper = context.lower(x), context.upper(x)
        inner, outer = context.interior(x), context.closure(x)
        for soft, topological in ((lower, inner), (upper, outer),
                                  (upper & ~lower, outer & ~inner)):
            if soft != topological:
                return soft, topological
        return None


class UpperClosure(Property):
    id = PropertyId.UPPER_CLOSURE
    claim = 'upper(X) <= cl(X) for all X, or cl(X) <= upper(X) for all X'
    sides = ('cl(X)', 'upper(X)')
    expected_to_fail = True

    def run(self, context, mode, workers):
        if mode.exhaustive:
            ensure_exhaustive(context.universe)
            points = exhaustive_domain(SINGLE, context.size)
            status = Status.HOLDS_EXHAUSTIVE
        else:
            points = sampled_domain(SINGLE, context.size, mode)
            status = Status.HOLDS_SAMPLED
        closure_escapes = upper_escapes = None
        examined = 0
        for x, _ in points:
            examined += 1
            upper, outer = context.upper(x), context.closure(x)
            if closure_escapes is None and outer & ~upper:
                closure_escapes = x
            if upper_escapes is None and upper & ~outer:
                upper_escapes = x
            if closure_escapes is not None and upper_escapes is not None:
                x, y = closure_escapes, upper_escapes
                return Status.FAILS, Witness(
                    x=context.subset(x),
                    y=context.subset(y),
                    lhs=context.subset(context.closure(x)),
                    rhs=context.subset(context.upper(x)),
                    relation=SUBSET,
                    kind='incomparable',
                    note=(
                        f'and upper(Y)={context.subset(context.upper(y))} '
                        f'not <= cl(Y)={context.subset(context.closure(y))}'
                    ),
                ), examined, False
        return status, None, examined, False

    def confirms(self, context, witness):
        x, y = witness.x.mask, witness.y.mask
        return bool(
            context.closure(x) & ~context.upper(x)
            and context.upper(y) & ~context.closure(y)
        )


class Equivalence(Property):
    """Both sides of an "if and only if" must agree on the space."""

    needs_exhaustive = True

    def left(self, context):
        raise NotImplementedError

    def right(self, context):
        raise NotImplementedError

    def law(self, property_id, context):
        examined, first = CATALOG[property_id].sweep(
            context,
            exhaustive_domain(CATALOG[property_id].domain, context.size),
        )
        if first is None:
            return True, None, examined
        x, y, found = first
        witness = CATALOG[property_id].witness(context, x, y, found)
        return False, witness, examined

    def condition(self, context):
        report = context.closed
        if report:
            return True, None, 0
        return False, Witness(
            x=report.witness.first,
            y=report.witness.second,
            lhs=report.witness.meet,
            rhs=context.subset(context.lower(report.witness.meet.mask)),
            relation=EQUAL,
            kind='block-pair',
            note='the intersection of two blocks is not a union of blocks',
        ), 0

    def run(self, context, mode, workers):
        ensure_exhaustive(context.universe)
        left, left_witness, left_count = self.left(context)
        right, right_witness, right_count = self.right(context)
        examined = left_count + right_count
        if left == right:
            return Status.HOLDS_EXHAUSTIVE, None, examined, False
        witness = left_witness if left_witness is not None else right_witness
        return Status.FAILS, witness, examined, False

    def confirms(self, context, witness):
        left = self.left(context)[0]
        right = self.right(context)[0]
        if left == right:
            return False
        if witness.kind == 'block-pair':
            return not context.space.is_block_union(witness.lhs.mask)
        return any(
            CATALOG[law].confirms(context, witness)
            for law in self.laws
        )


class MeetIffClosed(Equivalence):
    id = PropertyId.MEET_IFF_CLOSED
    claim = ('lower distributes over intersection iff every block '
             'intersection is a union of blocks')
    laws = (PropertyId.LOWER_MEET,)

    def left(self, context):
        return self.law(PropertyId.LOWER_MEET, context)

    def right(self, context):
        return self.condition(context)


class MonotoneIffClosed(MeetIffClosed):
    id = PropertyId.MONOTONE_IFF_CLOSED
    claim = ('upper is monotone iff every block intersection is a union '
             'of blocks')
    laws = (PropertyId.UPPER_MONOTONE,)

    def left(self, context):
        return self.law(PropertyId.UPPER_MONOTONE, context)


class JoinIffClosed(MeetIffClosed):
    id = PropertyId.JOIN_IFF_CLOSED
    claim = ('upper distributes over union iff every block intersection '
             'is a union of blocks')
    laws = (PropertyId.UPPER_JOIN,)

    def left(self, context):
        return self.law(PropertyId.UPPER_JOIN, context)


class MonotoneIffJoin(Equivalence):
    id = PropertyId.MONOTONE_IFF_JOIN
    claim = 'upper is monotone iff upper distributes over union'
    laws = (PropertyId.UPPER_MONOTONE, PropertyId.UPPER_JOIN)

    def left(self, context):
        return self.law(PropertyId.UPPER_MONOTONE, context)

    def right(self, context):
        return self.law(PropertyId.UPPER_JOIN, context)


class LowerTopology(Property):
    id = PropertyId.LOWER_TOPOLOGY
    claim = ('if every block intersection is a union of blocks, the fixed '
             'points of lower form a topology')
    sides = ('first', 'second')
    needs_exhaustive = True

    def family(self, context):
        return lower_fixed_point_family(context.space)

    def problems(self, context, family):
        report = is_topology(family)
        if not report:
            yield report

    def run(self, context, mode, workers):
        ensure_exhaustive(context.universe)
        if not context.closed:
            return Status.HOLDS_EXHAUSTIVE, None, 0, True
        family = self.family(context)
        examined = 1 << context.size
        for report in self.problems(context, family):
            first, second = report.witness or (None, None)
            return Status.FAILS, Witness(
                x=first,
                y=second,
                relation=report.axiom,
                kind='axiom',
                note=f'{report.axiom} fails',
            ), examined, False
        return Status.HOLDS_EXHAUSTIVE, None, examined, False

    def confirms(self, context, witness):
        if not context.closed:
            return False
        return any(
            report.axiom == witness.relation
            for report in self.problems(context, self.family(context))
        )


class UpperTopology(LowerTopology):
    id = PropertyId.UPPER_TOPOLOGY
    claim = ('if every block intersection is a union of blocks, the fixed '
             'points of upper form a topology and a closed-set system equal '
             'to the fixed points of lower')

    def family(self, context):
        return upper_fixed_point_family(context.space)

    def problems(self, context, family):
        yield from super().problems(context, family)
        report = closed_system_report(family)
        if not report:
            yield report
        lower = lower_fixed_point_family(context.space)
        if lower.opens != family.opens:
            yield type(report)(False, 'coincides-with-lower-fixed')


CATALOG = {
    prop.id: prop for prop in (
        UnitFixed(),
        EmptyFixed(),
        LowerSetUpper(),
        LowerMonotone(),
        LowerIdempotent(),
        UpperIdempotent(),
        LowerFixesBlocks(),
        UpperFixesBlocks(),
        LowerMeet(),
        UpperJoin(),
        UpperMonotone(),
        LowerDual(),
        UpperDual(),
        LowerComplement(),
        UpperComplement(),
        LowerFixedUnion(),
        UpperFixedUnion(),
        MeetIffClosed(),
        MonotoneIffClosed(),
        MonotoneIffJoin(),
        JoinIffClosed(),
        LowerTopology(),
        UpperTopology(),
        LowerInterior(),
        UpperClosure(),
        PartitionPawlak(),
        PartitionTopology(),
    )
}


def sweep_chunk(space, property_id, start, stop):
    """Worker entry point: sweep first coordinates in ``[start, stop)``."""
    prop = CATALOG[property_id]
    context = SpaceContext(space)
    points = chunk_domain(prop.domain, context.size, start, stop)
    return prop.sweep(context, points)
