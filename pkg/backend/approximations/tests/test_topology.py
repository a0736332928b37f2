from django.test import SimpleTestCase, override_settings

from approximations.covering import is_intersection_union_closed, soft_upper
from approximations.exceptions import NotATopology, UniverseTooLarge
from approximations.sets import Universe
from approximations.topology import (
    Origin, TopologyFamily, boundary, closed_sets, closed_system_report,
    closure, generate, generate_base, generate_from_subbase, interior,
    is_topology, lower_fixed_point_family, upper_fixed_point_family)

from .spaces import build, space_a, space_c, space_d, sub


def names(family):
    return [set(block) for block in family]


class SubbaseTests(SimpleTestCase):
    def test_space_c_topology_in_canonical_order(self):
        space = space_c()
        topology = generate_from_subbase(space)
        self.assertEqual(topology.origin, Origin.SUBBASE)
        self.assertEqual(names(topology), [
            set(),
            {'h4'},
            {'h4', 'h5'},
            {'h3'},
            {'h3', 'h4'},
            {'h3', 'h4', 'h5'},
            {'h1', 'h2', 'h3'},
            {'h1', 'h2', 'h3', 'h4'},
            {'h1', 'h2', 'h3', 'h4', 'h5'},
        ])
        self.assertTrue(is_topology(topology))

    def test_base_holds_block_intersections(self):
        space = space_c()
        base = generate_base(space)
        self.assertIn(space.universe.full(), base)
        self.assertIn(sub(space, ['h3']), base)
        self.assertIn(sub(space, ['h4']), base)
        self.assertIn(space.universe.empty(), base)

    def test_partition_topology(self):
        space = space_d()
        topology = generate_from_subbase(space)
        self.assertEqual(len(topology), 8)
        self.assertIn(sub(space, ['h3', 'h4', 'h5', 'h6', 'h7']), topology)


class FixedPointFamilyTests(SimpleTestCase):
    def test_space_c_lower_family_is_not_a_topology(self):
        space = space_c()
        family = lower_fixed_point_family(space)
        self.assertEqual(names(family), [
            set(),
            {'h4', 'h5'},
            {'h3', 'h4'},
            {'h3', 'h4', 'h5'},
            {'h1', 'h2', 'h3'},
            {'h1', 'h2', 'h3', 'h4'},
            {'h1', 'h2', 'h3', 'h4', 'h5'},
        ])
        report = is_topology(family)
        self.assertFalse(report)
        self.assertEqual(report.axiom, 'intersection')
        self.assertEqual(report.witness, (
            sub(space, ['h4', 'h5']), sub(space, ['h3', 'h4']),
        ))
        self.assertEqual(report.witness[0] & report.witness[1],
                         sub(space, ['h4']))
        first = sub(space, ['h1', 'h2', 'h3'])
        second = sub(space, ['h3', 'h4'])
        self.assertIn(first, family)
        self.assertIn(second, family)
        self.assertNotIn(first & second, family)

    def test_space_a_lower_family_is_every_block_union(self):
        space = space_a()
        unions = {0}
        for block in space.cover.masks:
            unions |= {mask | block for mask in unions}
        family = lower_fixed_point_family(space)
        self.assertEqual(set(family.opens.masks), unions)

    def test_upper_family_on_space_c(self):
        space = space_c()
        family = upper_fixed_point_family(space)
        self.assertEqual(family.opens, lower_fixed_point_family(space).opens)
        self.assertFalse(closed_system_report(family))
        for member in family:
            self.assertEqual(soft_upper(space, member), member)

    def test_closed_space_families_coincide(self):
        space = build('abc', {'e1': 'ab', 'e2': 'b', 'e3': 'bc'})
        self.assertTrue(is_intersection_union_closed(space))
        lower = lower_fixed_point_family(space)
        upper = upper_fixed_point_family(space)
        self.assertTrue(is_topology(lower))
        self.assertTrue(is_topology(upper))
        self.assertTrue(closed_system_report(upper))
        self.assertEqual(lower.opens, upper.opens)

    @override_settings(SOFTROUGH={
        'MAX_EXHAUSTIVE': 4, 'MAX_UNIVERSE': 30,
        'SAMPLES': 100, 'SEED': 42, 'WORKERS': 1,
    })
    def test_size_guard(self):
        space = space_c()
        with self.assertRaises(UniverseTooLarge):
            lower_fixed_point_family(space)
        self.assertEqual(len(lower_fixed_point_family(space, limit=5)), 7)
        with self.assertRaises(UniverseTooLarge):
            generate_from_subbase(space)
        with self.assertRaises(UniverseTooLarge):
            generate(space, 'subbase')
        self.assertEqual(len(generate_from_subbase(space, limit=5)), 9)

    def test_generate_by_method(self):
        space = space_c()
        self.assertEqual(generate(space, 'subbase').origin, Origin.SUBBASE)
        self.assertEqual(generate(space, 'upper-fixed').origin,
                         Origin.UPPER_FIXED)
        with self.assertRaises(ValueError):
            generate(space, 'explicit')


class OperatorTests(SimpleTestCase):
    def setUp(self):
        self.space = space_c()
        self.topology = generate_from_subbase(self.space)

    def test_interior_closure_boundary(self):
        x = sub(self.space, ['h2', 'h3', 'h4'])
        y = sub(self.space, ['h1', 'h4', 'h5'])
        self.assertEqual(interior(self.topology, x), sub(self.space,
                                                         ['h3', 'h4']))
        self.assertEqual(closure(self.topology, x), self.space.universe.full())
        self.assertEqual(boundary(self.topology, x),
                         sub(self.space, ['h1', 'h2', 'h5']))
        self.assertEqual(interior(self.topology, y),
                         sub(self.space, ['h4', 'h5']))
        self.assertEqual(closure(self.topology, y),
                         sub(self.space, ['h1', 'h2', 'h4', 'h5']))
        self.assertEqual(boundary(self.topology, y),
                         sub(self.space, ['h1', 'h2']))

    def test_upper_and_closure_are_incomparable(self):
        x = sub(self.space, ['h2', 'h3', 'h4'])
        y = sub(self.space, ['h1', 'h4', 'h5'])
        self.assertLess(soft_upper(self.space, x), closure(self.topology, x))
        self.assertLess(closure(self.topology, y), soft_upper(self.space, y))

    def test_closed_sets_are_complements(self):
        closed = closed_sets(self.topology)
        self.assertEqual(len(closed), len(self.topology))
        self.assertIn(sub(self.space, ['h1', 'h2', 'h4', 'h5']), closed)

    def test_rejects_a_non_topology(self):
        universe = Universe(('a', 'b', 'c'))
        family = TopologyFamily.explicit(universe, [
            universe.empty(), universe.subset('ab'), universe.subset('bc'),
            universe.full(),
        ])
        with self.assertRaisesMessage(NotATopology, 'intersection'):
            interior(family, universe.subset('a'))

    def test_partition_operators(self):
        space = space_d()
        topology = generate_from_subbase(space)
        x = sub(space, ['h1', 'h2', 'h3'])
        self.assertEqual(interior(topology, x), sub(space, ['h1', 'h2']))
        self.assertEqual(closure(topology, x),
                         sub(space, ['h1', 'h2', 'h3', 'h4']))
        self.assertEqual(boundary(topology, x), sub(space, ['h3', 'h4']))
