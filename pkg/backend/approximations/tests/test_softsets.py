from itertools import product

from django.test import SimpleTestCase
from hypothesis import given, settings

from approximations.exceptions import UniverseMismatch
from approximations.sets import Subset, Universe
from approximations.softsets import (
    BinaryRelation, SoftSet, induced_relation, is_covering, is_full,
    is_partition, soft_approximation_relation, soft_set_from_relation)

from .spaces import soft_sets, space_a, space_c, space_d


class SoftSetTests(SimpleTestCase):
    def test_space_a_is_a_covering(self):
        soft_set = space_a().soft_set
        self.assertTrue(is_full(soft_set))
        self.assertTrue(is_covering(soft_set))
        self.assertFalse(is_partition(soft_set))

    def test_empty_block_is_full_but_not_covering(self):
        universe = Universe(('a', 'b'))
        soft_set = SoftSet.from_mapping(universe, {'e1': 'ab', 'e2': ''})
        self.assertTrue(is_full(soft_set))
        self.assertFalse(is_covering(soft_set))

    def test_missing_element(self):
        universe = Universe(('a', 'b', 'c'))
        soft_set = SoftSet.from_mapping(universe, {'e1': 'ab'})
        self.assertFalse(is_full(soft_set))

    def test_partition(self):
        self.assertTrue(is_partition(space_d().soft_set))
        self.assertFalse(is_partition(space_c().soft_set))

    def test_repeated_block_still_partitions(self):
        universe = Universe(('a', 'b'))
        soft_set = SoftSet.from_mapping(
            universe, {'e1': 'a', 'e2': 'b', 'e3': 'a'},
        )
        self.assertTrue(is_partition(soft_set))
        self.assertEqual(len(soft_set.cover()), 2)

    def test_from_partition(self):
        universe = Universe(('a', 'b', 'c'))
        soft_set = SoftSet.from_partition(
            universe, [universe.subset('ab'), universe.subset('c')],
        )
        self.assertEqual(soft_set.parameters, ('e1', 'e2'))
        with self.assertRaises(ValueError):
            SoftSet.from_partition(
                universe, [universe.subset('ab'), universe.subset('bc')],
            )

    def test_images_must_share_the_universe(self):
        with self.assertRaises(UniverseMismatch):
            SoftSet(Universe(('a',)), ('e1',), (Universe(('b',)).full(),))

    def test_partition_implies_covering_implies_full(self):
        checked = 0
        for size in range(1, 5):
            universe = Universe(tuple('abcd'[:size]))
            for count in range(1, 4):
                parameters = tuple(f'e{number}' for number in range(count))
                for masks in product(range(1 << size), repeat=count):
                    soft_set = SoftSet(universe, parameters, tuple(
                        Subset(universe, mask) for mask in masks
                    ))
                    checked += 1
                    if is_partition(soft_set):
                        self.assertTrue(is_covering(soft_set))
                    if is_covering(soft_set):
                        self.assertTrue(is_full(soft_set))
        self.assertGreater(checked, 4000)

    def test_str(self):
        soft_set = space_c().soft_set
        self.assertEqual(
            str(soft_set),
            'F(e1)={h1,h2,h3}, F(e2)={h3,h4}, F(e3)={h4,h5}',
        )


class RelationTests(SimpleTestCase):
    def test_induced_relation_pairs(self):
        relation = induced_relation(space_a().soft_set)
        self.assertIn(('e1', 'a'), relation.pairs)
        self.assertIn(('e1', 'b'), relation.pairs)
        self.assertNotIn(('e1', 'c'), relation.pairs)
        self.assertEqual(len(relation), 10)

    def test_space_a_round_trip(self):
        soft_set = space_a().soft_set
        self.assertEqual(
            soft_set_from_relation(induced_relation(soft_set)), soft_set,
        )

    def test_empty_relation(self):
        universe = Universe(('a',))
        soft_set = soft_set_from_relation(
            BinaryRelation(('e1',), universe, ()),
        )
        self.assertEqual(soft_set.image('e1'), universe.empty())

    def test_relation_checks_its_pairs(self):
        universe = Universe(('a',))
        with self.assertRaises(ValueError):
            BinaryRelation(('e1',), universe, {('e2', 'a')})
        with self.assertRaises(ValueError):
            BinaryRelation(('e1',), universe, {('e1', 'z')})

    def test_soft_approximation_relation(self):
        soft_set = space_c().soft_set
        universe, relation = soft_approximation_relation(soft_set)
        self.assertEqual(universe, soft_set.universe)
        self.assertEqual(relation, induced_relation(soft_set))

    @given(soft_sets(max_size=8, max_blocks=6))
    @settings(deadline=None, max_examples=500)
    def test_relation_round_trip(self, soft_set):
        self.assertEqual(
            soft_set_from_relation(induced_relation(soft_set)), soft_set,
        )
        relation = induced_relation(soft_set)
        self.assertEqual(
            induced_relation(soft_set_from_relation(relation)), relation,
        )
