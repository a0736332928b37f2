from django.test import SimpleTestCase
from hypothesis import given, settings

from approximations.covering import (
    SoftCoveringSpace, block_union_decomposition,
    is_intersection_union_closed, minimal_description, minimal_descriptions,
    rough_pair, soft_lower, soft_regions, soft_upper)
from approximations.exceptions import (
    NotACovering, UniverseMismatch, UnknownElement)
from approximations.sets import Universe
from approximations.softsets import SoftSet

from .spaces import (
    build, space_a, space_b, space_c, space_d, spaces_with_subsets, sub)


class CoveringSpaceTests(SimpleTestCase):
    def test_rejects_non_coverings(self):
        universe = Universe(('a', 'b'))
        with self.assertRaisesMessage(NotACovering, 'not a covering soft set'):
            SoftCoveringSpace(
                SoftSet.from_mapping(universe, {'e1': 'ab', 'e2': ''})
            )
        with self.assertRaises(NotACovering):
            SoftCoveringSpace(SoftSet.from_mapping(universe, {'e1': 'a'}))

    def test_repeated_blocks_are_merged(self):
        space = build('ab', {'e1': 'ab', 'e2': 'ab'})
        self.assertEqual(len(space.cover), 1)


class MinimalDescriptionTests(SimpleTestCase):
    def setUp(self):
        self.space = space_a()

    def test_single_minimal_block(self):
        description = minimal_description(self.space, 'g')
        self.assertEqual(description.blocks.blocks, (sub(self.space, 'g'),))

    def test_incomparable_blocks(self):
        description = minimal_description(self.space, 'b')
        self.assertEqual(
            description.blocks.blocks,
            (sub(self.space, 'bcd'), sub(self.space, 'ab')),
        )
        self.assertEqual(description.union(), sub(self.space, 'abcd'))

    def test_unknown_element(self):
        with self.assertRaises(UnknownElement):
            minimal_description(self.space, 'z')

    def test_every_element(self):
        descriptions = minimal_descriptions(self.space)
        self.assertEqual(
            [description.element for description in descriptions],
            list('abcdefgh'),
        )
        for description in descriptions:
            self.assertIn(description.element, description.union())


class ApproximationTests(SimpleTestCase):
    def test_rough_set(self):
        space = space_a()
        x = sub(space, 'abc')
        self.assertEqual(soft_lower(space, x), sub(space, 'ab'))
        self.assertEqual(soft_upper(space, x), sub(space, 'abcd'))
        report = soft_regions(space, x)
        self.assertFalse(report.definable)
        self.assertEqual(report.boundary, sub(space, 'cd'))
        self.assertEqual(report.negative, sub(space, 'efgh'))

    def test_definable_set(self):
        space = space_a()
        x = sub(space, 'efg')
        self.assertEqual(rough_pair(space, x), (x, x))
        self.assertTrue(soft_regions(space, x).definable)

    def test_extremes(self):
        space = space_a()
        universe = space.universe
        self.assertEqual(rough_pair(space, universe.full()),
                         (universe.full(), universe.full()))
        self.assertEqual(rough_pair(space, universe.empty()),
                         (universe.empty(), universe.empty()))

    def test_space_c(self):
        space = space_c()
        x = sub(space, ['h2', 'h3', 'h4'])
        y = sub(space, ['h1', 'h4', 'h5'])
        self.assertEqual(soft_lower(space, x), sub(space, ['h3', 'h4']))
        self.assertEqual(soft_upper(space, x),
                         sub(space, ['h1', 'h2', 'h3', 'h4']))
        self.assertEqual(soft_regions(space, x).boundary,
                         sub(space, ['h1', 'h2']))
        self.assertEqual(soft_lower(space, y), sub(space, ['h4', 'h5']))
        self.assertEqual(soft_upper(space, y), space.universe.full())
        self.assertEqual(soft_regions(space, y).boundary,
                         sub(space, ['h1', 'h2', 'h3']))

    def test_space_b_upper(self):
        space = space_b()
        self.assertEqual(soft_upper(space, sub(space, 'd')),
                         sub(space, 'bcde'))
        self.assertEqual(soft_upper(space, sub(space, 'ab')),
                         sub(space, 'abcd'))
        self.assertEqual(soft_upper(space, sub(space, 'cd')),
                         sub(space, 'abcde'))

    def test_foreign_subset(self):
        with self.assertRaises(UniverseMismatch):
            soft_lower(space_a(), space_c().universe.full())

    @given(spaces_with_subsets())
    @settings(deadline=None)
    def test_lower_within_set_within_upper(self, case):
        space, x, _ = case
        lower, upper = rough_pair(space, x)
        self.assertLessEqual(lower, x)
        self.assertLessEqual(x, upper)

    @given(spaces_with_subsets())
    @settings(deadline=None)
    def test_upper_is_a_union_of_blocks(self, case):
        space, x, _ = case
        upper = soft_upper(space, x)
        self.assertEqual(soft_lower(space, upper), upper)
        self.assertIsNotNone(block_union_decomposition(space, upper))


class BlockUnionTests(SimpleTestCase):
    def test_decomposition(self):
        space = space_a()
        blocks = block_union_decomposition(space, sub(space, 'efg'))
        self.assertEqual(blocks.blocks, (sub(space, 'g'), sub(space, 'ef')))
        self.assertIsNone(block_union_decomposition(space, sub(space, 'abc')))
        self.assertEqual(
            len(block_union_decomposition(space, space.universe.empty())), 0,
        )


class ClosureConditionTests(SimpleTestCase):
    def test_space_c_is_not_closed(self):
        space = space_c()
        report = is_intersection_union_closed(space)
        self.assertFalse(report)
        self.assertEqual(report.witness.first, sub(space, ['h4', 'h5']))
        self.assertEqual(report.witness.second, sub(space, ['h3', 'h4']))
        self.assertEqual(report.witness.meet, sub(space, ['h4']))
        meet = sub(space, ['h1', 'h2', 'h3']) & sub(space, ['h3', 'h4'])
        self.assertIsNone(block_union_decomposition(space, meet))

    def test_partition_is_closed(self):
        self.assertTrue(is_intersection_union_closed(space_d()))

    def test_nested_blocks_are_closed(self):
        space = build('abc', {'e1': 'ab', 'e2': 'b', 'e3': 'bc'})
        self.assertTrue(is_intersection_union_closed(space))
