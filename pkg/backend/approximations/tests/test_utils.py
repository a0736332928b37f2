import json
import tempfile
from pathlib import Path

from django.test import SimpleTestCase
from hypothesis import given, settings
from rest_framework.exceptions import ParseError, ValidationError

from approximations.serializers import SpaceDocumentSerializer
from approximations.utils import (
    dump_space, load_document, parse_soft_set, parse_space, read_soft_set,
    render_text)

from .spaces import SPACES_DIR, soft_sets, space_c


class DocumentTests(SimpleTestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)

    def write(self, text):
        path = Path(self.directory.name) / 'space.json'
        path.write_text(text, encoding='utf-8')
        return path

    def test_space_c_document(self):
        space = parse_space(SPACES_DIR / 'space_c.json')
        self.assertEqual(len(space.universe), 5)
        self.assertEqual(len(space.cover), 3)
        self.assertEqual(space, space_c())

    def test_unknown_element(self):
        path = self.write(json.dumps({
            'universe': ['a', 'b'], 'blocks': {'e1': ['a'], 'e2': ['b', 'z']},
        }))
        with self.assertRaises(ValidationError) as context:
            parse_space(path)
        self.assertEqual(
            context.exception.detail['blocks']['e2'],
            ['unknown element "z"'],
        )

    def test_empty_block_is_not_a_covering(self):
        path = self.write(json.dumps({
            'universe': ['a', 'b'], 'blocks': {'e1': ['a', 'b'], 'e2': []},
        }))
        with self.assertRaises(ValidationError) as context:
            parse_space(path)
        self.assertIn(
            'not a covering soft set', str(context.exception.detail['blocks']),
        )
        soft_set = parse_soft_set(path, allow_noncovering=True)
        self.assertEqual(soft_set.parameters, ('e1', 'e2'))

    def test_duplicate_names(self):
        with self.assertRaises(ValidationError) as context:
            read_soft_set({'universe': ['a', 'a'], 'blocks': {'e1': ['a']}})
        self.assertIn('universe', context.exception.detail)
        path = self.write(
            '{"universe": ["a"], "blocks": {"e1": ["a"], "e1": ["a"]}}'
        )
        with self.assertRaisesMessage(ValidationError, 'duplicate key "e1"'):
            load_document(path)

    def test_bad_element_names(self):
        with self.assertRaises(ValidationError):
            read_soft_set({'universe': ['a b'], 'blocks': {'e1': ['a b']}})
        with self.assertRaises(ValidationError):
            read_soft_set({'universe': [], 'blocks': {}})

    def test_malformed_json(self):
        path = self.write('{"universe": ["a",]')
        with self.assertRaisesMessage(ParseError, 'line 1'):
            load_document(path)
        with self.assertRaisesMessage(ParseError, 'expected a JSON object'):
            load_document(self.write('[]'))
        with self.assertRaises(ParseError):
            load_document(Path(self.directory.name) / 'missing.json')

    def test_dump_round_trip(self):
        for name in ('space_a', 'space_b', 'space_c', 'space_d'):
            space = parse_space(SPACES_DIR / f'{name}.json')
            path = self.write(dump_space(space))
            self.assertEqual(parse_space(path), space)

    @given(soft_sets(max_size=8, max_blocks=6))
    @settings(deadline=None, max_examples=500)
    def test_serializer_round_trip(self, soft_set):
        document = SpaceDocumentSerializer(soft_set).data
        self.assertEqual(
            read_soft_set(json.loads(json.dumps(document)),
                          allow_noncovering=True),
            soft_set,
        )


class RenderTextTests(SimpleTestCase):
    def test_sets_and_families(self):
        text = render_text({
            'set': ['h2', 'h3'],
            'empty': [],
            'opens': [[], ['h3']],
            'definable': False,
            'closed': None,
        })
        self.assertEqual(text, '\n'.join([
            'set: {h2,h3}',
            'empty: {}',
            'opens:',
            '  {}',
            '  {h3}',
            'definable: no',
            'closed: n/a',
        ]))

    def test_nested_records(self):
        text = render_text({'entries': [{'property': 'unit-fixed'}]})
        self.assertEqual(text, 'entries:\n  -\n    property: unit-fixed')
