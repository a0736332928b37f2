import random
from dataclasses import dataclass, field
from enum import Enum

from django.conf import settings


class Status(str, Enum):
    HOLDS_EXHAUSTIVE = 'holds-exhaustive'
    HOLDS_SAMPLED = 'holds-sampled'
    FAILS = 'fails'


@dataclass(frozen=True)
class Mode:
    exhaustive: bool = True
    samples: int = None
    seed: int = None

    @classmethod
    def sampled(cls, samples=None, seed=None):
        defaults = settings.SOFTROUGH
        return cls(
            exhaustive=False,
            samples=defaults['SAMPLES'] if samples is None else samples,
            seed=defaults['SEED'] if seed is None else seed,
        )

    def rng(self):
        return random.Random(self.seed)

    def __str__(self):
        if self.exhaustive:
            return 'exhaustive'
        return f'sampled ({self.samples} samples, seed {self.seed})'


@dataclass(frozen=True)
class Witness:
    x: object = None
    y: object = None
    lhs: object = None
    rhs: object = None
    relation: str = 'equal'
    kind: str = 'pointwise'
    note: str = ''


@dataclass(frozen=True)
class ReportEntry:
    property: str
    claim: str
    status: Status
    witness: Witness = None
    examined: int = 0
    elapsed: float = 0.0
    vacuous: bool = False
    expected_to_fail: bool = False
    sides: tuple = ('lhs', 'rhs')

    def __post_init__(self):
        if (self.status is Status.FAILS) != (self.witness is not None):
            raise ValueError('a failing entry needs exactly one witness')

    @property
    def violated(self):
        return self.status is Status.FAILS and not self.expected_to_fail


@dataclass
class VerificationReport:
    space: str
    mode: Mode
    entries: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def examined(self):
        return sum(entry.examined for entry in self.entries)

    def violations(self):
        return [entry for entry in self.entries if entry.violated]

    def entry(self, property_id):
        for entry in self.entries:
            if entry.property == property_id:
                return entry
        raise KeyError(property_id)
