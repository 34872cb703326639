"""
Ideal documents and command reports, both JSON.

An ideal document looks like::

    {"ring": {"n": 3, "m": 3, "field": "Q"},
     "generators": ["y2*x2 - y1*x3", "y3*x1 - y1*x3"],
     "metadata": {"name": "xbi"}}
"""

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import MathError, ParseError
from .groebner import BigradedIdeal
from .parser import format_polynomial, parse_polynomial
from .ring import Field, RingSignature, is_bihomogeneous


@dataclass(frozen=True)
class IdealDocument:
    ring: RingSignature
    generators: tuple
    metadata: dict = field(default_factory=dict, compare=False)

    @classmethod
    def loads(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"Invalid JSON: {e.msg}", line=e.lineno, column=e.colno)
        return cls.from_json(data)

    @classmethod
    def load(cls, path):
        return cls.loads(Path(path).read_text(encoding='utf-8'))

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or 'ring' not in data:
            raise ParseError("Ideal document needs a 'ring' object")
        ring = data['ring']
        try:
            signature = RingSignature(int(ring['n']), int(ring['m']),
                                      Field.parse(str(ring.get('field', 'Q'))))
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"Malformed ring description: {e}")
        generators = data.get('generators', [])
        if not isinstance(generators, list) or not all(isinstance(g, str) for g in generators):
            raise ParseError("'generators' must be a list of polynomial strings")
        return cls(signature, tuple(generators), dict(data.get('metadata', {})))

    @classmethod
    def from_ideal(cls, ideal, **metadata):
        return cls(ideal.ring, tuple(format_polynomial(g) for g in ideal.gens), metadata)

    def ideal(self, allow_inhomogeneous=False):
        """Parse the generators; line numbers in errors count generators from 1"""
        polys = []
        for k, text in enumerate(self.generators, start=1):
            p = parse_polynomial(text, self.ring, line=k)
            if p and not allow_inhomogeneous and not is_bihomogeneous(p):
                raise MathError(f"Generator {k} is not bihomogeneous", generator=text)
            polys.append(p)
        return BigradedIdeal.from_polys(self.ring, polys)

    def to_json(self):
        return {
            'ring': self.ring.to_json(),
            'generators': list(self.generators),
            'metadata': dict(self.metadata),
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False)

    def dump(self, path):
        Path(path).write_text(self.dumps() + '\n', encoding='utf-8')


@dataclass
class Report:
    """Output of one CLI command; identical inputs and seeds give identical JSON apart from ``elapsed``."""

    command: str
    arguments: dict
    results: dict
    complete: bool = True
    seed: int | None = None
    elapsed: float = 0.0
    input: dict | None = None

    def to_json(self):
        return {
            'command': self.command,
            'arguments': self.arguments,
            'seed': self.seed,
            'input': self.input,
            'results': self.results,
            'complete': self.complete,
            'elapsed': round(self.elapsed, 3),
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False, default=str)
