"""Verification reports and seeded sampling of exact test points."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, ResourceError

PASS = "pass"
FAIL = "fail"
CONFIRMED = "CONJECTURE-CONFIRMED"
VIOLATED = "CONJECTURE-VIOLATED"
SKIPPED = "skipped"


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


@dataclass(frozen=True)
class CheckResult:
    relation: str
    case: str
    status: str
    witness: object = None

    @property
    def ok(self) -> bool:
        return self.status in (PASS, CONFIRMED, VIOLATED, SKIPPED)

    def to_dict(self) -> dict:
        d = {"relation": self.relation, "case": self.case, "status": self.status}
        if self.witness is not None:
            d["witness"] = _jsonable(self.witness)
        return d


@dataclass
class Report:
    results: list = field(default_factory=list)

    def add(self, relation, case, passed, witness=None):
        status = PASS if passed else FAIL
        self.results.append(CheckResult(relation, str(case), status, witness if not passed else None))

    def add_conjecture(self, relation, case, holds, witness=None):
        self.results.append(CheckResult(relation, str(case), CONFIRMED if holds else VIOLATED, witness))

    def extend(self, other: "Report"):
        self.results.extend(other.results)
        return self

    @property
    def ok(self) -> bool:
        """True iff every non-conjecture check passed."""
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list:
        return [r for r in self.sorted() if not r.ok]

    def sorted(self) -> list:
        return sorted(self.results, key=lambda r: (r.relation, r.case))

    def summary(self) -> dict:
        counts = {}
        for r in self.results:
            counts[r.status] = counts.get(r.status, 0) + 1
        return dict(sorted(counts.items()))

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "summary": self.summary(),
            "results": [r.to_dict() for r in self.sorted()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def __len__(self):
        return len(self.results)


def random_rational(rng: random.Random, bound: int = 100) -> Fraction:
    """A nonzero rational with numerator and denominator at most ``bound`` in size."""
    while True:
        num = rng.randint(-bound, bound)
        if num:
            return Fraction(num, rng.randint(1, bound))


def sample_points(rng: random.Random, size: int, trials: int, accept, max_tries: int | None = None, bound: int = 100):
    """Draw ``trials`` accepted points of ``size`` random rationals.

    ``accept(point)`` returns the evaluated data or raises DomainError to
    reject the point (a vanishing denominator); rejected points are
    resampled. Yields ``(point, data)`` pairs.
    """
    max_tries = max_tries or 50 * trials + 100
    got = 0
    tries = 0
    while got < trials:
        tries += 1
        if tries > max_tries:
            raise ResourceError("too many rejected sample points")
        pt = [random_rational(rng, bound) for _ in range(size)]
        try:
            data = accept(pt)
        except DomainError:
            continue
        got += 1
        yield pt, data
