import json
import random
from fractions import Fraction

import pytest

from dasasm import config
from dasasm.errors import DomainError, InputError, ResourceError
from dasasm.reports import FAIL, PASS, VIOLATED, Report, random_rational, sample_points


def test_report_statuses_and_order():
    rep = Report()
    rep.add("b", "2", True, witness="hidden")
    rep.add("a", "1", False, witness={"x": Fraction(1, 2)})
    rep.add_conjecture("c", "3", False, witness=[1])
    assert not rep.ok
    assert [r.relation for r in rep.sorted()] == ["a", "b", "c"]
    assert rep.summary() == {FAIL: 1, PASS: 1, VIOLATED: 1}
    doc = json.loads(rep.to_json())
    assert doc["results"][0]["witness"] == {"x": "1/2"}
    assert "witness" not in doc["results"][1]
    assert [r.case for r in rep.failures] == ["1"]


def test_conjecture_results_do_not_fail_a_report():
    rep = Report()
    rep.add_conjecture("c", "n=1", False)
    assert rep.ok


def test_random_rational_nonzero():
    rng = random.Random(0)
    vals = [random_rational(rng, 5) for _ in range(200)]
    assert all(v != 0 and isinstance(v, Fraction) for v in vals)


def test_sample_points_rejects_and_gives_up():
    rng = random.Random(0)

    def accept(pt):
        if pt[0] > 0:
            raise DomainError("positive", "x")
        return pt[0]

    got = list(sample_points(rng, 1, 5, accept))
    assert len(got) == 5
    assert all(v < 0 for _, v in got)

    def never(pt):
        raise DomainError("no", "x")

    with pytest.raises(ResourceError):
        list(sample_points(rng, 1, 2, never, max_tries=10))


def test_bounds_defaults_and_override(monkeypatch):
    assert config.bound("triangles") == 6
    monkeypatch.setenv(config.ENV_VAR, "triangles=2")
    assert config.bound("triangles") == 2
    with pytest.raises(ResourceError):
        config.check_bound("triangles", 3)
    config.check_bound("triangles", 3, limit=3)
    monkeypatch.setenv(config.ENV_VAR, "nope=2")
    with pytest.raises(InputError):
        config.bound("triangles")
    monkeypatch.setenv(config.ENV_VAR, "asm=x")
    with pytest.raises(InputError):
        config.bound("asm")
