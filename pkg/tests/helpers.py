"""Shared helpers for the test suite."""

from fractions import Fraction

from paradoxlab import runner
from paradoxlab.closedform import ExactValue, PI, SQRT2, SecHalvingTag
from paradoxlab.staircase import InexactLength
from paradoxlab.wire import IterationReport


def random_exact_value(rng):
    tags = [PI, SQRT2, SecHalvingTag(rng.uniform(0.1, 1.5), rng.randrange(0, 6))]
    terms = []
    for tag in rng.sample(tags, rng.randrange(0, len(tags) + 1)):
        terms.append((tag, Fraction(rng.randrange(-99, 100), rng.randrange(1, 60))))
    return ExactValue(terms)


def random_report(rng):
    closed_choice = rng.random()
    if closed_choice < 0.4:
        closed = random_exact_value(rng)
    elif closed_choice < 0.7:
        closed = InexactLength(rng.uniform(0.0, 10.0))
    else:
        closed = None
    return IterationReport(
        paradox=rng.choice(list(runner.PARADOXES)),
        params={"R": rng.uniform(0.1, 3.0), "n": rng.randrange(1, 12), "model": "x"},
        n=rng.randrange(0, 20),
        closed_form=closed,
        float_value=rng.uniform(-5, 5),
        oracle_value=rng.choice([None, rng.uniform(-5, 5)]),
        verdict=rng.choice(["constant", "decreasing", "divergent"]),
        sup_distance=rng.choice([None, rng.uniform(0, 2)]),
        extras=rng.choice([None, {"pieces": rng.randrange(1, 99), "note": "z"}]),
    )
