"""Seeded generators of random parameters and triples, and the round-trip suite."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .lparam import (
    MODES,
    GaloisTypeLabel,
    GLnLParameter,
    GLnStandardTriple,
    Segment,
    assemble,
    classify,
    equivalent,
    new_lparameter,
    new_triple,
)

LABELS = (
    GaloisTypeLabel("triv", 1),
    GaloisTypeLabel("chi", 1),
    GaloisTypeLabel("sigma", 2),
    GaloisTypeLabel("tau", 3),
)
MAX_DENOMINATOR = 6


def random_exponent(rng: random.Random, bound: int = 3) -> Fraction:
    q = rng.randint(1, MAX_DENOMINATOR)
    return Fraction(rng.randint(-bound * q, bound * q), q)


def _random_tempered_piece(rng: random.Random, budget: int, d: int) -> Segment | None:
    """A zero-exponent segment of dimension divisible by ``d`` and at most ``budget``."""
    options = [
        (k, rho)
        for rho in LABELS
        for k in range(1, budget // rho.dim + 1)
        if (k * rho.dim) % d == 0
    ]
    if not options:
        return None
    k, rho = rng.choice(options)
    return Segment(k, rho, Fraction(0))


def _fill(rng: random.Random, total: int, d: int) -> list[Segment]:
    """Zero-exponent segments of total dimension exactly ``total`` (a multiple of ``d``)."""
    segs = []
    left = total
    while left:
        s = _random_tempered_piece(rng, left, d)
        assert s is not None  # [d; triv] always fits once left is a positive multiple of d
        segs.append(s)
        left -= s.dim
    return segs


def random_parameter(rng: random.Random, nmax: int = 12, d: int | None = None) -> GLnLParameter:
    """A relevant parameter with ``n <= nmax``; exponents come from a small pool so blocks merge."""
    if d is None:
        d = rng.choice((1, 2, 3))
    n = d * rng.randint(1, max(1, nmax // d))
    pool = [random_exponent(rng) for _ in range(rng.randint(1, 4))]
    segs = [s.shifted(rng.choice(pool)) for s in _fill(rng, n, d)]
    return new_lparameter(n, d, segs)


def random_triple(rng: random.Random, nmax: int = 12, d: int | None = None) -> GLnStandardTriple:
    if d is None:
        d = rng.choice((1, 2, 3))
    mtotal = rng.randint(1, max(1, nmax // d))
    sizes = []
    while mtotal:
        m = rng.randint(1, mtotal)
        sizes.append(m)
        mtotal -= m
    betas: set[Fraction] = set()
    while len(betas) < len(sizes):
        betas.add(random_exponent(rng))
    blocks = [
        (m, _fill(rng, m * d, d), beta)
        for m, beta in zip(sizes, sorted(betas, reverse=True))
    ]
    return new_triple(d, blocks)


def corpus(seed: int, count: int, nmax: int = 12, d: int | None = None) -> list[GLnLParameter]:
    rng = random.Random(seed)
    return [random_parameter(rng, nmax, d) for _ in range(count)]


def triple_corpus(seed: int, count: int, nmax: int = 12, d: int | None = None) -> list[GLnStandardTriple]:
    rng = random.Random(seed)
    return [random_triple(rng, nmax, d) for _ in range(count)]


@dataclass
class RoundTripReport:
    seed: int
    cases: int
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def roundtrip(count: int, seed: int = 0, nmax: int = 12, d: int | None = None) -> RoundTripReport:
    """Check both round trips in both modes on ``count`` parameters and ``count`` triples."""
    report = RoundTripReport(seed, count)
    phis = corpus(seed, count, nmax, d)
    triples = triple_corpus(seed + 1, count, nmax, d)
    for k, (phi, t) in enumerate(zip(phis, triples)):
        for mode in MODES:
            if not equivalent(assemble(classify(phi, mode), mode), phi):
                report.failures.append({"case": k, "kind": "parameter", "mode": mode})
            if classify(assemble(t, mode), mode) != t:
                report.failures.append({"case": k, "kind": "triple", "mode": mode})
    return report
