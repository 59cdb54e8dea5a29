"""Acceptance gate: one test per criterion, each reported as PASS/FAIL in the summary."""

import itertools
import json
import math
import random
import subprocess
import sys
import time
from fractions import Fraction as F
from pathlib import Path

import pytest

from acceptance_log import criterion
from corpus import B2, CORPUS, G2
from langclass.chamber import (
    a_star_space,
    dominant_conjugate,
    is_regular,
    maximal_levi_of,
    z_of_nu,
)
from langclass.errors import NotRelevant
from langclass.fuzz import corpus, random_exponent, triple_corpus
from langclass.lattice import dot, identity
from langclass.lparam import (
    GLnLParameter,
    assemble,
    component_groups_agree,
    centralizer_shape,
    classify,
    equivalent,
    is_relevant,
    is_tempered,
    levi_nu,
    new_lparameter,
    segment,
    twist,
    z_of,
    z_star_of,
)
from langclass.root_datum import dual, gln_datum
from langclass.weyl import (
    generate_weyl,
    invariant_lattice,
    parabolic_subgroup,
    relative_weyl,
    simple_reflection,
    weyl_dual_iso,
)
from oracles import (
    inversions,
    multiplicity_oracle,
    principal_weights,
    relative_order_bruteforce,
    sort_group_levi,
)

FUZZ_CASES = 10_000
FUZZ_SEED = 0
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def fuzz_corpus():
    return corpus(FUZZ_SEED, FUZZ_CASES)


@pytest.fixture(scope="module")
def fuzz_triples():
    return triple_corpus(FUZZ_SEED + 1, FUZZ_CASES)


@criterion(1, "Weyl group orders")
def test_weyl_orders():
    start = time.perf_counter()
    for n in range(2, 8):
        assert len(generate_weyl(gln_datum(n))) == math.factorial(n)
    assert len(generate_weyl(B2)) == 8
    assert len(generate_weyl(G2)) == 12
    elapsed = time.perf_counter() - start
    assert elapsed < 5
    return f"{elapsed:.2f}s"


@criterion(2, "dual isomorphism on the rank <= 3 corpus")
def test_dual_isomorphism():
    start = time.perf_counter()
    for name, (datum, _) in CORPUS.items():
        W = generate_weyl(datum)
        Wd = generate_weyl(dual(datum))
        hat = {w: Wd.element(weyl_dual_iso(w, datum).matrix) for w in W}
        assert len(set(hat.values())) == len(W) == len(Wd)
        for i in range(datum.semisimple_rank):
            assert hat[W.generators[i]].matrix == simple_reflection(dual(datum), i).matrix
        for a, b in itertools.product(W, repeat=2):
            assert hat[W.mul(a, b)] == Wd.mul(hat[a], hat[b])
        basis = identity(datum.rank)
        for w in W:
            for x, y in itertools.product(basis, repeat=2):
                assert dot(w.apply(x), hat[w].apply(y)) == dot(x, y)
    elapsed = time.perf_counter() - start
    assert elapsed < 5
    return f"{len(CORPUS)} data, {elapsed:.2f}s"


@criterion(3, "relative Weyl group of blocks is S_m")
def test_relative_weyl_orders():
    timings = []
    for m, d in [(2, 2), (3, 2), (2, 3), (4, 2)]:
        start = time.perf_counter()
        W = generate_weyl(gln_datum(m * d))
        I0 = [i for i in range(m * d - 1) if (i + 1) % d]
        order = len(relative_weyl(W, I0))
        elapsed = time.perf_counter() - start
        assert order == math.factorial(m) == relative_order_bruteforce(m, d)
        assert elapsed < 60
        timings.append(f"({m},{d}) {elapsed:.2f}s")
    return ", ".join(timings)


def _blocks_of(I, n):
    blocks, cur = [], [0]
    for i in range(n - 1):
        if i in I:
            cur.append(i + 1)
        else:
            blocks.append(cur)
            cur = [i + 1]
    blocks.append(cur)
    return blocks


@criterion(4, "invariant lattices are spanned by block sums")
def test_invariant_lattices():
    rng = random.Random(4)
    for n in range(1, 7):
        datum = gln_datum(n)
        W = generate_weyl(datum)
        for r in range(n):
            for I in itertools.combinations(range(n - 1), r):
                lat = invariant_lattice(datum, parabolic_subgroup(W, I))
                blocks = _blocks_of(set(I), n)
                assert lat.rank == n - len(I)
                assert lat.basis == tuple(
                    tuple(int(k in b) for k in range(n)) for b in blocks
                )
                for _ in range(100):
                    values = [rng.randint(-9, 9) for _ in blocks]
                    v = [0] * n
                    for b, x in zip(blocks, values):
                        for k in b:
                            v[k] = x
                    assert lat.coordinates(v) == tuple(values)
                    # saturation: v/k integral and fixed implies membership
                    k = rng.randint(2, 5)
                    assert lat.coordinates([k * x for x in v]) == tuple(k * x for x in values)
    return "n <= 6, all standard I"


@criterion(5, "chamber routines agree with the sort-group oracle")
def test_chamber_oracle():
    rng = random.Random(5)
    cache = {}
    groups = {}

    def setup(n, size):
        if (n, size) not in cache:
            datum = gln_datum(n)
            if n not in groups:
                groups[n] = generate_weyl(datum)
            W = groups[n]
            I0 = [i for i in range(n - 1) if (i + 1) % size]
            cache[n, size] = (relative_weyl(W, I0), a_star_space(datum, I0, W=W))
        return cache[n, size]

    for _ in range(10_000):
        n = rng.randint(1, 8)
        size = rng.choice([s for s in range(1, n + 1) if n % s == 0])
        rel, space0 = setup(n, size)
        pool = [random_exponent(rng, 2) for _ in range(rng.randint(1, n // size))]
        block_values = [rng.choice(pool) for _ in range(n // size)]
        nu = tuple(x for x in block_values for _ in range(size))

        w, point = dominant_conjugate(nu, rel, space0)
        expected_blocks = sorted(block_values, reverse=True)
        assert point == tuple(x for x in expected_blocks for _ in range(size))
        assert w.apply(nu) == point
        if size == 1:
            assert w.length == inversions(nu)

        ties = {k for k in sort_group_levi(expected_blocks)}
        expected_levi = set(space0.I) | {(k + 1) * size - 1 for k in ties}
        assert maximal_levi_of(point, space0) == frozenset(expected_levi)

        # regularity on a random standard Levi
        I = frozenset(i for i in range(n - 1) if rng.random() < 0.4)
        blocks = _blocks_of(I, n)
        vals = [rng.choice(pool + [random_exponent(rng, 2)]) for _ in blocks]
        v = [F(0)] * n
        for b, x in zip(blocks, vals):
            for k in b:
                v[k] = x
        descending = all(a > b for a, b in zip(vals, vals[1:]))
        assert is_regular(v, a_star_space(gln_datum(n), I)) == descending
    return "10^4 cases, n <= 8"


@criterion(6, "classification round trip in both modes")
def test_round_trip(fuzz_corpus, fuzz_triples):
    start = time.perf_counter()
    for phi, t in zip(fuzz_corpus, fuzz_triples):
        for mode in ("quotient", "sub"):
            assert equivalent(assemble(classify(phi, mode), mode), phi)
            assert classify(assemble(t, mode), mode) == t
    elapsed = time.perf_counter() - start
    assert elapsed < 30
    return f"{len(fuzz_corpus)} parameters + {len(fuzz_triples)} triples, {elapsed:.2f}s"


@criterion(7, "temperedness is triviality of z; z_* of tempered is principal")
def test_tempered_invariants(fuzz_corpus):
    tempered_seen = 0
    for phi in fuzz_corpus:
        assert is_tempered(phi) == z_of(phi).is_identity()
        parts = [phi] + [
            GLnLParameter(b.m * phi.d, phi.d, b.tempered) for b in classify(phi).blocks
        ]
        for psi in parts:
            if not is_tempered(psi):
                continue
            tempered_seen += 1
            expected = sorted(
                (x for s in psi.segments for x in principal_weights(s.sl2_dim) * s.rho.dim),
                reverse=True,
            )
            assert list(z_star_of(psi).exponents) == expected
    assert tempered_seen >= len(fuzz_corpus)
    return f"{tempered_seen} tempered parameters"


@criterion(8, "relevance gate for d = 2")
def test_relevance_gate(fuzz_corpus):
    rng = random.Random(8)
    d2 = [phi for phi in fuzz_corpus if phi.d == 2]
    assert d2
    for phi in d2:
        k = rng.choice([1, 3, 5])
        rho = rng.choice([("triv", 1), ("tau", 3)])
        extra = [segment(k, rho[0], random_exponent(rng), rho[1]), segment(1, "triv", random_exponent(rng))]
        bad = new_lparameter(phi.n + k * rho[1] + 1, 2, list(phi.segments) + extra)
        assert not is_relevant(bad)
        with pytest.raises(NotRelevant):
            classify(bad)
    triples = triple_corpus(88, FUZZ_CASES, d=2)
    for t in triples:
        for mode in ("quotient", "sub"):
            assert is_relevant(assemble(t, mode))
    return f"{len(d2)} rejections, {len(triples)} assemblies"


@criterion(9, "component groups agree; centralizer multiplicities match the oracle")
def test_component_groups(fuzz_corpus):
    for phi in fuzz_corpus:
        assert component_groups_agree(phi)
        shape = centralizer_shape(phi)
        assert list(shape.gl_factors) == multiplicity_oracle(phi.segments)
        assert shape.component_group_order == 1


@criterion(10, "central twists shift betas and keep blocks")
def test_twist_covariance(fuzz_corpus):
    rng = random.Random(10)
    for phi in fuzz_corpus:
        beta = random_exponent(rng)
        for mode, sign in (("quotient", 1), ("sub", -1)):
            before = classify(phi, mode)
            after = classify(twist(phi, beta), mode)
            assert [(b.m, b.tempered) for b in after.blocks] == [(b.m, b.tempered) for b in before.blocks]
            assert after.betas == tuple(x + sign * beta for x in before.betas)


@criterion(11, "z of a parameter equals z of the reconstructed nu")
def test_cross_module_consistency(fuzz_corpus):
    for phi in fuzz_corpus:
        space, nu = levi_nu(classify(phi))
        assert z_of_nu(nu, space).exponents == z_of(phi).exponents


@criterion(12, "CLI golden cases reproduce byte for byte")
def test_cli_golden():
    cases = json.loads((GOLDEN / "cases.json").read_text(encoding="utf-8"))
    assert len(cases) == 12
    assert sum(1 for c in cases if c["name"].startswith("parse_")) == 3
    for case in cases:
        proc = subprocess.run(
            [sys.executable, "-m", "langclass", *case["argv"]],
            capture_output=True, text=True, cwd=GOLDEN,
        )
        assert (proc.returncode, proc.stdout) == (case["exit"], case["stdout"]), case["name"]
    return f"{len(cases)} cases"
