"""Shared fixtures and independent oracles for the test suite."""

import itertools

import pytest

from oocgen import (CyclicSubspaceCode, build_ooc, code_min_distance,
                    construct_g, field_create, is_sidon, span)


def bit_corr(xbits, ybits, tau):
    """Definition-level correlation sum: sum_t x_t * y_{t+tau} (cyclic)."""
    n = len(xbits)
    return sum(xbits[t] * ybits[(t + tau) % n] for t in range(n))


def bit_level_ooc_ok(words, lam):
    """Brute-force OOC check directly on bit vectors."""
    for x in words:
        n = len(x)
        for tau in range(1, n):
            if bit_corr(x, x, tau) > lam:
                return False
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            for tau in range(len(words[i])):
                if bit_corr(words[i], words[j], tau) > lam:
                    return False
    return True


def set_dim_intersection(U, V):
    """Oracle for dim(U ∩ V): exhaustive span intersection, log base q."""
    inter = len(U.span_idx & V.span_idx)
    d = 0
    while U.ground_q ** d < inter:
        d += 1
    assert U.ground_q ** d == inter
    return d


def canonical_sidon_f64():
    """First 3-dim Sidon space of F_64 over F_2, in canonical basis order."""
    f = field_create(2, 6)
    seen = set()
    for trip in itertools.combinations(range(f.N), 3):
        U = span(f, [f.from_idx(i) for i in trip], 2)
        if U.dim != 3 or U.span_idx in seen:
            continue
        seen.add(U.span_idx)
        ok, _ = is_sidon(U)
        if ok:
            return U
    raise AssertionError("no Sidon space found in F_64")


@pytest.fixture(scope="session")
def pipeline_q3():
    code = construct_g(3, 2, 1)
    ooc, params, report = build_ooc(code)
    return code, ooc, params, report


@pytest.fixture(scope="session")
def pipeline_q5():
    code = construct_g(5, 2, 1)
    ooc, params, report = build_ooc(code)
    return code, ooc, params, report


@pytest.fixture(scope="session")
def pipeline_q2_sidon():
    U = canonical_sidon_f64()
    code = CyclicSubspaceCode(U.field, 2, (U,))
    code.min_distance = code_min_distance(code)
    ooc, params, report = build_ooc(code)
    return code, ooc, params, report
