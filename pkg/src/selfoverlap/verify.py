"""Oracle-equivalence suites behind ``selfoverlap verify``.

Each suite returns a list of ``(check name, passed)`` pairs.  With
``inject=True`` the formula side of one check per suite is perturbed, which
must turn that check red.
"""

from __future__ import annotations

import itertools
from math import factorial

from .asymptotics import verify_factorial_identity
from .families import count_indecomposable, count_simple, is_indecomposable, is_simple
from .oracle import brute_pattern_tables, enumerate_classify
from .oracle.definitions import all_palindromic_decompositions, literal_ranges
from .patterns import is_eligible, myers_count, pattern_expansion_coefficients, rebase_expansion_via_lemma
from .perm import Permutation, decompose, overlap_profile, reconstruct
from .series import (
    count_nso,
    count_so,
    count_so_m,
    factorial_series,
    nso_series,
    series_multiply,
    series_reciprocal,
    series_substitute_square,
    so_series,
)

SUITES = ("core", "genfunc", "patterns", "families")
DEFAULT_MAX_N = {"core": 8, "genfunc": 9, "patterns": 8, "families": 8}


def all_perms(n: int):
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


def core_suite(max_n: int, workers=None, inject=False):
    checks = []
    for n in range(1, max_n + 1):
        ok_ranges = ok_round = ok_blocks = ok_ends = ok_lemma = ok_unique = True
        for sigma in all_perms(n):
            prof = overlap_profile(sigma)
            literal = literal_ranges(sigma)
            if inject and n == max_n and sigma == Permutation.identity(n):
                literal = literal[1:]
            ok_ranges &= prof.ranges == literal
            d = decompose(sigma)
            ok_round &= reconstruct(d) == sigma
            ok_blocks &= all(not overlap_profile(b).is_self_overlapping for b in d.prefix)
            ok_blocks &= len(d.middle) == 0 or not overlap_profile(d.middle).is_self_overlapping
            if prof.is_self_overlapping:
                ok_ends &= sigma[0] < sigma[-1]
                ok_lemma &= prof.minimal <= n // 2
            if n <= 8:
                ok_unique &= all_palindromic_decompositions(sigma) == [d]
        checks += [
            (f"n={n} detector matches definition", ok_ranges),
            (f"n={n} reconstruct(decompose) is identity", ok_round),
            (f"n={n} blocks non-self-overlapping", ok_blocks),
            (f"n={n} first < last when self-overlapping", ok_ends),
            (f"n={n} minimal range <= n/2", ok_lemma),
        ]
        if n <= 8:
            checks.append((f"n={n} decomposition unique", ok_unique))
    return checks


def series_identity_checks(order: int = 20, inject=False):
    P = factorial_series(order)
    N = nso_series(order)
    S = so_series(order)
    if inject:
        S = S + 1
    inv = series_reciprocal(1 - series_substitute_square(N))
    return [
        (f"1 + S + N = P to order {order}", (1 + S + N) == P),
        (f"S = (1+N)/(1-N(z^2)) N(z^2) to order {order}",
         series_multiply(series_multiply(1 + N, inv), series_substitute_square(N)) == S),
        (f"(1+N)/(1-N(z^2)) = P to order {order}", series_multiply(1 + N, inv) == P),
    ]


def genfunc_suite(max_n: int, workers=None, inject=False):
    checks = series_identity_checks(inject=inject)
    so, nso = count_so(max_n), count_nso(max_n)
    for n in range(1, max_n + 1):
        rep = enumerate_classify(n, workers=workers, max_n=max(max_n, 11))
        checks.append((f"n={n} s_n and n_n", (rep.so_count, rep.nso_count) == (so[n - 1], nso[n - 1])))
        hist_ok = True
        for m in range(0, n + 1):
            formula = count_so_m(n, m)[-1]
            hist_ok &= rep.block_histogram.get(2 * m + 1, 0) == formula
        checks.append((f"n={n} block histogram vs s_n^(m)", hist_ok))
        checks.append((f"n={n} minimal ranges <= n/2", all(k <= n // 2 for k in rep.range_histogram)))
    return checks


def eligible_patterns(p: int) -> list[Permutation]:
    return [pi for pi in all_perms(p) if is_eligible(pi)]


def patterns_suite(max_n: int, workers=None, inject=False):
    checks = []
    for p in (3, 4):
        pats = eligible_patterns(p)
        for n in range(p, max_n + 1):
            tables = brute_pattern_tables(pats, n, workers=workers)
            ok = True
            for pi, table in zip(pats, tables):
                for m in range(n // (p - 1) + 1):
                    formula = myers_count(pi, n, m) + (1 if inject and m == 0 else 0)
                    ok &= table.get(m, 0) == formula
                ok &= sum(table.values()) == factorial(n)
            checks.append((f"p={p} n={n} closed form vs scan ({len(pats)} patterns)", ok))
    agree = all(
        pattern_expansion_coefficients(p, m, r) == rebase_expansion_via_lemma(p, m, r)
        for p in range(3, 7) for m in range(4) for r in range(1, 11)
    )
    checks.append(("c_k closed form vs rebased expansion", agree))
    grid = all(verify_factorial_identity(n, k, l) for n in range(26) for k in range(26) for l in range(26))
    checks.append(("rising-factorial shift identity on 0..25^3", grid))
    return checks


def families_suite(max_n: int, workers=None, inject=False):
    checks = []
    ind = count_indecomposable(max_n)
    simple = count_simple(max(max_n, 4))
    for n in range(1, max_n + 1):
        brute_i = sum(is_indecomposable(s) for s in all_perms(n))
        formula = ind[n - 1] + (1 if inject and n == max_n else 0)
        checks.append((f"n={n} indecomposable", brute_i == formula))
        if n >= 4:
            brute_s = sum(is_simple(s) for s in all_perms(n))
            checks.append((f"n={n} simple", brute_s == simple[n - 4]))
    return checks


def run_suite(name: str, max_n: int | None = None, workers=None, inject=False):
    fn = {"core": core_suite, "genfunc": genfunc_suite, "patterns": patterns_suite,
          "families": families_suite}[name]
    return fn(max_n or DEFAULT_MAX_N[name], workers=workers, inject=inject)
