"""Brute-force reference for the Chow ring of P(E) over a curve.

Products are expanded as ordinary polynomials in H and F and reduced by sympy
against F^2 and H^r - e*H^(r-1)*F. The two leading monomials are coprime, so the
pair is a Groebner basis for lex order and the remainder is the unique normal form.
"""
import logging
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sympy import Poly, expand, lambdify, reduced, symbols

from genus3.config import settings
from genus3.schemas import DivisorClass, IdentityProbe, OracleReport, ProjBundleModel
from genus3.services import chowcurve
from genus3.services.chowcurve import F, H

logger = logging.getLogger(__name__)

Hs, Fs = symbols("H F")
e_sym, b_sym, g_sym = symbols("e b g", integer=True)

MAX_SAMPLES = 10


def _relations(rank: int, c1):
    return [Fs ** 2, Hs ** rank - c1 * Hs ** (rank - 1) * Fs]


def _linear(cls: DivisorClass):
    return cls.h * Hs + cls.f * Fs


def normal_form(expr, rank: int, c1) -> Dict[Tuple[int, int], object]:
    """Remainder of expr modulo the bundle relations, as {(i, j): coefficient}."""
    _, remainder = reduced(expand(expr), _relations(rank, c1), Hs, Fs, order="lex")
    remainder = expand(remainder)
    if remainder == 0:
        return {}
    return {monomial: coefficient
            for monomial, coefficient in Poly(remainder, Hs, Fs).terms() if coefficient != 0}


def oracle_product(rank: int, c1: int, factors: Sequence[DivisorClass]) -> Dict[Tuple[int, int], int]:
    product = 1
    for cls in factors:
        product *= _linear(cls)
    return {monomial: int(c) for monomial, c in normal_form(product, rank, c1).items()}


def oracle_top_degree(rank: int, c1, factors: Sequence) -> object:
    """Coefficient of H^(rank-1)F; factors are sympy linear forms in H and F."""
    product = 1
    for factor in factors:
        product *= factor
    terms = normal_form(product, rank, c1)
    stray = set(terms) - {(rank - 1, 1)}
    if stray:
        raise ValueError(f"oracle product has monomials {sorted(stray)} outside the top degree")
    return terms.get((rank - 1, 1), 0)


@lru_cache(maxsize=None)
def _quadric_oracle(rank: int) -> Tuple[Callable, Callable]:
    """(d, 2g - 2) of a member of |2H + bF| as functions of (e, b, g_C)."""
    member = 2 * Hs + b_sym * Fs
    canonical = -rank * Hs + (2 * g_sym - 2 + e_sym) * Fs
    adjoint = canonical + member + (rank - 2) * Hs
    degree = oracle_top_degree(rank, e_sym, [Hs] * (rank - 1) + [member])
    adjoint_number = oracle_top_degree(rank, e_sym, [adjoint] + [Hs] * (rank - 2) + [member])
    logger.debug(f"rank {rank}: d = {degree}, 2g - 2 = {adjoint_number}")
    args = (e_sym, b_sym, g_sym)
    return lambdify(args, degree, modules="math"), lambdify(args, adjoint_number, modules="math")


@lru_cache(maxsize=None)
def _veronese_oracle() -> Tuple[Callable, Callable]:
    polarization = 2 * Hs + b_sym * Fs
    canonical = -3 * Hs + (2 * g_sym - 2 + e_sym) * Fs
    degree = oracle_top_degree(3, e_sym, [polarization] * 3)
    adjoint_number = oracle_top_degree(
        3, e_sym, [canonical + 2 * polarization, polarization, polarization])
    args = (e_sym, b_sym, g_sym)
    return lambdify(args, degree, modules="math"), lambdify(args, adjoint_number, modules="math")


def printed_identity_probe(n: int = 3, d: int = 8, g_c: int = 0) -> IdentityProbe:
    """Evaluate (n+1)d + s + 4n*g_C = 8n at a genus-three quadric fibration."""
    e = d - 4 + 2 * g_c
    b = 8 - 4 * g_c - d
    s = 2 * e + (n + 1) * b
    lhs = (n + 1) * d + s + 4 * n * g_c
    return IdentityProbe(n=n, d=d, g_c=g_c, s=s, formula="(n+1)d + s + 4n*g_C = 8n",
                         lhs=lhs, rhs=8 * n, holds=lhs == 8 * n)


def corrected_identity_holds(n: int, d: int, s: int, g_c: int) -> bool:
    return (n - 1) * d + s + 4 * n * g_c == 8 * n


def _grid(values: Optional[Sequence[int]], low: int, high: int) -> List[int]:
    return list(values) if values is not None else list(range(low, high + 1))


def oracle_selftest(genera: Optional[Sequence[int]] = None,
                    c1_values: Optional[Sequence[int]] = None,
                    b_values: Optional[Sequence[int]] = None,
                    ranks: Optional[Sequence[int]] = None) -> OracleReport:
    genera = list(genera) if genera is not None else list(settings.oracle_base_genera)
    c1_values = _grid(c1_values, settings.oracle_c1_min, settings.oracle_c1_max)
    b_values = _grid(b_values, settings.oracle_b_min, settings.oracle_b_max)
    ranks = _grid(ranks, settings.oracle_rank_min, settings.oracle_rank_max)

    points = ring_mismatches = oracle_mismatches = max_deviation = 0
    identity_points = identity_failures = 0
    samples: List[str] = []

    for rank in ranks:
        degree_fn, adjoint_fn = _quadric_oracle(rank)
        for g_c in genera:
            for c1 in c1_values:
                bundle = ProjBundleModel.over_curve(g_c, rank, c1)
                canonical = chowcurve.canonical_class(bundle)
                for b in b_values:
                    points += 1
                    closed = chowcurve.quadric_invariants(bundle, b)
                    closed_adjoint = 2 * closed.g - 2
                    member = 2 * H + b * F
                    ring_d = chowcurve.intersect(bundle, [H] * (rank - 1) + [member])
                    ring_adjoint = chowcurve.intersect(
                        bundle, [canonical + member + (rank - 2) * H] + [H] * (rank - 2) + [member])
                    oracle_d = int(degree_fn(c1, b, g_c))
                    oracle_adjoint = int(adjoint_fn(c1, b, g_c))

                    ring_dev = max(abs(ring_d - closed.d), abs(ring_adjoint - closed_adjoint))
                    oracle_dev = max(abs(oracle_d - closed.d), abs(oracle_adjoint - closed_adjoint))
                    max_deviation = max(max_deviation, ring_dev, oracle_dev)
                    if ring_dev:
                        ring_mismatches += 1
                    if oracle_dev:
                        oracle_mismatches += 1
                    if (ring_dev or oracle_dev) and len(samples) < MAX_SAMPLES:
                        samples.append(
                            f"g_C={g_c} rank={rank} e={c1} b={b}: closed ({closed.d}, {closed_adjoint}),"
                            f" ring ({ring_d}, {ring_adjoint}), oracle ({oracle_d}, {oracle_adjoint})")

                    if closed.g == 3:
                        identity_points += 1
                        if not corrected_identity_holds(rank - 1, closed.d, closed.s, g_c):
                            identity_failures += 1

    veronese_points = veronese_mismatches = 0
    if 3 in ranks:
        degree_fn, adjoint_fn = _veronese_oracle()
        for g_c in genera:
            for c1 in c1_values:
                bundle = ProjBundleModel.over_curve(g_c, 3, c1)
                for b in b_values:
                    veronese_points += 1
                    closed_d = 8 * c1 + 12 * b
                    closed_adjoint = closed_d + 8 * (g_c - 1)
                    ring = chowcurve.veronese_invariants(bundle, b)
                    observed = {(ring.d, 2 * ring.g - 2),
                                (int(degree_fn(c1, b, g_c)), int(adjoint_fn(c1, b, g_c)))}
                    if observed != {(closed_d, closed_adjoint)}:
                        veronese_mismatches += 1
                        if len(samples) < MAX_SAMPLES:
                            samples.append(f"Veronese g_C={g_c} e={c1} b={b}: {sorted(observed)}"
                                           f" vs closed ({closed_d}, {closed_adjoint})")

    report = OracleReport(
        points_checked=points,
        ring_mismatches=ring_mismatches,
        oracle_mismatches=oracle_mismatches,
        max_deviation=max_deviation,
        veronese_points=veronese_points,
        veronese_mismatches=veronese_mismatches,
        identity_points=identity_points,
        identity_failures=identity_failures,
        printed_identity_probe=printed_identity_probe(),
        mismatch_samples=samples,
    )
    logger.info(f"Oracle self-test: {points} points, max deviation {max_deviation}")
    return report
