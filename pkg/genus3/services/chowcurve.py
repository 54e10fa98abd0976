"""Intersection arithmetic on projective bundles P(E) over a smooth curve.

The Chow ring of P(E) is generated by the tautological class H and the fibre
class F subject to F^2 = 0 and H^r = e * H^(r-1) * F, with the normalization
that H^(r-1) * F is the class of a point.  Elements are kept in canonical form:
only monomials H^i with i < r and H^i * F with i < r survive.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, Iterator, List, Sequence, Tuple

from genus3.exceptions import DegreeMismatchError, ParityError, RangeError
from genus3.schemas import (
    Corank1Result,
    DivisorClass,
    NormalObstructionResult,
    ProjBundleModel,
    QuadricInvariants,
    SplittingType,
    TruncationResult,
    VeroneseInvariants,
)

logger = logging.getLogger(__name__)

H = DivisorClass.tautological()
F = DivisorClass.fibre()


@dataclass(frozen=True)
class ChowElement:
    rank: int
    c1: int
    terms: Tuple[Tuple[int, int, int], ...] = ()

    @property
    def coefficients(self) -> Dict[Tuple[int, int], int]:
        return {(i, j): c for i, j, c in self.terms}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {i + j for i, j, _ in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, j, c in self.terms:
            monomial = (f"H^{i}" if i > 1 else "H" if i == 1 else "") + ("F" if j else "")
            parts.append(f"{c}*{monomial or '1'}")
        return " + ".join(parts)


def _canonical(rank: int, c1: int, raw: Dict[Tuple[int, int], int]) -> ChowElement:
    reduced: Dict[Tuple[int, int], int] = defaultdict(int)
    for (i, j), coefficient in raw.items():
        if coefficient == 0 or j > 1 or i + j > rank:
            continue
        if j == 0 and i == rank:
            reduced[(rank - 1, 1)] += c1 * coefficient
        else:
            reduced[(i, j)] += coefficient
    terms = tuple(sorted((i, j, c) for (i, j), c in reduced.items() if c))
    return ChowElement(rank=rank, c1=c1, terms=terms)


def one(bundle: ProjBundleModel) -> ChowElement:
    return ChowElement(rank=bundle.rank, c1=bundle.c1, terms=((0, 0, 1),))


def _times_divisor(element: ChowElement, cls: DivisorClass) -> ChowElement:
    raw: Dict[Tuple[int, int], int] = defaultdict(int)
    for i, j, c in element.terms:
        raw[(i + 1, j)] += cls.h * c
        raw[(i, j + 1)] += cls.f * c
    return _canonical(element.rank, element.c1, raw)


def multiply_classes(bundle: ProjBundleModel, factors: Sequence[DivisorClass]) -> ChowElement:
    if not factors:
        raise RangeError("multiply_classes needs at least one factor")
    element = one(bundle)
    for cls in factors:
        element = _times_divisor(element, cls)
    return element


def top_degree(bundle: ProjBundleModel, element: ChowElement) -> int:
    if element.rank != bundle.rank or element.c1 != bundle.c1:
        raise DegreeMismatchError("element belongs to a different projective bundle")
    stray = element.degrees() - {bundle.rank}
    if stray:
        raise DegreeMismatchError(
            f"element {element} has components of degree {sorted(stray)}, "
            f"expected pure degree {bundle.rank}")
    return element.coefficients.get((bundle.rank - 1, 1), 0)


def intersect(bundle: ProjBundleModel, factors: Sequence[DivisorClass]) -> int:
    return top_degree(bundle, multiply_classes(bundle, factors))


def canonical_class(bundle: ProjBundleModel) -> DivisorClass:
    return DivisorClass(h=-bundle.rank, f=2 * bundle.base.genus - 2 + bundle.c1)


def quadric_invariants(bundle: ProjBundleModel, b: int) -> QuadricInvariants:
    """Degree, sectional genus and s for a member of |2H + bF|."""
    e = bundle.c1
    return QuadricInvariants(
        d=2 * e + b,
        g=2 * bundle.base.genus + e + b - 1,
        s=2 * e + bundle.rank * b,
    )


def _genus_from_adjoint(value: int, what: str) -> int:
    if value % 2:
        raise ParityError(f"odd adjoint number {value} for {what}")
    return value // 2 + 1


def sectional_genus_divisor(bundle: ProjBundleModel, member: DivisorClass,
                            polarization: DivisorClass) -> int:
    """Sectional genus of (M, polarization|M) for M in |member|, by adjunction."""
    n = bundle.rank - 1
    adjoint = canonical_class(bundle) + member + (n - 1) * polarization
    factors = [adjoint] + [polarization] * (n - 1) + [member]
    return _genus_from_adjoint(intersect(bundle, factors), f"member {member}")


def veronese_invariants(bundle: ProjBundleModel, b: int) -> VeroneseInvariants:
    if bundle.rank != 3:
        raise RangeError(f"Veronese fibrations live on rank-3 bundles, got rank {bundle.rank}")
    polarization = 2 * H + b * F
    d = intersect(bundle, [polarization] * 3)
    adjoint = canonical_class(bundle) + 2 * polarization
    value = intersect(bundle, [adjoint, polarization, polarization])
    return VeroneseInvariants(d=d, g=_genus_from_adjoint(value, f"L = {polarization}"))


def h0_line_bundle_sum_P1(degrees: Sequence[int]) -> int:
    return sum(max(0, degree + 1) for degree in degrees)


def _sym2_twist_degrees(degrees: Sequence[int], t: int) -> List[int]:
    return [a + b + t for a, b in combinations_with_replacement(degrees, 2)]


def h0_sym2_twist(splitting: SplittingType, t: int) -> int:
    """h0 of S^2(E)(t) on the projective line."""
    return h0_line_bundle_sum_P1(_sym2_twist_degrees(splitting.degrees, t))


def truncation_positivity(splitting: SplittingType, b: int, k: int) -> TruncationResult:
    n = splitting.n
    if not 2 <= k <= n:
        raise RangeError(f"k={k} outside [2, {n}]")
    d = 2 * splitting.c1 + b
    number = d - 2 * sum(splitting.degrees[-k:])
    if k == 2:
        dimension_ok = n >= 2
    else:
        # M meets the truncated locus in dimension n-k, which must be positive
        dimension_ok = n >= k + 1
    applicable = splitting.degrees[0] <= 0 and dimension_ok
    return TruncationResult(k=k, number=number, applicable=applicable,
                            violated=applicable and number <= 0)


def truncation_ring_number(splitting: SplittingType, b: int, k: int) -> int:
    """H^(n-k) (2H+bF) prod(H - e_top F), the number truncation_positivity closes in on."""
    bundle = ProjBundleModel.over_p1(splitting)
    n = splitting.n
    factors = [H] * (n - k) + [2 * H + b * F]
    factors += [H - e * F for e in splitting.degrees[-k:]]
    return intersect(bundle, factors)


def base_locus_index_set(splitting: SplittingType, b: int) -> Tuple[int, ...]:
    degrees = splitting.degrees
    prefix: List[int] = []
    for i, e_i in enumerate(degrees):
        if all(degrees[j] + e_i + b < 0 for j in prefix + [i]):
            prefix.append(i)
        else:
            break
    return tuple(prefix)


def corank1_emptiness(splitting: SplittingType, b: int) -> Corank1Result:
    for i, e_i in enumerate(splitting.degrees):
        rest = splitting.without(i)
        if h0_line_bundle_sum_P1(_sym2_twist_degrees(rest, b)) == 0:
            logger.debug(f"{list(splitting.degrees)}: |2H{b:+d}F| empty on the locus without e_{i}")
            return Corank1Result(excluded=True, witness_index=i, witness_degree=e_i)
    return Corank1Result(excluded=False)


def normal_obstruction(splitting: SplittingType, b: int) -> NormalObstructionResult:
    if splitting.rank != 4:
        raise RangeError(f"normal_obstruction is defined for rank 4, got rank {splitting.rank}")
    index_set = base_locus_index_set(splitting, b)
    if len(index_set) != 2:
        return NormalObstructionResult(
            applicable=False, excluded=False,
            detail=f"base locus index set has size {len(index_set)}")

    base_degrees = [splitting.degrees[j] for j in index_set]
    e_a, e_b = [e for j, e in enumerate(splitting.degrees) if j not in index_set]
    p, q = b + e_a, b + e_b
    c = sum(base_degrees)
    h0_p = h0_line_bundle_sum_P1([e + p for e in base_degrees])
    h0_q = h0_line_bundle_sum_P1([e + q for e in base_degrees])
    pairing = c + p + q
    result = dict(applicable=True, pairing=pairing, h0_p=h0_p, h0_q=h0_q)

    if h0_p == 0 and c + 2 * q != 0:
        return NormalObstructionResult(
            excluded=True, **result,
            detail=f"H{p:+d}F has no sections on B and (H{q:+d}F)^2 = {c + 2 * q}")
    if h0_q == 0 and c + 2 * p != 0:
        return NormalObstructionResult(
            excluded=True, **result,
            detail=f"H{q:+d}F has no sections on B and (H{p:+d}F)^2 = {c + 2 * p}")
    if h0_p > 0 and h0_q > 0 and pairing >= 1:
        return NormalObstructionResult(
            excluded=True, **result,
            detail=f"sections share a zero on B: pairing = {pairing}")
    return NormalObstructionResult(excluded=False, **result, detail=f"pairing = {pairing}")


def divisor_degree_on_fibre(bundle: ProjBundleModel, cls: DivisorClass) -> int:
    """Degree of cls on a line in a fibre: cls . H^(rank-2) . F."""
    return intersect(bundle, [cls] + [H] * (bundle.rank - 2) + [F])


def section_degrees(splitting: SplittingType, cls: DivisorClass) -> List[int]:
    """Degrees of cls on the sections Z_i cut out by the quotients E -> O(e_i)."""
    return [cls.h * e + cls.f for e in splitting.degrees]


def sorted_tuples(length: int, total: int, lo: int, hi: int) -> Iterator[Tuple[int, ...]]:
    """Nondecreasing integer tuples of the given length and sum with entries in [lo, hi]."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if length * lo > total or length * hi < total:
        return
    # the last entry is the largest: at least the average, at most hi
    smallest_top = max(lo, -(-total // length))
    for top in range(smallest_top, hi + 1):
        rest = total - top
        if (length - 1) * lo > rest:
            break
        for head in sorted_tuples(length - 1, rest, lo, top):
            yield head + (top,)


def veronese_splitting_forcing(c1: int, b: int) -> List[SplittingType]:
    """Rank-3 splittings over P^1 on which 2H + bF is positive on every section."""
    lower = -((b - 1) // 2)  # smallest e with 2e + b >= 1
    upper = c1 - 2 * lower
    return [SplittingType(degrees=t) for t in sorted_tuples(3, c1, lower, upper)]
