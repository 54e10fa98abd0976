"""Classification engines for polarized manifolds of sectional genus three.

Covers the adjunction branch map, the hyperquadric-fibration enumerator with
its exclusion rules, the Veronese-fibration solver and the reduction and
Delta-genus bookkeeping of the non-nef cases.
"""
import logging
import re
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from genus3.config import settings
from genus3.exceptions import (
    EnumerationBoundError,
    FixtureError,
    Genus3Error,
    ParityError,
    RangeError,
    UnsupportedGenusError,
)
from genus3.schemas import (
    AmplenessStatus,
    BranchRecord,
    Candidate,
    CitedCap,
    CitedCapsDocument,
    DeltaBounds,
    DeltaNote,
    EnumerationResult,
    ExclusionRule,
    ProjBundleModel,
    QuadricParamRow,
    QuadricParams,
    ReductionTuples,
    RuleTrace,
    SplittingType,
    VeroneseSolution,
)
from genus3.services import chowcurve
from genus3.services.chowcurve import F, H
from genus3.services.fixtures import load_branches, load_cited_caps, load_delta_notes

logger = logging.getLogger(__name__)

TARGET_GENUS = 3

DEFAULT_RULE_ORDER: Tuple[str, ...] = (
    'ParamConsistency',
    'TruncationPositivity',
    'NoDoubleMinusOne',
    'FloorBound',
    'CitedCap',
    'Corank1Empty',
    'NormalObstruction',
)

# (smallest d, floor on e_0), checked top down
FLOOR_BOUNDS: Tuple[Tuple[int, int], ...] = ((9, 1), (7, 0), (5, -1))

NO_DOUBLE_MINUS_ONE_FROM = 4


def _require_target(g_target: int) -> None:
    if g_target != TARGET_GENUS:
        raise UnsupportedGenusError(
            f"only sectional genus {TARGET_GENUS} is classified, got g={g_target}")


# ---------------------------------------------------------------------------
# Branch map
# ---------------------------------------------------------------------------

def branch_map(g_target: int = TARGET_GENUS,
               branches: Optional[Sequence[BranchRecord]] = None) -> List[BranchRecord]:
    _require_target(g_target)
    records = list(branches) if branches is not None else load_branches()
    ids = [record.id for record in records]
    if len(records) != 6 or len(set(ids)) != 6:
        raise FixtureError(f"expected six distinct branches, got {ids}")
    return records


# ---------------------------------------------------------------------------
# Hyperquadric fibrations
# ---------------------------------------------------------------------------

def quadric_params(g_c: int, n: int) -> QuadricParams:
    if n < settings.min_n:
        raise RangeError(f"hyperquadric fibrations need n >= {settings.min_n}, got n={n}")
    if g_c < 0:
        raise RangeError(f"base genus must be non-negative, got {g_c}")
    params = QuadricParams(g_c=g_c, n=n)
    # s(d) >= 0 is linear in d with slope 1 - n
    d_max = 4 * n * (2 - g_c) // (n - 1)
    if d_max < 1:
        return params
    rows = [QuadricParamRow(d=d, e=params.e_of_d(d), b=params.b_of_d(d), s=params.s_of_d(d))
            for d in range(1, d_max + 1)]
    return QuadricParams(g_c=g_c, n=n, d_range=(1, d_max), rows=rows)


def elliptic_ampleness_status(d: int) -> AmplenessStatus:
    if not 1 <= d <= 6:
        raise RangeError(f"elliptic hyperquadric fibrations have 1 <= d <= 6, got d={d}")
    if d <= 2:
        return 'not-ample'
    if d <= 4:
        return 'ample-if-indecomposable'
    return 'ample'


@dataclass(frozen=True)
class _Context:
    splitting: SplittingType
    n: int
    d: int
    e: int
    b: int
    s: int

    @property
    def degrees(self) -> Tuple[int, ...]:
        return self.splitting.degrees


def _trace(rule: ExclusionRule, detail: str, label: Optional[str] = None, **params) -> RuleTrace:
    return RuleTrace(rule=label or rule.label, params={**rule.params, **params},
                     citation=rule.citation, detail=detail)


def _param_consistency(rule: ExclusionRule, ctx: _Context) -> Optional[RuleTrace]:
    bundle = ProjBundleModel.over_p1(ctx.splitting)
    closed = chowcurve.quadric_invariants(bundle, ctx.b)
    if closed.s < 0:
        return _trace(rule, f"s = {closed.s} < 0")
    member = 2 * H + ctx.b * F
    ring_d = chowcurve.intersect(bundle, [H] * (bundle.rank - 1) + [member])
    try:
        ring_g = chowcurve.sectional_genus_divisor(bundle, member, H)
    except ParityError as e:
        return _trace(rule, str(e))
    if ring_d != ctx.d or closed.d != ctx.d:
        return _trace(rule, f"L^n.M = {ring_d} but d = {ctx.d}")
    if ring_g != TARGET_GENUS or closed.g != ring_g:
        return _trace(rule, f"sectional genus {ring_g} (closed form {closed.g})")
    return None


def _truncation_positivity(rule: ExclusionRule, ctx: _Context) -> Optional[RuleTrace]:
    ks = [rule.params['k']] if 'k' in rule.params else range(2, ctx.n + 1)
    for k in ks:
        if not 2 <= k <= ctx.n:
            continue
        result = chowcurve.truncation_positivity(ctx.splitting, ctx.b, k)
        if result.violated:
            return _trace(rule, f"d - 2(sum of top {k}) = {result.number} <= 0",
                          label=f"TruncationPositivity(k={k})", k=k, number=result.number)
    return None


def _no_double_minus_one(rule: ExclusionRule, ctx: _Context) -> Optional[RuleTrace]:
    if ctx.d >= NO_DOUBLE_MINUS_ONE_FROM and ctx.degrees.count(-1) >= 2:
        return _trace(rule, f"-1 appears {ctx.degrees.count(-1)} times")
    return None


def _floor_bound(rule: ExclusionRule, ctx: _Context) -> Optional[RuleTrace]:
    for threshold, floor in FLOOR_BOUNDS:
        if ctx.d >= threshold:
            if ctx.degrees[0] < floor:
                return _trace(rule, f"e_0 = {ctx.degrees[0]} < {floor} for d >= {threshold}",
                              floor=floor)
            return None
    return None


def _cited_cap(rule: ExclusionRule, ctx: _Context) -> Optional[RuleTrace]:
    cap = CitedCap.model_validate(rule.params)
    if cap.d != ctx.d:
        return None
    if cap.family is not None and not cap.family.matches(ctx.degrees):
        return None
    if cap.n_max is not None and ctx.n > cap.n_max:
        return _trace(rule, f"family {cap.family} only occurs for n <= {cap.n_max}")
    if cap.entry_index is not None and cap.entry_index < len(ctx.degrees):
        value = ctx.degrees[cap.entry_index]
        if value < cap.entry_min:
            return _trace(rule, f"e_{cap.entry_index} = {value} < {cap.entry_min}")
    return None


def _corank1_empty(rule: ExclusionRule, ctx: _Context) -> Optional[RuleTrace]:
    result = chowcurve.corank1_emptiness(ctx.splitting, ctx.b)
    if result.excluded:
        return _trace(rule, f"|2H{ctx.b:+d}F| is empty on the locus without e_{result.witness_index}"
                            f" = {result.witness_degree}",
                      witness_index=result.witness_index)
    return None


def _normal_obstruction(rule: ExclusionRule, ctx: _Context) -> Optional[RuleTrace]:
    if ctx.splitting.rank != 4:
        return None
    result = chowcurve.normal_obstruction(ctx.splitting, ctx.b)
    if result.excluded:
        return _trace(rule, result.detail, pairing=result.pairing)
    return None


RULE_CHECKS: Dict[str, Callable[[ExclusionRule, _Context], Optional[RuleTrace]]] = {
    'ParamConsistency': _param_consistency,
    'TruncationPositivity': _truncation_positivity,
    'NoDoubleMinusOne': _no_double_minus_one,
    'FloorBound': _floor_bound,
    'CitedCap': _cited_cap,
    'Corank1Empty': _corank1_empty,
    'NormalObstruction': _normal_obstruction,
}


def default_rules(d: int, caps: Optional[CitedCapsDocument] = None) -> List[ExclusionRule]:
    caps = caps or load_cited_caps()
    rules: List[ExclusionRule] = []
    for tag in DEFAULT_RULE_ORDER:
        citation = caps.rule_citations.get(tag, "")
        if tag == 'CitedCap':
            rules.extend(
                ExclusionRule(tag=tag, params=cap.model_dump(mode='json'), citation=cap.citation)
                for cap in caps.for_degree(d))
        else:
            rules.append(ExclusionRule(tag=tag, citation=citation))
    return rules


_TRUNCATION_WITH_K = re.compile(r"^TruncationPositivity\(k=(\d+)\)$")


def parse_rules(names: str, d: int, caps: Optional[CitedCapsDocument] = None) -> List[ExclusionRule]:
    """Rule list from 'default' or a comma-separated list of rule tags.

    'TruncationPositivity(k=3)' restricts truncation positivity to one k; 'CitedCap'
    expands to every cited cap recorded for d.
    """
    available = default_rules(d, caps)
    if names.strip() == 'default':
        return available
    rules: List[ExclusionRule] = []
    for name in (part.strip() for part in names.split(',') if part.strip()):
        match = _TRUNCATION_WITH_K.match(name)
        tag = 'TruncationPositivity' if match else name
        if tag not in RULE_CHECKS:
            raise RangeError(f"unknown rule '{name}'; choose from {', '.join(DEFAULT_RULE_ORDER)}")
        for rule in available:
            if rule.tag != tag:
                continue
            if match:
                rule = rule.model_copy(update={'params': {'k': int(match.group(1))}})
            rules.append(rule)
    return rules


def first_exclusion(rules: Sequence[ExclusionRule], ctx: _Context) -> Optional[RuleTrace]:
    for rule in rules:
        trace = RULE_CHECKS[rule.tag](rule, ctx)
        if trace is not None:
            logger.debug(f"{list(ctx.degrees)} excluded by {trace.rule}: {trace.detail}")
            return trace
    return None


def default_n_range(d: int) -> Tuple[int, int]:
    if d > 8:
        # s = (1 - n)d + 8n >= 0
        return settings.min_n, d // (d - 8)
    return settings.min_n, settings.default_n_cap


def generate_splittings(d: int, n: int) -> Iterator[Tuple[int, ...]]:
    """Sorted splittings (e_0, ..., e_n) over P^1 with sum d - 4 inside the finite search box.

    Tuples with e_0 >= 1 are bounded by e_n <= e - n. When e_0 <= 0 the top pair obeys
    2(e_{n-1} + e_n) < d, which caps every entry above and e_0 below.
    """
    if d < 1:
        raise RangeError(f"d must be positive, got {d}")
    e = d - 4
    pair_cap = (d - 1) // 2
    lowest = e - (n - 1) * pair_cap
    if pair_cap < 0:
        raise EnumerationBoundError(f"no finite search box for d={d}, n={n}")

    yield from chowcurve.sorted_tuples(n + 1, e, 1, e - n)
    for second in range(lowest, pair_cap // 2 + 1):
        for top in range(second, pair_cap - second + 1):
            for head in chowcurve.sorted_tuples(n - 1, e - second - top, lowest, second):
                if head[0] <= 0:
                    yield head + (second, top)


def enumerate_quadric_splittings(
        d: int,
        n_range: Optional[Tuple[int, int]] = None,
        rules: Optional[Sequence[ExclusionRule]] = None,
        caps: Optional[CitedCapsDocument] = None,
        printed_status: Optional[Mapping[Tuple[int, ...], str]] = None,
) -> EnumerationResult:
    """Hyperquadric fibrations over P^1 of degree d and sectional genus three."""
    if d < 1:
        raise RangeError(f"d must be positive, got {d}")
    caps = caps or load_cited_caps()
    n_min, n_max = n_range or default_n_range(d)
    if n_min < settings.min_n:
        raise RangeError(f"n must be at least {settings.min_n}, got {n_min}")
    rules = default_rules(d, caps) if rules is None else list(rules)
    printed_status = printed_status or {}

    families = [cap.family for cap in caps.for_degree(d) if cap.family is not None]
    superset = d in caps.superset_degrees
    e, b = d - 4, 8 - d

    candidates: List[Candidate] = []
    for n in range(n_min, n_max + 1):
        s = 2 * e + (n + 1) * b
        for degrees in generate_splittings(d, n):
            if len(candidates) >= settings.max_candidates:
                raise EnumerationBoundError(
                    f"more than {settings.max_candidates} candidates for d={d}, n <= {n_max}")
            ctx = _Context(SplittingType(degrees=degrees), n, d, e, b, s)
            trace = first_exclusion(rules, ctx)
            if trace is not None:
                status = 'excluded'
            elif superset and not any(family.matches(degrees) for family in families):
                status = 'beyond-table'
            else:
                status = 'admitted'
            candidates.append(Candidate(splitting=degrees, n=n, d=d, e=e, b=b, s=s,
                                        status=status, trace=trace,
                                        printed_status=printed_status.get(degrees)))

    candidates.sort(key=lambda c: (c.n, c.splitting))
    result = EnumerationResult(d=d, n_min=n_min, n_max=n_max,
                               rules=[rule.label for rule in rules], candidates=candidates)
    logger.info(f"d={d}: {len(candidates)} candidates, {len(result.admitted)} admitted")
    return result


# ---------------------------------------------------------------------------
# Veronese fibrations
# ---------------------------------------------------------------------------

def veronese_solutions(g_target: int = TARGET_GENUS) -> List[VeroneseSolution]:
    """(g_C, e, b, d) with e >= 0 and d > 0 for L = 2H + bF on a rank-3 bundle.

    K + 2L restricted to a fibre is trivial, so 2g_C - 2 + e + 2b = 0; with the genus
    formula this gives e + b = (g - 1)/2 and e = 2g_C + g - 3, hence d = 8e + 12b drops
    as g_C grows.
    """
    _require_target(g_target)
    half = (g_target - 1) // 2
    solutions: List[VeroneseSolution] = []
    g_c = 0
    while True:
        e = 2 * g_c + g_target - 3
        b = half - e
        d = 8 * e + 12 * b
        if d <= 0:
            break
        if e >= 0:
            bundle = ProjBundleModel.over_curve(g_c, 3, e)
            invariants = chowcurve.veronese_invariants(bundle, b)
            if (invariants.d, invariants.g) != (d, g_target):
                raise Genus3Error(f"ring gives (d, g) = ({invariants.d}, {invariants.g}) "
                                  f"for g_C={g_c}, e={e}, b={b}")
            fibre_degree = chowcurve.divisor_degree_on_fibre(bundle, 2 * H + b * F)
            if fibre_degree != 2:
                raise Genus3Error(f"L restricts to O({fibre_degree}) on fibres, expected O(2)")
            solutions.append(VeroneseSolution(g_c=g_c, e=e, b=b, d=d))
        g_c += 1
    return solutions


def has_line_of_degree_one(solution: VeroneseSolution) -> bool:
    """True when every admissible splitting carries a section Z with L.Z = 1."""
    if solution.g_c != 0:
        return False
    polarization = 2 * H + solution.b * F
    splittings = chowcurve.veronese_splitting_forcing(solution.e, solution.b)
    return bool(splittings) and all(
        1 in chowcurve.section_degrees(splitting, polarization) for splitting in splittings)


# ---------------------------------------------------------------------------
# Reductions and Delta genus
# ---------------------------------------------------------------------------

def veronese_blowup_bound(g_target: int = TARGET_GENUS) -> int:
    """Largest number of simple blow-ups over a Veronese-type reduction (L^3 >= 1)."""
    survivors = []
    for solution in veronese_solutions(g_target):
        if has_line_of_degree_one(solution):
            logger.debug(f"{solution} carries a curve of degree one and cannot be a reduction")
            continue
        survivors.append(solution)
    if not survivors:
        raise Genus3Error("no Veronese-type reduction survives")
    return max(solution.d for solution in survivors) - 1


def reduction_tuples(g_target: int = TARGET_GENUS) -> ReductionTuples:
    _require_target(g_target)
    # 0 <= (K' + (n-2)L')L'^(n-1) = 2g - 2 - L'^n, and L^n = L'^n - r >= 1 with r >= 1
    top = 2 * g_target - 2
    tuples = sorted((Ln_prime - r, r, Ln_prime)
                    for Ln_prime in range(2, top + 1) for r in range(1, Ln_prime))
    return ReductionTuples(general_type_tuples=tuples,
                           veronese_blowup_bound=veronese_blowup_bound(g_target))


def delta_bounds(g_target: int = TARGET_GENUS,
                 notes: Optional[Sequence[DeltaNote]] = None) -> DeltaBounds:
    _require_target(g_target)
    top = 2 * g_target - 2
    factorizations = [(top // w, w) for w in range(top, 1, -1) if top % w == 0]
    return DeltaBounds(
        d_range=(1, top),
        notes=list(notes) if notes is not None else load_delta_notes(),
        double_cover_branch_degree=2 * (g_target + 1),
        degree_factorizations=factorizations,
    )
