from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator, model_validator


# ---------------------------------------------------------------------------
# Projective bundles over a curve
# ---------------------------------------------------------------------------

class BaseCurve(BaseModel):
    genus: int = Field(..., ge=0)

    class Config:
        frozen = True


class SplittingType(BaseModel):
    """Sorted degrees (e_0 <= ... <= e_n) of a split bundle on the projective line."""
    degrees: Tuple[int, ...]

    class Config:
        frozen = True

    @field_validator('degrees')
    def validate_degrees(cls, v):
        if len(v) < 2:
            raise ValueError('a splitting type needs at least two summands')
        if any(a > b for a, b in zip(v, v[1:])):
            raise ValueError(f'splitting degrees must be nondecreasing, got {list(v)}')
        return v

    @classmethod
    def of(cls, *degrees: int) -> "SplittingType":
        return cls(degrees=tuple(degrees))

    @property
    def c1(self) -> int:
        return sum(self.degrees)

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def n(self) -> int:
        return len(self.degrees) - 1

    def without(self, index: int) -> Tuple[int, ...]:
        return self.degrees[:index] + self.degrees[index + 1:]


class ProjBundleModel(BaseModel):
    base: BaseCurve
    rank: int = Field(..., ge=2)
    c1: int
    splitting: Optional[SplittingType] = None

    class Config:
        frozen = True

    @model_validator(mode='after')
    def check_splitting(self):
        if self.splitting is not None:
            if self.base.genus != 0:
                raise ValueError('a splitting type is only meaningful over the projective line')
            if self.splitting.rank != self.rank:
                raise ValueError(
                    f'splitting has {self.splitting.rank} summands but rank is {self.rank}')
            if self.splitting.c1 != self.c1:
                raise ValueError(
                    f'splitting degrees sum to {self.splitting.c1}, not c1={self.c1}')
        return self

    @classmethod
    def over_curve(cls, genus: int, rank: int, c1: int) -> "ProjBundleModel":
        return cls(base=BaseCurve(genus=genus), rank=rank, c1=c1)

    @classmethod
    def over_p1(cls, splitting: SplittingType) -> "ProjBundleModel":
        return cls(base=BaseCurve(genus=0), rank=splitting.rank, c1=splitting.c1,
                   splitting=splitting)

    @property
    def n(self) -> int:
        return self.rank - 1


class DivisorClass(BaseModel):
    """The class h*H + f*F on P(E)."""
    h: int = 0
    f: int = 0

    class Config:
        frozen = True

    @classmethod
    def tautological(cls) -> "DivisorClass":
        return cls(h=1, f=0)

    @classmethod
    def fibre(cls) -> "DivisorClass":
        return cls(h=0, f=1)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(h=self.h + other.h, f=self.f + other.f)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(h=self.h - other.h, f=self.f - other.f)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(h=-self.h, f=-self.f)

    def __mul__(self, k: int) -> "DivisorClass":
        return DivisorClass(h=k * self.h, f=k * self.f)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.h}H{self.f:+d}F"


class QuadricInvariants(BaseModel):
    d: int
    g: int
    s: int


class VeroneseInvariants(BaseModel):
    d: int
    g: int


class TruncationResult(BaseModel):
    k: int
    number: int
    applicable: bool
    violated: bool


class Corank1Result(BaseModel):
    excluded: bool
    witness_index: Optional[int] = None
    witness_degree: Optional[int] = None


class NormalObstructionResult(BaseModel):
    applicable: bool
    excluded: bool
    detail: str = ""
    pairing: Optional[int] = None
    h0_p: Optional[int] = None
    h0_q: Optional[int] = None


# ---------------------------------------------------------------------------
# Surfaces
# ---------------------------------------------------------------------------

class SurfaceLattice(BaseModel):
    labels: List[str]
    gram: List[List[int]]
    K: List[int]
    A: Optional[List[int]] = None

    @model_validator(mode='after')
    def check_shape(self):
        size = len(self.labels)
        if len(self.gram) != size or any(len(row) != size for row in self.gram):
            raise ValueError(f'gram matrix must be {size}x{size}')
        for i in range(size):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError('gram matrix must be symmetric')
        if len(self.K) != size:
            raise ValueError('canonical class has the wrong length')
        if self.A is not None and len(self.A) != size:
            raise ValueError('polarization has the wrong length')
        return self

    @property
    def size(self) -> int:
        return len(self.labels)

    def vector(self, **coefficients: int) -> List[int]:
        """Vector from label coefficients, e.g. lattice.vector(H=2, f=4)."""
        unknown = set(coefficients) - set(self.labels)
        if unknown:
            raise ValueError(f'unknown basis labels: {sorted(unknown)}')
        return [coefficients.get(label, 0) for label in self.labels]


class RuledModel(BaseModel):
    base_genus: int = Field(..., ge=0)
    e: int


class WeightSequence(BaseModel):
    """Contraction weights (m_r, ..., m_1)."""
    weights: Tuple[int, ...] = ()

    @field_validator('weights')
    def validate_weights(cls, v):
        if any(m < 1 for m in v):
            raise ValueError(f'contraction weights must be positive, got {list(v)}')
        return v

    @classmethod
    def of(cls, *weights: int) -> "WeightSequence":
        return cls(weights=tuple(weights))

    def __len__(self) -> int:
        return len(self.weights)


class PairingData(BaseModel):
    KK: int
    KA: int
    AA: int

    @model_validator(mode='after')
    def check_parity(self):
        if (self.KA + self.AA) % 2:
            raise ValueError(f'KA + AA = {self.KA + self.AA} is odd')
        return self


class MinimalizationResult(BaseModel):
    g: int
    AA: int
    KK: int
    genus_drop: int


class ScrollConstraintReport(BaseModel):
    passed: bool
    reasons: List[str] = []


class DegTRow(BaseModel):
    degT: int
    degG: int
    c2: int
    L3: int


class ScrollRankBound(BaseModel):
    degree: int
    A_dot_line: int
    max_rank: int


class DegTView(BaseModel):
    rows: List[DegTRow]
    rank_bound: ScrollRankBound


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

BranchId = Literal[
    'scroll-over-genus3-curve',
    'simple-blowup',
    'veronese-fibration',
    'quadric-fibration',
    'scroll-over-surface',
    'nef-adjoint',
]

RuleTag = Literal[
    'ParamConsistency',
    'TruncationPositivity',
    'NoDoubleMinusOne',
    'FloorBound',
    'CitedCap',
    'Corank1Empty',
    'NormalObstruction',
]

CandidateStatus = Literal['admitted', 'beyond-table', 'excluded']

AmplenessStatus = Literal['not-ample', 'ample-if-indecomposable', 'ample']


class BranchRecord(BaseModel):
    id: BranchId
    description: str
    citation: str
    studied_in: str


class SplittingPattern(BaseModel):
    """head + (fill repeated any number of times) + tail."""
    head: Tuple[int, ...] = ()
    fill: int = 0
    tail: Tuple[int, ...] = ()

    def matches(self, degrees: Tuple[int, ...]) -> bool:
        if len(degrees) < len(self.head) + len(self.tail):
            return False
        if degrees[:len(self.head)] != self.head:
            return False
        middle_end = len(degrees) - len(self.tail)
        if degrees[middle_end:] != self.tail:
            return False
        return all(x == self.fill for x in degrees[len(self.head):middle_end])

    def __str__(self) -> str:
        parts = [str(x) for x in self.head] + [f"{self.fill},…,{self.fill}"]
        parts += [str(x) for x in self.tail]
        return "(" + ",".join(parts) + ")"


class CitedCap(BaseModel):
    """A bound quoted from the case analysis: a family with an n cap, or an entry bound."""
    d: int
    citation: str = Field(..., min_length=1)
    family: Optional[SplittingPattern] = None
    n_max: Optional[int] = None
    entry_index: Optional[int] = None
    entry_min: Optional[int] = None

    @model_validator(mode='after')
    def check_shape(self):
        if (self.entry_index is None) != (self.entry_min is None):
            raise ValueError('entry bounds need both entry_index and entry_min')
        if self.family is None and self.entry_index is None:
            raise ValueError('a cited cap needs a family or an entry bound')
        return self


class ExclusionRule(BaseModel):
    tag: RuleTag
    params: Dict[str, Any] = {}
    citation: str = ""

    @model_validator(mode='after')
    def check_citation(self):
        if self.tag == 'CitedCap' and not self.citation:
            raise ValueError('CitedCap rules must carry a citation')
        return self

    @property
    def label(self) -> str:
        if self.tag == 'TruncationPositivity' and 'k' in self.params:
            return f"TruncationPositivity(k={self.params['k']})"
        return self.tag


class RuleTrace(BaseModel):
    rule: str
    params: Dict[str, Any] = {}
    citation: str = ""
    detail: str = ""


class Candidate(BaseModel):
    splitting: Tuple[int, ...]
    n: int
    d: int
    e: int
    b: int
    s: int
    status: CandidateStatus = 'admitted'
    trace: Optional[RuleTrace] = None
    printed_status: Optional[str] = None

    @model_validator(mode='after')
    def check_consistency(self):
        if sum(self.splitting) != self.e:
            raise ValueError(f'splitting {list(self.splitting)} does not sum to e={self.e}')
        if self.d != 2 * self.e + self.b:
            raise ValueError(f'd={self.d} differs from 2e+b={2 * self.e + self.b}')
        if len(self.splitting) != self.n + 1:
            raise ValueError('splitting length must be n+1')
        return self

    @property
    def is_admitted(self) -> bool:
        return self.status != 'excluded'


class EnumerationResult(BaseModel):
    d: int
    g_c: int = 0
    n_min: int
    n_max: int
    rules: List[str]
    candidates: List[Candidate]

    @property
    def admitted(self) -> List[Candidate]:
        return [c for c in self.candidates if c.is_admitted]

    @property
    def excluded(self) -> List[Candidate]:
        return [c for c in self.candidates if not c.is_admitted]


class QuadricParamRow(BaseModel):
    d: int
    e: int
    b: int
    s: int


class QuadricParams(BaseModel):
    g_c: int
    n: int
    d_range: Optional[Tuple[int, int]] = None
    rows: List[QuadricParamRow] = []

    def e_of_d(self, d: int) -> int:
        return d - 4 + 2 * self.g_c

    def b_of_d(self, d: int) -> int:
        return 8 - 4 * self.g_c - d

    def s_of_d(self, d: int) -> int:
        return (1 - self.n) * d + 4 * self.n * (2 - self.g_c)


class VeroneseSolution(BaseModel):
    g_c: int
    e: int
    b: int
    d: int


class ReductionTuples(BaseModel):
    general_type_tuples: List[Tuple[int, int, int]]
    veronese_blowup_bound: int


class DeltaNote(BaseModel):
    d: int
    delta: Optional[int] = None
    text: str
    citation: str


class DeltaBounds(BaseModel):
    d_range: Tuple[int, int]
    notes: List[DeltaNote]
    double_cover_branch_degree: int
    degree_factorizations: List[Tuple[int, int]]


# ---------------------------------------------------------------------------
# Fixtures and reports
# ---------------------------------------------------------------------------

TableId = Literal['surfaces', 'quadrics', 'reductions', 'deg-t', 'veronese']

TABLE_IDS: Tuple[str, ...] = ('surfaces', 'quadrics', 'reductions', 'deg-t', 'veronese')

ParamValue = Union[int, List[int]]


class ClassificationRow(BaseModel):
    table: TableId
    key: str = Field(..., min_length=1)
    parameters: Dict[str, ParamValue] = {}
    printed_status: str = ""
    citation: str = ""
    expect_discrepancy: bool = False

    @property
    def family(self) -> str:
        return self.key.split('/')[0].split('-')[0]


VerdictKind = Literal['verified', 'discrepancy', 'beyond-table', 'table-only']


class Verdict(BaseModel):
    key: str
    kind: VerdictKind
    expected: Optional[Any] = None
    recomputed: Optional[Any] = None
    note: str = ""
    whitelisted: bool = False
    unexpected: bool = False


class VerificationReport(BaseModel):
    table: TableId
    verdicts: List[Verdict]
    summary: Dict[str, int] = {}
    exit_status: int = 0

    @model_validator(mode='after')
    def fill_summary(self):
        counts = {kind: 0 for kind in ('verified', 'discrepancy', 'beyond-table', 'table-only')}
        for verdict in self.verdicts:
            counts[verdict.kind] += 1
        counts['unexpected'] = sum(1 for v in self.verdicts if v.unexpected)
        self.summary = counts
        self.exit_status = 1 if counts['unexpected'] else 0
        return self


class IdentityProbe(BaseModel):
    n: int
    d: int
    g_c: int
    s: int
    formula: str
    lhs: int
    rhs: int
    holds: bool


class OracleReport(BaseModel):
    points_checked: int
    ring_mismatches: int
    oracle_mismatches: int
    max_deviation: int
    veronese_points: int
    veronese_mismatches: int
    identity_points: int
    identity_failures: int
    printed_identity_probe: IdentityProbe
    mismatch_samples: List[str] = []

    @property
    def exit_status(self) -> int:
        failed = (self.ring_mismatches or self.oracle_mismatches or self.veronese_mismatches
                  or self.identity_failures or self.printed_identity_probe.holds)
        return 1 if failed else 0


class FixtureDocument(BaseModel):
    table: TableId
    rows: List[Dict[str, Any]] = []


class CitedCapsDocument(BaseModel):
    superset_degrees: List[int] = []
    rule_citations: Dict[str, str] = {}
    caps: List[CitedCap] = []

    def for_degree(self, d: int) -> List[CitedCap]:
        return [cap for cap in self.caps if cap.d == d]


class DeltaNotesDocument(BaseModel):
    notes: List[DeltaNote] = []


class BranchesDocument(BaseModel):
    branches: List[BranchRecord] = []


# ---------------------------------------------------------------------------
# API payloads
# ---------------------------------------------------------------------------

class IntersectionRequest(BaseModel):
    base_genus: int = Field(0, ge=0)
    rank: int = Field(..., ge=2)
    c1: int
    factors: List[DivisorClass] = Field(..., min_length=1)


class IntersectionResponse(BaseModel):
    element: str
    terms: List[Tuple[int, int, int]]
    top_degree: Optional[int] = None


class SurfaceGenusResponse(BaseModel):
    KK: int
    KA: int
    AA: int
    g: int


class MinimalizationRequest(BaseModel):
    g_min: int
    AA_min: int
    KK_min: int
    weights: List[int] = []
