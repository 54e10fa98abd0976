import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genus3.exceptions import DimensionMismatchError, Genus3Error
from genus3.schemas import ClassificationRow, DegTRow, RuledModel, WeightSequence
from genus3.services import surflat
from genus3.services.verification import verify


def test_elliptic_ruled_polarization():
    lattice = surflat.with_polarization(surflat.make_ruled(RuledModel(base_genus=1, e=0)), [2, 2])
    pairing = surflat.surface_invariants(lattice)
    assert (pairing.KK, pairing.KA, pairing.AA) == (0, -4, 8)
    assert surflat.sectional_genus_surface(pairing.KA, pairing.AA) == 3


def test_plane_quartic():
    lattice = surflat.with_polarization(surflat.make_plane(), [4])
    pairing = surflat.surface_invariants(lattice)
    assert (pairing.KK, pairing.AA) == (9, 16)
    assert surflat.sectional_genus_surface(pairing.KA, pairing.AA) == 3


def test_pair_checks_dimensions():
    lattice = surflat.make_ruled(RuledModel(base_genus=0, e=1))
    with pytest.raises(DimensionMismatchError):
        surflat.pair(lattice, [1, 0, 0], [1, 0])


def test_invariants_need_polarization():
    with pytest.raises(Genus3Error):
        surflat.surface_invariants(surflat.make_plane())


def test_blow_up_appends_exceptional_curves():
    lattice = surflat.with_polarization(surflat.make_plane(), [4])
    blown = surflat.blow_up(lattice, WeightSequence.of(2, 1))
    assert blown.labels == ["h", "E1", "E2"]
    assert blown.K == [-3, 1, 1]
    assert blown.A == [4, -2, -1]
    assert blown.gram[1][1] == -1 and blown.gram[0][1] == 0


def test_minimalization_invariants():
    result = surflat.minimalization_invariants(6, 16, 9, WeightSequence.of(3, 2))
    assert (result.g, result.AA, result.KK, result.genus_drop) == (2, 3, 7, 4)


@given(base_genus=st.integers(0, 2), e=st.integers(0, 3), x=st.integers(1, 5),
       y=st.integers(-2, 8), weights=st.lists(st.integers(1, 4), max_size=6))
@settings(max_examples=100, deadline=None)
def test_blow_up_matches_closed_form(base_genus, e, x, y, weights):
    lattice = surflat.with_polarization(
        surflat.make_ruled(RuledModel(base_genus=base_genus, e=e)), [x, y])
    minimal = surflat.surface_invariants(lattice)
    sequence = WeightSequence(weights=tuple(weights))

    blown = surflat.surface_invariants(surflat.blow_up(lattice, sequence))
    closed = surflat.minimalization_invariants(
        surflat.sectional_genus_surface(minimal.KA, minimal.AA), minimal.AA, minimal.KK, sequence)

    assert blown.AA == closed.AA
    assert blown.KK == closed.KK
    assert surflat.sectional_genus_surface(blown.KA, blown.AA) == closed.g


def test_deg_t_enumeration():
    assert surflat.deg_t_enumeration() == [
        DegTRow(degT=1, degG=0, c2=2, L3=4),
        DegTRow(degT=2, degG=-1, c2=3, L3=3),
        DegTRow(degT=3, degG=-2, c2=4, L3=2),
        DegTRow(degT=4, degG=-3, c2=5, L3=1),
    ]


def test_scroll_constraints():
    assert surflat.scroll_constraints_check(6, 4, 2, 2, WeightSequence()).passed
    report = surflat.scroll_constraints_check(6, 0, 6, 2, WeightSequence.of(1))
    assert not report.passed
    assert len(report.reasons) == 2


def test_rank_bound_from_lines():
    assert surflat.rank_bound_from_lines(4, 2)
    assert surflat.rank_bound_from_lines(4, 4)
    assert not surflat.rank_bound_from_lines(4, 5)


def test_whitelisted_row_recomputes_to_fifteen(fixture_rows):
    row = next(r for r in fixture_rows("surfaces") if r.key == "VII-3/e=1")
    AA, g, _ = surflat.recompute_surface_row(row)
    assert (AA, g) == (15, 8)
    verdict = surflat.surface_row_verdict(row)
    assert verdict.kind == "discrepancy"
    assert verdict.whitelisted and not verdict.unexpected


def test_missing_parameter_is_reported_per_row():
    row = ClassificationRow(table="surfaces", key="V-1/e=0", parameters={"AA": 8, "e": 0, "x": 2})
    report = surflat.verify_surface_row(row)
    assert report.verdicts[0].kind == "discrepancy"
    assert "'y'" in report.verdicts[0].note
    assert report.exit_status == 1


def test_surface_list_verifies(fixture_rows):
    report = verify("surfaces", fixture_rows("surfaces"))
    assert report.summary["discrepancy"] == 1
    assert report.summary["verified"] == len(report.verdicts) - 1
    assert report.exit_status == 0


def test_surface_list_fails_without_whitelist(fixture_rows):
    rows = [row.model_copy(update={"expect_discrepancy": False})
            for row in fixture_rows("surfaces")]
    report = verify("surfaces", rows)
    assert report.exit_status == 1
    assert [v.key for v in report.verdicts if v.unexpected] == ["VII-3/e=1"]


@given(base_genus=st.integers(0, 2), e=st.integers(0, 3),
       D1=st.lists(st.integers(-5, 5), min_size=2, max_size=2),
       D2=st.lists(st.integers(-5, 5), min_size=2, max_size=2),
       weights=st.lists(st.integers(1, 4), max_size=5))
@settings(max_examples=100, deadline=None)
def test_blow_up_preserves_pulled_back_pairing(base_genus, e, D1, D2, weights):
    lattice = surflat.with_polarization(
        surflat.make_ruled(RuledModel(base_genus=base_genus, e=e)), [1, 1])
    blown = surflat.blow_up(lattice, WeightSequence(weights=tuple(weights)))
    padding = [0] * len(weights)
    assert surflat.pair(blown, D1 + padding, D2 + padding) == surflat.pair(lattice, D1, D2)


def test_scroll_rank_over_plane():
    bound = surflat.scroll_rank_over_plane()
    assert (bound.A_dot_line, bound.max_rank) == (4, 4)
    assert surflat.scroll_rank_over_plane(6).max_rank == 6


def test_scroll_rank_needs_room_for_rank_two():
    with pytest.raises(Genus3Error):
        surflat.scroll_rank_over_plane(1)


def test_deg_t_view_carries_rank_bound():
    view = surflat.deg_t_view()
    assert view.rows == surflat.deg_t_enumeration()
    assert view.rank_bound.max_rank == 4


@pytest.mark.parametrize("bad_row", [
    ClassificationRow(table="surfaces", key="II-1", parameters={"KK": 1, "KA": 2, "AA": 3}),
    ClassificationRow(table="surfaces", key="VI", parameters={"AA": 15, "degree": 4, "weights": [0]}),
    ClassificationRow(table="surfaces", key="I", parameters={"KK": 1}),
])
def test_bad_row_does_not_hide_the_others(bad_row):
    good = ClassificationRow(table="surfaces", key="VI", parameters={"AA": 16, "degree": 4})
    report = verify("surfaces", [bad_row, good])
    assert [v.kind for v in report.verdicts] == ["discrepancy", "verified"]
    assert report.verdicts[0].unexpected
    assert report.exit_status == 1
