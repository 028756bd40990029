from itertools import product

import pytest

from splicecap import (
    InvalidMove,
    MultiComponentError,
    SmoothingChoice,
    Witness,
    ak_min_genus,
    apply_state,
    check_upper_bound,
    connected_sum,
    crosscap_alt,
    equality_report,
    gen_pretzel,
    gen_rational,
    gen_torus,
    is_seifert_state,
    ri_plus,
    sigma_from_witness,
    smooth,
    state_chi,
    u_minus,
    O_MAP,
)
from splicecap.splices import count_state_circles, oriented_pairing
from conftest import family_members


def brute_force_chis(m):
    """Best state Euler characteristics: (seifert, best non-seifert)."""
    base = tuple(oriented_pairing(m, c) for c in range(m.n))
    chi_s = None
    best_non = None
    for ps in product((0, 1), repeat=m.n):
        chi = count_state_circles(m, ps) + m.free_circles - m.n
        if ps == base:
            chi_s = chi
        elif best_non is None or chi > best_non:
            best_non = chi
    return chi_s, best_non


def test_brute_force_oracle(table):
    """The branching result matches the full state enumeration
    (all 2^n states, every table entry with n <= 6)."""
    for entry in table:
        if entry.n > 6:
            continue
        m = entry.map
        chi_s, best_non = brute_force_chis(m)
        r = ak_min_genus(m)
        assert r.chi_max == max(chi_s, best_non), entry.name
        assert r.nonorientable_at_max == (best_non == r.chi_max), entry.name
        assert chi_s == 1 - 2 * r.genus


def test_ak_results_anchor_values(trefoil, table_maps):
    r = ak_min_genus(trefoil)
    assert (r.chi_max, r.nonorientable_at_max, r.crosscap, r.genus) == (0, True, 1, 1)
    assert ak_min_genus(table_maps["7_4"]).crosscap == 3
    assert ak_min_genus(table_maps["4_1"]).crosscap == 2


def test_ak_multi_component_rejected(trefoil):
    with pytest.raises(MultiComponentError):
        ak_min_genus(smooth(trefoil, "1", SmoothingChoice.ORIENTED))


def test_crosscap_unknot_convention(kink, double_kink):
    assert crosscap_alt(O_MAP) == 0
    assert crosscap_alt(kink) == 0
    assert crosscap_alt(double_kink) == 0


def test_crosscap_torus_family():
    for l in range(2, 6):
        assert crosscap_alt(gen_torus(l)) == 1


def test_crosscap_two_families():
    assert crosscap_alt(gen_rational(1, 2)) == 2
    assert crosscap_alt(gen_pretzel(1, 1, 1)) == 2
    t = gen_torus(2)
    assert crosscap_alt(connected_sum(t, None, t, None)) == 2


def test_crosscap_kink_invariant(trefoil):
    grown = ri_plus(trefoil, ("3", 2), "R")
    assert crosscap_alt(grown) == crosscap_alt(trefoil) == 1


def test_dichotomy_consistency(table):
    """When every maximal leaf is orientable the crosscap is odd and equals
    twice the genus plus one."""
    fired = 0
    for entry in table:
        r = ak_min_genus(entry.map)
        if not r.nonorientable_at_max:
            fired += 1
            assert r.crosscap == 2 * r.genus + 1
            assert r.crosscap % 2 == 1
        else:
            assert r.crosscap == 1 - r.chi_max
    # the orientable-only branch genuinely occurs in the table
    assert fired > 0


def test_chi_never_exceeds_disk(table):
    for entry in table:
        r = ak_min_genus(entry.map)
        assert r.chi_max <= 1


def test_sigma_from_witness_trefoil(trefoil):
    value, witness = u_minus(trefoil)
    state = sigma_from_witness(trefoil, witness)
    circles = apply_state(trefoil, state)
    assert circles == 1 + witness.ri_count == 3
    assert state_chi(trefoil.n, circles) == 1 - value
    assert not is_seifert_state(state)


def test_sigma_from_witness_kink(kink):
    value, witness = u_minus(kink)
    state = sigma_from_witness(kink, witness)
    assert apply_state(kink, state) == 2
    assert is_seifert_state(state)  # all steps were kink removals


def test_sigma_from_witness_table(table):
    """The witness state realizes circles = 1 + kink removals, hence
    chi = 1 - band count, on every table entry."""
    for entry in table:
        value, witness = u_minus(entry.map)
        state = sigma_from_witness(entry.map, witness)
        circles = apply_state(entry.map, state)
        assert circles == 1 + witness.ri_count
        assert state_chi(entry.n, circles) == 1 - value


def test_sigma_rejects_non_descent(trefoil):
    bad = Witness(trefoil.canonical_key, ("RI+ 1.0 L",))
    with pytest.raises(InvalidMove):
        sigma_from_witness(trefoil, bad)


def test_upper_bound_everywhere(table):
    for entry in table:
        assert check_upper_bound(entry.map), entry.name


def test_upper_bound_strict_on_sums(table_maps):
    p = table_maps["7_4"]
    s = connected_sum(p, None, p, None)
    assert crosscap_alt(s) == 5
    assert u_minus(s)[0] == 6
    assert check_upper_bound(s)


def test_equality_report(trefoil, table_maps):
    r = equality_report(trefoil)
    assert (r.crosscap, r.u_minus, r.equal) == (1, 1, True)
    p = table_maps["7_4"]
    s = connected_sum(p, None, p, None)
    r = equality_report(s)
    assert (r.crosscap, r.u_minus, r.equal) == (5, 6, False)


def test_crosscap_bound_on_families():
    for name, m in family_members(10):
        assert crosscap_alt(m) <= u_minus(m)[0], name


def test_equality_on_prime_table(table):
    for entry in table:
        assert equality_report(entry.map).equal, entry.name
