from fractions import Fraction

import pytest

from multconv.harness import gen_measure, gen_pair
from multconv.measures import (
    Measure,
    delta_ej,
    delta_j,
    group_average,
    mconv,
    msym,
    munc,
    phat,
    sigma0,
    sigma_sym,
    sigma_unc,
    symmetrize,
    tensor,
    unc_forward,
    unc_inverse,
    unit,
)
from multconv.points import zero_pattern
from multconv.scalars import Surd
from multconv.subsets import (
    GeneratingPair,
    SubsetMask,
    all_subsets,
    gamma,
    index_set,
    subsets_of,
)

F = Fraction


def dirac(*coords):
    return Measure.dirac([F(c) for c in coords])


def mask(dim, *indices):
    return SubsetMask.from_indices(dim, indices)


def test_dirac_convolution():
    assert mconv(dirac(2, -1), dirac(3, 3)) == dirac(6, -3)


def test_atom_at_origin_absorbs():
    mu = gen_measure(3, 2, 4)
    origin = dirac(0, 0)
    assert mconv(origin, mu) == origin * mu.total_mass()


def test_total_mass_multiplies():
    for seed in range(5):
        mu = gen_measure(seed, 2, 3)
        nu = gen_measure(seed + 100, 2, 3)
        assert mconv(mu, nu).total_mass() == mu.total_mass() * nu.total_mass()


def test_unit_element():
    for n in (1, 2, 3):
        mu = gen_measure(n, n, 4)
        assert mconv(mu, unit(n)) == mu


def test_parity_basis_products_exhaustive():
    for n in (1, 2, 3):
        for j in all_subsets(n):
            for k in all_subsets(n):
                prod = mconv(delta_j(n, j), delta_j(n, k))
                if j == k:
                    assert prod == delta_j(n, j)
                else:
                    assert prod.is_zero()


def test_tensor_examples():
    assert tensor(dirac(1, 2), dirac(3)) == dirac(1, 2, 3)
    assert tensor(Measure.zero(2), dirac(1)).is_zero()


def test_tensor_distributes_over_convolution():
    mu = gen_measure(11, 2, 3)
    nu = gen_measure(12, 2, 3)
    rho = gen_measure(13, 1, 3)
    sig = gen_measure(14, 1, 3)
    assert mconv(tensor(mu, rho), tensor(nu, sig)) == tensor(mconv(mu, nu), mconv(rho, sig))


def test_projection_slides_through_convolution():
    for seed in range(5):
        mu = gen_measure(seed + 20, 3, 4)
        nu = gen_measure(seed + 40, 3, 4)
        for bits in range(8):
            e = SubsetMask(bits, 3)
            lhs = mconv(mu, nu).project(e)
            assert lhs == mconv(mu.project(e), nu)
            assert lhs == mconv(mu, nu.project(e))
            assert lhs == mconv(mu.project(e), nu.project(e))


def test_sigma0_kills_proper_projections():
    for n in (1, 2, 3):
        s = sigma0(n)
        for e in all_subsets(n):
            if e.size < n:
                assert s.project(e).is_zero()
        assert s.project(SubsetMask.full(n)) == s


def test_sigma0_expansion():
    assert sigma0(1) == Measure(1, {(F(1),): -1, (F(2),): 1})


def test_sigma0_absorbs_lower_orders():
    for n in (1, 2, 3):
        for seed in range(4):
            nu = gen_measure(seed + 60, n, 4)
            top = nu.restrict_order(SubsetMask.full(n))
            assert mconv(nu, sigma0(n)) == mconv(top, sigma0(n))


def test_coordinate_decomposition_resums():
    for seed in range(5):
        mu = gen_measure(seed + 80, 3, 5)
        total = Measure.zero(3)
        for e in all_subsets(3):
            total = total + mu.restrict_order(e)
        assert total == mu


def test_restrict_order_idempotent():
    mu = gen_measure(7, 2, 5)
    for e in all_subsets(2):
        once = mu.restrict_order(e)
        assert once.restrict_order(e) == once


def test_origin_atom_has_empty_pattern():
    origin = dirac(0, 0)
    assert origin.restrict_order(SubsetMask.empty(2)) == origin


def test_convolution_decomposition_by_intersection():
    mu = gen_measure(91, 2, 4)
    nu = gen_measure(92, 2, 4)
    prod = mconv(mu, nu)
    for g in all_subsets(2):
        expected = Measure.zero(2)
        for e in all_subsets(2):
            for f in all_subsets(2):
                if e & f == g:
                    expected = expected + mconv(mu.restrict_order(e), nu.restrict_order(f))
        assert prod.restrict_order(g) == expected


def test_restrict_positive_examples():
    assert sigma_sym(1).restrict_positive() == dirac(1) * F(1, 2)
    mu = gen_measure(15, 2, 4)
    for e in all_subsets(2):
        assert mu.restrict_positive().restrict_order(e) == mu.restrict_order(e).restrict_positive()
    pos = Measure(2, {(F(1), F(2)): 1, (F(1, 2), F(3)): -2})
    assert pos.restrict_positive() == pos


def test_reflection_moves_sign_vectors():
    n = 3
    for e in all_subsets(n):
        for f in all_subsets(n):
            ones_e = tuple(F(-1) if e.bits >> i & 1 else F(1) for i in range(n))
            moved = Measure.dirac(ones_e).reflect(f)
            ones_ef = tuple(F(-1) if (e ^ f).bits >> i & 1 else F(1) for i in range(n))
            assert moved == Measure.dirac(ones_ef)


def test_reflection_sign_law_exhaustive():
    for n in (1, 2, 3):
        for e in all_subsets(n):
            for j in subsets_of(e):
                d = delta_ej(e, j)
                for f in all_subsets(n):
                    reflected = d.reflect(f)
                    if (j.bits & f.bits).bit_count() % 2:
                        assert reflected == -d
                        assert d.is_odd_under(f)
                    else:
                        assert reflected == d
                        assert d.is_even_under(f)


def test_reflect_identity():
    mu = gen_measure(16, 3, 4)
    assert mu.reflect(SubsetMask.empty(3)) == mu


def test_reflection_commutes_with_projection_and_restriction():
    mu = gen_measure(17, 3, 5)
    for e in all_subsets(3):
        for f in all_subsets(3):
            assert mu.project(e).reflect(f) == mu.reflect(f).project(e)
            assert mu.restrict_order(e).reflect(f) == mu.reflect(f).restrict_order(e)


def test_reflection_slides_through_convolution():
    mu = gen_measure(18, 2, 4)
    nu = gen_measure(19, 2, 4)
    for f in all_subsets(2):
        lhs = mconv(mu, nu).reflect(f)
        assert lhs == mconv(mu.reflect(f), nu)
        assert lhs == mconv(mu, nu.reflect(f))


def test_order_and_degree():
    for n in (1, 2, 3):
        assert sigma0(n).order_of() == SubsetMask.full(n)
    origin = dirac(0, 0)
    assert origin.degree() == 0
    assert origin.order_of() == SubsetMask.empty(2)
    mixed = origin + dirac(1, 1)
    assert mixed.order_of() is None
    assert mixed.degree() == 2
    assert Measure.zero(2).degree() == -1


def test_jordan_decomposition():
    pos, neg = sigma0(1).jordan()
    assert pos == dirac(2)
    assert neg == dirac(1)
    assert Measure.zero(1).tv_norm() == Surd(0)


def test_norm_submultiplicative():
    for seed in range(10):
        mu = gen_measure(seed + 200, 2, 4)
        nu = gen_measure(seed + 300, 2, 4)
        assert mconv(mu, nu).tv_norm() <= mu.tv_norm() * nu.tv_norm()


def test_delta_ej_expansion():
    d = delta_ej(mask(1, 1), mask(1, 1))
    assert d == Measure(1, {(F(1),): F(1, 2), (F(-1),): F(-1, 2)})


def test_delta_ej_requires_nested_masks():
    with pytest.raises(ValueError):
        delta_ej(mask(2, 1), mask(2, 2))


def test_delta_empty_is_origin():
    n = 2
    assert delta_ej(SubsetMask.empty(n), SubsetMask.empty(n)) == dirac(0, 0)


def test_parity_basis_sums_to_unit():
    for n in (1, 2, 3, 4):
        total = Measure.zero(n)
        for j in all_subsets(n):
            total = total + delta_j(n, j)
        assert total == unit(n)


def test_projection_of_parity_basis_exhaustive():
    for n in (1, 2, 3):
        for e in all_subsets(n):
            for j in subsets_of(e):
                d = delta_ej(e, j)
                for f in subsets_of(e):
                    projected = d.project(f)
                    if j.issubset(f):
                        assert projected == delta_ej(f, j)
                    else:
                        assert projected.is_zero()


def test_sign_decomposition_resums():
    for n in (1, 2, 3):
        for seed in range(3):
            nu = gen_measure(seed + 400, n, 5)
            total = Measure.zero(n)
            for k in all_subsets(n):
                total = total + mconv(delta_j(n, k), nu)
            assert total == nu


def test_sign_density_distributes():
    mu = gen_measure(21, 2, 4)
    nu = gen_measure(22, 2, 4)
    for j in all_subsets(2):
        assert mconv(mu, nu).sign_density(j) == mconv(mu.sign_density(j), nu.sign_density(j))


def test_sign_density_exchanges_with_parity_basis():
    n = 2
    for seed in range(3):
        mu = gen_measure(seed + 500, n, 4)
        for j in all_subsets(n):
            lhs = mconv(delta_j(n, SubsetMask.empty(n)), mu.sign_density(j))
            rhs = mconv(delta_j(n, j), mu).sign_density(j)
            assert lhs == rhs


def test_trivial_sign_density():
    mu = gen_measure(23, 3, 4)
    assert mu.sign_density(SubsetMask.empty(3)) == mu


def test_reflected_sign_density():
    mu = gen_measure(24, 2, 4)
    for e in all_subsets(2):
        for j in all_subsets(2):
            lhs = mu.sign_density(j).reflect(e)
            rhs = mu.reflect(e).sign_density(j)
            if (e.bits & j.bits).bit_count() % 2:
                rhs = -rhs
            assert lhs == rhs


def test_group_average_equals_factor_product():
    from multconv.harness import gen_subgroup

    for seed in range(8):
        dim = 1 + seed % 3
        group = gen_subgroup(seed + 600, dim)
        mu = gen_measure(seed + 700, dim, 4)
        assert symmetrize(mu, GeneratingPair.make(dim, evens=group)) == group_average(mu, group)


def test_symmetrize_is_idempotent():
    for seed in range(6):
        dim = 1 + seed % 3
        pair = gen_pair(seed + 800, dim)
        mu = gen_measure(seed + 900, dim, 4)
        once = symmetrize(mu, pair)
        assert symmetrize(once, pair) == once


def test_msym_munc_via_convolution():
    for seed in range(4):
        dim = 1 + seed % 3
        mu = gen_measure(seed + 1000, dim, 4)
        assert msym(mu) == mconv(mu, sigma_sym(dim))
        assert munc(mu) == mconv(mu, sigma_unc(dim))


def test_symmetrized_unit_characterises_properness():
    # exhaustive over n = 2 generating pairs
    n = 2
    families = [frozenset(c) for c in _family_choices(n)]
    ones = dirac(1, 1)
    for evens in families:
        for odds in families:
            pair = GeneratingPair(evens, odds, n)
            sym = gamma(pair)
            rho = symmetrize(ones, pair)
            assert bool(rho) == sym.proper
            assert (rho.weight_at((F(1), F(1))).sign() > 0) == sym.proper
            if sym.proper:
                for e in all_subsets(n):
                    assert rho.is_even_under(e) == (e in sym.evens)
                    assert rho.is_odd_under(e) == (e in sym.odds)
            for e in all_subsets(n):
                if e not in sym.group:
                    reflected = rho.reflect(e)
                    assert not (set(rho.atoms) & set(reflected.atoms))


def _family_choices(n):
    members = list(all_subsets(n))
    out = []
    for bits in range(1 << len(members)):
        out.append([m for i, m in enumerate(members) if bits >> i & 1])
    return out


def test_symmetric_kills_antisymmetric():
    for seed in range(4):
        dim = 1 + seed % 3
        full = SubsetMask.full(dim)
        sym_mu = symmetrize(gen_measure(seed + 1100, dim, 4), GeneratingPair.make(dim, evens=[full]))
        asym_nu = symmetrize(gen_measure(seed + 1200, dim, 4), GeneratingPair.make(dim, odds=[full]))
        assert mconv(sym_mu, asym_nu).is_zero()


def test_even_odd_membership_via_parity_basis():
    # exhaustive over n = 2 pairs and sampled measures
    n = 2
    full = SubsetMask.full(n)
    for seed in range(3):
        for evens in _family_choices(n):
            for odds in _family_choices(n):
                pair = GeneratingPair.make(n, evens, odds)
                mu = symmetrize(gen_measure(seed + 1300, n, 4), pair)
                js = index_set(full, pair)
                for j in all_subsets(n):
                    if j not in js:
                        assert mconv(delta_j(n, j), mu).is_zero()
                in_class = all(mu.is_even_under(f) for f in pair.evens) and all(
                    mu.is_odd_under(f) for f in pair.odds
                )
                assert in_class
                if mu:
                    outside_all_zero = all(
                        mconv(delta_j(n, j), mu).is_zero() for j in all_subsets(n) if j not in js
                    )
                    assert outside_all_zero


def test_reflected_parity_convolution_sign():
    n = 2
    nu = gen_measure(31, n, 4)
    for j in all_subsets(n):
        for f in all_subsets(n):
            term = mconv(delta_j(n, j), nu)
            reflected = term.reflect(f)
            if (j.bits & f.bits).bit_count() % 2:
                assert reflected == -term
            else:
                assert reflected == term


def test_unconditional_round_trips():
    for seed in range(6):
        dim = 1 + seed % 3
        raw = gen_measure(seed + 1400, dim, 4)
        positive = Measure(dim, {tuple(abs(c) for c in pt): w for pt, w in raw.atoms.items()})
        assert unc_inverse(unc_forward(positive)) == positive
        spread = unc_forward(positive)
        assert unc_forward(unc_inverse(spread)) == spread


def test_unc_forward_examples():
    n = 2
    assert unc_forward(dirac(1, 1)) == sigma_unc(n)
    assert unc_forward(dirac(0, 0)) == dirac(0, 0)


def test_unc_forward_rejects_negative_atoms():
    with pytest.raises(ValueError):
        unc_forward(dirac(-1, 1))


def test_unc_inverse_rejects_asymmetric():
    with pytest.raises(ValueError):
        unc_inverse(dirac(1, 1))


def test_even_and_odd_for_zero_measure():
    zero = Measure.zero(2)
    for f in all_subsets(2):
        assert zero.is_even_under(f)
        assert zero.is_odd_under(f)


def test_sigma_sym_is_symmetric():
    for n in (1, 2, 3):
        assert sigma_sym(n).is_even_under(SubsetMask.full(n))
        for f in all_subsets(n):
            assert sigma_unc(n).is_even_under(f)


def test_phat_examples():
    assert phat(dirac(0, 0)).is_zero()
    for n in (1, 2, 3):
        expected = sigma0(n) if n % 2 == 0 else -sigma0(n)
        assert phat(sigma0(n)) == expected


def test_phat_detects_top_order():
    for seed in range(12):
        dim = 1 + seed % 3
        mu = gen_measure(seed + 1500, dim, 5)
        top = mu.restrict_order(SubsetMask.full(dim))
        assert phat(mu).is_zero() == top.is_zero()


def test_measure_json_round_trip():
    mu = gen_measure(41, 2, 4) * Surd.sqrt(2)
    data = mu.to_json()
    assert Measure.from_json(data) == mu
    points = [tuple(F(c) for c in entry["point"]) for entry in data["atoms"]]
    assert points == sorted(points)


def test_zero_pattern_partition():
    mu = gen_measure(42, 3, 6)
    seen = set()
    for pt in mu.atoms:
        seen.add(zero_pattern(pt))
    assert seen == set(mu.component_patterns())
