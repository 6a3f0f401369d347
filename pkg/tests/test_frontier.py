import itertools

import pytest

from troprays.errors import (
    NoEntrance,
    NotRegular,
    VerificationFailed,
    WitnessNotInStratum,
)
from troprays.frontier import FrontierPair, entrance_ray, regularity_bounds
from troprays.instances import WALL, wall_family, wall_scenario
from troprays.quadspace import QuadraticPair, Vector, vec
from troprays.rays import Ray, RayInterval, ray
from troprays.sampling import Sampler
from troprays.semifield import ONE, ZERO, t
from troprays.strata import BasicFunction, sign_vector_at


@pytest.fixture(scope="module")
def m1_frontier(m1, m1_fam):
    lt = sign_vector_at(m1, m1_fam, ray(0, -5))
    eq = sign_vector_at(m1, m1_fam, ray(0, 0))
    return FrontierPair(m1, m1_fam, lt, eq)


@pytest.fixture(scope="module")
def wall_frontier():
    fam = wall_family()
    w, w_prime, u = wall_scenario()
    t_vec = sign_vector_at(WALL, fam, w)
    t_prime = sign_vector_at(WALL, fam, u)
    return FrontierPair(WALL, fam, t_vec, t_prime)


def test_entrance_worked(m1_frontier):
    z, lam = m1_frontier.entrance_data(ray(0, -5), ray(0, 0))
    assert z == ray(0, 0)
    assert lam == t(0)


def test_entrance_degenerate_and_intermediate(m1, m1_fam, m1_frontier):
    # W already in T': WitnessNotInStratum (W must satisfy T)
    with pytest.raises(WitnessNotInStratum):
        m1_frontier.entrance_data(ray(0, 0), ray(0, 1))
    # interval passing through a third stratum
    gt = sign_vector_at(m1, m1_fam, ray("-inf", 0))
    fp = FrontierPair(m1, m1_fam, m1_frontier.t, gt)
    with pytest.raises(NoEntrance):
        fp.entrance_data(ray(0, -5), ray("-inf", 0))
    # case2 direction: from (=) into (>) the T' piece is open
    fp2 = FrontierPair(m1, m1_fam, m1_frontier.t_prime, gt)
    with pytest.raises(NoEntrance):
        fp2.entrance_data(ray(0, 0), ray("-inf", 0))


def test_entrance_module_function(m1, m1_fam, m1_frontier):
    z = entrance_ray(m1, m1_fam, m1_frontier.t, m1_frontier.t_prime,
                     ray(0, -5), ray(0, 0))
    assert z == ray(0, 0)


def test_sector_member_cases(m1_frontier):
    assert m1_frontier.sector_member(ray(0, -5), ray(0, 0))
    assert not m1_frontier.sector_member(ray(0, -5), ray(0, -1))  # Z in T
    # memoization keeps answers stable
    assert m1_frontier.sector_member(ray(0, -5), ray(0, 0))


def test_sector_member_rejects_through_stratum(wall_frontier):
    w, w_prime, u = wall_scenario()
    z0 = wall_frontier.entrance_ray(w, u)
    z1 = wall_frontier.entrance_ray(w_prime, z0)
    assert z1 != z0
    # from w', z0 is reachable only through earlier boundary rays
    assert not wall_frontier.sector_member(w_prime, z0)
    assert wall_frontier.sector_member(w_prime, z1)


def test_is_junction_and_butterfly_predicates(wall_frontier):
    w, w_prime, u = wall_scenario()
    z0 = wall_frontier.entrance_ray(w, u)
    z1 = wall_frontier.entrance_ray(w_prime, z0)
    assert wall_frontier.is_junction(w, w, z0)  # degenerate pair is allowed
    assert not wall_frontier.is_junction(w, w_prime, z0)
    assert wall_frontier.is_junction(w, w_prime, z1)
    assert not wall_frontier.is_butterfly(w, w_prime, z1, z1)  # Z = Z'


def test_regularity_bounds_self_case(m1):
    z = vec(0, 0)
    anchors = [ray(0, "-inf")]
    c, d = regularity_bounds(m1, anchors, z, z, z)
    assert c == ONE and d == ONE


def test_regularity_bounds_m1_explicit(m1):
    z, w, w_prime = vec(0, 0), Vector.unit(2, 0), Vector.unit(2, 1)
    anchors = [ray(0, "-inf")]
    c, d = regularity_bounds(m1, anchors, z, w, w_prime)
    # q(z) = t^2, q(w') = e, b(z,w') = t^2, b(w,w') = t^2, b(z,y) = t^2, b(w',y) = t^2
    assert c == min(t(1), t(0), t(0), t(0))
    # verify the postcondition on the grid corners
    for mu in (ZERO, d):
        for lam in (ZERO, c):
            pert = z + mu * w + lam * w_prime
            assert m1.eval_q(pert) == m1.eval_q(z)
            for y in anchors:
                assert m1.eval_b(pert, y.base) == m1.eval_b(z, y.base)


def test_regularity_bounds_not_regular(m1):
    pair = QuadraticPair.from_rows(
        ["0", "0", "0"],
        [["0", "2", "-inf"], ["2", "0", "0"], ["-inf", "0", "0"]])
    z = Vector.unit(3, 2)  # b(z, e1) = 0
    with pytest.raises(NotRegular):
        regularity_bounds(pair, [Ray(Vector.unit(3, 0))], z, z, z)


def test_junction_process_m1_worked(m1_frontier):
    report = m1_frontier.junction_process(ray(0, -5), ray(0, -3), ray(0, 0))
    assert report.outcome == "junction"
    assert report.ray == ray(0, 0)
    assert report.steps == 0
    assert report.stop_criterion_held


def test_junction_process_w_equals_wprime(m1_frontier):
    report = m1_frontier.junction_process(ray(0, -5), ray(0, -5), ray(0, 0))
    assert report.outcome == "junction" and report.steps == 0


def test_junction_process_wall_multistep(wall_frontier):
    w, w_prime, u = wall_scenario()
    report = wall_frontier.junction_process(w, w_prime, u, max_iter=16)
    assert report.outcome == "junction"
    assert report.steps == 1
    assert report.stop_criterion_held
    assert wall_frontier.is_junction(w, w_prime, report.ray)
    # step-vector identity at every step
    sigma, tau = ZERO, ZERO
    z0 = report.trace[0].vector
    for step in report.trace:
        if step.k == 0:
            continue
        if step.k % 2:
            tau = max(tau, step.lam)
        else:
            sigma = max(sigma, step.lam)
        expect = z0 + sigma * w.base + tau * w_prime.base
        assert step.vector == expect
        assert Ray(step.vector) == step.ray
    # lambda parity chains are monotone
    evens = [s.lam for s in report.trace if s.k % 2 == 0]
    odds = [s.lam for s in report.trace if s.k % 2 == 1]
    assert all(a <= b for a, b in zip(evens, evens[1:]))
    assert all(a <= b for a, b in zip(odds, odds[1:]))


def test_junction_budget_exhaustion_recovers_via_limit(wall_frontier):
    """With a unit budget the one-step scenario exhausts before seeing the
    repeat; the partial-maxima candidate is then verified exactly and names
    the same junction the full run finds."""
    w, w_prime, u = wall_scenario()
    full = wall_frontier.junction_process(w, w_prime, u, max_iter=16)
    report = wall_frontier.junction_process(w, w_prime, u, max_iter=1)
    assert report.outcome == "limit_junction"
    assert report.steps == 1
    assert report.ray == full.ray
    assert wall_frontier.is_junction(w, w_prime, report.ray)
    assert len(report.trace) == 2
    assert report.tau == report.trace[1].lam


def test_junction_propagates_no_entrance(m1, m1_fam):
    # T and T'' = (>) are not neighbors: the very first entrance fails
    lt = sign_vector_at(m1, m1_fam, ray(0, -5))
    gt = sign_vector_at(m1, m1_fam, ray("-inf", 0))
    fp = FrontierPair(m1, m1_fam, lt, gt)
    with pytest.raises(NoEntrance):
        fp.junction_process(ray(0, -5), ray(0, -3), ray("-inf", 0))


def test_junction_random_scenarios_verify():
    sampler = Sampler(51)
    verified = 0
    while verified < 25:
        pair = sampler.anisotropic_pair(3, balanced=True)
        fam = (BasicFunction.cs(Ray(Vector.unit(3, 0))),
               BasicFunction.cs(Ray(Vector.unit(3, 1))))
        rays = [Ray(sampler.vector(3, p_zero=0.3)) for _ in range(10)]
        groups = {}
        for x in rays:
            groups.setdefault(str(sign_vector_at(pair, fam, x)), []).append(x)
        if "<" not in groups or "=" not in groups or len(groups["<"]) < 2:
            continue
        t_vec = sign_vector_at(pair, fam, groups["<"][0])
        t_prime = sign_vector_at(pair, fam, groups["="][0])
        fp = FrontierPair(pair, fam, t_vec, t_prime)
        w, w_prime = groups["<"][0], groups["<"][1]
        u = groups["="][0]
        report = fp.junction_process(w, w_prime, u, max_iter=32)
        if report.outcome == "junction":
            verified += 1
            assert fp.is_junction(w, w_prime, report.ray)
            assert report.stop_criterion_held


def test_construct_butterfly_wall(wall_frontier):
    w, w_prime, u = wall_scenario()
    bf = wall_frontier.construct_butterfly(w, w_prime, u)
    assert bf.z != bf.z1 and bf.w != bf.w1
    assert wall_frontier.is_butterfly(bf.w, bf.w1, bf.z, bf.z1)


def test_butterfly_closure_property(wall_frontier):
    """Interior rays of [W, W1] and [Z, Z1] keep the sector property."""
    w, w_prime, u = wall_scenario()
    bf = wall_frontier.construct_butterfly(w, w_prime, u)
    w_interval = RayInterval(bf.w, bf.w1)
    z_interval = RayInterval(bf.z, bf.z1)
    sampler = Sampler(3)
    for _ in range(25):
        w_mid = w_interval.pi(sampler.value())
        z_mid = z_interval.pi(sampler.value())
        assert wall_frontier.sector_member(w_mid, z_mid)


def test_butterfly_impossible_in_two_dims(m1_frontier):
    with pytest.raises(VerificationFailed):
        m1_frontier.construct_butterfly(ray(0, -5), ray(0, -3), ray(0, 0))


def test_butterfly_degenerate_sources_rejected(wall_frontier):
    w, _, u = wall_scenario()
    with pytest.raises(VerificationFailed):
        wall_frontier.construct_butterfly(w, w, u)


def test_butterfly_requires_regular_target(m1, m1_fam):
    pair = QuadraticPair.from_rows(
        ["0", "0", "0"],
        [["0", "2", "-inf"], ["2", "0", "0"], ["-inf", "0", "0"]])
    y1, y2 = Ray(Vector.unit(3, 0)), Ray(Vector.unit(3, 1))
    fam = (BasicFunction.cs(y1), BasicFunction.cs(y2))
    w = Ray(vec(0, -5, "-inf"))
    w2 = Ray(vec(0, -3, "-inf"))
    u = Ray(Vector.unit(3, 2))  # b(u, y1) = 0: not regular
    t_vec = sign_vector_at(pair, fam, w)
    t_prime = sign_vector_at(pair, fam, u)
    fp = FrontierPair(pair, fam, t_vec, t_prime)
    with pytest.raises(NotRegular):
        fp.construct_butterfly(w, w2, u)


def test_certify_requires_case1(m1, m1_fam):
    fp = FrontierPair.certify(m1, m1_fam, ray(0, -5), ray(0, 0))
    assert str(fp.t) == "<" and str(fp.t_prime) == "="
    with pytest.raises(VerificationFailed):
        FrontierPair.certify(m1, m1_fam, ray(0, 0), ray("-inf", 0))


def galois_pools(frontier):
    w, w_prime, u = wall_scenario()
    z0 = frontier.entrance_ray(w, u)
    z1 = frontier.entrance_ray(w_prime, z0)
    u_pool = [w, w_prime, Ray(vec(0, -2, "-inf")), Ray(vec(0, -5, -5)),
              Ray(vec(0, -4, 0)), Ray(vec(0, -9, -1))]
    p_pool = [z0, z1, u, Ray(vec(-4, -4, 0)), Ray(vec(-1, -3, 0)),
              Ray(vec(-2, -2, 0))]
    u_pool = [x for x in u_pool
              if sign_vector_at(frontier.pair, frontier.family, x) == frontier.t]
    p_pool = [x for x in p_pool
              if sign_vector_at(frontier.pair, frontier.family, x) == frontier.t_prime]
    return u_pool, p_pool


def test_galois_definition_and_empty(wall_frontier):
    u_pool, p_pool = galois_pools(wall_frontier)
    w = u_pool[0]
    direct = tuple(z for z in p_pool if wall_frontier.sector_member(w, z))
    assert wall_frontier.galois_L([w], u_pool, p_pool) == direct
    assert wall_frontier.galois_L([], u_pool, p_pool) == tuple(p_pool)
    assert wall_frontier.galois_S([], u_pool, p_pool) == tuple(u_pool)
    with pytest.raises(ValueError):
        wall_frontier.galois_L([Ray(vec(0, -7, "-inf"))], u_pool, p_pool)


def test_galois_saturation_exhaustive(wall_frontier):
    u_pool, p_pool = galois_pools(wall_frontier)
    assert len(u_pool) >= 3 and len(p_pool) >= 3
    for r in range(len(u_pool) + 1):
        for subset in itertools.combinations(u_pool, r):
            l_u = wall_frontier.galois_L(subset, u_pool, p_pool)
            s_l = wall_frontier.galois_S(l_u, u_pool, p_pool)
            assert wall_frontier.galois_L(s_l, u_pool, p_pool) == l_u
    for r in range(len(p_pool) + 1):
        for subset in itertools.combinations(p_pool, r):
            s_p = wall_frontier.galois_S(subset, u_pool, p_pool)
            l_s = wall_frontier.galois_L(s_p, u_pool, p_pool)
            assert wall_frontier.galois_S(l_s, u_pool, p_pool) == s_p


def test_galois_antitone_and_extensive(wall_frontier):
    u_pool, p_pool = galois_pools(wall_frontier)
    small = u_pool[:1]
    large = u_pool[:3]
    l_small = set(wall_frontier.galois_L(small, u_pool, p_pool))
    l_large = set(wall_frontier.galois_L(large, u_pool, p_pool))
    assert l_large <= l_small
    # extensive compositions: U inside SL(U), P inside LS(P)
    for r in (1, 2, 3):
        subset = u_pool[:r]
        sl = wall_frontier.galois_S(
            wall_frontier.galois_L(subset, u_pool, p_pool), u_pool, p_pool)
        assert set(subset) <= set(sl)
        subset_p = p_pool[:r]
        ls = wall_frontier.galois_L(
            wall_frontier.galois_S(subset_p, u_pool, p_pool), u_pool, p_pool)
        assert set(subset_p) <= set(ls)


def test_gorge_report_shape_with_stubbed_boundary(wall_frontier, monkeypatch):
    """Contract test of the "no stop within N" report.

    Searches over thousands of rational scenarios found no organically
    non-stopping process (every run repeats a ray within two steps), so the
    boundary oracle is stubbed to keep receding: each entrance comes one unit
    later than the last.  The report must then be a gorge with strictly
    increasing parity chains and no claimed junction ray.
    """
    w, w_prime, u = wall_scenario()
    calls = {"n": 0}
    original = wall_frontier.entrance_data

    def receding_entrance(src, target):
        calls["n"] += 1
        if calls["n"] == 1:
            return original(src, target)
        return target, t(-calls["n"])  # entrance parameter mu: lambda = t^n

    monkeypatch.setattr(wall_frontier, "entrance_data", receding_entrance)
    monkeypatch.setattr(
        wall_frontier.__class__, "is_junction", lambda self, *a: False)
    report = wall_frontier.junction_process(w, w_prime, u, max_iter=7)
    monkeypatch.undo()
    assert report.outcome == "gorge"
    assert report.ray is None
    assert report.steps == 7
    evens = [s.lam for s in report.trace if s.k % 2 == 0]
    odds = [s.lam for s in report.trace if s.k % 2 == 1]
    assert all(a < b for a, b in zip(evens, evens[1:]))
    assert all(a < b for a, b in zip(odds, odds[1:]))
    assert report.sigma == evens[-1] and report.tau == odds[-1]
