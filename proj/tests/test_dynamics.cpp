#include <doctest.h>

#include <algorithm>
#include <variant>

#include "expanso/constructions.hpp"
#include "expanso/decision.hpp"
#include "expanso/dynamics.hpp"
#include "expanso/errors.hpp"

using namespace expanso;

namespace {

finite_space discrete(std::size_t m) {
    std::vector<point_set> nb;
    for (std::size_t p = 0; p < m; ++p) nb.push_back(point_set::of(m, {p}));
    return finite_space(std::move(nb));
}

struct three_cycle {
    finite_space space = discrete(3);
    homeo f = make_homeo(space, {1, 2, 0});
    cover overlap = make_cover(space, {point_set::of(3, {0, 1}), point_set::of(3, {1, 2})});
    cover singletons = canonical_cover(space);
};

} // namespace

TEST_CASE("cover construction and refinement") {
    const finite_space d3 = discrete(3);
    const cover c = make_cover(d3, {point_set::of(3, {0, 1}), point_set::of(3, {1, 2})});
    CHECK(c.size() == 2);

    // Empty elements are dropped on ingestion.
    const cover dropped =
        make_cover(d3, {point_set(3), point_set::full(3), point_set::of(3, {1})});
    CHECK(dropped.size() == 2);

    CHECK_THROWS_AS(make_cover(d3, {point_set::of(3, {0})}), cover_gap);
    auto [chain, chain_id] = chain_space(3);
    CHECK_THROWS_AS(make_cover(chain, {point_set::of(3, {0}), point_set::full(3)}),
                    not_a_topology); // {0} is not open in the chain

    // `refines` compares element families directly, so partial families
    // (not covering the space) are fine here.
    CHECK(refines(cover{{point_set::of(3, {1}), point_set::of(3, {2})}},
                  cover{{point_set::of(3, {1, 2})}}));
    CHECK(!refines(cover{{point_set::of(3, {0, 1})}}, canonical_cover(d3)));
    CHECK(refines(c, c));                       // reflexivity
    CHECK(refines(cover{{point_set(3)}}, c));   // empty set refines anything

    CHECK(pair_covered(c, 0, 1));
    CHECK(!pair_covered(c, 0, 2));
    CHECK(pair_covered(c, 2, 2)); // x == y always lands in some element
}

TEST_CASE("orbit expansivity of a given cover") {
    three_cycle tc;
    CHECK(is_o_expansive_cover(tc.f, tc.overlap).yes);

    { // Identity on 2 discrete points with the trivial cover: trapped pair.
        const finite_space d2 = discrete(2);
        const homeo id = identity_homeo(d2);
        const decision d = is_o_expansive_cover(id, trivial_cover(d2));
        CHECK(!d.yes);
        const auto& w = std::get<witness_pair_cert>(d.cert);
        CHECK(w.x == 0);
        CHECK(w.y == 1);
        CHECK(w.period == 1);
        CHECK(check_witness_pair(id, trivial_cover(d2), w));
        // Tampered witnesses must not verify.
        witness_pair_cert bad = w;
        bad.period = 0;
        CHECK(!check_witness_pair(id, trivial_cover(d2), bad));
        witness_pair_cert diag = w;
        diag.y = diag.x;
        CHECK(!check_witness_pair(id, trivial_cover(d2), diag));
    }
    { // Indiscrete pair with the swap.
        auto [space, f] = indiscrete_example(2, {1, 0});
        const decision d = is_o_expansive_cover(f, trivial_cover(space));
        CHECK(!d.yes);
        const auto& w = std::get<witness_pair_cert>(d.cert);
        CHECK(w.x == 0);
        CHECK(w.y == 1);
        CHECK(check_witness_pair(f, trivial_cover(space), w));
    }
}

TEST_CASE("orbit oracle agrees on the frozen examples") {
    three_cycle tc;
    CHECK(o_expansive_oracle(tc.f, tc.overlap).yes);
    const finite_space d2 = discrete(2);
    CHECK(!o_expansive_oracle(identity_homeo(d2), trivial_cover(d2)).yes);
    auto [ind2, swap2] = indiscrete_example(2, {1, 0});
    CHECK(!o_expansive_oracle(swap2, trivial_cover(ind2)).yes);

    // Singleton cover on a discrete space: yes for any map.
    CHECK(o_expansive_oracle(tc.f, tc.singletons).yes);
    // One-point space with the trivial cover.
    const finite_space one = discrete(1);
    CHECK(o_expansive_oracle(identity_homeo(one), trivial_cover(one)).yes);
    CHECK(is_o_expansive_cover(identity_homeo(one), trivial_cover(one)).yes);
}

TEST_CASE("window covers") {
    three_cycle tc;
    { // N=0 reproduces the cover's own elements.
        const window_family w0 = window_cover(tc.f, tc.overlap, 0);
        CHECK(w0.radius == 0);
        std::vector<point_set> sets = w0.sets;
        std::sort(sets.begin(), sets.end());
        std::vector<point_set> expect = tc.overlap.elements;
        std::sort(expect.begin(), expect.end());
        CHECK(sets == expect);
    }
    { // N=1 under the 3-cycle: every member has at most one point.
        const window_family w1 = window_cover(tc.f, tc.overlap, 1);
        for (const point_set& s : w1.sets) CHECK(s.count() <= 1);
    }
    { // Identity map: windows are the finite intersections of elements.
        const finite_space d3 = discrete(3);
        const cover c = make_cover(d3, {point_set::of(3, {0, 1}), point_set::of(3, {1, 2})});
        const window_family w2 = window_cover(identity_homeo(d3), c, 2);
        std::vector<point_set> sets = w2.sets;
        std::sort(sets.begin(), sets.end());
        std::vector<point_set> expect = {point_set::of(3, {1}), point_set::of(3, {0, 1}),
                                         point_set::of(3, {1, 2})};
        std::sort(expect.begin(), expect.end());
        CHECK(sets == expect);
    }
}

TEST_CASE("cover-small sets") {
    auto [chain, chain_id] = chain_space(3);
    {
        const decision d = is_cover_small_decision(chain, point_set::full(3));
        CHECK(d.yes);
        CHECK(std::get<smallness_cert>(d.cert).point == 0); // X fits inside M_0 = X
        CHECK(check_smallness(chain, point_set::full(3), std::get<smallness_cert>(d.cert)));
        smallness_cert bad{2};
        CHECK(!check_smallness(chain, point_set::full(3), bad));
    }
    const finite_space d3 = discrete(3);
    CHECK(!is_cover_small_decision(d3, point_set::of(3, {0, 1})).yes);
    CHECK(is_cover_small_decision(d3, point_set::of(3, {1})).yes);
    CHECK(is_cover_small_decision(d3, point_set(3)).yes);
    CHECK(cover_small(chain, point_set::full(3)));
    CHECK(!cover_small(d3, point_set::of(3, {0, 1})));

    // Oracle agreement on all subsets of the three basic spaces.
    auto [ind, ind_id] = indiscrete_example(3, {0, 1, 2});
    for (const finite_space& space : {chain, d3, ind}) {
        for (std::uint64_t mask = 0; mask < 8; ++mask) {
            point_set s(3);
            for (std::size_t p = 0; p < 3; ++p)
                if ((mask >> p) & 1) s.insert(p);
            CHECK(is_cover_small_decision(space, s).yes == is_cover_small_oracle(space, s).yes);
        }
    }
}

TEST_CASE("refinement expansivity of a given cover") {
    { // Chain with the trivial cover: yes at radius 0.
        auto [chain, f] = chain_space(3);
        const decision d = is_r_expansive_cover(f, trivial_cover(chain));
        CHECK(d.yes);
        CHECK(std::get<uniform_radius_cert>(d.cert).radius == 0);
        CHECK(check_uniform_radius(f, trivial_cover(chain), canonical_cover(chain),
                                   std::get<uniform_radius_cert>(d.cert)));
    }
    { // Indiscrete: yes at radius 0.
        auto [space, f] = indiscrete_example(3, {1, 2, 0});
        const decision d = is_r_expansive_cover(f, trivial_cover(space));
        CHECK(d.yes);
        CHECK(std::get<uniform_radius_cert>(d.cert).radius == 0);
    }
    { // Discrete pair, identity, trivial cover: no, with a verifying cycle.
        const finite_space d2 = discrete(2);
        const homeo id = identity_homeo(d2);
        const decision d = is_r_expansive_cover(id, trivial_cover(d2));
        CHECK(!d.yes);
        const auto& cyc = std::get<family_cycle_cert>(d.cert);
        CHECK(check_family_cycle(id, trivial_cover(d2), canonical_cover(d2), cyc));
        family_cycle_cert bad = cyc;
        bad.repeat_of = bad.states.size(); // out of range
        CHECK(!check_family_cycle(id, trivial_cover(d2), canonical_cover(d2), bad));
    }
    { // Minimality: radius 1 certificates fail at radius 0.
        three_cycle tc;
        const decision d = is_r_expansive_cover(tc.f, tc.overlap);
        CHECK(d.yes);
        const auto radius = std::get<uniform_radius_cert>(d.cert).radius;
        CHECK(radius == 1);
        CHECK(check_uniform_radius(tc.f, tc.overlap, tc.singletons,
                                   uniform_radius_cert{radius}));
        CHECK(!check_uniform_radius(tc.f, tc.overlap, tc.singletons,
                                    uniform_radius_cert{radius + 1})); // not minimal
    }
}

TEST_CASE("refinement oracle agrees on the frozen examples") {
    auto [chain, chain_id] = chain_space(3);
    CHECK(r_expansive_oracle(chain_id, trivial_cover(chain)).yes);
    auto [ind, ind_f] = indiscrete_example(3, {1, 2, 0});
    CHECK(r_expansive_oracle(ind_f, trivial_cover(ind)).yes);
    const finite_space d2 = discrete(2);
    CHECK(!r_expansive_oracle(identity_homeo(d2), trivial_cover(d2)).yes);
    CHECK(r_expansive_oracle(identity_homeo(d2), canonical_cover(d2)).yes);
    const finite_space one = discrete(1);
    CHECK(r_expansive_oracle(identity_homeo(one), trivial_cover(one)).yes);
}

TEST_CASE("uniform refinement radius") {
    three_cycle tc;
    {
        const uniform_n_result u = uniform_refinement_n(tc.f, tc.overlap, tc.singletons);
        CHECK(u.n.has_value());
        CHECK(*u.n == 1);
    }
    { // Any cover uniformizes against itself at N = 0.
        const uniform_n_result u = uniform_refinement_n(tc.f, tc.overlap, tc.overlap);
        CHECK(u.n.has_value());
        CHECK(*u.n == 0);
    }
    { // Trivial cover under the identity never refines the singletons.
        const finite_space d2 = discrete(2);
        const homeo id = identity_homeo(d2);
        const uniform_n_result u = uniform_refinement_n(id, trivial_cover(d2),
                                                        canonical_cover(d2));
        CHECK(!u.n.has_value());
        const auto& cyc = std::get<family_cycle_cert>(u.detail.cert);
        CHECK(check_family_cycle(id, trivial_cover(d2), canonical_cover(d2), cyc));
    }
}

TEST_CASE("existence deciders") {
    const finite_space d4 = discrete(4);
    CHECK(decide_orbit_expansive(make_homeo(d4, {1, 2, 3, 0})).yes);
    CHECK(decide_orbit_expansive(identity_homeo(d4)).yes);

    auto [chain, chain_id] = chain_space(3);
    CHECK(!decide_orbit_expansive(chain_id).yes);
    auto [ind, ind_f] = indiscrete_example(2, {1, 0});
    CHECK(!decide_orbit_expansive(ind_f).yes);

    CHECK(decide_refinement_expansive(chain_id).yes);
    CHECK(decide_refinement_expansive(ind_f).yes);
    CHECK(decide_refinement_expansive(identity_homeo(d4)).yes);

    // Oracle agreement.
    CHECK(decide_orbit_expansive_oracle(chain_id).yes == false);
    CHECK(decide_refinement_expansive_oracle(chain_id).yes == true);
}

TEST_CASE("smallest o-expansive cover size") {
    three_cycle tc;
    CHECK(min_o_expansive_cover_size(tc.f, 3) == 2);
    const finite_space d2 = discrete(2);
    CHECK(min_o_expansive_cover_size(identity_homeo(d2), 3) == 2);
    auto [chain, chain_id] = chain_space(3);
    CHECK(!min_o_expansive_cover_size(chain_id, 4).has_value());
    CHECK_THROWS_AS(min_o_expansive_cover_size(tc.f, 3, 1), search_budget_exceeded);
}

TEST_CASE("diagonal formulation") {
    three_cycle tc;
    const point_set d = diagonal_from_cover(tc.space, tc.overlap);
    // D = {0,1}^2 ∪ {1,2}^2 as a subset of the 9-point product.
    CHECK(d.universe() == 9);
    CHECK(d.count() == 7); // 4 + 4 - 1 (the shared square (1,1))
    CHECK(is_expansive_diagonal(tc.f, d).yes);

    // The full product never separates anything on >1 point.
    CHECK(!is_expansive_diagonal(tc.f, point_set::full(9)).yes);

    { // The exact diagonal on a discrete space separates immediately.
        point_set diag(9);
        for (std::size_t p = 0; p < 3; ++p) diag.insert(p * 3 + p);
        CHECK(is_expansive_diagonal(tc.f, diag).yes);
    }

    // Round trip through a cover keeps the verdict.
    const cover back = cover_from_diagonal(tc.space, d);
    CHECK(is_o_expansive_cover(tc.f, back).yes == is_expansive_diagonal(tc.f, d).yes);

    // Sets that are not diagonal neighborhoods are rejected.
    CHECK_THROWS_AS(is_expansive_diagonal(tc.f, point_set(9)), not_a_diagonal_nbhd);
    auto [chain, chain_id] = chain_space(3);
    point_set not_open(9);
    for (std::size_t p = 0; p < 3; ++p) not_open.insert(p * 3 + p);
    CHECK_THROWS_AS(is_expansive_diagonal(chain_id, not_open), not_a_diagonal_nbhd);
}

TEST_CASE("periodic point counts and the cover-size bound") {
    three_cycle tc;
    CHECK(count_periodic(tc.f, 3) == 3);
    CHECK(count_periodic(tc.f, 1) == 0);
    CHECK(check_periodic_bound(tc.f, tc.overlap, 3)); // 3 <= 2^3
    CHECK(check_periodic_bound(tc.f, tc.overlap, 1)); // 0 <= 2

    const finite_space d2 = discrete(2);
    const homeo id2 = identity_homeo(d2);
    CHECK(count_periodic(id2, 1) == 2);
    CHECK(check_periodic_bound(id2, canonical_cover(d2), 1)); // 2 <= 2, tight

    CHECK_THROWS_AS(check_periodic_bound(id2, trivial_cover(d2), 1), cover_not_expansive);
}

TEST_CASE("powers of the map") {
    three_cycle tc;
    { // Singleton cover, r=2: the power cover is again made of singletons.
        const cover pc = power_cover(tc.f, tc.singletons, 2);
        for (const point_set& el : pc.elements) CHECK(el.count() == 1);
        CHECK(is_o_expansive_cover(homeo_power(tc.f, 2), pc).yes);
    }
    { // r = 3 turns the 3-cycle into the identity; the power cover of the
      // overlap cover is o-expansive for it iff all members are small.
        const cover pc = power_cover(tc.f, tc.overlap, 3);
        const homeo id = homeo_power(tc.f, 3);
        CHECK(is_o_expansive_cover(id, pc).yes);
        for (const point_set& el : pc.elements) CHECK(el.count() <= 1);
    }
    for (long long r : {-1LL, 2LL, 3LL}) {
        CHECK(check_power_equivalence(tc.f, r));
        auto [chain, chain_id] = chain_space(3);
        CHECK(check_power_equivalence(chain_id, r));
    }
}

TEST_CASE("restriction to invariant subsets") {
    three_cycle tc;
    { // Carrier = X is the same system.
        const restriction r = restrict(tc.f, point_set::full(3));
        CHECK(r.map.space == tc.space);
        CHECK(r.map.perm == tc.f.perm);
    }
    { // Identity on the chain restricted to {1,2}.
        auto [chain, chain_id] = chain_space(3);
        const restriction r = restrict(chain_id, point_set::of(3, {1, 2}));
        CHECK(r.map.space.points() == 2);
        CHECK(!r.map.space.is_discrete());
        const cover rc = restrict_cover(r, trivial_cover(chain));
        CHECK(is_r_expansive_cover(r.map, rc).yes);
    }
    CHECK_THROWS_AS(restrict(tc.f, point_set::of(3, {0})), not_invariant);
}
