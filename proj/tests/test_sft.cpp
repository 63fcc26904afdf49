#include <doctest.h>

#include <algorithm>
#include <variant>

#include "expanso/errors.hpp"
#include "expanso/sft.hpp"

using namespace expanso;

namespace {

sft full_shift(std::size_t a) {
    std::vector<std::vector<int>> m(a, std::vector<int>(a, 1));
    return sft_new(m);
}

sft golden_mean() { return sft_new({{1, 1}, {1, 0}}); }

symbol_cover separated(const sft& shift) {
    std::vector<point_set> els;
    for (std::size_t a = shift.alive.first(); a < shift.alphabet_size;
         a = shift.alive.next(a))
        els.push_back(point_set::of(shift.alphabet_size, {a}));
    return make_symbol_cover(shift, std::move(els));
}

} // namespace

TEST_CASE("shift construction and trimming") {
    const sft f2 = full_shift(2);
    CHECK(f2.alphabet_size == 2);
    CHECK(f2.alive == point_set::full(2));
    CHECK(f2.removed.empty());
    CHECK(f2.edge(0, 1));

    const sft gm = golden_mean();
    CHECK(gm.alive == point_set::full(2));
    CHECK(!gm.edge(1, 1));

    { // Symbol 1 has no successor at all and gets trimmed away.
        const sft s = sft_new({{1, 1}, {0, 0}});
        CHECK(s.removed == std::vector<std::size_t>{1});
        CHECK(s.alive == point_set::of(2, {0}));
    }
    { // Symbol 2 has successors but no incoming edge survives with it.
        const sft s = sft_new({{1, 1, 0}, {1, 1, 0}, {0, 1, 0}});
        CHECK(s.removed == std::vector<std::size_t>{2});
        CHECK(s.alive == point_set::of(3, {0, 1}));
    }
    { // A single self-loop is the smallest shift.
        const sft s = sft_new({{1}});
        CHECK(s.alive == point_set::of(1, {0}));
    }

    CHECK_THROWS_AS(sft_new({{0, 1}, {0, 0}}), empty_shift); // nilpotent
    CHECK_THROWS_AS(sft_new({}), empty_shift);
    CHECK_THROWS_AS(sft_new({{1, 1}, {1}}), bad_argument);   // ragged
    CHECK_THROWS_AS(sft_new({{2}}), bad_argument);           // entry not 0/1
}

TEST_CASE("cylinder covers over symbol sets") {
    const sft gm = golden_mean();
    const symbol_cover sep = separated(gm);
    CHECK(sep.size() == 2);

    // Gaps and dead/unknown symbols are rejected.
    CHECK_THROWS_AS(make_symbol_cover(gm, {point_set::of(2, {0})}), cover_gap);
    const sft pruned = sft_new({{1, 1}, {0, 0}}); // alive = {0}
    CHECK_THROWS_AS(
        make_symbol_cover(pruned, {point_set::of(2, {0}), point_set::of(2, {1})}),
        bad_argument);
    CHECK_THROWS_AS(make_symbol_cover(gm, {point_set::full(2), point_set(2)}),
                    bad_argument); // empty element
}

TEST_CASE("higher-block recoding") {
    const sft f2 = full_shift(2);
    { // L = 1 is the identity recoding.
        const higher_block_result hb = higher_block(f2, 1);
        CHECK(hb.shift.alphabet_size == 2);
        CHECK(hb.words == std::vector<std::vector<std::size_t>>{{0}, {1}});
    }
    { // L = 2 on the full 2-shift: 4 words, all overlaps allowed.
        const higher_block_result hb = higher_block(f2, 2);
        CHECK(hb.shift.alphabet_size == 4);
        std::size_t edges = 0;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) edges += hb.shift.edge(a, b);
        CHECK(edges == 8); // ab -> bc
    }
    { // L = 2 on the golden-mean shift: words 00, 01, 10.
        const higher_block_result hb = higher_block(golden_mean(), 2);
        CHECK(hb.shift.alphabet_size == 3);
        std::vector<std::vector<std::size_t>> words = hb.words;
        std::sort(words.begin(), words.end());
        CHECK(words == std::vector<std::vector<std::size_t>>{{0, 0}, {0, 1}, {1, 0}});
    }
    { // Lifting the separated cover through L=2 groups words by head.
        const higher_block_result hb = higher_block(golden_mean(), 2);
        const symbol_cover lifted = lift_cover(hb, separated(golden_mean()));
        REQUIRE(lifted.size() == 2);
        // Element k collects the recoded symbols whose word starts with k.
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t s = lifted.elements[k].first(); s < hb.shift.alphabet_size;
                 s = lifted.elements[k].next(s))
                CHECK(hb.words[s][0] == k);
        CHECK(lifted.elements[0].count() == 2); // 00, 01
        CHECK(lifted.elements[1].count() == 1); // 10
    }
}

TEST_CASE("orbit expansivity of cylinder covers") {
    const sft f2 = full_shift(2);
    CHECK(is_o_expansive_symbol_cover(f2, separated(f2)).yes);
    {
        const symbol_cover all = make_symbol_cover(f2, {point_set::full(2)});
        const sft_decision d = is_o_expansive_symbol_cover(f2, all);
        CHECK(!d.yes);
        const auto& w = std::get<pair_lasso_cert>(d.cert);
        CHECK(w.periodic());
        CHECK(check_pair_lasso(f2, all, w));
        // Tampering breaks verification.
        pair_lasso_cert equal = w;
        for (auto& [a, b] : equal.left_cycle) b = a;
        for (auto& [a, b] : equal.core) b = a;
        for (auto& [a, b] : equal.right_cycle) b = a;
        CHECK(!check_pair_lasso(f2, all, equal));
    }
    { // Overlapping 3-symbol cover: (0,1) stay jointly covered forever.
        const sft f3 = full_shift(3);
        const symbol_cover c = make_symbol_cover(
            f3, {point_set::of(3, {0, 1}), point_set::of(3, {1, 2})});
        const sft_decision d = is_o_expansive_symbol_cover(f3, c);
        CHECK(!d.yes);
        const auto& w = std::get<pair_lasso_cert>(d.cert);
        CHECK(w.periodic());
        CHECK(check_pair_lasso(f3, c, w));
    }
    const sft gm = golden_mean();
    CHECK(is_o_expansive_symbol_cover(gm, separated(gm)).yes);
    CHECK(!is_o_expansive_symbol_cover(
               gm, make_symbol_cover(gm, {point_set::full(2)}))
               .yes);
    { // Period-2 shift: separated cover is expansive.
        const sft two = sft_new({{0, 1}, {1, 0}});
        CHECK(is_o_expansive_symbol_cover(two, separated(two)).yes);
    }
}

TEST_CASE("a non-expansive cover whose only witnesses are eventually periodic") {
    // Transitions 0->{0,1}, 1->{2}, 2->{2}; cover {0,1}, {1,2}. The pair
    // automaton keeps (0,0), (0,1)->(1,2)->(2,2) alive, but no
    // off-diagonal node lies on a cycle, so the witness needs a core.
    const sft s = sft_new({{1, 1, 0}, {0, 0, 1}, {0, 0, 1}});
    const symbol_cover c =
        make_symbol_cover(s, {point_set::of(3, {0, 1}), point_set::of(3, {1, 2})});
    const sft_decision d = is_o_expansive_symbol_cover(s, c);
    CHECK(!d.yes);
    const auto& w = std::get<pair_lasso_cert>(d.cert);
    CHECK(!w.periodic());
    CHECK(!w.core.empty());
    CHECK(check_pair_lasso(s, c, w));
}

TEST_CASE("pair-automaton survivors") {
    const sft f2 = full_shift(2);
    { // Trivial cover: all four pairs survive.
        const point_set nodes =
            trimmed_pair_nodes(f2, make_symbol_cover(f2, {point_set::full(2)}));
        CHECK(nodes.count() == 4);
    }
    { // Separated cover: only the diagonal survives.
        const point_set nodes = trimmed_pair_nodes(f2, separated(f2));
        CHECK(nodes == point_set::of(4, {0, 3}));
    }
    { // Golden mean, separated: diagonal pairs (0,0) and (1,1); (1,1) has
      // no self-transition but routes through (0,0).
        const sft gm = golden_mean();
        const point_set nodes = trimmed_pair_nodes(gm, separated(gm));
        CHECK(nodes == point_set::of(4, {0, 3}));
    }
}

TEST_CASE("periodic point counts") {
    const sft gm = golden_mean();
    CHECK(periodic_count(gm, 1) == 1);
    CHECK(periodic_count(gm, 2) == 3);
    CHECK(periodic_count(gm, 3) == 4);
    CHECK(periodic_count(gm, 4) == 7);

    const sft f2 = full_shift(2);
    for (std::size_t n = 1; n <= 10; ++n)
        CHECK(periodic_count(f2, n) == big_int(1) << n);
    CHECK(periodic_count(f2, 200) == big_int(1) << 200); // exact, no overflow

    // Bound check: 2^n <= 2^n is tight for the separated cover.
    CHECK(check_sft_periodic_bound(f2, separated(f2), 10));
    CHECK(check_sft_periodic_bound(gm, separated(gm), 6));
    CHECK_THROWS_AS(
        check_sft_periodic_bound(f2, make_symbol_cover(f2, {point_set::full(2)}), 3),
        cover_not_expansive);
}

TEST_CASE("covers of the shift with a doubled fixed point") {
    const sft f2 = full_shift(2);
    { // Separated cover with {0} designated last: expansive.
        const symbol_cover good =
            make_symbol_cover(f2, {point_set::of(2, {1}), point_set::of(2, {0})});
        CHECK(check_duplicated_shift_cover(f2, 0, good).yes);
    }
    { // Designated element {0,1} keeps the whole shift glued to the copy.
        const symbol_cover bad = make_symbol_cover(
            f2, {point_set::of(2, {0}), point_set::of(2, {1}), point_set::full(2)});
        const sft_decision d = check_duplicated_shift_cover(f2, 0, bad);
        CHECK(!d.yes);
        const auto& w = std::get<dup_point_cert>(d.cert);
        CHECK(w.left_cycle == std::vector<std::size_t>{0});
        CHECK(w.core == std::vector<std::size_t>{1});
        CHECK(w.right_cycle == std::vector<std::size_t>{0});
        CHECK(check_dup_point(f2, 0, bad, w));
        dup_point_cert fixed_only = w;
        fixed_only.core = {0}; // never differs from the fixed point
        CHECK(!check_dup_point(f2, 0, bad, fixed_only));
        dup_point_cert escapes = w;
        escapes.core = {1, 1};
        CHECK(check_dup_point(f2, 0, bad, escapes)); // still valid: stays in {0,1}
    }
    const sft gm = golden_mean();
    { // Golden mean with designated {0}: the induced sub-shift is just 0^∞.
        const symbol_cover good =
            make_symbol_cover(gm, {point_set::of(2, {1}), point_set::of(2, {0})});
        CHECK(check_duplicated_shift_cover(gm, 0, good).yes);
    }
    { // Trivial designated element glues 10-periodic points to the copy.
        const symbol_cover bad = make_symbol_cover(gm, {point_set::full(2)});
        const sft_decision d = check_duplicated_shift_cover(gm, 0, bad);
        CHECK(!d.yes);
        CHECK(check_dup_point(gm, 0, bad, std::get<dup_point_cert>(d.cert)));
    }
    { // One self-loop: the only point is the fixed point itself.
        const sft loop = sft_new({{1}});
        const symbol_cover c = make_symbol_cover(loop, {point_set::of(1, {0})});
        CHECK(check_duplicated_shift_cover(loop, 0, c).yes);
    }
    // Fixed-symbol validation.
    CHECK_THROWS_AS(
        check_duplicated_shift_cover(gm, 1,
                                     make_symbol_cover(gm, {point_set::full(2)})),
        fixed_symbol_missing); // 1 has no self-loop
    CHECK_THROWS_AS(
        check_duplicated_shift_cover(f2, 2,
                                     make_symbol_cover(f2, {point_set::full(2)})),
        fixed_symbol_missing); // not a symbol
    CHECK_THROWS_AS(
        check_duplicated_shift_cover(
            f2, 0,
            make_symbol_cover(f2, {point_set::full(2), point_set::of(2, {1})})),
        fixed_symbol_missing); // fixed symbol outside the designated element
}

TEST_CASE("recoding preserves the verdict") {
    const sft gm = golden_mean();
    const symbol_cover sep = separated(gm);
    for (std::size_t l : {1, 2, 3}) {
        const higher_block_result hb = higher_block(gm, l);
        const symbol_cover lifted = lift_cover(hb, sep);
        CHECK(is_o_expansive_symbol_cover(hb.shift, lifted).yes ==
              is_o_expansive_symbol_cover(gm, sep).yes);
    }
    const symbol_cover all = make_symbol_cover(gm, {point_set::full(2)});
    const higher_block_result hb2 = higher_block(gm, 2);
    const symbol_cover lifted_all = lift_cover(hb2, all);
    const sft_decision lifted_d = is_o_expansive_symbol_cover(hb2.shift, lifted_all);
    CHECK(!lifted_d.yes);
    CHECK(check_pair_lasso(hb2.shift, lifted_all,
                           std::get<pair_lasso_cert>(lifted_d.cert)));
}
