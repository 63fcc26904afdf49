#include <doctest.h>

#include <set>

#include "expanso/point_set.hpp"

using namespace expanso;

TEST_CASE("empty set basics") {
    point_set s(5);
    CHECK(s.universe() == 5);
    CHECK(s.empty());
    CHECK(s.count() == 0);
    CHECK(s.first() == 5);
    CHECK(s.to_string() == "{}");
    CHECK(s.members().empty());
}

TEST_CASE("insert, erase, contains") {
    point_set s(6);
    s.insert(0);
    s.insert(3);
    s.insert(5);
    CHECK(s.contains(0));
    CHECK(!s.contains(1));
    CHECK(s.contains(3));
    CHECK(s.count() == 3);
    s.erase(3);
    CHECK(!s.contains(3));
    CHECK(s.count() == 2);
    s.erase(3); // erasing an absent point is a no-op
    CHECK(s.count() == 2);
}

TEST_CASE("iteration order is ascending") {
    const point_set s = point_set::of(7, {6, 2, 4});
    std::vector<std::size_t> got;
    for (std::size_t p = s.first(); p < s.universe(); p = s.next(p)) got.push_back(p);
    CHECK(got == std::vector<std::size_t>{2, 4, 6});
    CHECK(s.members() == got);
    CHECK(s.to_string() == "{2,4,6}");
}

TEST_CASE("subset and intersection predicates") {
    const point_set a = point_set::of(4, {0, 1});
    const point_set b = point_set::of(4, {0, 1, 3});
    const point_set c = point_set::of(4, {2, 3});
    CHECK(a.is_subset_of(b));
    CHECK(!b.is_subset_of(a));
    CHECK(point_set(4).is_subset_of(a)); // empty set is a subset of anything
    CHECK(!a.intersects(c));
    CHECK(b.intersects(c));
}

TEST_CASE("boolean algebra") {
    const point_set a = point_set::of(5, {0, 1, 2});
    const point_set b = point_set::of(5, {2, 3});
    CHECK((a & b) == point_set::of(5, {2}));
    CHECK((a | b) == point_set::of(5, {0, 1, 2, 3}));
    CHECK((a - b) == point_set::of(5, {0, 1}));
    CHECK(a.complement() == point_set::of(5, {3, 4}));
    CHECK(point_set::full(5).complement() == point_set(5));
    CHECK(point_set::full(5).count() == 5);
}

TEST_CASE("equality, ordering, hashing") {
    const point_set a = point_set::of(4, {1, 2});
    const point_set b = point_set::of(4, {1, 2});
    const point_set c = point_set::of(4, {0, 3});
    CHECK(a == b);
    CHECK(a != c);
    CHECK((a < c || c < a)); // total order separates distinct sets
    CHECK(!(a < b));
    CHECK(a.hash() == b.hash());

    // The order is usable for sorted containers.
    std::set<point_set> fam{a, b, c};
    CHECK(fam.size() == 2);
}

TEST_CASE("large universes spill off the inline words") {
    point_set s(200);
    s.insert(0);
    s.insert(130);
    s.insert(199);
    CHECK(s.count() == 3);
    CHECK(s.members() == std::vector<std::size_t>{0, 130, 199});
    CHECK(s.complement().count() == 197);
    point_set t = s;
    t.erase(130);
    CHECK(t.is_subset_of(s));
    CHECK(!s.is_subset_of(t));
}
