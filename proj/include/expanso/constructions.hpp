#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "expanso/cover.hpp"
#include "expanso/homeo.hpp"
#include "expanso/point_set.hpp"
#include "expanso/topology.hpp"

namespace expanso {

/// Result of doubling a closed invariant set K inside a finite system:
/// the enlarged space keeps the original point ids and appends one copy
/// per point of K; the enlarged map agrees with f on old points and acts
/// on copies by conjugation.
struct duplication {
    finite_space base_space;
    homeo base_map;
    point_set k_set;
    finite_space result_space;
    homeo result_map;
    /// copy_of[i] = new id of the copy of the i-th smallest point of K.
    std::vector<std::size_t> copy_of;

    /// New id of the copy of k (k must lie in k_set).
    std::size_t copy(std::size_t k) const;
    /// Lift a subset of the base space to the enlarged universe
    /// (old points only, no copies).
    point_set lift(const point_set& s) const;
};

/// Build the duplication. The enlarged topology is generated from three
/// families — the old opens W, the sets W ∪ copy(W∩K), and the sets
/// (W∖K) ∪ copy(W∩K) — then closed under pairwise union and intersection
/// and validated as a topology; the three families alone need not be
/// closed. Throws `not_closed` / `not_invariant` on a bad K.
duplication duplicate(const finite_space& space, const homeo& f, const point_set& k_set);

/// The augmented cover on the enlarged space: every original element U
/// plus its doubled variant (U∖K) ∪ copy(U∩K), deduplicated.
cover duplicated_cover(const duplication& dup, const cover& c);

/// Chain 0 < 1 < ... < m-1 with the upper-set topology (minimal
/// neighborhood of p is {p, ..., m-1} — reversed so that M_0 = X) and the
/// identity map. T0, not T1 for m >= 2; every point fixed.
std::pair<finite_space, homeo> chain_space(std::size_t m);

/// Indiscrete topology on m points with an arbitrary bijection.
std::pair<finite_space, homeo> indiscrete_example(std::size_t m,
                                                  const std::vector<std::size_t>& perm);

/// All labeled topologies on exactly m points, streamed in a fixed
/// deterministic order (minimal-neighborhood rows enumerated
/// lexicographically, transitivity-filtered). Hard cap m <= 5. The
/// callback returns false to stop early.
inline constexpr std::size_t kEnumCap = 5;
void enumerate_spaces(std::size_t m, const std::function<bool(const finite_space&)>& yield);

/// Count of labeled topologies on exactly m points.
std::size_t count_spaces(std::size_t m);

/// All self-homeomorphisms of a space, in lexicographic permutation
/// order.
std::vector<homeo> enumerate_homeos(const finite_space& space);

/// All closed f-invariant subsets (including ∅ and X).
std::vector<point_set> enumerate_closed_invariant_sets(const homeo& f);

} // namespace expanso
