#ifndef EXPANSO_TOPOLOGY_HPP
#define EXPANSO_TOPOLOGY_HPP

#include <cstddef>
#include <vector>

#include "expanso/point_set.hpp"

namespace expanso {

/// A finite topological space, stored as its minimal-neighborhood map:
/// min_nbhd[p] is the smallest open set containing p. Every finite
/// topology is Alexandrov, so this map determines the topology exactly;
/// a set W is open iff min_nbhd[p] is contained in W for every p in W.
///
/// Instances are immutable after construction and validated on entry:
///   - p is a member of min_nbhd[p],
///   - q in min_nbhd[p] implies min_nbhd[q] subset of min_nbhd[p].
class finite_space {
public:
    /// Builds a space from a minimal-neighborhood map, validating the
    /// preorder invariants. Throws empty_space / not_a_topology.
    explicit finite_space(std::vector<point_set> min_nbhd);

    std::size_t points() const { return min_nbhd_.size(); }
    const point_set& min_nbhd(std::size_t p) const { return min_nbhd_[p]; }
    const std::vector<point_set>& min_nbhds() const { return min_nbhd_; }

    bool is_open(const point_set& s) const;
    bool is_closed(const point_set& s) const;

    /// closure(s) = { p : min_nbhd[p] meets s }.
    point_set closure(const point_set& s) const;

    /// Every open set, in canonical (point_set) order. Materializing the
    /// family is exponential; capped at kOpenFamilyCap points.
    std::vector<point_set> open_family() const;

    /// The distinct minimal neighborhoods { M_p : p }, sorted. This is the
    /// finest open cover of the space: it refines every open cover.
    std::vector<point_set> canonical_cover_sets() const;

    bool is_discrete() const;

    friend bool operator==(const finite_space& a, const finite_space& b) {
        return a.min_nbhd_ == b.min_nbhd_;
    }
    friend bool operator!=(const finite_space& a, const finite_space& b) { return !(a == b); }

    static constexpr std::size_t kOpenFamilyCap = 20;

private:
    std::vector<point_set> min_nbhd_;
};

/// Validates that `family` is exactly a topology on [0, n) — contains the
/// empty set and X and is closed under pairwise union and intersection —
/// and returns the space with min_nbhd[p] = intersection of all members
/// containing p. Throws not_a_topology (naming the offending pair) or
/// empty_space.
finite_space space_from_open_family(std::size_t n, const std::vector<point_set>& family);

struct separation_record {
    bool t0 = false;
    bool t1 = false;
    bool hausdorff = false;
};

/// T0: distinct points have distinct minimal neighborhoods. T1: every
/// minimal neighborhood is a singleton. Hausdorff: distinct points have
/// disjoint open neighborhoods; on finite spaces this coincides with T1
/// (asserted internally).
separation_record separation_axioms(const finite_space& space);

/// A subspace with the trace topology, remembering how its points map
/// back into the ambient space.
struct subspace_result {
    finite_space space;
    std::vector<std::size_t> to_ambient;  // new index -> ambient index
    std::vector<std::size_t> from_ambient; // ambient index -> new index, or npos
    static constexpr std::size_t npos = std::size_t(-1);
};

/// Trace topology on a nonempty carrier: M^Y_p = M_p intersect Y,
/// re-indexed densely. Throws empty_space.
subspace_result subspace(const finite_space& space, const point_set& carrier);

/// A subset Y of an ambient space, for the extension-closed decision.
struct subspace_pair {
    const finite_space& ambient;
    point_set carrier;
};

/// Verdict of the extension-closed decision. On NO, witness_cover holds a
/// cover of Y (in ambient coordinates: subsets of the carrier) that no
/// choice of ambient opens extends to a cover of X.
struct extension_decision {
    bool yes = false;
    std::vector<point_set> witness_cover;
};

/// Decides whether every open cover of Y extends trace-exactly to an open
/// cover of X. For each trace-open U the candidate extensions are closed
/// under union, so the maximal extension per element decides the search;
/// only irredundant covers of Y need checking (supersets only gain
/// candidates).
extension_decision is_extension_closed(const subspace_pair& sub);

/// Brute-force ground truth for is_extension_closed: tries every cover of
/// Y and every assignment of ambient opens. Exponential; requires
/// ambient.points() <= 3 plus small carriers. Throws oracle_scale_exceeded.
extension_decision is_extension_closed_oracle(const subspace_pair& sub);

} // namespace expanso

#endif
