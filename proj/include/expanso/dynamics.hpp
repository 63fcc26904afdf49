#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "expanso/cover.hpp"
#include "expanso/decision.hpp"
#include "expanso/homeo.hpp"
#include "expanso/point_set.hpp"
#include "expanso/topology.hpp"

namespace expanso {

/// The distinct nonempty values of ⋂_{|j|<=N} f^j(U_{k_j}) over all index
/// choices. Always an open cover of the space; members shrink as the
/// radius grows.
struct window_family {
    std::size_t radius = 0;
    std::vector<point_set> sets;
};

/// Window family at radius N, computed by incremental refinement with
/// value deduplication (no pruning — the full family).
window_family window_cover(const homeo& f, const cover& c, std::size_t n);

/// Is the cover orbit-expansive for f? NO iff some pair of distinct
/// points stays jointly covered along its whole orbit; decided by
/// scanning one full period of every pair (f is a permutation, so every
/// pair-orbit is finite). NO carries the lexicographically least witness
/// pair.
decision is_o_expansive_cover(const homeo& f, const cover& c);

/// Definitional cross-check for orbit expansivity: enumerate all periodic
/// index sequences with period up to order(f)·l and test that the
/// stabilized bi-infinite intersection ⋂_j f^j(U_{k_j}) has at most one
/// point. Periodic sequences suffice (see docs/periodic-sufficiency.md).
/// Throws `oracle_scale_exceeded` beyond 3 points or 3 cover elements.
decision o_expansive_oracle(const homeo& f, const cover& c);

/// Is s inside one element of every open cover? On a finite space this
/// holds exactly when s fits in a minimal neighborhood; YES carries a
/// SmallnessWitness.
decision is_cover_small_decision(const finite_space& space, const point_set& s);

/// Brute-force smallness over every open cover; 3 points max.
decision is_cover_small_oracle(const finite_space& space, const point_set& s);

/// Is the cover refinement-expansive for f? Decided through the uniform
/// form: YES iff some radius N makes every window set cover-small,
/// returning UniformRadius(minimal N); NO detected by a repeated
/// (N mod order(f), family) state, returning the FamilyCycle trajectory.
decision is_r_expansive_cover(const homeo& f, const cover& c);

/// Definitional cross-check for refinement expansivity; two regimes:
/// at most 3 points and 3 cover elements, smallness of the stabilized
/// window of every periodic index sequence (period <= order(f)·l) is
/// tested against every open cover of the space; up to 8 points, periods
/// dividing order(f) are used with the minimal-neighborhood smallness
/// characterization (both reductions proven in docs). Throws
/// `oracle_scale_exceeded` beyond that.
decision r_expansive_oracle(const homeo& f, const cover& c);

/// Minimal N with window_cover(f, c, N) refining `target`, or nullopt
/// (with the cycle certificate) if no N works.
struct uniform_n_result {
    std::optional<std::size_t> n;
    decision detail; ///< UniformRadius on success, FamilyCycle otherwise
};
uniform_n_result uniform_refinement_n(const homeo& f, const cover& c, const cover& target);

/// Does f admit any orbit-expansive open cover? Reduces to the canonical
/// minimal-neighborhood cover, which refines every open cover (orbit
/// expansivity is inherited under refinement).
decision decide_orbit_expansive(const homeo& f);

/// Does f admit any refinement-expansive open cover? Same canonical-cover
/// reduction.
decision decide_refinement_expansive(const homeo& f);

/// Existence brute force over every open cover; 3 points max. Used to pin
/// the canonical-cover reduction.
decision decide_orbit_expansive_oracle(const homeo& f);
decision decide_refinement_expansive_oracle(const homeo& f);

/// Smallest cover size l <= bound admitting an orbit-expansive cover, or
/// nullopt. Branch-and-bound over irredundant covers (removing redundant
/// elements never destroys orbit expansivity, so minima are attained on
/// irredundant covers). Throws `search_budget_exceeded` past `budget`
/// search nodes.
std::optional<std::size_t> min_o_expansive_cover_size(const homeo& f, std::size_t bound,
                                                      std::size_t budget = 10'000'000);

/// Product-space encoding of X×X on n² points: (p,q) ↦ p·n + q, with
/// M_{(p,q)} = M_p × M_q.
finite_space product_space(const finite_space& space);

/// Union of U_k × U_k over the cover's elements, as a subset of X×X.
point_set diagonal_from_cover(const finite_space& space, const cover& c);

/// Is D an expansive diagonal neighborhood: for every pair x != y some
/// iterate escapes D? Throws `not_a_diagonal_nbhd` unless D is open in
/// the product and contains the diagonal.
decision is_expansive_diagonal(const homeo& f, const point_set& d);

/// Open cover {U_x} with U_x × U_x ⊆ D: U_x starts at M_x (whose square
/// always sits inside an open diagonal neighborhood) and is grown
/// greedily by adjoining whole minimal neighborhoods while the square
/// stays inside D.
cover cover_from_diagonal(const finite_space& space, const point_set& d);

/// Number of fixed points of f^n.
std::size_t count_periodic(const homeo& f, std::size_t n);

/// Does the periodic-point count respect the l^n bound that an
/// orbit-expansive cover of size l imposes? Throws `cover_not_expansive`
/// when the cover fails is_o_expansive_cover.
bool check_periodic_bound(const homeo& f, const cover& c, std::size_t n);

/// Cover of all nonempty ⋂_{t=0}^{|r|-1} f^{±t}(U_{k_t}) (sign of r picks
/// the direction); r = 0 is rejected. Orbit expansivity transfers along
/// it between f and f^r.
cover power_cover(const homeo& f, const cover& c, long long r);

/// decide_orbit_expansive(f) == decide_orbit_expansive(f^r), and the
/// power cover of the canonical cover is orbit-expansive for f^r whenever
/// the canonical cover is orbit-expansive for f.
bool check_power_equivalence(const homeo& f, long long r);

/// Restriction of f to an invariant carrier, as a homeomorphism of the
/// subspace. Throws `not_invariant` when perm(carrier) != carrier.
struct restriction {
    homeo map;                          ///< the restricted homeomorphism
    std::vector<std::size_t> to_ambient; ///< subspace point -> ambient point
};
restriction restrict(const homeo& f, const point_set& carrier);

/// Restriction of a cover to the subspace (elementwise trace, empties
/// dropped).
cover restrict_cover(const restriction& r, const cover& c);

} // namespace expanso
