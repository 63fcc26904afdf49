#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "expanso/point_set.hpp"
#include "expanso/topology.hpp"

namespace expanso {

/// A self-homeomorphism of a finite space, stored as a point permutation
/// together with its inverse. Constructed through `make_homeo`, which
/// rejects maps that fail to be bijective bicontinuous.
struct homeo {
    finite_space space;
    std::vector<std::size_t> perm; ///< forward images: perm[p] = f(p)
    std::vector<std::size_t> inv;  ///< inverse images: inv[perm[p]] = p

    std::size_t apply(std::size_t p) const { return perm[p]; }
    std::size_t apply_inv(std::size_t p) const { return inv[p]; }

    /// Forward image f(s).
    point_set image(const point_set& s) const;
    /// Preimage f^{-1}(s), i.e. the forward image under the inverse map.
    point_set preimage(const point_set& s) const;
    /// Image under f^k for any integer exponent (negative = inverse powers).
    point_set power_image(const point_set& s, long long k) const;
    /// f^k applied to a single point.
    std::size_t power_apply(std::size_t p, long long k) const;

    /// Least t >= 1 with f^t = id.
    std::size_t order() const;
};

/// Validate and build a homeomorphism; throws `not_continuous` when the
/// permutation or its inverse fails to carry opens to opens, and
/// `not_a_topology` when `perm` is not a permutation of the points.
homeo make_homeo(finite_space space, std::vector<std::size_t> perm);

/// Identity homeomorphism of a space.
homeo identity_homeo(finite_space space);

/// The homeomorphism f^k on the same space (k may be negative).
homeo homeo_power(const homeo& f, long long k);

/// Inverse homeomorphism.
homeo homeo_inverse(const homeo& f);

/// T0 quotient: identify points with equal minimal neighborhoods. Returns
/// the quotient space, the induced homeomorphism, and the class map from
/// original points to quotient points. The induced map is well defined
/// because homeomorphisms respect minimal-neighborhood equality.
struct t0_quotient_result {
    finite_space space;
    homeo map;
    std::vector<std::size_t> cls; ///< cls[p] = quotient index of p
};
t0_quotient_result t0_quotient(const homeo& f);

} // namespace expanso
