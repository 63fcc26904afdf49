#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "expanso/point_set.hpp"
#include "expanso/topology.hpp"

namespace expanso {

/// An open cover of a finite space: a finite list of nonempty open sets
/// whose union is the whole space. Built through `make_cover`, which
/// validates openness and coverage and drops empty members.
struct cover {
    std::vector<point_set> elements;

    std::size_t size() const { return elements.size(); }
    const point_set& operator[](std::size_t i) const { return elements[i]; }

    std::string to_string() const;
};

/// Validate and build a cover; throws `not_a_topology` if some member is
/// not open, `cover_gap` if the union misses a point. Empty members are
/// dropped; duplicates are kept as given.
cover make_cover(const finite_space& space, std::vector<point_set> elements);

/// The canonical cover {M_p : p} of a space — its finest open cover; every
/// open cover is refined by it.
cover canonical_cover(const finite_space& space);

/// The trivial cover {X}.
cover trivial_cover(const finite_space& space);

/// Does every element of `fine` sit inside some element of `coarse`?
bool refines(const cover& fine, const cover& coarse);

/// Is {x, y} inside a single element of the cover?
bool pair_covered(const cover& c, std::size_t x, std::size_t y);

/// Is `s` contained in a single element of the cover?
bool set_covered(const cover& c, const point_set& s);

/// Is `s` contained in a single element of EVERY open cover of the space?
/// On finite spaces this holds exactly when s fits inside some minimal
/// neighborhood, which is what gets checked.
bool cover_small(const finite_space& space, const point_set& s);

/// The point p with s ⊆ M_p when `cover_small` holds (the least such).
std::size_t cover_small_witness(const finite_space& space, const point_set& s);

/// Enumerate all open covers of the space, each as a set of distinct
/// nonempty opens (covers differing only by duplicated members are
/// identified). Throws `scale_cap` beyond `kCoverEnumCap` points.
inline constexpr std::size_t kCoverEnumCap = 4;
std::vector<cover> enumerate_covers(const finite_space& space);

/// Enumerate only the irredundant open covers (no member removable).
std::vector<cover> enumerate_irredundant_covers(const finite_space& space);

} // namespace expanso
