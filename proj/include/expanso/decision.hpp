#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "expanso/point_set.hpp"

namespace expanso {

struct homeo;
struct cover;
class finite_space;

/// Certificate for a NO verdict of an orbit-expansivity check: a pair of
/// distinct points whose orbits stay jointly covered forever. `period` is
/// the least t >= 1 with f^t fixing both points, so scanning one period
/// re-verifies the whole bi-infinite orbit.
struct witness_pair_cert {
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t period = 0;
};

/// Certificate for a YES verdict of a refinement-expansivity / uniform
/// refinement check: the minimal window radius at which every window set
/// is absorbed (cover-small, or inside the target cover).
struct uniform_radius_cert {
    std::size_t radius = 0;
};

/// One state of the window-family evolution: the distinct non-absorbed
/// window values at the given radius.
struct family_state {
    std::size_t level = 0;
    std::vector<point_set> family;
};

/// Certificate for a NO verdict of a refinement-expansivity check: the
/// full trajectory of family states from radius 0 up to the first repeat
/// of (level mod order(f), family). `repeat_of` points at the earlier
/// state the final one equals; the loop keeps some window non-absorbed
/// at every radius.
struct family_cycle_cert {
    std::vector<family_state> states;
    std::size_t repeat_of = 0;
};

/// Certificate for a YES of a cover-smallness check: a point p whose
/// minimal neighborhood contains the set.
struct smallness_cert {
    std::size_t point = 0;
};

using certificate = std::variant<std::monostate, witness_pair_cert, uniform_radius_cert,
                                 family_cycle_cert, smallness_cert>;

/// Verdict plus machine-checkable evidence. Every non-trivial certificate
/// kind has an independent checker in this header; re-verification never
/// trusts the procedure that produced the certificate.
struct decision {
    bool yes = false;
    certificate cert;

    static decision yes_plain() { return {true, std::monostate{}}; }
    static decision no_plain() { return {false, std::monostate{}}; }
};

/// Re-verify a witness pair against the definition: distinct points, the
/// claimed period really fixes both, and the pair stays jointly covered
/// at every step of one full period.
bool check_witness_pair(const homeo& f, const cover& c, const witness_pair_cert& w);

/// Re-verify a uniform radius: every window set at `radius` is inside
/// some element of `target`, and some window set at radius-1 is not
/// (minimality), computed by plain breadth-first window enumeration.
bool check_uniform_radius(const homeo& f, const cover& c, const cover& target,
                          const uniform_radius_cert& u);

/// Re-verify a family cycle: state 0 is the non-absorbed part of the
/// cover itself, each state steps to the next under the one-step window
/// refinement, the last state equals states[repeat_of] modulo order(f),
/// and every state is nonempty. `absorbed` decides which window values
/// leave the family (cover-small for plain refinement expansivity,
/// contained-in-target for uniform refinement against a target).
bool check_family_cycle(const homeo& f, const cover& c, const cover& target,
                        const family_cycle_cert& cyc);

/// Re-verify a smallness witness: s really sits inside M_p.
bool check_smallness(const finite_space& space, const point_set& s, const smallness_cert& w);

/// Human-readable rendering of any certificate.
std::string certificate_to_string(const certificate& cert);

} // namespace expanso
