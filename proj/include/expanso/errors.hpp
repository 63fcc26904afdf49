#ifndef EXPANSO_ERRORS_HPP
#define EXPANSO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace expanso {

/// Base class for all errors raised by the library. Every condition the
/// decision procedures can reject carries its own type so callers can
/// distinguish bad input (CLI exit 2) from genuine verdicts.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// A family of sets that is not a topology (missing empty set / whole
/// space, or a union/intersection of two members escapes the family).
struct not_a_topology : error {
    using error::error;
};

/// Spaces must have at least one point.
struct empty_space : error {
    using error::error;
};

/// A permutation that is not a homeomorphism of the given space.
struct not_continuous : error {
    using error::error;
};

/// A carrier set that is not invariant under the map.
struct not_invariant : error {
    using error::error;
};

/// A set required to be closed is not.
struct not_closed : error {
    using error::error;
};

/// The subset of X x X handed to the diagonal decision is not an open
/// neighborhood of the diagonal.
struct not_a_diagonal_nbhd : error {
    using error::error;
};

/// Brute-force oracle asked to run outside its feasible range.
struct oracle_scale_exceeded : error {
    using error::error;
};

/// Branch-and-bound search ran past its configured node limit.
struct search_budget_exceeded : error {
    using error::error;
};

/// Enumeration request beyond the hard cap.
struct scale_cap : error {
    using error::error;
};

/// A periodic-point bound was requested for a cover that is not expansive.
struct cover_not_expansive : error {
    using error::error;
};

/// A would-be cover whose union misses part of the space, or a smallness
/// witness requested for a set that has none.
struct cover_gap : error {
    using error::error;
};

/// Transition matrix trims to nothing.
struct empty_shift : error {
    using error::error;
};

/// The duplicated-shift check needs a fixed symbol inside the designated
/// cover element.
struct fixed_symbol_missing : error {
    using error::error;
};

/// Malformed instance document.
struct parse_error : error {
    using error::error;
};

/// An argument outside an operation's stated precondition (e.g. a zero
/// power exponent).
struct bad_argument : error {
    using error::error;
};

} // namespace expanso

#endif
