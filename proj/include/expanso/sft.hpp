#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "expanso/point_set.hpp"

namespace expanso {

using big_int = boost::multiprecision::cpp_int;

/// A subshift of finite type over symbols 0..a-1 with a one-step
/// transition matrix. Points are bi-infinite symbol sequences; the shift
/// map slides them one step. Symbols that admit no bi-infinite run are
/// trimmed at construction and recorded.
struct sft {
    std::size_t alphabet_size = 0;
    std::vector<point_set> allowed; ///< allowed[a] = successors of a (alive only)
    point_set alive;                ///< symbols surviving bi-essential trimming
    std::vector<std::size_t> removed;

    bool edge(std::size_t a, std::size_t b) const { return allowed[a].contains(b); }
};

/// Validate and trim. Throws `empty_shift` when trimming kills every
/// symbol.
sft sft_new(const std::vector<std::vector<int>>& matrix);

/// A cover of the shift space by unions of 0-cylinders: element k is
/// {x : x_0 ∈ A_k}. Symbol sets must be nonempty, alive, and jointly
/// exhaust the alive alphabet.
struct symbol_cover {
    std::vector<point_set> elements;

    std::size_t size() const { return elements.size(); }
};

symbol_cover make_symbol_cover(const sft& shift, std::vector<point_set> elements);

/// Higher-block recoding: symbols of the result are the allowed L-words
/// of the input, transitions are overlaps. The recoding is a conjugacy of
/// shift spaces.
struct higher_block_result {
    sft shift;
    std::vector<std::vector<std::size_t>> words; ///< new symbol -> its L-word
};
higher_block_result higher_block(const sft& shift, std::size_t l);

/// Transport a 0-cylinder cover through a higher-block recoding: the
/// cylinder {x : x_0 ∈ A} becomes {y : y_0 ∈ {words starting in A}}.
symbol_cover lift_cover(const higher_block_result& hb, const symbol_cover& c);

/// An eventually periodic pair of shift points, stored as aligned symbol
/// pairs: positions j < 0 repeat `left_cycle`, positions 0..core-1 spell
/// `core`, later positions repeat `right_cycle`. A purely periodic
/// witness has an empty core and equal cycles.
struct pair_lasso_cert {
    std::vector<std::pair<std::size_t, std::size_t>> left_cycle;
    std::vector<std::pair<std::size_t, std::size_t>> core;
    std::vector<std::pair<std::size_t, std::size_t>> right_cycle;

    bool periodic() const { return core.empty() && left_cycle == right_cycle; }
};

/// NO-witness for the duplicated-shift cover: a point of the sub-shift on
/// the designated symbol set, different from the fixed point, that stays
/// glued to the added copy. Stored as an eventually periodic single
/// sequence.
struct dup_point_cert {
    std::vector<std::size_t> left_cycle;
    std::vector<std::size_t> core;
    std::vector<std::size_t> right_cycle;
};

using sft_certificate = std::variant<std::monostate, pair_lasso_cert, dup_point_cert>;

struct sft_decision {
    bool yes = false;
    sft_certificate cert;
};

/// Is the cylinder cover orbit-expansive for the shift? Decided on the
/// pair automaton: nodes are jointly covered alive symbol pairs, edges
/// are componentwise transitions; after trimming to the bi-essential
/// core, YES iff every surviving node is diagonal. NO returns a pair of
/// distinct never-separated points — purely periodic when some
/// off-diagonal survivor lies on a cycle, eventually periodic otherwise.
sft_decision is_o_expansive_symbol_cover(const sft& shift, const symbol_cover& c);

/// Re-verify a pair witness: all transitions legal, every aligned pair
/// jointly covered, the two points differ somewhere.
bool check_pair_lasso(const sft& shift, const symbol_cover& c, const pair_lasso_cert& w);

/// Number of n-periodic points: trace of the n-th power of the alive
/// transition matrix, computed in exact big-integer arithmetic.
big_int periodic_count(const sft& shift, std::size_t n);

/// count <= l^n for an orbit-expansive cover of size l. Throws
/// `cover_not_expansive` when the cover fails the expansivity check.
bool check_sft_periodic_bound(const sft& shift, const symbol_cover& c, std::size_t n);

/// Orbit expansivity of the duplicated-shift cover: the shift space plus
/// a copy x₁ of the fixed point a^∞, covered by the given elements where
/// the LAST element U_n is the designated one and the appended element is
/// (U_n ∖ {a^∞}) ∪ {x₁}. Shift-shift pairs reduce to
/// is_o_expansive_symbol_cover; pairs against x₁ reduce to the sub-shift
/// induced on A_n, which must contain nothing but a^∞. Throws
/// `fixed_symbol_missing` when a is dead, not self-looped, or outside the
/// designated element.
sft_decision check_duplicated_shift_cover(const sft& shift, std::size_t fixed_symbol,
                                          const symbol_cover& c);

/// Re-verify a duplicated-shift witness: legal transitions, every symbol
/// in the designated element, some symbol differs from the fixed one.
bool check_dup_point(const sft& shift, std::size_t fixed_symbol, const symbol_cover& c,
                     const dup_point_cert& w);

/// Survivor set of pair-automaton trimming, exposed for the soundness
/// suite: node (a,b) encoded as a·alphabet+b.
point_set trimmed_pair_nodes(const sft& shift, const symbol_cover& c);

std::string sft_certificate_to_string(const sft_certificate& cert);

} // namespace expanso
