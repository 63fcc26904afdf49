#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expanso/cover.hpp"
#include "expanso/homeo.hpp"
#include "expanso/point_set.hpp"
#include "expanso/sft.hpp"
#include "expanso/topology.hpp"

namespace expanso {

/// A parsed instance file: either a finite-space system (topology + map +
/// named covers) or a subshift (matrix + named symbol covers + optional
/// fixed symbol). Parsing is strict — unknown fields are rejected — and
/// serialization is canonical (sorted keys, sorted integer arrays), so
/// parse ∘ serialize ∘ parse is the identity.
struct finite_instance {
    finite_space space;
    homeo map;
    std::map<std::string, cover> covers;
};

struct sft_instance {
    sft shift;
    std::map<std::string, symbol_cover> covers;
    std::optional<std::size_t> fixed_symbol;
};

struct instance_doc {
    std::optional<finite_instance> finite;
    std::optional<sft_instance> symbolic;

    bool is_finite() const { return finite.has_value(); }
};

/// Parse a document from JSON text. Throws `parse_error` on malformed
/// JSON, unknown fields, or schema violations; domain validation errors
/// (bad topology, bad permutation, ...) propagate as their own types.
instance_doc parse_instance(const std::string& text);

/// Load from a file path. Throws `parse_error` when unreadable.
instance_doc load_instance(const std::string& path);

/// Canonical serialization.
std::string serialize_instance(const instance_doc& doc);

/// Assemble documents programmatically (used by the construct command).
instance_doc make_finite_doc(const finite_space& space, const homeo& map,
                             std::map<std::string, cover> covers);
instance_doc make_sft_doc(const sft& shift, std::map<std::string, symbol_cover> covers,
                          std::optional<std::size_t> fixed_symbol);

} // namespace expanso
