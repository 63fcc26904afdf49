#include "expanso/instance.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "expanso/errors.hpp"

namespace expanso {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw parse_error(msg); }

std::size_t get_index(const json& j, const std::string& what) {
    if (!j.is_number_unsigned()) fail(what + " must be a non-negative integer");
    return j.get<std::size_t>();
}

point_set get_point_set(const json& j, std::size_t n, const std::string& what) {
    if (!j.is_array()) fail(what + " must be an array of indices");
    point_set s(n);
    for (const json& e : j) {
        std::size_t p = get_index(e, what + " entry");
        if (p >= n)
            fail(what + " mentions index " + std::to_string(p) + " outside 0.." +
                 std::to_string(n == 0 ? 0 : n - 1));
        s.insert(p);
    }
    return s;
}

std::vector<point_set> get_set_list(const json& j, std::size_t n, const std::string& what) {
    if (!j.is_array()) fail(what + " must be an array of index arrays");
    std::vector<point_set> out;
    out.reserve(j.size());
    std::size_t i = 0;
    for (const json& e : j) out.push_back(get_point_set(e, n, what + "[" + std::to_string(i++) + "]"));
    return out;
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || item.key() == a;
        if (!known) fail("unknown field '" + item.key() + "' in " + where);
    }
}

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) fail(where + " needs field '" + std::string(key) + "'");
    return j.at(key);
}

json set_to_json(const point_set& s) {
    json a = json::array();
    for (std::size_t p : s.members()) a.push_back(p);
    return a;
}

instance_doc parse_finite(const json& j) {
    reject_unknown(j, {"kind", "points", "topology", "map", "covers"}, "document");
    const std::size_t n = get_index(need(j, "points", "a finite document"), "'points'");

    const json& topo = need(j, "topology", "a finite document");
    if (!topo.is_object()) fail("'topology' must be an object");
    reject_unknown(topo, {"opens", "min_nbhd"}, "'topology'");
    if (topo.contains("opens") == topo.contains("min_nbhd"))
        fail("'topology' needs exactly one of 'opens' or 'min_nbhd'");

    finite_space space = [&] {
        if (topo.contains("min_nbhd")) {
            std::vector<point_set> nbhd = get_set_list(topo.at("min_nbhd"), n, "'min_nbhd'");
            if (nbhd.size() != n) fail("'min_nbhd' must list one set per point");
            return finite_space(std::move(nbhd));
        }
        return space_from_open_family(n, get_set_list(topo.at("opens"), n, "'opens'"));
    }();

    const json& jm = need(j, "map", "a finite document");
    if (!jm.is_array() || jm.size() != n) fail("'map' must be a permutation array of length " +
                                               std::to_string(n));
    std::vector<std::size_t> perm;
    perm.reserve(n);
    for (const json& e : jm) perm.push_back(get_index(e, "'map' entry"));
    homeo map = make_homeo(space, std::move(perm));

    std::map<std::string, cover> covers;
    if (j.contains("covers")) {
        const json& jc = j.at("covers");
        if (!jc.is_object()) fail("'covers' must be an object of named element lists");
        for (const auto& item : jc.items())
            covers.emplace(item.key(),
                           make_cover(space, get_set_list(item.value(), n,
                                                          "cover '" + item.key() + "'")));
    }

    instance_doc doc;
    doc.finite = finite_instance{std::move(space), std::move(map), std::move(covers)};
    return doc;
}

instance_doc parse_sft(const json& j) {
    reject_unknown(j, {"kind", "alphabet", "matrix", "covers", "fixed_symbol"}, "document");
    const std::size_t a = get_index(need(j, "alphabet", "an sft document"), "'alphabet'");

    const json& jm = need(j, "matrix", "an sft document");
    if (!jm.is_array() || jm.size() != a)
        fail("'matrix' must have one row per symbol");
    std::vector<std::vector<int>> matrix;
    matrix.reserve(a);
    for (const json& row : jm) {
        if (!row.is_array() || row.size() != a) fail("'matrix' rows must have one entry per symbol");
        std::vector<int> r;
        r.reserve(a);
        for (const json& e : row) r.push_back(static_cast<int>(get_index(e, "'matrix' entry")));
        matrix.push_back(std::move(r));
    }
    sft shift = sft_new(matrix);

    std::map<std::string, symbol_cover> covers;
    if (j.contains("covers")) {
        const json& jc = j.at("covers");
        if (!jc.is_object()) fail("'covers' must be an object of named element lists");
        for (const auto& item : jc.items())
            covers.emplace(item.key(),
                           make_symbol_cover(shift, get_set_list(item.value(), a,
                                                                 "cover '" + item.key() + "'")));
    }

    std::optional<std::size_t> fixed;
    if (j.contains("fixed_symbol")) {
        fixed = get_index(j.at("fixed_symbol"), "'fixed_symbol'");
        if (*fixed >= a) fail("'fixed_symbol' must name a symbol");
    }

    instance_doc doc;
    doc.symbolic = sft_instance{std::move(shift), std::move(covers), fixed};
    return doc;
}

} // namespace

instance_doc parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(std::string("invalid document: ") + e.what());
    }
    if (!j.is_object()) fail("document must be an object");
    const json& jk = need(j, "kind", "a document");
    if (!jk.is_string()) fail("'kind' must be a string");
    const std::string kind = jk.get<std::string>();
    if (kind == "finite") return parse_finite(j);
    if (kind == "sft") return parse_sft(j);
    fail("unknown kind '" + kind + "' (expected 'finite' or 'sft')");
}

instance_doc load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const instance_doc& doc) {
    json j;
    if (doc.is_finite()) {
        const finite_instance& fi = *doc.finite;
        const std::size_t n = fi.space.points();
        j["kind"] = "finite";
        j["points"] = n;
        json nb = json::array();
        for (std::size_t p = 0; p < n; ++p) nb.push_back(set_to_json(fi.space.min_nbhd(p)));
        j["topology"] = json{{"min_nbhd", std::move(nb)}};
        j["map"] = fi.map.perm;
        json cov = json::object();
        for (const auto& [name, c] : fi.covers) {
            json els = json::array();
            for (const point_set& el : c.elements) els.push_back(set_to_json(el));
            cov[name] = std::move(els);
        }
        j["covers"] = std::move(cov);
    } else {
        const sft_instance& si = *doc.symbolic;
        const std::size_t a = si.shift.alphabet_size;
        j["kind"] = "sft";
        j["alphabet"] = a;
        json mat = json::array();
        for (std::size_t x = 0; x < a; ++x) {
            json row = json::array();
            for (std::size_t y = 0; y < a; ++y) row.push_back(si.shift.edge(x, y) ? 1 : 0);
            mat.push_back(std::move(row));
        }
        j["matrix"] = std::move(mat);
        json cov = json::object();
        for (const auto& [name, c] : si.covers) {
            json els = json::array();
            for (const point_set& el : c.elements) els.push_back(set_to_json(el));
            cov[name] = std::move(els);
        }
        j["covers"] = std::move(cov);
        if (si.fixed_symbol) j["fixed_symbol"] = *si.fixed_symbol;
    }
    return j.dump(2) + "\n";
}

instance_doc make_finite_doc(const finite_space& space, const homeo& map,
                             std::map<std::string, cover> covers) {
    instance_doc doc;
    doc.finite = finite_instance{space, map, std::move(covers)};
    return doc;
}

instance_doc make_sft_doc(const sft& shift, std::map<std::string, symbol_cover> covers,
                          std::optional<std::size_t> fixed_symbol) {
    instance_doc doc;
    doc.symbolic = sft_instance{shift, std::move(covers), fixed_symbol};
    return doc;
}

} // namespace expanso
