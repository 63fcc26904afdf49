#include "expanso/sft.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>

#include "expanso/errors.hpp"

namespace expanso {

namespace {

// ---------------------------------------------------------------------
// Deterministic ray extraction. Walking a finite graph by a fixed rule
// must eventually repeat a node; the ray r_1, r_2, ... emitted after the
// start node splits into a finite transient and the cyclic block it
// settles into, both kept in walk order.
struct ray {
    std::vector<std::size_t> transient;
    std::vector<std::size_t> cycle;
};

template <typename Step>
ray walk_ray(std::size_t start, Step step) {
    std::vector<std::size_t> seq{start};
    std::map<std::size_t, std::size_t> first_at{{start, 0}};
    for (;;) {
        std::size_t nxt = step(seq.back());
        auto it = first_at.find(nxt);
        if (it == first_at.end()) {
            first_at.emplace(nxt, seq.size());
            seq.push_back(nxt);
            continue;
        }
        ray r;
        const std::size_t i = it->second;
        if (i == 0) {
            // The walk returned to its start: periodic from r_1 onward,
            // with the start node closing the block.
            r.cycle.assign(seq.begin() + 1, seq.end());
            r.cycle.push_back(start);
        } else {
            r.transient.assign(seq.begin() + 1, seq.begin() + static_cast<std::ptrdiff_t>(i));
            r.cycle.assign(seq.begin() + static_cast<std::ptrdiff_t>(i), seq.end());
        }
        return r;
    }
}

// ---------------------------------------------------------------------
// Pair automaton: nodes are jointly covered alive symbol pairs (a,b)
// encoded as a*alphabet+b, edges are componentwise transitions, trimmed
// to the bi-essential core.
struct pair_graph {
    std::size_t n = 0;
    point_set nodes;
    std::vector<point_set> succ;
    std::vector<point_set> pred;
};

bool jointly_covered(const symbol_cover& c, std::size_t a, std::size_t b) {
    for (const point_set& el : c.elements)
        if (el.contains(a) && el.contains(b)) return true;
    return false;
}

pair_graph build_trimmed_pairs(const sft& shift, const symbol_cover& c) {
    const std::size_t n = shift.alphabet_size;
    const std::size_t u = n * n;
    pair_graph g;
    g.n = n;
    g.nodes = point_set(u);
    for (std::size_t a = shift.alive.first(); a < n; a = shift.alive.next(a))
        for (std::size_t b = shift.alive.first(); b < n; b = shift.alive.next(b))
            if (jointly_covered(c, a, b)) g.nodes.insert(a * n + b);

    std::vector<point_set> succ0(u, point_set(u));
    std::vector<point_set> pred0(u, point_set(u));
    for (std::size_t code = g.nodes.first(); code < u; code = g.nodes.next(code)) {
        const std::size_t a = code / n;
        const std::size_t b = code % n;
        for (std::size_t x = shift.allowed[a].first(); x < n; x = shift.allowed[a].next(x))
            for (std::size_t y = shift.allowed[b].first(); y < n; y = shift.allowed[b].next(y)) {
                const std::size_t to = x * n + y;
                if (!g.nodes.contains(to)) continue;
                succ0[code].insert(to);
                pred0[to].insert(code);
            }
    }

    for (;;) {
        std::vector<std::size_t> kill;
        for (std::size_t code = g.nodes.first(); code < u; code = g.nodes.next(code))
            if (!succ0[code].intersects(g.nodes) || !pred0[code].intersects(g.nodes))
                kill.push_back(code);
        if (kill.empty()) break;
        for (std::size_t code : kill) g.nodes.erase(code);
    }

    g.succ.assign(u, point_set(u));
    g.pred.assign(u, point_set(u));
    for (std::size_t code = g.nodes.first(); code < u; code = g.nodes.next(code)) {
        g.succ[code] = succ0[code] & g.nodes;
        g.pred[code] = pred0[code] & g.nodes;
    }
    return g;
}

/// Shortest path v -> ... -> v inside the trimmed graph, if one exists;
/// returned as the node list of the cycle starting at v.
std::optional<std::vector<std::size_t>> cycle_through(const pair_graph& g, std::size_t v) {
    const std::size_t u = g.nodes.universe();
    if (g.succ[v].contains(v)) return std::vector<std::size_t>{v};
    std::vector<std::size_t> parent(u, u);
    std::vector<std::size_t> queue;
    for (std::size_t x = g.succ[v].first(); x < u; x = g.succ[v].next(x)) {
        parent[x] = v;
        queue.push_back(x);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::size_t x = queue[qi];
        if (g.succ[x].contains(v)) {
            std::vector<std::size_t> path;
            for (std::size_t t = x; t != v; t = parent[t]) path.push_back(t);
            path.push_back(v);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (std::size_t y = g.succ[x].first(); y < u; y = g.succ[x].next(y))
            if (parent[y] == u && y != v) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    return std::nullopt;
}

std::string list_to_string(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string pairs_to_string(const std::vector<std::pair<std::size_t, std::size_t>>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += "(" + std::to_string(v[i].first) + "," + std::to_string(v[i].second) + ")";
    }
    return s + "]";
}

} // namespace

sft sft_new(const std::vector<std::vector<int>>& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) throw empty_shift("transition matrix has no symbols");
    for (const auto& row : matrix) {
        if (row.size() != n) throw bad_argument("transition matrix must be square");
        for (int e : row)
            if (e != 0 && e != 1) throw bad_argument("transition entries must be 0 or 1");
    }

    point_set alive = point_set::full(n);
    for (;;) {
        std::vector<std::size_t> kill;
        for (std::size_t a = alive.first(); a < n; a = alive.next(a)) {
            bool has_out = false;
            bool has_in = false;
            for (std::size_t b = alive.first(); b < n; b = alive.next(b)) {
                has_out = has_out || matrix[a][b] != 0;
                has_in = has_in || matrix[b][a] != 0;
            }
            if (!has_out || !has_in) kill.push_back(a);
        }
        if (kill.empty()) break;
        for (std::size_t a : kill) alive.erase(a);
    }
    if (alive.empty()) throw empty_shift("no symbol admits a bi-infinite run");

    sft s;
    s.alphabet_size = n;
    s.alive = alive;
    s.allowed.assign(n, point_set(n));
    for (std::size_t a = alive.first(); a < n; a = alive.next(a))
        for (std::size_t b = alive.first(); b < n; b = alive.next(b))
            if (matrix[a][b]) s.allowed[a].insert(b);
    for (std::size_t a = 0; a < n; ++a)
        if (!alive.contains(a)) s.removed.push_back(a);
    return s;
}

symbol_cover make_symbol_cover(const sft& shift, std::vector<point_set> elements) {
    const std::size_t n = shift.alphabet_size;
    if (elements.empty()) throw cover_gap("a symbol cover needs at least one element");
    point_set covered(n);
    for (const point_set& el : elements) {
        if (el.universe() != n) throw bad_argument("cover element indexed over the wrong alphabet");
        if (el.empty()) throw bad_argument("cover elements must be nonempty");
        if (!el.is_subset_of(shift.alive))
            throw bad_argument("cover elements may only use surviving symbols");
        covered |= el;
    }
    if (covered != shift.alive)
        throw cover_gap("cover misses symbols " + (shift.alive - covered).to_string());
    return symbol_cover{std::move(elements)};
}

higher_block_result higher_block(const sft& shift, std::size_t l) {
    if (l < 1) throw bad_argument("block length must be at least 1");
    const std::size_t n = shift.alphabet_size;

    std::vector<std::vector<std::size_t>> words;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.size() == l) {
            words.push_back(cur);
            return;
        }
        const point_set& nexts = cur.empty() ? shift.alive : shift.allowed[cur.back()];
        for (std::size_t x = nexts.first(); x < n; x = nexts.next(x)) {
            cur.push_back(x);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);

    const std::size_t w = words.size();
    std::vector<std::vector<int>> matrix(w, std::vector<int>(w, 0));
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < w; ++j) {
            bool ok = shift.edge(words[i][l - 1], words[j][l - 1]);
            for (std::size_t t = 0; ok && t + 1 < l; ++t) ok = words[i][t + 1] == words[j][t];
            if (ok) matrix[i][j] = 1;
        }

    higher_block_result out{sft_new(matrix), std::move(words)};
    // Every allowed word of a bi-essential graph extends to a run, so
    // the recoded shift never loses symbols.
    assert(out.shift.removed.empty());
    return out;
}

symbol_cover lift_cover(const higher_block_result& hb, const symbol_cover& c) {
    const std::size_t w = hb.words.size();
    std::vector<point_set> elems;
    elems.reserve(c.elements.size());
    for (const point_set& el : c.elements) {
        point_set lifted(w);
        for (std::size_t i = 0; i < w; ++i)
            if (el.contains(hb.words[i][0])) lifted.insert(i);
        elems.push_back(std::move(lifted));
    }
    return make_symbol_cover(hb.shift, std::move(elems));
}

sft_decision is_o_expansive_symbol_cover(const sft& shift, const symbol_cover& c) {
    const std::size_t n = shift.alphabet_size;
    const std::size_t u = n * n;
    pair_graph g = build_trimmed_pairs(shift, c);

    std::size_t bad = u;
    for (std::size_t code = g.nodes.first(); code < u; code = g.nodes.next(code))
        if (code / n != code % n) {
            bad = code;
            break;
        }
    if (bad == u) return {true, {}};

    auto decode = [n](std::size_t code) {
        return std::pair<std::size_t, std::size_t>{code / n, code % n};
    };

    // Prefer a purely periodic witness: the least off-diagonal survivor
    // that lies on a cycle.
    for (std::size_t code = bad; code < u; code = g.nodes.next(code)) {
        if (code / n == code % n) continue;
        if (auto cyc = cycle_through(g, code)) {
            pair_lasso_cert w;
            for (std::size_t x : *cyc) w.left_cycle.push_back(decode(x));
            w.right_cycle = w.left_cycle;
            return {false, std::move(w)};
        }
    }

    // Otherwise thread an eventually periodic pair through the least
    // off-diagonal survivor via deterministic extremal walks.
    ray fwd = walk_ray(bad, [&](std::size_t v) { return g.succ[v].first(); });
    ray back = walk_ray(bad, [&](std::size_t v) { return g.pred[v].first(); });

    pair_lasso_cert w;
    for (auto it = back.cycle.rbegin(); it != back.cycle.rend(); ++it)
        w.left_cycle.push_back(decode(*it));
    for (auto it = back.transient.rbegin(); it != back.transient.rend(); ++it)
        w.core.push_back(decode(*it));
    w.core.push_back(decode(bad));
    for (std::size_t x : fwd.transient) w.core.push_back(decode(x));
    for (std::size_t x : fwd.cycle) w.right_cycle.push_back(decode(x));
    return {false, std::move(w)};
}

bool check_pair_lasso(const sft& shift, const symbol_cover& c, const pair_lasso_cert& w) {
    if (w.left_cycle.empty() || w.right_cycle.empty()) return false;
    const std::size_t n = shift.alphabet_size;

    auto ok_pair = [&](const std::pair<std::size_t, std::size_t>& p) {
        return p.first < n && p.second < n && shift.alive.contains(p.first) &&
               shift.alive.contains(p.second) && jointly_covered(c, p.first, p.second);
    };
    auto edge2 = [&](const std::pair<std::size_t, std::size_t>& x,
                     const std::pair<std::size_t, std::size_t>& y) {
        return shift.edge(x.first, y.first) && shift.edge(x.second, y.second);
    };

    bool off_diagonal = false;
    for (const auto* part : {&w.left_cycle, &w.core, &w.right_cycle})
        for (const auto& p : *part) {
            if (!ok_pair(p)) return false;
            off_diagonal = off_diagonal || p.first != p.second;
        }
    if (!off_diagonal) return false;

    for (std::size_t j = 0; j + 1 < w.left_cycle.size(); ++j)
        if (!edge2(w.left_cycle[j], w.left_cycle[j + 1])) return false;
    if (!edge2(w.left_cycle.back(), w.left_cycle.front())) return false;
    if (!edge2(w.left_cycle.back(), w.core.empty() ? w.right_cycle.front() : w.core.front()))
        return false;
    for (std::size_t j = 0; j + 1 < w.core.size(); ++j)
        if (!edge2(w.core[j], w.core[j + 1])) return false;
    if (!w.core.empty() && !edge2(w.core.back(), w.right_cycle.front())) return false;
    for (std::size_t j = 0; j + 1 < w.right_cycle.size(); ++j)
        if (!edge2(w.right_cycle[j], w.right_cycle[j + 1])) return false;
    if (!edge2(w.right_cycle.back(), w.right_cycle.front())) return false;
    return true;
}

big_int periodic_count(const sft& shift, std::size_t n) {
    if (n < 1) throw bad_argument("periodic point counting needs n >= 1");
    const std::size_t a = shift.alphabet_size;
    using mat = std::vector<std::vector<big_int>>;

    auto mul = [a](const mat& x, const mat& y) {
        mat r(a, std::vector<big_int>(a, 0));
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t k = 0; k < a; ++k) {
                if (x[i][k] == 0) continue;
                for (std::size_t j = 0; j < a; ++j) r[i][j] += x[i][k] * y[k][j];
            }
        return r;
    };

    mat base(a, std::vector<big_int>(a, 0));
    for (std::size_t i = shift.alive.first(); i < a; i = shift.alive.next(i))
        for (std::size_t j = shift.allowed[i].first(); j < a; j = shift.allowed[i].next(j))
            base[i][j] = 1;

    mat acc(a, std::vector<big_int>(a, 0));
    for (std::size_t i = 0; i < a; ++i) acc[i][i] = 1;
    std::size_t e = n;
    mat p = base;
    while (e) {
        if (e & 1) acc = mul(acc, p);
        e >>= 1;
        if (e) p = mul(p, p);
    }

    big_int trace = 0;
    for (std::size_t i = 0; i < a; ++i) trace += acc[i][i];
    return trace;
}

bool check_sft_periodic_bound(const sft& shift, const symbol_cover& c, std::size_t n) {
    sft_decision d = is_o_expansive_symbol_cover(shift, c);
    if (!d.yes)
        throw cover_not_expansive("the periodic-point bound requires an orbit-expansive cover");
    const big_int bound = boost::multiprecision::pow(big_int(c.size()), static_cast<unsigned>(n));
    return periodic_count(shift, n) <= bound;
}

sft_decision check_duplicated_shift_cover(const sft& shift, std::size_t fixed_symbol,
                                          const symbol_cover& c) {
    const std::size_t n = shift.alphabet_size;
    const point_set& designated = c.elements.back();
    if (fixed_symbol >= n || !shift.alive.contains(fixed_symbol) ||
        !shift.edge(fixed_symbol, fixed_symbol) || !designated.contains(fixed_symbol))
        throw fixed_symbol_missing(
            "the designated element must contain an alive self-looped fixed symbol");

    // Points that stay glued to the added copy of the fixed point are
    // exactly the points of the sub-shift induced on the designated
    // symbol set; the copy is separated from everything else iff that
    // sub-shift is the single fixed point.
    point_set live = designated;
    for (;;) {
        std::vector<std::size_t> kill;
        for (std::size_t x = live.first(); x < n; x = live.next(x)) {
            bool has_out = shift.allowed[x].intersects(live);
            bool has_in = false;
            for (std::size_t y = live.first(); y < n && !has_in; y = live.next(y))
                has_in = shift.edge(y, x);
            if (!has_out || !has_in) kill.push_back(x);
        }
        if (kill.empty()) break;
        for (std::size_t x : kill) live.erase(x);
    }

    if (live.count() > 1) {
        std::size_t z = live.first();
        if (z == fixed_symbol) z = live.next(z);
        auto smallest_succ = [&](std::size_t x) { return (shift.allowed[x] & live).first(); };
        auto smallest_pred = [&](std::size_t x) {
            for (std::size_t y = live.first(); y < n; y = live.next(y))
                if (shift.edge(y, x)) return y;
            return n; // unreachable: live is bi-essential
        };
        ray fwd = walk_ray(z, smallest_succ);
        ray back = walk_ray(z, smallest_pred);
        dup_point_cert w;
        w.left_cycle.assign(back.cycle.rbegin(), back.cycle.rend());
        w.core.assign(back.transient.rbegin(), back.transient.rend());
        w.core.push_back(z);
        w.core.insert(w.core.end(), fwd.transient.begin(), fwd.transient.end());
        w.right_cycle = fwd.cycle;
        return {false, std::move(w)};
    }

    sft_decision pairs = is_o_expansive_symbol_cover(shift, c);
    if (!pairs.yes) return pairs;
    return {true, {}};
}

bool check_dup_point(const sft& shift, std::size_t fixed_symbol, const symbol_cover& c,
                     const dup_point_cert& w) {
    if (w.left_cycle.empty() || w.right_cycle.empty()) return false;
    const std::size_t n = shift.alphabet_size;
    const point_set& designated = c.elements.back();

    bool differs = false;
    for (const auto* part : {&w.left_cycle, &w.core, &w.right_cycle})
        for (std::size_t x : *part) {
            if (x >= n || !shift.alive.contains(x) || !designated.contains(x)) return false;
            differs = differs || x != fixed_symbol;
        }
    if (!differs) return false;

    for (std::size_t j = 0; j + 1 < w.left_cycle.size(); ++j)
        if (!shift.edge(w.left_cycle[j], w.left_cycle[j + 1])) return false;
    if (!shift.edge(w.left_cycle.back(), w.left_cycle.front())) return false;
    if (!shift.edge(w.left_cycle.back(),
                    w.core.empty() ? w.right_cycle.front() : w.core.front()))
        return false;
    for (std::size_t j = 0; j + 1 < w.core.size(); ++j)
        if (!shift.edge(w.core[j], w.core[j + 1])) return false;
    if (!w.core.empty() && !shift.edge(w.core.back(), w.right_cycle.front())) return false;
    for (std::size_t j = 0; j + 1 < w.right_cycle.size(); ++j)
        if (!shift.edge(w.right_cycle[j], w.right_cycle[j + 1])) return false;
    if (!shift.edge(w.right_cycle.back(), w.right_cycle.front())) return false;
    return true;
}

point_set trimmed_pair_nodes(const sft& shift, const symbol_cover& c) {
    return build_trimmed_pairs(shift, c).nodes;
}

std::string sft_certificate_to_string(const sft_certificate& cert) {
    struct visitor {
        std::string operator()(std::monostate) const { return "(none)"; }
        std::string operator()(const pair_lasso_cert& w) const {
            if (w.periodic()) return "periodic pair " + pairs_to_string(w.left_cycle);
            return "pair lasso left=" + pairs_to_string(w.left_cycle) +
                   " core=" + pairs_to_string(w.core) +
                   " right=" + pairs_to_string(w.right_cycle);
        }
        std::string operator()(const dup_point_cert& w) const {
            return "glued point left=" + list_to_string(w.left_cycle) +
                   " core=" + list_to_string(w.core) + " right=" + list_to_string(w.right_cycle);
        }
    };
    return std::visit(visitor{}, cert);
}

} // namespace expanso
