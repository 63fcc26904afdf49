#include "expanso/dynamics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "expanso/errors.hpp"

namespace expanso {

namespace {

std::size_t cycle_length(const homeo& f, std::size_t p) {
    std::size_t len = 1;
    for (std::size_t q = f.perm[p]; q != p; q = f.perm[q]) ++len;
    return len;
}

std::vector<point_set> sorted_unique(std::vector<point_set> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

/// Images f^j(U_k) and f^{-j}(U_k) for j mod order(f); window
/// computations only ever need these residues.
struct residue_images {
    std::size_t order;
    std::vector<std::vector<point_set>> fwd; ///< fwd[j][k] = f^j(U_k)
    std::vector<std::vector<point_set>> bwd; ///< bwd[j][k] = f^-j(U_k)

    residue_images(const homeo& f, const cover& c) : order(f.order()) {
        fwd.resize(order);
        bwd.resize(order);
        fwd[0] = c.elements;
        bwd[0] = c.elements;
        for (std::size_t j = 1; j < order; ++j) {
            fwd[j].reserve(c.size());
            bwd[j].reserve(c.size());
            for (std::size_t k = 0; k < c.size(); ++k) {
                fwd[j].push_back(f.image(fwd[j - 1][k]));
                bwd[j].push_back(f.preimage(bwd[j - 1][k]));
            }
        }
    }

    const point_set& forward(std::size_t level, std::size_t k) const {
        return fwd[level % order][k];
    }
    const point_set& backward(std::size_t level, std::size_t k) const {
        return bwd[level % order][k];
    }
};

/// One step of window refinement: all nonempty f^level(U_a) ∩ W ∩
/// f^{-level}(U_b), deduplicated.
std::vector<point_set> refine_step(const residue_images& imgs, std::size_t level,
                                   const std::vector<point_set>& family, std::size_t l) {
    std::vector<point_set> next;
    for (const point_set& w : family) {
        for (std::size_t a = 0; a < l; ++a) {
            point_set half = w & imgs.forward(level, a);
            if (half.empty()) continue;
            for (std::size_t b = 0; b < l; ++b) {
                point_set full = half & imgs.backward(level, b);
                if (!full.empty()) next.push_back(std::move(full));
            }
        }
    }
    return sorted_unique(std::move(next));
}

/// Drives the window evolution while discarding absorbed values, with
/// cycle detection on (level mod order, family).
struct evolve_outcome {
    std::optional<std::size_t> radius;
    family_cycle_cert cycle;
};

template <typename Absorbed>
evolve_outcome evolve_windows(const homeo& f, const cover& c, Absorbed&& absorbed) {
    const residue_images imgs(f, c);
    const std::size_t l = c.size();

    auto strip = [&](std::vector<point_set> family) {
        std::erase_if(family, absorbed);
        return family;
    };

    std::vector<family_state> states;
    std::map<std::pair<std::size_t, std::vector<point_set>>, std::size_t> seen;

    std::vector<point_set> family = strip(sorted_unique(c.elements));
    for (std::size_t level = 0;; ++level) {
        if (family.empty()) return {level, {}};
        states.push_back(family_state{level, family});
        auto key = std::make_pair(level % imgs.order, family);
        if (auto it = seen.find(key); it != seen.end()) {
            family_cycle_cert cert;
            cert.states = std::move(states);
            cert.repeat_of = it->second;
            return {std::nullopt, std::move(cert)};
        }
        seen.emplace(std::move(key), states.size() - 1);
        family = strip(refine_step(imgs, level + 1, family, l));
    }
}

bool small_in(const cover& target, const point_set& w) {
    for (const point_set& e : target.elements)
        if (w.is_subset_of(e)) return true;
    return false;
}

} // namespace

window_family window_cover(const homeo& f, const cover& c, std::size_t n) {
    const residue_images imgs(f, c);
    std::vector<point_set> family = sorted_unique(c.elements);
    std::erase_if(family, [](const point_set& s) { return s.empty(); });
    for (std::size_t level = 1; level <= n; ++level)
        family = refine_step(imgs, level, family, c.size());
    return window_family{n, std::move(family)};
}

decision is_o_expansive_cover(const homeo& f, const cover& c) {
    const std::size_t n = f.space.points();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            const std::size_t period = std::lcm(cycle_length(f, x), cycle_length(f, y));
            std::size_t cx = x, cy = y;
            bool trapped = true;
            for (std::size_t t = 0; t < period; ++t) {
                if (!pair_covered(c, cx, cy)) {
                    trapped = false;
                    break;
                }
                cx = f.perm[cx];
                cy = f.perm[cy];
            }
            if (trapped) return decision{false, witness_pair_cert{x, y, period}};
        }
    }
    return decision::yes_plain();
}

decision o_expansive_oracle(const homeo& f, const cover& c) {
    const std::size_t n = f.space.points();
    const std::size_t l = c.size();
    if (n > 3 || l > 3)
        throw oracle_scale_exceeded("orbit-expansivity oracle limited to 3 points and 3 "
                                    "cover elements");
    const residue_images imgs(f, c);
    const std::size_t order = imgs.order;

    // All periodic index sequences with period up to order·l. A violating
    // bi-infinite sequence can always be taken periodic (see
    // docs/periodic-sufficiency.md), so this enumeration is complete.
    for (std::size_t p = 1; p <= order * l; ++p) {
        std::vector<std::size_t> idx(p, 0);
        const std::size_t span = std::lcm(p, order);
        while (true) {
            // Stabilized bi-infinite intersection: constraints repeat
            // with period lcm(p, order), so one span decides it.
            point_set w = point_set::full(n);
            for (std::size_t j = 0; j < span && !w.empty(); ++j)
                w &= imgs.forward(j, idx[j % p]);
            if (w.count() > 1) {
                const std::size_t x = w.first();
                const std::size_t y = w.next(x);
                const std::size_t period = std::lcm(cycle_length(f, x), cycle_length(f, y));
                return decision{false, witness_pair_cert{x, y, period}};
            }
            std::size_t d = 0;
            while (d < p && ++idx[d] == l) idx[d++] = 0;
            if (d == p) break;
        }
    }
    return decision::yes_plain();
}

decision is_cover_small_decision(const finite_space& space, const point_set& s) {
    for (std::size_t p = 0; p < space.points(); ++p)
        if (s.is_subset_of(space.min_nbhd(p))) return decision{true, smallness_cert{p}};
    return decision::no_plain();
}

decision is_cover_small_oracle(const finite_space& space, const point_set& s) {
    if (space.points() > 3)
        throw oracle_scale_exceeded("cover-smallness oracle limited to 3 points");
    for (const cover& v : enumerate_covers(space))
        if (!small_in(v, s)) return decision::no_plain();
    return decision::yes_plain();
}

decision is_r_expansive_cover(const homeo& f, const cover& c) {
    const finite_space& space = f.space;
    evolve_outcome out =
        evolve_windows(f, c, [&](const point_set& w) { return cover_small(space, w); });
    if (out.radius) return decision{true, uniform_radius_cert{*out.radius}};
    return decision{false, std::move(out.cycle)};
}

decision r_expansive_oracle(const homeo& f, const cover& c) {
    const finite_space& space = f.space;
    const std::size_t n = space.points();
    const std::size_t l = c.size();
    const residue_images imgs(f, c);
    const std::size_t order = imgs.order;

    if (n <= 3 && l <= 3) {
        // Definitional regime: smallness of a window is checked against
        // every open cover of the space, tabulated once per subset.
        const std::vector<cover> all_covers = enumerate_covers(space);
        std::vector<char> small_all(std::size_t{1} << n, 1);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            point_set s(n);
            for (std::size_t p = 0; p < n; ++p)
                if ((mask >> p) & 1) s.insert(p);
            for (const cover& v : all_covers)
                if (!small_in(v, s)) {
                    small_all[mask] = 0;
                    break;
                }
        }
        auto mask_of = [&](const point_set& s) {
            std::uint64_t m = 0;
            for (std::size_t p = s.first(); p < n; p = s.next(p)) m |= std::uint64_t{1} << p;
            return m;
        };

        // Periodic sequences with period up to order·l; for each, the
        // window stabilizes within one lcm(p, order) span, and the
        // sequence admits a refining radius for every target cover iff
        // the stabilized window is small under all of them.
        for (std::size_t p = 1; p <= order * l; ++p) {
            std::vector<std::size_t> idx(p, 0);
            const std::size_t span = std::lcm(p, order);
            while (true) {
                point_set w = point_set::full(n);
                for (std::size_t j = 0; j < span && !w.empty(); ++j)
                    w &= imgs.forward(j, idx[j % p]);
                if (!small_all[mask_of(w)]) return decision::no_plain();
                std::size_t d = 0;
                while (d < p && ++idx[d] == l) idx[d++] = 0;
                if (d == p) break;
            }
        }
        return decision::yes_plain();
    }

    // Scaled regime for cross-checks on enlarged spaces: a failing
    // bi-infinite sequence can be taken periodic with period dividing
    // order(f) (docs/periodic-sufficiency.md), and sequences of period
    // dividing order(f) all arise as sequences of period exactly
    // order(f); smallness uses the minimal-neighborhood form, itself
    // pinned against brute force at 3 points.
    double budget = 1.0;
    for (std::size_t j = 0; j < order; ++j) budget *= static_cast<double>(l);
    if (n > 8 || budget > 1e7)
        throw oracle_scale_exceeded("refinement-expansivity oracle: sequence space too large");

    std::vector<std::size_t> idx(order, 0);
    while (true) {
        point_set w = point_set::full(n);
        for (std::size_t j = 0; j < order && !w.empty(); ++j) w &= imgs.forward(j, idx[j]);
        if (!cover_small(space, w)) return decision::no_plain();
        std::size_t d = 0;
        while (d < order && ++idx[d] == l) idx[d++] = 0;
        if (d == order) break;
    }
    return decision::yes_plain();
}

uniform_n_result uniform_refinement_n(const homeo& f, const cover& c, const cover& target) {
    evolve_outcome out =
        evolve_windows(f, c, [&](const point_set& w) { return small_in(target, w); });
    if (out.radius)
        return uniform_n_result{*out.radius, decision{true, uniform_radius_cert{*out.radius}}};
    return uniform_n_result{std::nullopt, decision{false, std::move(out.cycle)}};
}

decision decide_orbit_expansive(const homeo& f) {
    // The minimal-neighborhood cover refines every open cover, and orbit
    // expansivity passes to refinements, so it decides existence.
    return is_o_expansive_cover(f, canonical_cover(f.space));
}

decision decide_refinement_expansive(const homeo& f) {
    return is_r_expansive_cover(f, canonical_cover(f.space));
}

decision decide_orbit_expansive_oracle(const homeo& f) {
    if (f.space.points() > 3)
        throw oracle_scale_exceeded("existence oracle limited to 3 points");
    for (const cover& c : enumerate_covers(f.space))
        if (is_o_expansive_cover(f, c).yes) return decision::yes_plain();
    return decision::no_plain();
}

decision decide_refinement_expansive_oracle(const homeo& f) {
    if (f.space.points() > 3)
        throw oracle_scale_exceeded("existence oracle limited to 3 points");
    for (const cover& c : enumerate_covers(f.space))
        if (is_r_expansive_cover(f, c).yes) return decision::yes_plain();
    return decision::no_plain();
}

std::optional<std::size_t> min_o_expansive_cover_size(const homeo& f, std::size_t bound,
                                                      std::size_t budget) {
    if (bound < 1) throw bad_argument("cover-size bound must be at least 1");
    // No orbit-expansive cover exists at all unless the canonical cover
    // is one (refinement monotonicity).
    if (!decide_orbit_expansive(f).yes) return std::nullopt;

    const finite_space& space = f.space;
    std::vector<point_set> opens = space.open_family();
    std::erase_if(opens, [](const point_set& s) { return s.empty(); });
    const point_set whole = point_set::full(space.points());

    std::size_t nodes = 0;
    std::vector<point_set> chosen;

    // Depth-first search for a covering selection of at most `size`
    // opens, branching on the lowest uncovered point; minima are attained
    // on irredundant covers since dropping elements preserves orbit
    // expansivity.
    auto dfs = [&](auto&& self, const point_set& covered, std::size_t size) -> bool {
        if (++nodes > budget) throw search_budget_exceeded("cover-size search budget exhausted");
        if (covered == whole)
            return is_o_expansive_cover(f, cover{chosen}).yes;
        if (chosen.size() == size) return false;
        std::size_t q = 0;
        while (covered.contains(q)) ++q;
        for (const point_set& e : opens) {
            if (!e.contains(q)) continue;
            chosen.push_back(e);
            if (self(self, covered | e, size)) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (std::size_t size = 1; size <= bound; ++size) {
        chosen.clear();
        if (dfs(dfs, point_set(space.points()), size)) return size;
    }
    return std::nullopt;
}

finite_space product_space(const finite_space& space) {
    const std::size_t n = space.points();
    std::vector<point_set> nbhd(n * n, point_set(n * n));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            point_set& m = nbhd[p * n + q];
            const point_set& mp = space.min_nbhd(p);
            const point_set& mq = space.min_nbhd(q);
            for (std::size_t a = mp.first(); a < n; a = mp.next(a))
                for (std::size_t b = mq.first(); b < n; b = mq.next(b)) m.insert(a * n + b);
        }
    return finite_space(std::move(nbhd));
}

point_set diagonal_from_cover(const finite_space& space, const cover& c) {
    const std::size_t n = space.points();
    point_set d(n * n);
    for (const point_set& e : c.elements)
        for (std::size_t a = e.first(); a < n; a = e.next(a))
            for (std::size_t b = e.first(); b < n; b = e.next(b)) d.insert(a * n + b);
    return d;
}

namespace {

void validate_diagonal_nbhd(const finite_space& space, const point_set& d) {
    const std::size_t n = space.points();
    if (d.universe() != n * n)
        throw not_a_diagonal_nbhd("diagonal set lives on the wrong universe");
    for (std::size_t p = 0; p < n; ++p)
        if (!d.contains(p * n + p))
            throw not_a_diagonal_nbhd("diagonal point (" + std::to_string(p) + "," +
                                      std::to_string(p) + ") is missing");
    for (std::size_t e = d.first(); e < n * n; e = d.next(e)) {
        const std::size_t p = e / n, q = e % n;
        const point_set& mp = space.min_nbhd(p);
        const point_set& mq = space.min_nbhd(q);
        for (std::size_t a = mp.first(); a < n; a = mp.next(a))
            for (std::size_t b = mq.first(); b < n; b = mq.next(b))
                if (!d.contains(a * n + b))
                    throw not_a_diagonal_nbhd("not open in the product at (" +
                                              std::to_string(p) + "," + std::to_string(q) + ")");
    }
}

} // namespace

decision is_expansive_diagonal(const homeo& f, const point_set& d) {
    const std::size_t n = f.space.points();
    validate_diagonal_nbhd(f.space, d);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            const std::size_t period = std::lcm(cycle_length(f, x), cycle_length(f, y));
            std::size_t cx = x, cy = y;
            bool trapped = true;
            for (std::size_t t = 0; t < period; ++t) {
                if (!d.contains(cx * n + cy)) {
                    trapped = false;
                    break;
                }
                cx = f.perm[cx];
                cy = f.perm[cy];
            }
            if (trapped) return decision{false, witness_pair_cert{x, y, period}};
        }
    return decision::yes_plain();
}

cover cover_from_diagonal(const finite_space& space, const point_set& d) {
    const std::size_t n = space.points();
    validate_diagonal_nbhd(space, d);
    auto square_inside = [&](const point_set& s) {
        for (std::size_t a = s.first(); a < n; a = s.next(a))
            for (std::size_t b = s.first(); b < n; b = s.next(b))
                if (!d.contains(a * n + b)) return false;
        return true;
    };
    // M_x × M_x is the minimal product neighborhood of (x,x), hence
    // inside D; grow greedily by whole minimal neighborhoods.
    std::vector<point_set> elems;
    for (std::size_t x = 0; x < n; ++x) {
        point_set u = space.min_nbhd(x);
        for (std::size_t p = 0; p < n; ++p) {
            point_set cand = u | space.min_nbhd(p);
            if (square_inside(cand)) u = std::move(cand);
        }
        elems.push_back(std::move(u));
    }
    return make_cover(space, sorted_unique(std::move(elems)));
}

std::size_t count_periodic(const homeo& f, std::size_t n) {
    if (n < 1) throw bad_argument("period must be at least 1");
    std::size_t count = 0;
    for (std::size_t p = 0; p < f.space.points(); ++p)
        if (n % cycle_length(f, p) == 0) ++count;
    return count;
}

bool check_periodic_bound(const homeo& f, const cover& c, std::size_t n) {
    if (!is_o_expansive_cover(f, c).yes)
        throw cover_not_expansive("periodic bound requires an orbit-expansive cover");
    const std::size_t count = count_periodic(f, n);
    // l^n with saturation well past any possible point count.
    std::size_t bound = 1;
    for (std::size_t t = 0; t < n; ++t) {
        if (bound >= count) return true;
        bound *= c.size();
    }
    return count <= bound;
}

cover power_cover(const homeo& f, const cover& c, long long r) {
    if (r == 0) throw bad_argument("power exponent must be nonzero");
    const std::size_t slots = static_cast<std::size_t>(r > 0 ? r : -r);
    const long long step = r > 0 ? 1 : -1;

    // Images f^{±t}(U_k) for t < |r|.
    std::vector<std::vector<point_set>> img(slots);
    img[0] = c.elements;
    for (std::size_t t = 1; t < slots; ++t) {
        img[t].reserve(c.size());
        for (std::size_t k = 0; k < c.size(); ++k)
            img[t].push_back(step > 0 ? f.image(img[t - 1][k]) : f.preimage(img[t - 1][k]));
    }

    // Accumulate slot by slot with value deduplication: the set of
    // reachable intersection values is what matters, not the index
    // sequences that realize them.
    std::vector<point_set> family = sorted_unique(c.elements);
    for (std::size_t t = 1; t < slots; ++t) {
        std::vector<point_set> next;
        for (const point_set& w : family)
            for (std::size_t k = 0; k < c.size(); ++k) {
                point_set cand = w & img[t][k];
                if (!cand.empty()) next.push_back(std::move(cand));
            }
        family = sorted_unique(std::move(next));
    }
    return make_cover(f.space, std::move(family));
}

bool check_power_equivalence(const homeo& f, long long r) {
    const homeo g = homeo_power(f, r);
    if (decide_orbit_expansive(f).yes != decide_orbit_expansive(g).yes) return false;
    const cover canon = canonical_cover(f.space);
    if (is_o_expansive_cover(f, canon).yes &&
        !is_o_expansive_cover(g, power_cover(f, canon, r)).yes)
        return false;
    return true;
}

restriction restrict(const homeo& f, const point_set& carrier) {
    if (f.image(carrier) != carrier)
        throw not_invariant("carrier " + carrier.to_string() + " is not invariant");
    subspace_result sub = subspace(f.space, carrier);
    std::vector<std::size_t> perm(sub.to_ambient.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = sub.from_ambient[f.perm[sub.to_ambient[i]]];
    return restriction{make_homeo(std::move(sub.space), std::move(perm)),
                       std::move(sub.to_ambient)};
}

cover restrict_cover(const restriction& r, const cover& c) {
    const std::size_t m = r.to_ambient.size();
    std::vector<point_set> elems;
    for (const point_set& e : c.elements) {
        point_set t(m);
        for (std::size_t i = 0; i < m; ++i)
            if (e.contains(r.to_ambient[i])) t.insert(i);
        if (!t.empty()) elems.push_back(std::move(t));
    }
    return make_cover(r.map.space, std::move(elems));
}

// ---- certificate checkers -------------------------------------------------

bool check_witness_pair(const homeo& f, const cover& c, const witness_pair_cert& w) {
    const std::size_t n = f.space.points();
    if (w.x >= n || w.y >= n || w.x == w.y || w.period == 0) return false;
    std::size_t cx = w.x, cy = w.y;
    for (std::size_t t = 0; t < w.period; ++t) {
        if (!pair_covered(c, cx, cy)) return false;
        cx = f.perm[cx];
        cy = f.perm[cy];
    }
    return cx == w.x && cy == w.y;
}

bool check_uniform_radius(const homeo& f, const cover& c, const cover& target,
                          const uniform_radius_cert& u) {
    const window_family at = window_cover(f, c, u.radius);
    for (const point_set& w : at.sets)
        if (!small_in(target, w)) return false;
    if (u.radius > 0) {
        const window_family before = window_cover(f, c, u.radius - 1);
        bool some_large = false;
        for (const point_set& w : before.sets)
            if (!small_in(target, w)) {
                some_large = true;
                break;
            }
        if (!some_large) return false;
    }
    return true;
}

bool check_family_cycle(const homeo& f, const cover& c, const cover& target,
                        const family_cycle_cert& cyc) {
    if (cyc.states.empty() || cyc.repeat_of + 1 >= cyc.states.size()) return false;
    const residue_images imgs(f, c);

    auto strip = [&](std::vector<point_set> family) {
        std::erase_if(family, [&](const point_set& w) { return small_in(target, w); });
        return family;
    };

    std::vector<point_set> family = strip(sorted_unique(c.elements));
    for (std::size_t i = 0; i < cyc.states.size(); ++i) {
        if (family.empty()) return false;
        if (cyc.states[i].level != i || cyc.states[i].family != family) return false;
        if (i + 1 < cyc.states.size())
            family = strip(refine_step(imgs, i + 1, family, c.size()));
    }
    const family_state& last = cyc.states.back();
    const family_state& earlier = cyc.states[cyc.repeat_of];
    return last.family == earlier.family &&
           last.level % imgs.order == earlier.level % imgs.order;
}

bool check_smallness(const finite_space& space, const point_set& s, const smallness_cert& w) {
    return w.point < space.points() && s.is_subset_of(space.min_nbhd(w.point));
}

std::string certificate_to_string(const certificate& cert) {
    struct visitor {
        std::string operator()(const std::monostate&) const { return "none"; }
        std::string operator()(const witness_pair_cert& w) const {
            return "witness pair (" + std::to_string(w.x) + ", " + std::to_string(w.y) +
                   ") with period " + std::to_string(w.period);
        }
        std::string operator()(const uniform_radius_cert& u) const {
            return "uniform radius " + std::to_string(u.radius);
        }
        std::string operator()(const family_cycle_cert& cyc) const {
            std::string s = "family cycle: radius " +
                            std::to_string(cyc.states.back().level) + " repeats radius " +
                            std::to_string(cyc.states[cyc.repeat_of].level) + ", families";
            for (const family_state& st : cyc.states) {
                s += " [";
                for (std::size_t i = 0; i < st.family.size(); ++i) {
                    if (i) s += " ";
                    s += st.family[i].to_string();
                }
                s += "]";
            }
            return s;
        }
        std::string operator()(const smallness_cert& w) const {
            return "inside the minimal neighborhood of point " + std::to_string(w.point);
        }
    };
    return std::visit(visitor{}, cert);
}

} // namespace expanso
