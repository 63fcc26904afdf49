#include "expanso/topology.hpp"

#include <algorithm>
#include <cassert>

#include "expanso/errors.hpp"

namespace expanso {

finite_space::finite_space(std::vector<point_set> min_nbhd) : min_nbhd_(std::move(min_nbhd)) {
    const std::size_t n = min_nbhd_.size();
    if (n == 0) throw empty_space("a finite space needs at least one point");
    for (std::size_t p = 0; p < n; ++p) {
        if (min_nbhd_[p].universe() != n)
            throw not_a_topology("min_nbhd[" + std::to_string(p) + "] has wrong universe size");
        if (!min_nbhd_[p].contains(p))
            throw not_a_topology("point " + std::to_string(p) + " is missing from its own minimal neighborhood");
    }
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = min_nbhd_[p].first(); q < n; q = min_nbhd_[p].next(q)) {
            if (!min_nbhd_[q].is_subset_of(min_nbhd_[p]))
                throw not_a_topology("minimal neighborhoods not transitive at points " +
                                     std::to_string(p) + ", " + std::to_string(q));
        }
    }
}

bool finite_space::is_open(const point_set& s) const {
    for (std::size_t p = s.first(); p < points(); p = s.next(p))
        if (!min_nbhd_[p].is_subset_of(s)) return false;
    return true;
}

point_set finite_space::closure(const point_set& s) const {
    point_set r(points());
    for (std::size_t p = 0; p < points(); ++p)
        if (min_nbhd_[p].intersects(s)) r.insert(p);
    return r;
}

bool finite_space::is_closed(const point_set& s) const { return closure(s) == s; }

std::vector<point_set> finite_space::open_family() const {
    const std::size_t n = points();
    if (n > kOpenFamilyCap)
        throw scale_cap("open family materialization capped at " +
                        std::to_string(kOpenFamilyCap) + " points");
    // Opens are exactly the unions of minimal neighborhoods: grow the
    // family from {empty} by adjoining one M_p at a time.
    std::vector<point_set> family{point_set(n)};
    for (std::size_t p = 0; p < n; ++p) {
        std::vector<point_set> next = family;
        for (const point_set& w : family) next.push_back(w | min_nbhd_[p]);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        family = std::move(next);
    }
    return family;
}

std::vector<point_set> finite_space::canonical_cover_sets() const {
    std::vector<point_set> sets = min_nbhd_;
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

bool finite_space::is_discrete() const {
    for (std::size_t p = 0; p < points(); ++p)
        if (min_nbhd_[p].count() != 1) return false;
    return true;
}

finite_space space_from_open_family(std::size_t n, const std::vector<point_set>& family) {
    if (n == 0) throw empty_space("n = 0");
    for (const point_set& s : family)
        if (s.universe() != n) throw not_a_topology("family member has wrong universe size");

    std::vector<point_set> sorted = family;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const point_set empty(n);
    const point_set whole = point_set::full(n);
    auto member = [&](const point_set& s) {
        return std::binary_search(sorted.begin(), sorted.end(), s);
    };
    if (!member(empty)) throw not_a_topology("family does not contain the empty set");
    if (!member(whole)) throw not_a_topology("family does not contain the whole space");
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (!member(sorted[i] | sorted[j]))
                throw not_a_topology("family not closed under union: " + sorted[i].to_string() +
                                     " and " + sorted[j].to_string());
            if (!member(sorted[i] & sorted[j]))
                throw not_a_topology("family not closed under intersection: " +
                                     sorted[i].to_string() + " and " + sorted[j].to_string());
        }
    }

    std::vector<point_set> min_nbhd(n, whole);
    for (const point_set& s : sorted)
        for (std::size_t p = s.first(); p < n; p = s.next(p)) min_nbhd[p] &= s;
    return finite_space(std::move(min_nbhd));
}

separation_record separation_axioms(const finite_space& space) {
    const std::size_t n = space.points();
    separation_record rec;

    rec.t0 = true;
    for (std::size_t p = 0; p < n && rec.t0; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            if (space.min_nbhd(p) == space.min_nbhd(q)) {
                rec.t0 = false;
                break;
            }

    rec.t1 = true;
    for (std::size_t p = 0; p < n; ++p)
        if (space.min_nbhd(p).count() != 1) {
            rec.t1 = false;
            break;
        }

    rec.hausdorff = true;
    for (std::size_t p = 0; p < n && rec.hausdorff; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            if (space.min_nbhd(p).intersects(space.min_nbhd(q))) {
                rec.hausdorff = false;
                break;
            }

    // On finite spaces Hausdorff and T1 both collapse to discreteness.
    assert(rec.hausdorff == rec.t1);
    return rec;
}

subspace_result subspace(const finite_space& space, const point_set& carrier) {
    if (carrier.empty()) throw empty_space("subspace carrier is empty");
    const std::size_t n = space.points();
    const std::size_t m = carrier.count();

    subspace_result res{finite_space(std::vector<point_set>{point_set::of(1, {0})}), {}, {}};
    res.to_ambient.reserve(m);
    res.from_ambient.assign(n, subspace_result::npos);
    for (std::size_t p = carrier.first(); p < n; p = carrier.next(p)) {
        res.from_ambient[p] = res.to_ambient.size();
        res.to_ambient.push_back(p);
    }

    std::vector<point_set> trace(m, point_set(m));
    for (std::size_t i = 0; i < m; ++i) {
        point_set cut = space.min_nbhd(res.to_ambient[i]) & carrier;
        for (std::size_t p = cut.first(); p < n; p = cut.next(p))
            trace[i].insert(res.from_ambient[p]);
    }
    res.space = finite_space(std::move(trace));
    return res;
}

namespace {

// Largest ambient open V with V ∩ Y ⊆ U; the candidate extensions of a
// trace-open U are closed under union, so this is the one that matters.
point_set maximal_extension(const finite_space& ambient, const point_set& carrier,
                            const point_set& trace_open) {
    point_set v(ambient.points());
    for (std::size_t p = 0; p < ambient.points(); ++p) {
        point_set cut = ambient.min_nbhd(p) & carrier;
        if (cut.is_subset_of(trace_open)) v |= ambient.min_nbhd(p);
    }
    return v;
}

// Distinct nonempty trace-opens of Y, as subsets of the carrier in
// ambient coordinates.
std::vector<point_set> trace_opens(const finite_space& ambient, const point_set& carrier) {
    std::vector<point_set> out;
    for (const point_set& w : ambient.open_family()) {
        point_set cut = w & carrier;
        if (!cut.empty()) out.push_back(cut);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool covers(const std::vector<point_set>& sets, const std::vector<std::size_t>& idx,
            const point_set& target) {
    point_set u(target.universe());
    for (std::size_t i : idx) u |= sets[i];
    return target.is_subset_of(u);
}

} // namespace

extension_decision is_extension_closed(const subspace_pair& sub) {
    const finite_space& ambient = sub.ambient;
    const point_set& carrier = sub.carrier;
    if (carrier.empty()) throw empty_space("extension-closed decision on empty carrier");

    const std::vector<point_set> opens = trace_opens(ambient, carrier);
    std::vector<point_set> max_ext(opens.size());
    for (std::size_t i = 0; i < opens.size(); ++i)
        max_ext[i] = maximal_extension(ambient, carrier, opens[i]);

    const point_set whole = point_set::full(ambient.points());

    // Enumerate irredundant covers of Y (no element removable while still
    // covering); every cover of Y contains one, and adjoining elements
    // only adds extension candidates.
    extension_decision dec;
    dec.yes = true;
    std::vector<std::size_t> chosen;
    std::vector<char> used(opens.size(), 0);

    // Recursive descent: always pick an element containing the lowest
    // point of Y not yet covered; enforce irredundancy at the end.
    auto search = [&](auto&& self, point_set covered, std::size_t min_idx) -> bool {
        if (carrier.is_subset_of(covered)) {
            // Irredundancy check.
            for (std::size_t drop = 0; drop < chosen.size(); ++drop) {
                point_set rest(carrier.universe());
                for (std::size_t i = 0; i < chosen.size(); ++i)
                    if (i != drop) rest |= opens[chosen[i]];
                if (carrier.is_subset_of(rest)) return false; // redundant, skip
            }
            point_set ext_union(ambient.points());
            for (std::size_t i : chosen) ext_union |= max_ext[i];
            if (ext_union != whole) {
                dec.yes = false;
                for (std::size_t i : chosen) dec.witness_cover.push_back(opens[i]);
                return true; // stop at first witness
            }
            return false;
        }
        for (std::size_t i = min_idx; i < opens.size(); ++i) {
            if (opens[i].is_subset_of(covered)) continue;
            chosen.push_back(i);
            if (self(self, covered | opens[i], i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    search(search, point_set(ambient.points()), 0);
    return dec;
}

extension_decision is_extension_closed_oracle(const subspace_pair& sub) {
    const finite_space& ambient = sub.ambient;
    const point_set& carrier = sub.carrier;
    if (ambient.points() > 3)
        throw oracle_scale_exceeded("extension-closed oracle limited to 3 ambient points");
    if (carrier.empty()) throw empty_space("extension-closed oracle on empty carrier");

    const std::vector<point_set> opens = trace_opens(ambient, carrier);
    std::vector<point_set> ambient_opens = ambient.open_family();
    const point_set whole = point_set::full(ambient.points());

    // All covers of Y, including redundant ones; for each, all assignments
    // of ambient opens with the right trace.
    const std::size_t k = opens.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1) idx.push_back(i);
        if (!covers(opens, idx, carrier)) continue;

        // Candidates per chosen trace-open.
        std::vector<std::vector<point_set>> cands(idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (const point_set& v : ambient_opens)
                if ((v & carrier) == opens[idx[j]]) cands[j].push_back(v);

        bool extended = false;
        std::vector<std::size_t> pick(idx.size(), 0);
        auto assign = [&](auto&& self, std::size_t j, point_set acc) -> bool {
            if (acc == whole) return true; // remaining picks can only help
            if (j == idx.size()) return false;
            for (const point_set& v : cands[j])
                if (self(self, j + 1, acc | v)) return true;
            return false;
        };
        extended = assign(assign, 0, point_set(ambient.points()));
        if (!extended) {
            extension_decision dec;
            dec.yes = false;
            for (std::size_t i : idx) dec.witness_cover.push_back(opens[i]);
            return dec;
        }
    }
    return extension_decision{true, {}};
}

} // namespace expanso
