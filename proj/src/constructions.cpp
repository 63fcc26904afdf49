#include "expanso/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "expanso/errors.hpp"

namespace expanso {

std::size_t duplication::copy(std::size_t k) const {
    if (!k_set.contains(k)) throw bad_argument("point " + std::to_string(k) + " is not in K");
    std::size_t rank = 0;
    for (std::size_t p = k_set.first(); p < k; p = k_set.next(p)) ++rank;
    return copy_of[rank];
}

point_set duplication::lift(const point_set& s) const {
    point_set r(result_space.points());
    for (std::size_t p = s.first(); p < s.universe(); p = s.next(p)) r.insert(p);
    return r;
}

namespace {

std::vector<point_set> close_under_union_intersection(std::vector<point_set> family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<point_set> fresh;
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i + 1; j < family.size(); ++j) {
                point_set u = family[i] | family[j];
                point_set w = family[i] & family[j];
                if (!std::binary_search(family.begin(), family.end(), u)) fresh.push_back(u);
                if (!std::binary_search(family.begin(), family.end(), w)) fresh.push_back(w);
            }
        if (!fresh.empty()) {
            grew = true;
            family.insert(family.end(), fresh.begin(), fresh.end());
            std::sort(family.begin(), family.end());
            family.erase(std::unique(family.begin(), family.end()), family.end());
        }
    }
    return family;
}

} // namespace

duplication duplicate(const finite_space& space, const homeo& f, const point_set& k_set) {
    if (!space.is_closed(k_set))
        throw not_closed("K = " + k_set.to_string() + " is not closed");
    if (f.image(k_set) != k_set)
        throw not_invariant("K = " + k_set.to_string() + " is not invariant");

    const std::size_t n = space.points();
    const std::size_t kn = k_set.count();
    const std::size_t total = n + kn;

    std::vector<std::size_t> copy_of;
    std::vector<std::size_t> rank_of(n, n);
    copy_of.reserve(kn);
    for (std::size_t p = k_set.first(); p < n; p = k_set.next(p)) {
        rank_of[p] = copy_of.size();
        copy_of.push_back(n + copy_of.size());
    }

    auto lift = [&](const point_set& s) {
        point_set r(total);
        for (std::size_t p = s.first(); p < n; p = s.next(p)) r.insert(p);
        return r;
    };
    auto copies = [&](const point_set& s) {
        point_set r(total);
        point_set cut = s & k_set;
        for (std::size_t p = cut.first(); p < n; p = cut.next(p)) r.insert(n + rank_of[p]);
        return r;
    };

    // Generate the three defining families, then close under union and
    // intersection — the union of the three alone need not be closed.
    std::vector<point_set> family;
    for (const point_set& w : space.open_family()) {
        family.push_back(lift(w));
        family.push_back(lift(w) | copies(w));
        family.push_back(lift(w - k_set) | copies(w));
    }
    finite_space result = space_from_open_family(total, close_under_union_intersection(family));

    std::vector<std::size_t> perm(total);
    for (std::size_t p = 0; p < n; ++p) perm[p] = f.perm[p];
    for (std::size_t p = k_set.first(); p < n; p = k_set.next(p))
        perm[n + rank_of[p]] = n + rank_of[f.perm[p]];
    homeo result_map = make_homeo(result, std::move(perm));

    return duplication{space, f, k_set, std::move(result), std::move(result_map),
                       std::move(copy_of)};
}

cover duplicated_cover(const duplication& dup, const cover& c) {
    const std::size_t n = dup.base_space.points();
    std::vector<point_set> elems;
    for (const point_set& u : c.elements) elems.push_back(dup.lift(u));
    for (const point_set& u : c.elements) {
        point_set doubled = dup.lift(u - dup.k_set);
        point_set cut = u & dup.k_set;
        for (std::size_t p = cut.first(); p < n; p = cut.next(p)) doubled.insert(dup.copy(p));
        elems.push_back(std::move(doubled));
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return make_cover(dup.result_space, std::move(elems));
}

std::pair<finite_space, homeo> chain_space(std::size_t m) {
    if (m < 1) throw empty_space("chain needs at least one point");
    std::vector<point_set> nbhd;
    nbhd.reserve(m);
    for (std::size_t p = 0; p < m; ++p) {
        point_set up(m);
        for (std::size_t q = p; q < m; ++q) up.insert(q);
        nbhd.push_back(std::move(up));
    }
    finite_space space(std::move(nbhd));
    homeo id = identity_homeo(space);
    return {std::move(space), std::move(id)};
}

std::pair<finite_space, homeo> indiscrete_example(std::size_t m,
                                                  const std::vector<std::size_t>& perm) {
    if (m < 1) throw empty_space("indiscrete example needs at least one point");
    std::vector<point_set> nbhd(m, point_set::full(m));
    finite_space space(std::move(nbhd));
    homeo map = make_homeo(space, perm);
    return {std::move(space), std::move(map)};
}

void enumerate_spaces(std::size_t m, const std::function<bool(const finite_space&)>& yield) {
    if (m < 1) throw empty_space("enumeration needs at least one point");
    if (m > kEnumCap)
        throw scale_cap("space enumeration capped at " + std::to_string(kEnumCap) + " points");

    // Rows are minimal neighborhoods encoded as masks; candidates for row
    // p are the masks containing p, in increasing mask order.
    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    std::vector<std::vector<std::uint32_t>> candidates(m);
    for (std::size_t p = 0; p < m; ++p)
        for (std::uint32_t mask = 0; mask <= full; ++mask)
            if (mask & (std::uint32_t{1} << p)) candidates[p].push_back(mask);

    std::vector<std::size_t> pick(m, 0);
    std::vector<std::uint32_t> row(m);
    while (true) {
        for (std::size_t p = 0; p < m; ++p) row[p] = candidates[p][pick[p]];
        bool transitive = true;
        for (std::size_t p = 0; p < m && transitive; ++p)
            for (std::size_t q = 0; q < m; ++q)
                if ((row[p] >> q) & 1)
                    if (row[q] & ~row[p]) {
                        transitive = false;
                        break;
                    }
        if (transitive) {
            std::vector<point_set> nbhd;
            nbhd.reserve(m);
            for (std::size_t p = 0; p < m; ++p) {
                point_set s(m);
                for (std::size_t q = 0; q < m; ++q)
                    if ((row[p] >> q) & 1) s.insert(q);
                nbhd.push_back(std::move(s));
            }
            if (!yield(finite_space(std::move(nbhd)))) return;
        }
        std::size_t d = 0;
        while (d < m && ++pick[d] == candidates[d].size()) pick[d++] = 0;
        if (d == m) return;
    }
}

std::size_t count_spaces(std::size_t m) {
    std::size_t count = 0;
    enumerate_spaces(m, [&](const finite_space&) {
        ++count;
        return true;
    });
    return count;
}

std::vector<homeo> enumerate_homeos(const finite_space& space) {
    const std::size_t n = space.points();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<homeo> out;
    do {
        bool preserves = true;
        for (std::size_t p = 0; p < n && preserves; ++p) {
            point_set img(n);
            const point_set& mp = space.min_nbhd(p);
            for (std::size_t q = mp.first(); q < n; q = mp.next(q)) img.insert(perm[q]);
            preserves = img == space.min_nbhd(perm[p]);
        }
        if (preserves) out.push_back(make_homeo(space, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<point_set> enumerate_closed_invariant_sets(const homeo& f) {
    const std::size_t n = f.space.points();
    std::vector<point_set> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        point_set s(n);
        for (std::size_t p = 0; p < n; ++p)
            if ((mask >> p) & 1) s.insert(p);
        if (f.space.is_closed(s) && f.image(s) == s) out.push_back(std::move(s));
    }
    return out;
}

} // namespace expanso
