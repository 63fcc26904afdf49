#include "expanso/homeo.hpp"

#include <algorithm>
#include <numeric>

#include "expanso/errors.hpp"

namespace expanso {

point_set homeo::image(const point_set& s) const {
    point_set r(s.universe());
    for (std::size_t p = s.first(); p < s.universe(); p = s.next(p)) r.insert(perm[p]);
    return r;
}

point_set homeo::preimage(const point_set& s) const {
    point_set r(s.universe());
    for (std::size_t p = s.first(); p < s.universe(); p = s.next(p)) r.insert(inv[p]);
    return r;
}

std::size_t homeo::power_apply(std::size_t p, long long k) const {
    if (k >= 0) {
        for (long long t = 0; t < k; ++t) p = perm[p];
    } else {
        for (long long t = 0; t < -k; ++t) p = inv[p];
    }
    return p;
}

point_set homeo::power_image(const point_set& s, long long k) const {
    // Reduce |k| modulo the cycle length pointwise instead of the global
    // order; cheap enough at these sizes to just iterate.
    point_set r(s.universe());
    for (std::size_t p = s.first(); p < s.universe(); p = s.next(p)) r.insert(power_apply(p, k));
    return r;
}

std::size_t homeo::order() const {
    const std::size_t n = perm.size();
    std::vector<char> seen(n, 0);
    std::size_t ord = 1;
    for (std::size_t p = 0; p < n; ++p) {
        if (seen[p]) continue;
        std::size_t len = 0, q = p;
        do {
            seen[q] = 1;
            q = perm[q];
            ++len;
        } while (q != p);
        ord = std::lcm(ord, len);
    }
    return ord;
}

homeo make_homeo(finite_space space, std::vector<std::size_t> perm) {
    const std::size_t n = space.points();
    if (perm.size() != n) throw not_a_topology("permutation has wrong length");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t p = 0; p < n; ++p) {
        if (perm[p] >= n || inv[perm[p]] != n)
            throw not_a_topology("map is not a permutation of the points");
        inv[perm[p]] = p;
    }
    // Bicontinuity for a bijection of a finite space: the image of every
    // minimal neighborhood is the minimal neighborhood of the image.
    for (std::size_t p = 0; p < n; ++p) {
        point_set img(n);
        for (std::size_t q = space.min_nbhd(p).first(); q < n; q = space.min_nbhd(p).next(q))
            img.insert(perm[q]);
        if (img != space.min_nbhd(perm[p]))
            throw not_continuous("image of the minimal neighborhood of point " +
                                 std::to_string(p) + " is " + img.to_string() +
                                 ", not the minimal neighborhood " +
                                 space.min_nbhd(perm[p]).to_string() + " of its image");
    }
    return homeo{std::move(space), std::move(perm), std::move(inv)};
}

homeo identity_homeo(finite_space space) {
    std::vector<std::size_t> id(space.points());
    std::iota(id.begin(), id.end(), 0);
    return make_homeo(std::move(space), std::move(id));
}

homeo homeo_power(const homeo& f, long long k) {
    const std::size_t n = f.perm.size();
    std::vector<std::size_t> p(n);
    for (std::size_t q = 0; q < n; ++q) p[q] = f.power_apply(q, k);
    return make_homeo(f.space, std::move(p));
}

homeo homeo_inverse(const homeo& f) { return homeo{f.space, f.inv, f.perm}; }

t0_quotient_result t0_quotient(const homeo& f) {
    const finite_space& space = f.space;
    const std::size_t n = space.points();

    std::vector<std::size_t> cls(n, n);
    std::vector<std::size_t> reps;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t r = 0; r < reps.size(); ++r)
            if (space.min_nbhd(p) == space.min_nbhd(reps[r])) {
                cls[p] = r;
                break;
            }
        if (cls[p] == n) {
            cls[p] = reps.size();
            reps.push_back(p);
        }
    }

    const std::size_t m = reps.size();
    std::vector<point_set> nbhd(m, point_set(m));
    for (std::size_t r = 0; r < m; ++r) {
        const point_set& src = space.min_nbhd(reps[r]);
        for (std::size_t q = src.first(); q < n; q = src.next(q)) nbhd[r].insert(cls[q]);
    }
    finite_space quotient(std::move(nbhd));

    // f descends: points with equal minimal neighborhoods map to points
    // with equal minimal neighborhoods.
    std::vector<std::size_t> qperm(m);
    for (std::size_t r = 0; r < m; ++r) qperm[r] = cls[f.perm[reps[r]]];
    homeo qmap = make_homeo(quotient, std::move(qperm));
    return t0_quotient_result{std::move(quotient), std::move(qmap), std::move(cls)};
}

} // namespace expanso
