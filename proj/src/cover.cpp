#include "expanso/cover.hpp"

#include <algorithm>

#include "expanso/errors.hpp"

namespace expanso {

std::string cover::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i) s += ", ";
        s += elements[i].to_string();
    }
    return s + "}";
}

cover make_cover(const finite_space& space, std::vector<point_set> elements) {
    std::vector<point_set> kept;
    point_set covered(space.points());
    for (point_set& e : elements) {
        if (e.universe() != space.points())
            throw not_a_topology("cover element has wrong universe size");
        if (e.empty()) continue;
        if (!space.is_open(e))
            throw not_a_topology("cover element " + e.to_string() + " is not open");
        covered |= e;
        kept.push_back(std::move(e));
    }
    if (covered != point_set::full(space.points()))
        throw cover_gap("cover misses points " +
                        (point_set::full(space.points()) - covered).to_string());
    return cover{std::move(kept)};
}

cover canonical_cover(const finite_space& space) {
    return cover{space.canonical_cover_sets()};
}

cover trivial_cover(const finite_space& space) {
    return cover{{point_set::full(space.points())}};
}

bool refines(const cover& fine, const cover& coarse) {
    for (const point_set& a : fine.elements) {
        bool inside = a.empty();
        for (const point_set& b : coarse.elements)
            if (a.is_subset_of(b)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

bool pair_covered(const cover& c, std::size_t x, std::size_t y) {
    for (const point_set& e : c.elements)
        if (e.contains(x) && e.contains(y)) return true;
    return false;
}

bool set_covered(const cover& c, const point_set& s) {
    for (const point_set& e : c.elements)
        if (s.is_subset_of(e)) return true;
    return false;
}

bool cover_small(const finite_space& space, const point_set& s) {
    // s sits inside an element of every open cover iff it sits inside
    // some minimal neighborhood: the covers {M_p : p} pick out exactly
    // those, and any open superset of an M_p works for any other cover.
    for (std::size_t p = 0; p < space.points(); ++p)
        if (s.is_subset_of(space.min_nbhd(p))) return true;
    return false;
}

std::size_t cover_small_witness(const finite_space& space, const point_set& s) {
    for (std::size_t p = 0; p < space.points(); ++p)
        if (s.is_subset_of(space.min_nbhd(p))) return p;
    throw cover_gap("set " + s.to_string() + " is not cover-small");
}

namespace {

std::vector<point_set> nonempty_opens(const finite_space& space) {
    std::vector<point_set> opens = space.open_family();
    std::erase_if(opens, [](const point_set& s) { return s.empty(); });
    return opens;
}

} // namespace

std::vector<cover> enumerate_covers(const finite_space& space) {
    if (space.points() > kCoverEnumCap)
        throw scale_cap("cover enumeration capped at " + std::to_string(kCoverEnumCap) +
                        " points");
    const std::vector<point_set> opens = nonempty_opens(space);
    const point_set whole = point_set::full(space.points());
    const std::size_t k = opens.size();

    std::vector<cover> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        point_set u(space.points());
        std::vector<point_set> elems;
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1) {
                u |= opens[i];
                elems.push_back(opens[i]);
            }
        if (u == whole) out.push_back(cover{std::move(elems)});
    }
    return out;
}

std::vector<cover> enumerate_irredundant_covers(const finite_space& space) {
    std::vector<cover> all = enumerate_covers(space);
    std::vector<cover> out;
    for (cover& c : all) {
        bool irredundant = true;
        for (std::size_t drop = 0; drop < c.size() && irredundant; ++drop) {
            point_set rest(space.points());
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != drop) rest |= c.elements[i];
            if (rest == point_set::full(space.points())) irredundant = false;
        }
        if (irredundant) out.push_back(std::move(c));
    }
    return out;
}

} // namespace expanso
