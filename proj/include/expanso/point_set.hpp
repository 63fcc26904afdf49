#ifndef EXPANSO_POINT_SET_HPP
#define EXPANSO_POINT_SET_HPP

#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace expanso {

/// A subset of the points [0, n) of one space, stored as a bit vector.
/// Sets up to 128 points live inline; larger universes spill to the heap.
/// All binary operations require both operands to share the same universe
/// size n.
class point_set {
public:
    point_set() = default;

    /// The empty subset of a universe with n points.
    explicit point_set(std::size_t n) : n_(n) {
        if (words() > kInline) heap_.resize(words(), 0);
    }

    /// Universe size (number of points of the owning space).
    std::size_t universe() const { return n_; }

    bool contains(std::size_t p) const {
        return (word(p >> 6) >> (p & 63)) & 1u;
    }

    void insert(std::size_t p) { word(p >> 6) |= std::uint64_t{1} << (p & 63); }
    void erase(std::size_t p) { word(p >> 6) &= ~(std::uint64_t{1} << (p & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words(); ++w) c += std::size_t(__builtin_popcountll(word(w)));
        return c;
    }

    bool empty() const {
        for (std::size_t w = 0; w < words(); ++w)
            if (word(w)) return false;
        return true;
    }

    /// Lowest member, or n (the universe size) when empty.
    std::size_t first() const {
        for (std::size_t w = 0; w < words(); ++w)
            if (word(w)) return (w << 6) + std::size_t(__builtin_ctzll(word(w)));
        return n_;
    }

    /// Lowest member strictly above p, or n when none.
    std::size_t next(std::size_t p) const {
        ++p;
        if (p >= n_) return n_;
        std::size_t w = p >> 6;
        std::uint64_t cur = word(w) >> (p & 63);
        if (cur) return p + std::size_t(__builtin_ctzll(cur));
        for (++w; w < words(); ++w)
            if (word(w)) return (w << 6) + std::size_t(__builtin_ctzll(word(w)));
        return n_;
    }

    bool is_subset_of(const point_set& s) const {
        for (std::size_t w = 0; w < words(); ++w)
            if (word(w) & ~s.word(w)) return false;
        return true;
    }

    bool intersects(const point_set& s) const {
        for (std::size_t w = 0; w < words(); ++w)
            if (word(w) & s.word(w)) return true;
        return false;
    }

    point_set& operator&=(const point_set& s) {
        for (std::size_t w = 0; w < words(); ++w) word(w) &= s.word(w);
        return *this;
    }
    point_set& operator|=(const point_set& s) {
        for (std::size_t w = 0; w < words(); ++w) word(w) |= s.word(w);
        return *this;
    }
    point_set& operator-=(const point_set& s) {
        for (std::size_t w = 0; w < words(); ++w) word(w) &= ~s.word(w);
        return *this;
    }

    friend point_set operator&(point_set a, const point_set& b) { return a &= b; }
    friend point_set operator|(point_set a, const point_set& b) { return a |= b; }
    friend point_set operator-(point_set a, const point_set& b) { return a -= b; }

    /// X minus this set.
    point_set complement() const {
        point_set r = full(n_);
        r -= *this;
        return r;
    }

    friend bool operator==(const point_set& a, const point_set& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t w = 0; w < a.words(); ++w)
            if (a.word(w) != b.word(w)) return false;
        return true;
    }
    friend bool operator!=(const point_set& a, const point_set& b) { return !(a == b); }

    /// Total order (by universe, then bit content as little-endian words);
    /// used to keep families of sets canonically sorted.
    friend bool operator<(const point_set& a, const point_set& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (std::size_t w = a.words(); w-- > 0;)
            if (a.word(w) != b.word(w)) return a.word(w) < b.word(w);
        return false;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
        for (std::size_t w = 0; w < words(); ++w) {
            h ^= word(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return std::size_t(h);
    }

    /// The whole universe [0, n).
    static point_set full(std::size_t n) {
        point_set r(n);
        for (std::size_t w = 0; w < r.words(); ++w) r.word(w) = ~std::uint64_t{0};
        r.trim();
        return r;
    }

    static point_set of(std::size_t n, std::initializer_list<std::size_t> pts) {
        point_set r(n);
        for (std::size_t p : pts) r.insert(p);
        return r;
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t p = first(); p < n_; p = next(p)) out.push_back(p);
        return out;
    }

    /// "{0,2,3}" — for diagnostics and reports.
    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (std::size_t p = first(); p < n_; p = next(p)) {
            if (sep) s += ",";
            s += std::to_string(p);
            sep = true;
        }
        return s + "}";
    }

private:
    static constexpr std::size_t kInline = 2;

    std::size_t words() const { return (n_ + 63) >> 6; }

    std::uint64_t& word(std::size_t w) {
        return words() <= kInline ? inline_[w] : heap_[w];
    }
    std::uint64_t word(std::size_t w) const {
        return words() <= kInline ? inline_[w] : heap_[w];
    }

    // Clear bits at positions >= n in the top word.
    void trim() {
        if (n_ & 63) word(words() - 1) &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    std::size_t n_ = 0;
    std::uint64_t inline_[kInline] = {0, 0};
    std::vector<std::uint64_t> heap_;
};

struct point_set_hash {
    std::size_t operator()(const point_set& s) const { return s.hash(); }
};

} // namespace expanso

#endif
