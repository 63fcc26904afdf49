#include "expanso/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <thread>
#include <variant>

#include "expanso/constructions.hpp"
#include "expanso/decision.hpp"
#include "expanso/dynamics.hpp"
#include "expanso/errors.hpp"
#include "expanso/instance.hpp"
#include "expanso/sft.hpp"

namespace expanso {

namespace {

struct stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

/// Bookkeeping every check shares: item counting, first-violation
/// reproducer capture, finding notes, certificate tallies.
struct tally {
    check_result r;
    cert_audit* audit = nullptr;

    tally(std::string name, cert_audit* a) : audit(a) { r.name = std::move(name); }

    void item() { ++r.checked; }
    void violation(const std::string& repro) {
        ++r.violations;
        if (r.reproducer.empty()) r.reproducer = repro;
    }
    void require(bool ok, const std::string& repro) {
        if (!ok) violation(repro);
    }
    void finding(const std::string& note) {
        ++r.findings;
        if (r.notes.size() < 8) r.notes.push_back(note);
    }
    void note(std::string s) { r.notes.push_back(std::move(s)); }
    void cert(bool ok, const std::string& what) {
        if (audit) {
            ++audit->checked;
            if (!ok) ++audit->failed;
        }
        if (!ok) violation("certificate failed re-verification: " + what);
    }
    check_result done(const stopwatch& w) {
        r.seconds = w.seconds();
        return std::move(r);
    }
};

std::string describe(const finite_space& space, const homeo& f) {
    return serialize_instance(make_finite_doc(space, f, {}));
}

std::string describe(const finite_space& space, const homeo& f, const cover& c) {
    std::map<std::string, cover> m;
    m.emplace("c", c);
    return serialize_instance(make_finite_doc(space, f, std::move(m)));
}

std::string describe_sft(const sft& shift, const symbol_cover& c,
                         std::optional<std::size_t> fixed = std::nullopt) {
    std::map<std::string, symbol_cover> m;
    m.emplace("c", c);
    return serialize_instance(make_sft_doc(shift, std::move(m), fixed));
}

/// Re-verify whatever certificate `d` carries in the context (f, c);
/// refinement-style certificates absorb against `target`.
void audit_finite(tally& t, const homeo& f, const cover& c, const cover& target,
                  const decision& d, const std::string& what) {
    struct v {
        const homeo& f;
        const cover& c;
        const cover& target;
        bool yes;
        bool operator()(std::monostate) const { return true; }
        bool operator()(const witness_pair_cert& w) const {
            return !yes && check_witness_pair(f, c, w);
        }
        bool operator()(const uniform_radius_cert& u) const {
            return yes && check_uniform_radius(f, c, target, u);
        }
        bool operator()(const family_cycle_cert& cy) const {
            return !yes && check_family_cycle(f, c, target, cy);
        }
        bool operator()(const smallness_cert&) const { return false; }
    };
    if (std::holds_alternative<std::monostate>(d.cert)) return;
    t.cert(std::visit(v{f, c, target, d.yes}, d.cert), what);
}

void audit_pair_lasso(tally& t, const sft& shift, const symbol_cover& c, const sft_decision& d,
                      const std::string& what) {
    if (auto* pl = std::get_if<pair_lasso_cert>(&d.cert))
        t.cert(!d.yes && check_pair_lasso(shift, c, *pl), what);
}

void each_space(std::size_t lo, std::size_t hi,
                const std::function<void(const finite_space&)>& fn) {
    for (std::size_t m = lo; m <= hi; ++m)
        enumerate_spaces(m, [&](const finite_space& s) {
            fn(s);
            return true;
        });
}

std::vector<cover> covers_limited(const finite_space& space, std::size_t max_elems) {
    std::vector<cover> out;
    for (cover& c : enumerate_covers(space))
        if (c.size() <= max_elems) out.push_back(std::move(c));
    return out;
}

finite_space discrete_space(std::size_t m) {
    std::vector<point_set> nb;
    nb.reserve(m);
    for (std::size_t p = 0; p < m; ++p) nb.push_back(point_set::of(m, {p}));
    return finite_space(std::move(nb));
}

bool window_refines(const window_family& w, const cover& v) {
    for (const point_set& s : w.sets) {
        bool inside = false;
        for (const point_set& el : v.elements) inside = inside || s.is_subset_of(el);
        if (!inside) return false;
    }
    return true;
}

/// Witness audit for the diagonal formulation: the pair must be distinct,
/// closed by f^period, and stay inside D for one full period.
bool verify_diagonal_witness(const homeo& f, const point_set& d, const witness_pair_cert& wp) {
    const std::size_t n = f.space.points();
    if (wp.x == wp.y || wp.x >= n || wp.y >= n || wp.period == 0) return false;
    if (f.power_apply(wp.x, static_cast<long long>(wp.period)) != wp.x) return false;
    if (f.power_apply(wp.y, static_cast<long long>(wp.period)) != wp.y) return false;
    std::size_t x = wp.x;
    std::size_t y = wp.y;
    for (std::size_t s = 0; s < wp.period; ++s) {
        if (!d.contains(x * n + y)) return false;
        x = f.apply(x);
        y = f.apply(y);
    }
    return true;
}

} // namespace

// ---------------------------------------------------------------------

check_result check_oracle_equivalence(std::size_t max_points, cert_audit* audit) {
    stopwatch w;
    tally t("oracle-equivalence", audit);
    each_space(1, std::min<std::size_t>(max_points, 3), [&](const finite_space& space) {
        const cover canon = canonical_cover(space);
        const std::vector<cover> covers = covers_limited(space, 3);
        for (const homeo& f : enumerate_homeos(space)) {
            for (const cover& c : covers) {
                decision o = is_o_expansive_cover(f, c);
                decision oo = o_expansive_oracle(f, c);
                t.item();
                t.require(o.yes == oo.yes, "orbit verdicts disagree\n" + describe(space, f, c));
                audit_finite(t, f, c, canon, o, "orbit decision\n" + describe(space, f, c));
                audit_finite(t, f, c, canon, oo, "orbit oracle\n" + describe(space, f, c));

                decision r = is_r_expansive_cover(f, c);
                decision rr = r_expansive_oracle(f, c);
                t.item();
                t.require(r.yes == rr.yes,
                          "refinement verdicts disagree\n" + describe(space, f, c));
                audit_finite(t, f, c, canon, r, "refinement decision\n" + describe(space, f, c));
            }
        }
    });
    return t.done(w);
}

check_result check_refinement_monotonicity(std::size_t max_points, cert_audit* audit) {
    stopwatch w;
    tally t("refinement-monotonicity", audit);
    each_space(1, std::min<std::size_t>(max_points, 3), [&](const finite_space& space) {
        const cover canon = canonical_cover(space);
        const std::vector<cover> covers = enumerate_covers(space);
        for (const homeo& f : enumerate_homeos(space)) {
            std::vector<char> o_yes(covers.size()), r_yes(covers.size());
            for (std::size_t i = 0; i < covers.size(); ++i) {
                decision o = is_o_expansive_cover(f, covers[i]);
                decision r = is_r_expansive_cover(f, covers[i]);
                o_yes[i] = o.yes;
                r_yes[i] = r.yes;
                audit_finite(t, f, covers[i], canon, o, "orbit decision\n" + describe(space, f, covers[i]));
                audit_finite(t, f, covers[i], canon, r, "refinement decision\n" + describe(space, f, covers[i]));
            }
            for (std::size_t i = 0; i < covers.size(); ++i)
                for (std::size_t j = 0; j < covers.size(); ++j) {
                    if (i == j || !refines(covers[i], covers[j])) continue;
                    t.item();
                    t.require(!o_yes[j] || o_yes[i],
                              "orbit expansivity lost under refinement\n" +
                                  describe(space, f, covers[i]));
                    t.require(!r_yes[j] || r_yes[i],
                              "refinement expansivity lost under refinement\n" +
                                  describe(space, f, covers[i]));
                }
        }
    });
    return t.done(w);
}

check_result check_canonical_completeness(std::size_t max_points, cert_audit* audit) {
    stopwatch w;
    tally t("canonical-completeness", audit);
    each_space(1, std::min<std::size_t>(max_points, 3), [&](const finite_space& space) {
        const std::vector<cover> covers = covers_limited(space, 3);
        for (const homeo& f : enumerate_homeos(space)) {
            t.item();
            t.require(decide_orbit_expansive(f).yes == decide_orbit_expansive_oracle(f).yes,
                      "canonical-cover reduction breaks orbit existence\n" + describe(space, f));
            t.item();
            t.require(decide_refinement_expansive(f).yes ==
                          decide_refinement_expansive_oracle(f).yes,
                      "canonical-cover reduction breaks refinement existence\n" +
                          describe(space, f));

            // Diagonal formulation agrees with the cover formulation in
            // both directions.
            for (const cover& c : covers) {
                const point_set d = diagonal_from_cover(space, c);
                decision dd = is_expansive_diagonal(f, d);
                decision oc = is_o_expansive_cover(f, c);
                t.item();
                t.require(dd.yes == oc.yes,
                          "diagonal and cover verdicts disagree\n" + describe(space, f, c));
                if (auto* wp = std::get_if<witness_pair_cert>(&dd.cert))
                    t.cert(!dd.yes && verify_diagonal_witness(f, d, *wp),
                           "diagonal witness\n" + describe(space, f, c));
                const cover back = cover_from_diagonal(space, d);
                decision ob = is_o_expansive_cover(f, back);
                t.item();
                t.require(ob.yes == dd.yes,
                          "cover extracted from diagonal disagrees\n" + describe(space, f, c));
            }
        }
    });
    return t.done(w);
}

check_result check_finite_discrete(std::size_t max_points, cert_audit* audit) {
    stopwatch w;
    tally t("finite-discrete", audit);
    each_space(1, std::min(max_points, kEnumCap), [&](const finite_space& space) {
        const bool discrete = space.is_discrete();
        for (const homeo& f : enumerate_homeos(space)) {
            t.item();
            t.require(decide_orbit_expansive(f).yes == discrete,
                      "orbit expansivity must hold exactly on discrete spaces\n" +
                          describe(space, f));
        }
    });
    return t.done(w);
}

check_result check_t1_implication(std::size_t max_points, cert_audit* audit) {
    stopwatch w;
    tally t("t1-implication", audit);
    each_space(1, std::min(max_points, kEnumCap), [&](const finite_space& space) {
        const separation_record sep = separation_axioms(space);
        t.item();
        t.require(sep.t1 == space.is_discrete(),
                  "T1 must coincide with discreteness on finite spaces");
        t.require(!sep.t1 || sep.t0, "T1 must imply T0");
        t.require(sep.hausdorff == sep.t1, "Hausdorff must coincide with T1 on finite spaces");
        for (const homeo& f : enumerate_homeos(space)) {
            t.item();
            t.require(!decide_orbit_expansive(f).yes || sep.t1,
                      "an orbit-expansive homeomorphism forces T1\n" + describe(space, f));
        }
    });
    return t.done(w);
}

check_result check_r_t1_implies_orbit(std::size_t max_points, cert_audit* audit) {
    stopwatch w;
    tally t("refinement-t1-implies-orbit", audit);
    each_space(1, std::min<std::size_t>(max_points, 4), [&](const finite_space& space) {
        const separation_record sep = separation_axioms(space);
        const cover canon = canonical_cover(space);
        for (const homeo& f : enumerate_homeos(space)) {
            t.item();
            t.require(!sep.t1 || !decide_refinement_expansive(f).yes ||
                          decide_orbit_expansive(f).yes,
                      "refinement expansivity on a T1 space must imply orbit expansivity\n" +
                          describe(space, f));
            if (sep.t1) {
                std::vector<cover> covers = covers_limited(space, 3);
                covers.push_back(canon);
                for (const cover& c : covers) {
                    decision r = is_r_expansive_cover(f, c);
                    audit_finite(t, f, c, canon, r, "refinement decision\n" + describe(space, f, c));
                    if (!r.yes) continue;
                    t.item();
                    t.require(is_o_expansive_cover(f, c).yes,
                              "an r-expansivity cover on a T1 space must be o-expansive\n" +
                                  describe(space, f, c));
                }
            } else if (space.points() <= 3) {
                for (const cover& c : covers_limited(space, 3)) {
                    if (is_r_expansive_cover(f, c).yes && !is_o_expansive_cover(f, c).yes) {
                        t.finding("outside T1 the implication fails, as anticipated: " +
                                  c.to_string() + " on a non-T1 space");
                    }
                }
            }
        }
    });
    return t.done(w);
}

check_result check_uniformization(std::size_t max_points, cert_audit* audit) {
    stopwatch w;
    tally t("uniformization", audit);
    each_space(1, std::min<std::size_t>(max_points, 3), [&](const finite_space& space) {
        const cover canon = canonical_cover(space);
        const std::vector<cover> covers = enumerate_covers(space);
        for (const homeo& f : enumerate_homeos(space)) {
            for (const cover& c : covers) {
                decision r = is_r_expansive_cover(f, c);
                audit_finite(t, f, c, canon, r, "refinement decision\n" + describe(space, f, c));

                uniform_n_result u = uniform_refinement_n(f, c, canon);
                audit_finite(t, f, c, canon, u.detail,
                             "uniform refinement vs canonical\n" + describe(space, f, c));
                t.item();
                t.require(u.n.has_value() == r.yes,
                          "uniform radius existence must match refinement expansivity\n" +
                              describe(space, f, c));
                if (!r.yes) continue;

                const std::size_t n_min = std::get<uniform_radius_cert>(r.cert).radius;
                const window_family wn = window_cover(f, c, n_min);
                bool some_failed_before = n_min == 0;
                const window_family wprev =
                    n_min > 0 ? window_cover(f, c, n_min - 1) : window_family{};
                for (const cover& v : covers) {
                    t.item();
                    t.require(window_refines(wn, v),
                              "window at the uniform radius must refine every cover\n" +
                                  describe(space, f, c));
                    if (n_min > 0 && !window_refines(wprev, v)) some_failed_before = true;
                }
                t.require(some_failed_before,
                          "the uniform radius must be minimal against some cover\n" +
                              describe(space, f, c));
            }
        }
    });
    return t.done(w);
}

check_result check_basis_property(std::size_t max_points, cert_audit* audit) {
    stopwatch w;
    tally t("window-basis", audit);
    for (std::size_t m = 1; m <= std::min<std::size_t>(max_points, 4); ++m) {
        const finite_space space = discrete_space(m);
        const cover canon = canonical_cover(space);
        std::vector<cover> covers = covers_limited(space, 3);
        covers.push_back(canon);
        const std::vector<point_set> opens = space.open_family();
        for (const homeo& f : enumerate_homeos(space)) {
            for (const cover& c : covers) {
                decision r = is_r_expansive_cover(f, c);
                if (!r.yes) continue;
                const std::size_t n_min = std::get<uniform_radius_cert>(r.cert).radius;
                std::vector<point_set> members;
                for (std::size_t n = 0; n <= n_min; ++n) {
                    window_family wf = window_cover(f, c, n);
                    members.insert(members.end(), wf.sets.begin(), wf.sets.end());
                }
                t.item();
                bool basis = true;
                for (const point_set& open : opens) {
                    if (open.empty()) continue;
                    for (std::size_t p = open.first(); p < m; p = open.next(p)) {
                        bool found = false;
                        for (const point_set& mem : members)
                            if (mem.contains(p) && mem.is_subset_of(open)) {
                                found = true;
                                break;
                            }
                        basis = basis && found;
                    }
                }
                t.require(basis, "windows of an r-expansivity cover must form a basis\n" +
                                     describe(space, f, c));
            }
        }
    }
    return t.done(w);
}

check_result check_windows_shrink(std::size_t max_points, std::uint64_t seed, cert_audit* audit) {
    stopwatch w;
    tally t("windows-shrink", audit);
    const point_set* current_universe = nullptr;

    auto verify_step = [&](const finite_space& space, const homeo& f, const cover& c,
                           std::size_t n) {
        (void)current_universe;
        const window_family wn = window_cover(f, c, n);
        const window_family wn1 = window_cover(f, c, n + 1);
        t.item();
        point_set covered(space.points());
        bool all_open = true;
        for (const point_set& s : wn.sets) {
            covered |= s;
            all_open = all_open && space.is_open(s);
        }
        t.require(all_open, "window sets must be open\n" + describe(space, f, c));
        t.require(covered == point_set::full(space.points()),
                  "window sets must cover the space\n" + describe(space, f, c));
        bool shrink = true;
        for (const point_set& s : wn1.sets) {
            bool inside = false;
            for (const point_set& parent : wn.sets) inside = inside || s.is_subset_of(parent);
            shrink = shrink && inside;
        }
        t.require(shrink, "window family must refine its predecessor\n" + describe(space, f, c));
    };

    std::vector<finite_space> spaces;
    each_space(1, std::min<std::size_t>(max_points, 3),
               [&](const finite_space& s) { spaces.push_back(s); });

    for (const finite_space& space : spaces) {
        const std::vector<cover> covers = covers_limited(space, 3);
        for (const homeo& f : enumerate_homeos(space))
            for (const cover& c : covers)
                for (std::size_t n = 0; n <= 1; ++n) verify_step(space, f, c, n);
    }

    std::mt19937_64 rng(seed);
    for (int sample = 0; sample < 100; ++sample) {
        const finite_space& space = spaces[rng() % spaces.size()];
        const std::vector<homeo> homeos = enumerate_homeos(space);
        const std::vector<cover> covers = covers_limited(space, 3);
        const homeo& f = homeos[rng() % homeos.size()];
        const cover& c = covers[rng() % covers.size()];
        verify_step(space, f, c, 2 + rng() % 4);
    }
    return t.done(w);
}

check_result check_power_theorem(std::size_t max_points, cert_audit* audit) {
    stopwatch w;
    tally t("power-theorem", audit);
    const long long exps[] = {-1, 2, 3};
    each_space(1, std::min<std::size_t>(max_points, 4), [&](const finite_space& space) {
        const bool discrete = space.is_discrete();
        const bool scan_covers = discrete || space.points() <= 3;
        const cover canon = canonical_cover(space);
        const std::vector<cover> covers = scan_covers ? enumerate_covers(space)
                                                      : std::vector<cover>{};
        for (const homeo& f : enumerate_homeos(space)) {
            for (long long r : exps) {
                t.item();
                t.require(check_power_equivalence(f, r),
                          "expansivity must transfer between f and f^r\n" + describe(space, f));
            }
            for (const cover& c : covers) {
                decision o = is_o_expansive_cover(f, c);
                audit_finite(t, f, c, canon, o, "orbit decision\n" + describe(space, f, c));
                if (!o.yes) continue;
                t.require(discrete, "o-expansive cover found on a non-discrete space\n" +
                                        describe(space, f, c));
                for (long long r : exps) {
                    const homeo fr = homeo_power(f, r);
                    const cover pc = power_cover(f, c, r);
                    t.item();
                    t.require(is_o_expansive_cover(fr, pc).yes,
                              "power cover of an o-expansive cover must be o-expansive\n" +
                                  describe(space, f, c));
                }
            }
        }
    });
    t.note("cover transfer scanned on all covers of discrete spaces and of every space on at "
           "most 3 points; non-discrete spaces admit no o-expansive cover (checked up to 3 "
           "points here and implied above by refinement monotonicity)");
    return t.done(w);
}

check_result check_example_regressions(cert_audit* audit) {
    stopwatch w;
    tally t("example-regressions", audit);

    { // Chain on 5 points, identity map.
        auto [space, f] = chain_space(5);
        const cover canon = canonical_cover(space);
        for (const cover& c : {trivial_cover(space), canon}) {
            decision r = is_r_expansive_cover(f, c);
            t.item();
            t.require(r.yes, "chain-5 must be refinement expansive");
            if (auto* u = std::get_if<uniform_radius_cert>(&r.cert)) {
                t.require(u->radius == 0, "chain-5 uniform radius must be 0");
                audit_finite(t, f, c, canon, r, "chain-5 refinement decision");
            } else {
                t.violation("chain-5 YES must carry a uniform radius");
            }
        }
        t.item();
        t.require(!decide_orbit_expansive(f).yes, "chain-5 must not be orbit expansive");
        t.item();
        t.require(count_periodic(f, 1) == 5, "chain-5 identity must have 5 fixed points");
        const separation_record sep = separation_axioms(space);
        t.item();
        t.require(sep.t0 && !sep.t1, "chain-5 must be T0 and not T1");
    }

    { // Indiscrete space on 3 points with a 3-cycle, and with the identity.
        for (const std::vector<std::size_t>& perm :
             {std::vector<std::size_t>{1, 2, 0}, std::vector<std::size_t>{0, 1, 2}}) {
            auto [space, f] = indiscrete_example(3, perm);
            decision r = is_r_expansive_cover(f, trivial_cover(space));
            t.item();
            t.require(r.yes, "indiscrete-3 must be refinement expansive");
            t.item();
            t.require(!decide_orbit_expansive(f).yes,
                      "indiscrete-3 must not be orbit expansive");
            audit_finite(t, f, trivial_cover(space), canonical_cover(space), r,
                         "indiscrete-3 refinement decision");
        }
    }

    { // Indiscrete pair with the swap: the least witness pair is (0,1).
        auto [space, f] = indiscrete_example(2, {1, 0});
        decision o = is_o_expansive_cover(f, trivial_cover(space));
        t.item();
        t.require(!o.yes, "indiscrete swap must not be orbit expansive");
        if (auto* wp = std::get_if<witness_pair_cert>(&o.cert)) {
            t.require(wp->x == 0 && wp->y == 1 && wp->period == 2,
                      "indiscrete swap witness must be (0,1) with period 2");
            t.cert(check_witness_pair(f, trivial_cover(space), *wp), "indiscrete swap witness");
        } else {
            t.violation("indiscrete swap NO must carry a witness pair");
        }
    }

    { // Uniform radius 1 for the overlap cover under the 3-cycle.
        const finite_space space = discrete_space(3);
        const homeo f = make_homeo(space, {1, 2, 0});
        const cover c = make_cover(space, {point_set::of(3, {0, 1}), point_set::of(3, {1, 2})});
        uniform_n_result u = uniform_refinement_n(f, c, canonical_cover(space));
        t.item();
        t.require(u.n.has_value() && *u.n == 1,
                  "overlap cover under the 3-cycle must uniformize at radius 1");
        audit_finite(t, f, c, canonical_cover(space), u.detail, "3-cycle uniform radius");
    }

    { // Doubling the closed point of the 3-chain.
        auto [space, f] = chain_space(3);
        const duplication dup = duplicate(space, f, point_set::of(3, {0}));
        const std::vector<point_set> expected = {
            point_set::of(4, {0, 1, 2}),
            point_set::of(4, {1, 2}),
            point_set::of(4, {2}),
            point_set::of(4, {1, 2, 3}),
        };
        t.item();
        t.require(dup.result_space.min_nbhds() == expected,
                  "doubling the closed point of the 3-chain gives the wrong topology");
        const cover dc = duplicated_cover(dup, trivial_cover(space));
        std::vector<point_set> got = dc.elements;
        std::sort(got.begin(), got.end());
        const std::vector<point_set> expected_cover = {point_set::of(4, {0, 1, 2}),
                                                       point_set::of(4, {1, 2, 3})};
        t.item();
        t.require(got == expected_cover, "doubled trivial cover of the 3-chain is wrong");
        decision r = is_r_expansive_cover(dup.result_map, dc);
        t.item();
        t.require(r.yes, "doubled 3-chain cover must stay refinement expansive");
        if (auto* u = std::get_if<uniform_radius_cert>(&r.cert))
            t.require(u->radius == 0, "doubled 3-chain cover must uniformize at radius 0");
        audit_finite(t, dup.result_map, dc, canonical_cover(dup.result_space), r,
                     "doubled 3-chain decision");

        const duplication none = duplicate(space, f, point_set(3));
        t.item();
        t.require(none.result_space == space && none.result_map.perm == f.perm,
                  "doubling the empty set must not change the system");
    }

    return t.done(w);
}

check_result check_duplication_preservation(std::size_t max_points, cert_audit* audit) {
    stopwatch w;
    tally t("duplication-preservation", audit);
    each_space(1, std::min<std::size_t>(max_points, 3), [&](const finite_space& space) {
        const separation_record sep = separation_axioms(space);
        const std::vector<cover> covers = covers_limited(space, 3);
        for (const homeo& f : enumerate_homeos(space)) {
            std::vector<char> r_yes(covers.size());
            for (std::size_t i = 0; i < covers.size(); ++i)
                r_yes[i] = is_r_expansive_cover(f, covers[i]).yes;

            for (const point_set& k : enumerate_closed_invariant_sets(f)) {
                const duplication dup = duplicate(space, f, k);
                t.item();
                t.require(dup.result_space.points() == space.points() + k.count(),
                          "doubled space has the wrong point count\n" + describe(space, f));
                t.require(dup.result_map.order() == f.order(),
                          "doubling must preserve the order of the map\n" + describe(space, f));
                if (k.empty())
                    t.require(dup.result_space == space && dup.result_map.perm == f.perm,
                              "doubling the empty set must not change the system\n" +
                                  describe(space, f));

                const cover enlarged_canon = canonical_cover(dup.result_space);
                for (std::size_t i = 0; i < covers.size(); ++i) {
                    if (!r_yes[i]) continue;
                    const cover dc = duplicated_cover(dup, covers[i]);
                    decision d1 = is_r_expansive_cover(dup.result_map, dc);
                    decision d2 = r_expansive_oracle(dup.result_map, dc);
                    t.item();
                    t.require(d1.yes == d2.yes,
                              "doubled-cover verdict disagrees with the oracle\n" +
                                  describe(space, f, covers[i]));
                    audit_finite(t, dup.result_map, dc, enlarged_canon, d1,
                                 "doubled-cover decision\n" + describe(space, f, covers[i]));
                    if (!d1.yes) {
                        if (sep.t1)
                            t.violation(
                                "doubling broke refinement expansivity on a T1 base\n" +
                                describe(space, f, covers[i]));
                        else
                            t.finding("doubling broke refinement expansivity on a non-T1 base "
                                      "(K=" +
                                      k.to_string() + ", cover=" + covers[i].to_string() + ")");
                    }
                }
            }
        }
    });
    return t.done(w);
}

check_result check_duplication_t1(std::size_t max_points, cert_audit* audit) {
    stopwatch w;
    tally t("duplication-t1", audit);
    for (std::size_t m = 1; m <= std::min<std::size_t>(max_points, 3); ++m) {
        const finite_space space = discrete_space(m);
        for (const homeo& f : enumerate_homeos(space)) {
            for (const point_set& k : enumerate_closed_invariant_sets(f)) {
                const duplication dup = duplicate(space, f, k);
                t.item();
                t.require(dup.result_space.is_discrete() &&
                              separation_axioms(dup.result_space).t1,
                          "doubling a discrete space must stay discrete\n" + describe(space, f));
            }
        }
    }
    return t.done(w);
}

check_result check_enumeration_counts(std::size_t max_points) {
    stopwatch w;
    tally t("enumeration-counts", nullptr);
    const std::size_t expected[] = {1, 4, 29, 355, 6942};
    for (std::size_t m = 1; m <= std::min(max_points, kEnumCap); ++m) {
        t.item();
        t.require(count_spaces(m) == expected[m - 1],
                  "labeled topology count on " + std::to_string(m) + " points is wrong");
    }
    return t.done(w);
}

check_result check_restriction_properties(std::size_t max_points, cert_audit* audit) {
    stopwatch w;
    tally t("restriction-properties", audit);
    each_space(1, std::min<std::size_t>(max_points, 3), [&](const finite_space& space) {
        const std::size_t n = space.points();
        const std::vector<cover> covers = covers_limited(space, 3);
        for (const homeo& f : enumerate_homeos(space)) {
            // T0-quotient transfer of refinement expansivity.
            const t0_quotient_result q = t0_quotient(f);
            t.item();
            t.require(decide_refinement_expansive(f).yes ==
                          decide_refinement_expansive(q.map).yes,
                      "refinement expansivity must transfer to the T0 quotient\n" +
                          describe(space, f));
            for (const cover& c : covers) {
                std::vector<point_set> qels;
                for (const point_set& el : c.elements) {
                    point_set img(q.space.points());
                    for (std::size_t p = el.first(); p < n; p = el.next(p)) img.insert(q.cls[p]);
                    qels.push_back(std::move(img));
                }
                const cover qc = make_cover(q.space, std::move(qels));
                t.item();
                t.require(is_r_expansive_cover(f, c).yes == is_r_expansive_cover(q.map, qc).yes,
                          "cover-level refinement expansivity must transfer to the T0 "
                          "quotient\n" +
                              describe(space, f, c));
            }

            // Restriction to invariant carriers.
            std::vector<char> o_yes(covers.size()), r_yes(covers.size());
            for (std::size_t i = 0; i < covers.size(); ++i) {
                o_yes[i] = is_o_expansive_cover(f, covers[i]).yes;
                r_yes[i] = is_r_expansive_cover(f, covers[i]).yes;
            }
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                point_set carrier(n);
                for (std::size_t p = 0; p < n; ++p)
                    if ((mask >> p) & 1) carrier.insert(p);
                if (f.image(carrier) != carrier) continue;
                const restriction sub = restrict(f, carrier);
                std::optional<bool> ext;
                for (std::size_t i = 0; i < covers.size(); ++i) {
                    const cover rc = restrict_cover(sub, covers[i]);
                    if (o_yes[i]) {
                        t.item();
                        t.require(is_o_expansive_cover(sub.map, rc).yes,
                                  "restriction must preserve orbit expansivity\n" +
                                      describe(space, f, covers[i]));
                    }
                    if (r_yes[i]) {
                        t.item();
                        if (!is_r_expansive_cover(sub.map, rc).yes) {
                            if (!ext)
                                ext = is_extension_closed(subspace_pair{space, carrier}).yes;
                            if (*ext)
                                t.violation("restriction to an extension-closed carrier must "
                                            "preserve refinement expansivity\n" +
                                            describe(space, f, covers[i]));
                            else
                                t.finding("restriction lost refinement expansivity on a "
                                          "non-extension-closed carrier " +
                                          carrier.to_string());
                        }
                    }
                }
            }
        }
    });
    return t.done(w);
}

check_result check_extension_oracle_agreement(std::size_t max_points) {
    stopwatch w;
    tally t("extension-oracle-agreement", nullptr);
    each_space(1, std::min<std::size_t>(max_points, 3), [&](const finite_space& space) {
        const std::size_t n = space.points();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            point_set carrier(n);
            for (std::size_t p = 0; p < n; ++p)
                if ((mask >> p) & 1) carrier.insert(p);
            const extension_decision fast = is_extension_closed(subspace_pair{space, carrier});
            const extension_decision slow =
                is_extension_closed_oracle(subspace_pair{space, carrier});
            t.item();
            t.require(fast.yes == slow.yes,
                      "extension-closed decision disagrees with the oracle on carrier " +
                          carrier.to_string());
            if (!fast.yes) {
                point_set covered(n);
                bool trace_open = true;
                const subspace_result sr = subspace(space, carrier);
                for (const point_set& el : fast.witness_cover) {
                    covered |= el;
                    point_set traced(sr.space.points());
                    for (std::size_t p = el.first(); p < n; p = el.next(p))
                        traced.insert(sr.from_ambient[p]);
                    trace_open = trace_open && sr.space.is_open(traced);
                }
                t.require(trace_open && covered == carrier,
                          "extension witness must be a trace-open cover of the carrier " +
                              carrier.to_string());
            }
        }
    });
    return t.done(w);
}

check_result check_smallness_oracle_agreement(std::size_t max_points, cert_audit* audit) {
    stopwatch w;
    tally t("smallness-oracle-agreement", audit);
    each_space(1, std::min<std::size_t>(max_points, 3), [&](const finite_space& space) {
        const std::size_t n = space.points();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            point_set s(n);
            for (std::size_t p = 0; p < n; ++p)
                if ((mask >> p) & 1) s.insert(p);
            const decision fast = is_cover_small_decision(space, s);
            const decision slow = is_cover_small_oracle(space, s);
            t.item();
            t.require(fast.yes == slow.yes,
                      "smallness decision disagrees with the oracle on " + s.to_string());
            t.require(fast.yes == cover_small(space, s),
                      "smallness decision disagrees with the direct test on " + s.to_string());
            if (auto* sc = std::get_if<smallness_cert>(&fast.cert))
                t.cert(fast.yes && check_smallness(space, s, *sc),
                       "smallness witness for " + s.to_string());
        }
    });
    return t.done(w);
}

check_result check_sft_expansivity(cert_audit* audit) {
    stopwatch w;
    tally t("sft-expansivity", audit);

    const sft full2 = sft_new({{1, 1}, {1, 1}});
    const sft full3 = sft_new({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    const sft golden = sft_new({{1, 1}, {1, 0}});

    auto expect = [&](const sft& shift, std::vector<point_set> elements, bool yes,
                      const char* label) -> sft_decision {
        const symbol_cover c = make_symbol_cover(shift, std::move(elements));
        sft_decision d = is_o_expansive_symbol_cover(shift, c);
        t.item();
        t.require(d.yes == yes, std::string(label) + "\n" + describe_sft(shift, c));
        audit_pair_lasso(t, shift, c, d, std::string(label) + " witness");
        return d;
    };

    expect(full2, {point_set::of(2, {0}), point_set::of(2, {1})}, true,
           "the separating cover of the full 2-shift must be o-expansive");
    expect(full2, {point_set::of(2, {0, 1})}, false,
           "the trivial cover of the full 2-shift must not be o-expansive");
    {
        sft_decision d = expect(full3, {point_set::of(3, {0, 1}), point_set::of(3, {1, 2})},
                                false, "the overlap cover of the full 3-shift must fail");
        auto* pl = std::get_if<pair_lasso_cert>(&d.cert);
        t.item();
        t.require(pl != nullptr && pl->periodic(),
                  "the overlap-cover witness must be purely periodic");
    }
    expect(golden, {point_set::of(2, {0}), point_set::of(2, {1})}, true,
           "the separating cover of the golden-mean shift must be o-expansive");
    expect(golden, {point_set::of(2, {0, 1})}, false,
           "the trivial cover of the golden-mean shift must not be o-expansive");
    {
        const sft cycle2 = sft_new({{0, 1}, {1, 0}});
        expect(cycle2, {point_set::of(2, {0}), point_set::of(2, {1})}, true,
               "the separating cover of the 2-cycle shift must be o-expansive");
    }

    { // Trimming: a symbol with no incoming edge dies.
        const sft trimmed = sft_new({{1, 1, 0}, {1, 1, 0}, {0, 1, 0}});
        t.item();
        t.require(trimmed.removed == std::vector<std::size_t>{2} &&
                      trimmed.alive == point_set::of(3, {0, 1}),
                  "symbol 2 must be trimmed from the shift");
    }
    { // A shift with no bi-infinite run at all.
        t.item();
        bool threw = false;
        try {
            sft_new({{0, 1}, {0, 0}});
        } catch (const empty_shift&) {
            threw = true;
        }
        t.require(threw, "a nilpotent matrix must yield an empty shift");
    }
    return t.done(w);
}

check_result check_sft_periodic_counts() {
    stopwatch w;
    tally t("sft-periodic-counts", nullptr);
    const sft golden = sft_new({{1, 1}, {1, 0}});
    const sft full2 = sft_new({{1, 1}, {1, 1}});
    const symbol_cover sep_g =
        make_symbol_cover(golden, {point_set::of(2, {0}), point_set::of(2, {1})});
    const symbol_cover sep_f =
        make_symbol_cover(full2, {point_set::of(2, {0}), point_set::of(2, {1})});

    const big_int lucas[] = {1, 3, 4, 7};
    for (std::size_t n = 1; n <= 4; ++n) {
        t.item();
        t.require(periodic_count(golden, n) == lucas[n - 1],
                  "golden-mean periodic count at n=" + std::to_string(n) + " is wrong");
    }
    for (std::size_t n = 1; n <= 10; ++n) {
        t.item();
        t.require(periodic_count(full2, n) == boost::multiprecision::pow(big_int(2),
                                                                         static_cast<unsigned>(n)),
                  "full 2-shift must attain 2^n periodic points");
        t.item();
        t.require(check_sft_periodic_bound(full2, sep_f, n) &&
                      check_sft_periodic_bound(golden, sep_g, n),
                  "periodic counts must respect the cover-size bound at n=" + std::to_string(n));
    }
    { // Exactness far beyond machine words.
        t.item();
        t.require(periodic_count(full2, 200) ==
                      boost::multiprecision::pow(big_int(2), 200u),
                  "exact arithmetic must carry 2^200");
    }
    { // The bound refuses non-expansive covers.
        t.item();
        bool threw = false;
        try {
            check_sft_periodic_bound(full2, make_symbol_cover(full2, {point_set::of(2, {0, 1})}),
                                     3);
        } catch (const cover_not_expansive&) {
            threw = true;
        }
        t.require(threw, "the periodic bound must reject a non-expansive cover");
    }
    return t.done(w);
}

namespace {

/// All transition matrices on `a` symbols, streamed as edge bitmasks.
template <typename Fn>
void each_shift(std::size_t a, Fn fn) {
    const std::size_t bits = a * a;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        std::vector<std::vector<int>> matrix(a, std::vector<int>(a, 0));
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < a; ++j)
                if ((mask >> (i * a + j)) & 1) matrix[i][j] = 1;
        try {
            fn(sft_new(matrix));
        } catch (const empty_shift&) {
            // Nothing survives trimming; nothing to check.
        }
    }
}

/// One representative cover per joint-coverage relation: verdicts and
/// survivor sets depend on the cover only through which symbol pairs it
/// covers jointly.
std::vector<symbol_cover> representative_symbol_covers(const sft& shift) {
    const std::size_t n = shift.alphabet_size;
    const std::vector<std::size_t> alive = shift.alive.members();
    std::vector<point_set> subs;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << alive.size()); ++mask) {
        point_set s(n);
        for (std::size_t b = 0; b < alive.size(); ++b)
            if ((mask >> b) & 1) s.insert(alive[b]);
        subs.push_back(std::move(s));
    }
    std::set<std::vector<char>> seen;
    std::vector<symbol_cover> reps;
    for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << subs.size()); ++fam) {
        std::vector<point_set> elements;
        point_set covered(n);
        for (std::size_t b = 0; b < subs.size(); ++b)
            if ((fam >> b) & 1) {
                elements.push_back(subs[b]);
                covered |= subs[b];
            }
        if (covered != shift.alive) continue;
        std::vector<char> sig;
        for (std::size_t i = 0; i < alive.size(); ++i)
            for (std::size_t j = i + 1; j < alive.size(); ++j) {
                bool joint = false;
                for (const point_set& el : elements)
                    joint = joint || (el.contains(alive[i]) && el.contains(alive[j]));
                sig.push_back(joint ? 1 : 0);
            }
        if (seen.insert(std::move(sig)).second)
            reps.push_back(make_symbol_cover(shift, std::move(elements)));
    }
    return reps;
}

point_set covered_pair_nodes(const sft& shift, const symbol_cover& c) {
    const std::size_t n = shift.alphabet_size;
    point_set nodes(n * n);
    for (std::size_t a = shift.alive.first(); a < n; a = shift.alive.next(a))
        for (std::size_t b = shift.alive.first(); b < n; b = shift.alive.next(b))
            for (const point_set& el : c.elements)
                if (el.contains(a) && el.contains(b)) {
                    nodes.insert(a * n + b);
                    break;
                }
    return nodes;
}

} // namespace

check_result check_sft_trimming_soundness(cert_audit* audit) {
    stopwatch w;
    tally t("sft-trimming-soundness", audit);
    for (std::size_t a = 1; a <= 3; ++a) {
        each_shift(a, [&](const sft& shift) {
            const std::size_t n = shift.alphabet_size;
            const std::size_t u = n * n;
            for (const symbol_cover& c : representative_symbol_covers(shift)) {
                const point_set nodes = covered_pair_nodes(shift, c);
                const std::size_t cnt = nodes.count();

                auto step = [&](const std::vector<char>& cur, bool forward) {
                    std::vector<char> nxt(u, 0);
                    for (std::size_t code = nodes.first(); code < u; code = nodes.next(code)) {
                        const std::size_t x = code / n;
                        const std::size_t y = code % n;
                        bool ok = false;
                        for (std::size_t xx = 0; xx < n && !ok; ++xx)
                            for (std::size_t yy = 0; yy < n && !ok; ++yy) {
                                const std::size_t other = xx * n + yy;
                                if (!nodes.contains(other) || !cur[other]) continue;
                                ok = forward ? shift.edge(x, xx) && shift.edge(y, yy)
                                             : shift.edge(xx, x) && shift.edge(yy, y);
                            }
                        nxt[code] = ok ? 1 : 0;
                    }
                    return nxt;
                };

                std::vector<char> out(u, 0), in(u, 0);
                for (std::size_t code = nodes.first(); code < u; code = nodes.next(code))
                    out[code] = in[code] = 1;
                for (std::size_t s = 0; s < cnt; ++s) {
                    out = step(out, true);
                    in = step(in, false);
                }
                point_set expected(u);
                for (std::size_t code = nodes.first(); code < u; code = nodes.next(code))
                    if (out[code] && in[code]) expected.insert(code);

                const point_set survivors = trimmed_pair_nodes(shift, c);
                t.item();
                t.require(survivors == expected,
                          "pair trimming must keep exactly the nodes on bi-infinite walks\n" +
                              describe_sft(shift, c));

                // One-sided sanity: a node on a short cycle always survives.
                std::vector<std::vector<char>> adj(u, std::vector<char>(u, 0));
                for (std::size_t code = nodes.first(); code < u; code = nodes.next(code))
                    for (std::size_t other = nodes.first(); other < u;
                         other = nodes.next(other))
                        adj[code][other] = shift.edge(code / n, other / n) &&
                                           shift.edge(code % n, other % n);
                std::vector<std::vector<char>> pw = adj;
                bool cycles_survive = true;
                for (std::size_t len = 1; len <= 6; ++len) {
                    if (len > 1) {
                        std::vector<std::vector<char>> nx(u, std::vector<char>(u, 0));
                        for (std::size_t i = nodes.first(); i < u; i = nodes.next(i))
                            for (std::size_t k = nodes.first(); k < u; k = nodes.next(k)) {
                                if (!pw[i][k]) continue;
                                for (std::size_t j = nodes.first(); j < u; j = nodes.next(j))
                                    if (adj[k][j]) nx[i][j] = 1;
                            }
                        pw = std::move(nx);
                    }
                    for (std::size_t code = nodes.first(); code < u; code = nodes.next(code))
                        if (pw[code][code] && !survivors.contains(code)) cycles_survive = false;
                }
                t.require(cycles_survive, "nodes on short cycles must survive trimming\n" +
                                              describe_sft(shift, c));

                sft_decision d = is_o_expansive_symbol_cover(shift, c);
                bool all_diag = true;
                for (std::size_t code = survivors.first(); code < u;
                     code = survivors.next(code))
                    all_diag = all_diag && code / n == code % n;
                t.item();
                t.require(d.yes == all_diag,
                          "verdict must match diagonality of the surviving pairs\n" +
                              describe_sft(shift, c));
                audit_pair_lasso(t, shift, c, d, "trimming witness\n" + describe_sft(shift, c));
            }
        });
    }
    return t.done(w);
}

check_result check_sft_recoding_invariance(cert_audit* audit) {
    stopwatch w;
    tally t("sft-recoding-invariance", audit);
    for (std::size_t a = 1; a <= 3; ++a) {
        each_shift(a, [&](const sft& shift) {
            for (const symbol_cover& c : representative_symbol_covers(shift)) {
                const sft_decision base = is_o_expansive_symbol_cover(shift, c);
                audit_pair_lasso(t, shift, c, base, "base witness\n" + describe_sft(shift, c));
                for (std::size_t l = 1; l <= 3; ++l) {
                    const higher_block_result hb = higher_block(shift, l);
                    if (l == 1) {
                        t.item();
                        t.require(hb.shift.alphabet_size == shift.alive.count(),
                                  "1-block recoding must keep one symbol per survivor");
                    }
                    const symbol_cover lifted = lift_cover(hb, c);
                    const sft_decision rec = is_o_expansive_symbol_cover(hb.shift, lifted);
                    t.item();
                    t.require(base.yes == rec.yes,
                              "expansivity must be invariant under higher-block recoding (L=" +
                                  std::to_string(l) + ")\n" + describe_sft(shift, c));
                    audit_pair_lasso(t, hb.shift, lifted, rec,
                                     "recoded witness\n" + describe_sft(shift, c));
                }
            }
        });
    }
    return t.done(w);
}

check_result check_duplicated_shift(cert_audit* audit) {
    stopwatch w;
    tally t("duplicated-shift", audit);
    const sft full2 = sft_new({{1, 1}, {1, 1}});
    const sft golden = sft_new({{1, 1}, {1, 0}});
    const sft loop1 = sft_new({{1}});

    auto run = [&](const sft& shift, std::vector<point_set> elements, std::size_t fixed,
                   bool yes, const char* label) {
        const symbol_cover c = make_symbol_cover(shift, std::move(elements));
        sft_decision d = check_duplicated_shift_cover(shift, fixed, c);
        t.item();
        t.require(d.yes == yes, std::string(label) + "\n" + describe_sft(shift, c, fixed));
        if (auto* dp = std::get_if<dup_point_cert>(&d.cert))
            t.cert(!d.yes && check_dup_point(shift, fixed, c, *dp),
                   std::string(label) + " witness");
        if (auto* pl = std::get_if<pair_lasso_cert>(&d.cert))
            t.cert(!d.yes && check_pair_lasso(shift, c, *pl), std::string(label) + " witness");
        return d;
    };

    run(full2, {point_set::of(2, {1}), point_set::of(2, {0})}, 0, true,
        "doubling the fixed point of the full 2-shift over {0} must stay expansive");
    {
        sft_decision d = run(full2, {point_set::of(2, {0}), point_set::of(2, {1}),
                                     point_set::of(2, {0, 1})},
                             0, false,
                             "doubling over the whole alphabet must fail");
        t.item();
        t.require(std::holds_alternative<dup_point_cert>(d.cert),
                  "the failure must come with a glued-point witness");
    }
    run(golden, {point_set::of(2, {1}), point_set::of(2, {0})}, 0, true,
        "doubling the golden-mean fixed point over {0} must stay expansive");
    run(golden, {point_set::of(2, {0, 1})}, 0, false,
        "doubling the golden-mean fixed point over the whole alphabet must fail");
    run(loop1, {point_set::of(1, {0})}, 0, true,
        "doubling the single fixed point of the one-symbol shift must stay expansive");

    { // The designated element must contain an alive self-looped symbol.
        for (auto bad : {
                 std::pair<const sft*, std::size_t>{&golden, 1}, // no self-loop at 1
                 std::pair<const sft*, std::size_t>{&full2, 2},  // not a symbol
             }) {
            t.item();
            bool threw = false;
            try {
                check_duplicated_shift_cover(
                    *bad.first, bad.second,
                    make_symbol_cover(*bad.first,
                                      {point_set::of(2, {0}), point_set::of(2, {0, 1})}));
            } catch (const fixed_symbol_missing&) {
                threw = true;
            }
            t.require(threw, "a bad fixed symbol must be rejected");
        }
        t.item();
        bool threw = false;
        try { // fixed symbol outside the designated (last) element
            check_duplicated_shift_cover(
                full2, 0,
                make_symbol_cover(full2, {point_set::of(2, {0}), point_set::of(2, {1})}));
        } catch (const fixed_symbol_missing&) {
            threw = true;
        }
        t.require(threw, "a fixed symbol outside the designated element must be rejected");
    }
    return t.done(w);
}

// ---------------------------------------------------------------------

std::uint64_t suite_report::total_checked() const {
    std::uint64_t s = 0;
    for (const check_result& r : results) s += r.checked;
    return s;
}

std::uint64_t suite_report::total_violations() const {
    std::uint64_t s = 0;
    for (const check_result& r : results) s += r.violations;
    return s;
}

std::uint64_t suite_report::total_findings() const {
    std::uint64_t s = 0;
    for (const check_result& r : results) s += r.findings;
    return s;
}

suite_report run_suite(const suite_options& opts) {
    if (opts.max_points > kEnumCap)
        throw scale_cap("suite enumeration capped at " + std::to_string(kEnumCap) + " points");
    const std::size_t mp = opts.max_points;
    const std::uint64_t seed = opts.seed;

    using job = std::function<check_result(cert_audit*)>;
    const std::vector<std::pair<const char*, job>> jobs = {
        {"oracle-equivalence", [=](cert_audit* a) { return check_oracle_equivalence(mp, a); }},
        {"refinement-monotonicity",
         [=](cert_audit* a) { return check_refinement_monotonicity(mp, a); }},
        {"canonical-completeness",
         [=](cert_audit* a) { return check_canonical_completeness(mp, a); }},
        {"finite-discrete", [=](cert_audit* a) { return check_finite_discrete(mp, a); }},
        {"t1-implication", [=](cert_audit* a) { return check_t1_implication(mp, a); }},
        {"refinement-t1-implies-orbit",
         [=](cert_audit* a) { return check_r_t1_implies_orbit(mp, a); }},
        {"uniformization", [=](cert_audit* a) { return check_uniformization(mp, a); }},
        {"window-basis", [=](cert_audit* a) { return check_basis_property(mp, a); }},
        {"windows-shrink", [=](cert_audit* a) { return check_windows_shrink(mp, seed, a); }},
        {"power-theorem", [=](cert_audit* a) { return check_power_theorem(mp, a); }},
        {"example-regressions", [=](cert_audit* a) { return check_example_regressions(a); }},
        {"duplication-preservation",
         [=](cert_audit* a) { return check_duplication_preservation(mp, a); }},
        {"duplication-t1", [=](cert_audit* a) { return check_duplication_t1(mp, a); }},
        {"enumeration-counts",
         [=](cert_audit*) { return check_enumeration_counts(mp); }},
        {"restriction-properties",
         [=](cert_audit* a) { return check_restriction_properties(mp, a); }},
        {"extension-oracle-agreement",
         [=](cert_audit*) { return check_extension_oracle_agreement(mp); }},
        {"smallness-oracle-agreement",
         [=](cert_audit* a) { return check_smallness_oracle_agreement(mp, a); }},
        {"sft-expansivity", [=](cert_audit* a) { return check_sft_expansivity(a); }},
        {"sft-periodic-counts", [=](cert_audit*) { return check_sft_periodic_counts(); }},
        {"sft-trimming-soundness",
         [=](cert_audit* a) { return check_sft_trimming_soundness(a); }},
        {"sft-recoding-invariance",
         [=](cert_audit* a) { return check_sft_recoding_invariance(a); }},
        {"duplicated-shift", [=](cert_audit* a) { return check_duplicated_shift(a); }},
    };

    std::vector<check_result> results(jobs.size());
    std::vector<cert_audit> audits(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                results[i] = jobs[i].second(&audits[i]);
            } catch (const std::exception& e) {
                check_result r;
                r.name = jobs[i].first;
                r.violations = 1;
                r.notes.push_back(std::string("check aborted: ") + e.what());
                results[i] = std::move(r);
            }
        }
    };

    const std::size_t workers = std::max<std::size_t>(1, std::min(opts.jobs, jobs.size()));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    suite_report rep;
    rep.results = std::move(results);
    std::sort(rep.results.begin(), rep.results.end(),
              [](const check_result& a, const check_result& b) { return a.name < b.name; });
    for (const cert_audit& a : audits) {
        rep.audit.checked += a.checked;
        rep.audit.failed += a.failed;
    }
    return rep;
}

} // namespace expanso
