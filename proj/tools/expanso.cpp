// Command-line front end: decide expansivity of covers, run constructions,
// count periodic points, and drive the property suite over instance files.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "expanso/constructions.hpp"
#include "expanso/cover.hpp"
#include "expanso/decision.hpp"
#include "expanso/dynamics.hpp"
#include "expanso/errors.hpp"
#include "expanso/homeo.hpp"
#include "expanso/instance.hpp"
#include "expanso/sft.hpp"
#include "expanso/suite.hpp"
#include "expanso/topology.hpp"

namespace {

using nlohmann::json;
using namespace expanso;

struct stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

json set_json(const point_set& s) {
    json a = json::array();
    for (std::size_t p : s.members()) a.push_back(p);
    return a;
}

json cert_json(const certificate& cert) {
    struct v {
        json operator()(std::monostate) const { return nullptr; }
        json operator()(const witness_pair_cert& w) const {
            return {{"type", "witness-pair"}, {"x", w.x}, {"y", w.y}, {"period", w.period}};
        }
        json operator()(const uniform_radius_cert& u) const {
            return {{"type", "uniform-radius"}, {"radius", u.radius}};
        }
        json operator()(const family_cycle_cert& c) const {
            json states = json::array();
            for (const family_state& st : c.states) {
                json sets = json::array();
                for (const point_set& s : st.family) sets.push_back(set_json(s));
                states.push_back({{"level", st.level}, {"family", sets}});
            }
            return {{"type", "family-cycle"}, {"repeat_of", c.repeat_of}, {"states", states}};
        }
        json operator()(const smallness_cert& s) const {
            return {{"type", "small-inside"}, {"point", s.point}};
        }
    };
    return std::visit(v{}, cert);
}

json sft_cert_json(const sft_certificate& cert) {
    auto pairs_json = [](const std::vector<std::pair<std::size_t, std::size_t>>& v) {
        json a = json::array();
        for (auto [x, y] : v) a.push_back(json::array({x, y}));
        return a;
    };
    auto symbols_json = [](const std::vector<std::size_t>& v) {
        json a = json::array();
        for (std::size_t s : v) a.push_back(s);
        return a;
    };
    struct v {
        decltype(pairs_json)& pj;
        decltype(symbols_json)& sj;
        json operator()(std::monostate) const { return nullptr; }
        json operator()(const pair_lasso_cert& c) const {
            return {{"type", "pair-lasso"},
                    {"left_cycle", pj(c.left_cycle)},
                    {"core", pj(c.core)},
                    {"right_cycle", pj(c.right_cycle)}};
        }
        json operator()(const dup_point_cert& c) const {
            return {{"type", "glued-point"},
                    {"left_cycle", sj(c.left_cycle)},
                    {"core", sj(c.core)},
                    {"right_cycle", sj(c.right_cycle)}};
        }
    };
    return std::visit(v{pairs_json, symbols_json}, cert);
}

void emit(const json& report, bool machine, const std::string& text) {
    if (machine)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

[[noreturn]] void fail(const std::string& what) { throw bad_argument(what); }

std::string error_kind(const expanso::error& e) {
    if (dynamic_cast<const not_a_topology*>(&e)) return "not-a-topology";
    if (dynamic_cast<const empty_space*>(&e)) return "empty-space";
    if (dynamic_cast<const not_continuous*>(&e)) return "not-continuous";
    if (dynamic_cast<const not_invariant*>(&e)) return "not-invariant";
    if (dynamic_cast<const not_closed*>(&e)) return "not-closed";
    if (dynamic_cast<const not_a_diagonal_nbhd*>(&e)) return "not-a-diagonal-nbhd";
    if (dynamic_cast<const oracle_scale_exceeded*>(&e)) return "oracle-scale-exceeded";
    if (dynamic_cast<const search_budget_exceeded*>(&e)) return "search-budget-exceeded";
    if (dynamic_cast<const scale_cap*>(&e)) return "scale-cap";
    if (dynamic_cast<const cover_not_expansive*>(&e)) return "cover-not-expansive";
    if (dynamic_cast<const cover_gap*>(&e)) return "cover-gap";
    if (dynamic_cast<const empty_shift*>(&e)) return "empty-shift";
    if (dynamic_cast<const fixed_symbol_missing*>(&e)) return "fixed-symbol-missing";
    if (dynamic_cast<const parse_error*>(&e)) return "parse-error";
    if (dynamic_cast<const bad_argument*>(&e)) return "bad-argument";
    return "error";
}

const finite_instance& need_finite(const instance_doc& doc, const char* cmd) {
    if (!doc.is_finite()) fail(std::string(cmd) + " requires a finite instance");
    return *doc.finite;
}

const sft_instance& need_sft(const instance_doc& doc, const char* cmd) {
    if (doc.is_finite()) fail(std::string(cmd) + " requires an sft instance");
    return *doc.symbolic;
}

const cover& named_cover(const finite_instance& inst, const std::string& name) {
    auto it = inst.covers.find(name);
    if (it == inst.covers.end()) fail("no cover named \"" + name + "\" in the instance");
    return it->second;
}

const symbol_cover& named_symbol_cover(const sft_instance& inst, const std::string& name) {
    auto it = inst.covers.find(name);
    if (it == inst.covers.end()) fail("no cover named \"" + name + "\" in the instance");
    return it->second;
}

point_set set_from_list(std::size_t n, const std::vector<std::size_t>& pts,
                        const char* what) {
    point_set s(n);
    for (std::size_t p : pts) {
        if (p >= n) fail(std::string(what) + ": point " + std::to_string(p) + " out of range");
        s.insert(p);
    }
    return s;
}

// ---------------------------------------------------------------- axioms

int run_axioms(const std::string& file, bool machine) {
    const instance_doc doc = load_instance(file);
    const finite_instance& inst = need_finite(doc, "axioms");
    const separation_record sep = separation_axioms(inst.space);
    const std::size_t n = inst.space.points();

    json closures = json::array();
    std::string table;
    for (std::size_t p = 0; p < n; ++p) {
        point_set single(n);
        single.insert(p);
        const point_set cl = inst.space.closure(single);
        closures.push_back(set_json(cl));
        table += "closure({" + std::to_string(p) + "}) = " + cl.to_string() + "\n";
    }

    const json report = {{"command", "axioms"},
                         {"t0", sep.t0},
                         {"t1", sep.t1},
                         {"hausdorff", sep.hausdorff},
                         {"discrete", inst.space.is_discrete()},
                         {"closures", closures}};
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    emit(report, machine,
         std::string("axioms: t0=") + yn(sep.t0) + " t1=" + yn(sep.t1) +
             " hausdorff=" + yn(sep.hausdorff) + " discrete=" +
             yn(inst.space.is_discrete()) + "\n" + table);
    return 0;
}

// ----------------------------------------------------------------- check

int run_check(const std::string& file, const std::string& cover_name, const std::string& mode,
              const std::string& target_name, bool machine) {
    const instance_doc doc = load_instance(file);
    const finite_instance& inst = need_finite(doc, "check");
    const cover& c = named_cover(inst, cover_name);
    stopwatch w;

    if (mode == "uniform") {
        if (target_name.empty()) fail("uniform mode needs --target");
        const cover& target = named_cover(inst, target_name);
        const uniform_n_result u = uniform_refinement_n(inst.map, c, target);
        const double secs = w.seconds();
        json report = {{"command", "check"},
                       {"mode", mode},
                       {"cover", cover_name},
                       {"target", target_name},
                       {"yes", u.n.has_value()},
                       {"n", u.n ? json(*u.n) : json(nullptr)},
                       {"certificate", cert_json(u.detail.cert)},
                       {"seconds", nullptr}};
        emit(report, machine,
             "check: mode=uniform cover=" + cover_name + " target=" + target_name + "\n" +
                 "uniform N: " + (u.n ? std::to_string(*u.n) : std::string("none")) + "\n" +
                 "certificate: " + certificate_to_string(u.detail.cert) + "\n" +
                 "time: " + std::to_string(secs) + "s\n");
        return u.n ? 0 : 1;
    }

    decision d;
    if (mode == "orbit")
        d = is_o_expansive_cover(inst.map, c);
    else
        d = is_r_expansive_cover(inst.map, c);
    const double secs = w.seconds();
    json report = {{"command", "check"},
                   {"mode", mode},
                   {"cover", cover_name},
                   {"yes", d.yes},
                   {"certificate", cert_json(d.cert)},
                   {"seconds", nullptr}};
    emit(report, machine,
         "check: mode=" + mode + " cover=" + cover_name + "\n" + "verdict: " +
             (d.yes ? "yes" : "no") + "\n" + "certificate: " + certificate_to_string(d.cert) +
             "\n" + "time: " + std::to_string(secs) + "s\n");
    return d.yes ? 0 : 1;
}

// ---------------------------------------------------------------- decide

int run_decide(const std::string& file, const std::string& mode, bool machine) {
    const instance_doc doc = load_instance(file);
    const finite_instance& inst = need_finite(doc, "decide");
    const decision d = mode == "orbit" ? decide_orbit_expansive(inst.map)
                                       : decide_refinement_expansive(inst.map);
    const json report = {{"command", "decide"}, {"mode", mode}, {"yes", d.yes}};
    emit(report, machine,
         "decide: mode=" + mode + "\nverdict: " + (d.yes ? "yes" : "no") + "\n");
    return d.yes ? 0 : 1;
}

// -------------------------------------------------------------- construct

int run_construct(const std::string& file, const std::string& op,
                  const std::vector<std::size_t>& k_list, long long r,
                  const std::vector<std::size_t>& carrier_list, const std::string& out,
                  bool machine) {
    const instance_doc doc = load_instance(file);
    const finite_instance& inst = need_finite(doc, "construct");
    const std::size_t n = inst.space.points();

    finite_space out_space = inst.space;
    homeo out_map = inst.map;
    std::map<std::string, cover> out_covers;

    if (op == "duplicate") {
        const point_set k = set_from_list(n, k_list, "--k");
        const duplication dup = duplicate(inst.space, inst.map, k);
        out_space = dup.result_space;
        out_map = dup.result_map;
        for (const auto& [name, c] : inst.covers) out_covers.emplace(name, duplicated_cover(dup, c));
    } else if (op == "quotient-t0") {
        const t0_quotient_result q = t0_quotient(inst.map);
        out_space = q.space;
        out_map = q.map;
        for (const auto& [name, c] : inst.covers) {
            std::vector<point_set> els;
            for (const point_set& el : c.elements) {
                point_set img(q.space.points());
                for (std::size_t p = el.first(); p < n; p = el.next(p)) img.insert(q.cls[p]);
                els.push_back(std::move(img));
            }
            out_covers.emplace(name, make_cover(q.space, std::move(els)));
        }
    } else if (op == "power") {
        if (r == 0) fail("--r must be nonzero");
        out_map = homeo_power(inst.map, r);
        for (const auto& [name, c] : inst.covers)
            out_covers.emplace(name, power_cover(inst.map, c, r));
    } else { // subspace
        const point_set carrier = set_from_list(n, carrier_list, "--carrier");
        const restriction sub = restrict(inst.map, carrier);
        out_space = sub.map.space;
        out_map = sub.map;
        for (const auto& [name, c] : inst.covers)
            out_covers.emplace(name, restrict_cover(sub, c));
    }

    const instance_doc result = make_finite_doc(out_space, out_map, std::move(out_covers));
    const std::string text = serialize_instance(result);
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out);
    if (!f) fail("cannot open output file " + out);
    f << text;
    const json report = {{"command", "construct"},
                         {"op", op},
                         {"written", out},
                         {"points", out_space.points()}};
    emit(report, machine,
         "construct: op=" + op + " wrote " + std::to_string(out_space.points()) +
             "-point instance to " + out + "\n");
    return 0;
}

// ------------------------------------------------------------------- sft

int run_sft(const std::string& file, const std::string& op, const std::string& cover_name,
            std::size_t n, bool machine) {
    const instance_doc doc = load_instance(file);
    const sft_instance& inst = need_sft(doc, "sft");

    if (op == "periodic") {
        if (n == 0) fail("--n must be at least 1");
        const big_int count = periodic_count(inst.shift, n);
        const json report = {{"command", "sft"},
                             {"op", op},
                             {"n", n},
                             {"count", count.str()}};
        emit(report, machine,
             "sft: op=periodic n=" + std::to_string(n) + "\nperiodic points: " + count.str() +
                 "\n");
        return 0;
    }

    if (cover_name.empty()) fail("sft " + op + " needs --cover");
    const symbol_cover& c = named_symbol_cover(inst, cover_name);
    sft_decision d;
    std::string head;
    if (op == "check-cover") {
        d = is_o_expansive_symbol_cover(inst.shift, c);
        head = "sft: op=check-cover cover=" + cover_name + "\n";
    } else { // duplicated
        if (!inst.fixed_symbol) fail("duplicated mode needs a fixed_symbol in the instance");
        d = check_duplicated_shift_cover(inst.shift, *inst.fixed_symbol, c);
        head = "sft: op=duplicated cover=" + cover_name +
               " fixed_symbol=" + std::to_string(*inst.fixed_symbol) + "\n";
    }
    const json report = {{"command", "sft"},
                         {"op", op},
                         {"cover", cover_name},
                         {"yes", d.yes},
                         {"certificate", sft_cert_json(d.cert)}};
    emit(report, machine,
         head + "verdict: " + (d.yes ? "yes" : "no") + "\ncertificate: " +
             sft_certificate_to_string(d.cert) + "\n");
    return d.yes ? 0 : 1;
}

// ----------------------------------------------------------------- suite

int run_suite_cmd(std::size_t max_points, std::uint64_t seed, std::size_t jobs, bool machine) {
    suite_options opts;
    opts.max_points = max_points;
    opts.seed = seed;
    opts.jobs = jobs == 0 ? 1 : jobs;
    const suite_report rep = run_suite(opts);

    json checks = json::array();
    std::string text = "suite: max_points=" + std::to_string(max_points) +
                       " seed=" + std::to_string(seed) + " jobs=" + std::to_string(opts.jobs) +
                       "\n";
    for (const check_result& r : rep.results) {
        json notes = json::array();
        for (const std::string& s : r.notes) notes.push_back(s);
        checks.push_back({{"name", r.name},
                          {"checked", r.checked},
                          {"violations", r.violations},
                          {"findings", r.findings},
                          {"notes", notes},
                          {"reproducer", r.reproducer.empty() ? json(nullptr) : json(r.reproducer)},
                          {"seconds", nullptr}});
        char line[256];
        std::snprintf(line, sizeof(line), "[%s] %-28s checked=%llu violations=%llu findings=%llu (%.3fs)\n",
                      r.ok() ? " ok " : "FAIL", r.name.c_str(),
                      static_cast<unsigned long long>(r.checked),
                      static_cast<unsigned long long>(r.violations),
                      static_cast<unsigned long long>(r.findings), r.seconds);
        text += line;
        for (const std::string& s : r.notes) text += "       note: " + s + "\n";
        if (!r.reproducer.empty())
            text += "       reproducer:\n" + r.reproducer;
    }
    const bool cert_ok = rep.audit.failed == 0;
    text += "certificates: checked=" + std::to_string(rep.audit.checked) +
            " failed=" + std::to_string(rep.audit.failed) + "\n";
    text += "total: checked=" + std::to_string(rep.total_checked()) +
            " violations=" + std::to_string(rep.total_violations()) +
            " findings=" + std::to_string(rep.total_findings()) + "\n";

    const json report = {{"command", "suite"},
                         {"max_points", max_points},
                         {"seed", seed},
                         {"checks", checks},
                         {"certificates",
                          {{"checked", rep.audit.checked}, {"failed", rep.audit.failed}}},
                         {"totals",
                          {{"checked", rep.total_checked()},
                           {"violations", rep.total_violations()},
                           {"findings", rep.total_findings()}}}};
    emit(report, machine, text);
    return rep.total_violations() == 0 && cert_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"expanso: expansivity decisions for finite dynamical systems and shifts"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "machine"}));

    std::string ax_file;
    auto* ax = app.add_subcommand("axioms", "separation axioms and closure table");
    ax->fallthrough();
    ax->add_option("file", ax_file, "instance file")->required();

    std::string ck_file, ck_cover, ck_mode, ck_target;
    auto* ck = app.add_subcommand("check", "decide expansivity of a named cover");
    ck->fallthrough();
    ck->add_option("file", ck_file, "instance file")->required();
    ck->add_option("--cover", ck_cover, "cover name")->required();
    ck->add_option("--mode", ck_mode, "orbit | refinement | uniform")
        ->required()
        ->check(CLI::IsMember({"orbit", "refinement", "uniform"}));
    ck->add_option("--target", ck_target, "target cover name (uniform mode)");

    std::string dc_file, dc_mode;
    auto* dc = app.add_subcommand("decide", "decide existence of an expansivity cover");
    dc->fallthrough();
    dc->add_option("file", dc_file, "instance file")->required();
    dc->add_option("--mode", dc_mode, "orbit | refinement")
        ->required()
        ->check(CLI::IsMember({"orbit", "refinement"}));

    std::string cs_file, cs_op, cs_out;
    std::vector<std::size_t> cs_k, cs_carrier;
    long long cs_r = 0;
    auto* cs = app.add_subcommand("construct", "derive a new instance file");
    cs->fallthrough();
    cs->add_option("file", cs_file, "instance file")->required();
    cs->add_option("--op", cs_op, "duplicate | quotient-t0 | power | subspace")
        ->required()
        ->check(CLI::IsMember({"duplicate", "quotient-t0", "power", "subspace"}));
    cs->add_option("--k", cs_k, "closed invariant point set for duplicate")->delimiter(',');
    cs->add_option("--r", cs_r, "nonzero exponent for power");
    cs->add_option("--carrier", cs_carrier, "invariant point set for subspace")->delimiter(',');
    cs->add_option("--out", cs_out, "output file (default: stdout)");

    std::string sf_file, sf_op, sf_cover;
    std::size_t sf_n = 0;
    auto* sf = app.add_subcommand("sft", "shift-of-finite-type decisions");
    sf->fallthrough();
    sf->add_option("file", sf_file, "instance file")->required();
    sf->add_option("--op", sf_op, "check-cover | periodic | duplicated")
        ->required()
        ->check(CLI::IsMember({"check-cover", "periodic", "duplicated"}));
    sf->add_option("--cover", sf_cover, "cover name");
    sf->add_option("--n", sf_n, "period for periodic counting");

    std::size_t su_max = 3, su_jobs = 1;
    std::uint64_t su_seed = 0;
    auto* su = app.add_subcommand("suite", "run the property-check suite");
    su->fallthrough();
    su->add_option("--max-points", su_max, "enumeration bound (at most 5)");
    su->add_option("--seed", su_seed, "seed for sampled checks");
    su->add_option("--jobs", su_jobs, "worker threads")->envname("EXPANSO_JOBS");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const bool machine = format == "machine";
    try {
        if (ax->parsed()) return run_axioms(ax_file, machine);
        if (ck->parsed()) return run_check(ck_file, ck_cover, ck_mode, ck_target, machine);
        if (dc->parsed()) return run_decide(dc_file, dc_mode, machine);
        if (cs->parsed())
            return run_construct(cs_file, cs_op, cs_k, cs_r, cs_carrier, cs_out, machine);
        if (sf->parsed()) return run_sft(sf_file, sf_op, sf_cover, sf_n, machine);
        if (su->parsed()) return run_suite_cmd(su_max, su_seed, su_jobs, machine);
    } catch (const expanso::error& e) {
        const std::string kind = error_kind(e);
        if (machine)
            std::cout << nlohmann::json{{"error", e.what()}, {"kind", kind}}.dump(2) << "\n";
        std::cerr << "error[" << kind << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        if (machine) std::cout << nlohmann::json{{"error", e.what()}}.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
