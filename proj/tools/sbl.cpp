// sbl: convolution algebra, window invariants, and capacities of planar
// domains.  Exit codes: 0 ok, 2 input error, 3 non-stabilization (bounds
// emitted), 4 internal inconsistency (falsified invariant).
#include "sbl/acceptance_suite.hpp"
#include "sbl/json_io.hpp"
#include "sbl/svg.hpp"
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0, kExitInput = 2, kExitNoStab = 3, kExitInternal = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

double parse_real(const std::string& s) {
    if (s == "pi") return M_PI;
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw InputError("malformed number '" + s + "'");
    }
    if (pos == s.size()) return v;
    if (s.substr(pos) == "pi") return v * M_PI;
    throw InputError("malformed number '" + s + "'");
}

std::pair<double, double> parse_window(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw InputError("window must be 'a,b' with a < b");
    double a = parse_real(s.substr(0, comma));
    double b = parse_real(s.substr(comma + 1));
    if (!(a < b)) throw InputError("window must satisfy a < b");
    return {a, b};
}

sbl::DomainSpec parse_domain(const std::string& s) {
    auto colon = s.find(':');
    std::string kind = s.substr(0, colon == std::string::npos ? s.size() : colon);
    std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (kind == "ball") {
        if (rest.empty()) throw InputError("ball domain needs a capacity: ball:pi");
        return sbl::DomainSpec::ball(parse_real(rest));
    }
    if (kind == "quad") {
        // quad:q11,q12,q22 for U = {q11 x^2 + 2 q12 x y + q22 y^2 < 1}
        auto c1 = rest.find(',');
        auto c2 = rest.find(',', c1 == std::string::npos ? rest.size() : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw InputError("quad domain needs quad:q11,q12,q22");
        sbl::Mat2 q;
        q(0, 0) = parse_real(rest.substr(0, c1));
        q(0, 1) = q(1, 0) = parse_real(rest.substr(c1 + 1, c2 - c1 - 1));
        q(1, 1) = parse_real(rest.substr(c2 + 1));
        return sbl::DomainSpec::quadratic(q);
    }
    throw InputError("unknown domain '" + s + "' (use ball:<cap> or quad:a,b,c)");
}

sbl::FieldTag parse_field(const std::string& s) {
    if (s == "f2") return sbl::FieldTag::F2;
    if (s == "q") return sbl::FieldTag::Q;
    throw InputError("--field must be f2 or q");
}

std::vector<double> parse_schedule(const std::string& s) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(parse_real(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.size() < 3) throw InputError("schedule needs at least 3 alphas");
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1]) throw InputError("schedule must be increasing");
    return out;
}

int threads_from_env() {
    const char* t = std::getenv("SBL_THREADS");
    if (!t) return 1;
    int v = std::atoi(t);
    if (v < 1) throw InputError("SBL_THREADS must be a positive integer");
    return v;
}

int cmd_convolve(const std::string& fpath, const std::string& gpath, bool oracle,
                 const std::string& field, const std::string& out) {
    sbl::SheafOnR f = sbl::sheaf_from_json(read_json_file(fpath));
    sbl::SheafOnR g = sbl::sheaf_from_json(read_json_file(gpath));
    f.field = g.field = parse_field(field);
    sbl::SheafOnR conv = sbl::convolve(f, g);
    conv.field = f.field;
    json j = sbl::sheaf_to_json(conv);
    if (oracle) {
        // cross-check stalks at all endpoint sums and their midpoints
        std::vector<sbl::ExtRat> pts;
        for (const auto& a : f.summands)
            for (const auto& b : g.summands)
                for (const auto& u : {a.left, a.right})
                    for (const auto& v : {b.left, b.right}) {
                        if (!u.finite() || !v.finite()) continue;
                        pts.push_back(u + v);
                        pts.push_back(u + v + sbl::ExtRat(sbl::Rat(1, 7)));
                    }
        json checks = json::array();
        bool ok = true;
        for (const auto& t : pts) {
            sbl::GradedDims want = sbl::convolve_stalk_oracle(f, g, t);
            sbl::GradedDims got;
            for (const auto& s : conv.summands) {
                bool li = s.left_closed ? s.left <= t : s.left < t;
                bool ri = s.right_closed ? t <= s.right : t < s.right;
                if (li && ri) got.add(-s.shift, s.mult);
            }
            bool agree = want == got;
            ok = ok && agree;
            checks.push_back({{"t", sbl::extrat_to_json(t)},
                              {"agree", agree},
                              {"oracle", sbl::dims_to_json(want)}});
        }
        j["oracle_check"] = {{"pass", ok}, {"stalks", checks}};
        if (!ok) {
            write_text(out, j.dump(2) + "\n");
            std::cerr << "internal inconsistency: rule table disagrees with oracle\n";
            return kExitInternal;
        }
    }
    write_text(out, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_barcode(const std::string& fpath, const std::string& field,
                const std::string& out, const std::string& svg) {
    sbl::SheafOnR f = sbl::sheaf_from_json(read_json_file(fpath));
    f.field = parse_field(field);
    sbl::Barcode b = sbl::to_barcode(sbl::tamarkin_project(f));
    write_text(out, sbl::barcode_to_json(b).dump(2) + "\n");
    if (!svg.empty()) write_text(svg, sbl::svg_barcode(b, "barcode"));
    return kExitOk;
}

int cmd_hh(const std::string& domain, const std::string& window,
           const std::string& mode, const std::string& schedule,
           const std::string& out, const std::string& svg) {
    sbl::DomainSpec u = parse_domain(domain);
    if (!schedule.empty()) u.set_schedule(parse_schedule(schedule));
    auto [a, b] = parse_window(window);
    sbl::InvariantReport rep;
    if (mode == "out") {
        if (!std::isfinite(a) || !std::isfinite(b))
            throw InputError("mode out needs a finite window");
        rep = sbl::hh_out_window(u, a, b);
    } else if (mode == "in") {
        if (!std::isfinite(a) || !std::isfinite(b))
            throw InputError("mode in needs a finite window");
        rep = sbl::hh_in_window(u, a, b);
    } else if (mode == "full") {
        if (!std::isfinite(b)) throw InputError("mode full needs a finite L");
        if (std::isfinite(a)) throw InputError("mode full takes a window -inf,L");
        rep = sbl::hh_full(u, b);
    } else {
        throw InputError("--mode must be in, out, or full");
    }
    write_text(out, sbl::report_to_json(rep).dump(2) + "\n");
    if (!svg.empty()) {
        sbl::Barcode bars;
        for (const auto& [deg, n] : rep.dims.entries())
            bars.bars.push_back({sbl::ExtRat::from_double(std::isfinite(a) ? a : 0),
                                 std::isfinite(b) ? sbl::ExtRat::from_double(b)
                                                  : sbl::ExtRat::pos_inf(),
                                 deg, n});
        write_text(svg, sbl::svg_barcode(bars, "window invariant " + mode));
    }
    return rep.stabilized ? kExitOk : kExitNoStab;
}

int cmd_capacity(const std::string& domain, int k, const std::string& out,
                 const std::string& svg) {
    if (k < 1) throw InputError("--k must be >= 1");
    sbl::DomainSpec u = parse_domain(domain);
    std::string csv = "domain,k,capacity,provenance\n";
    std::vector<std::pair<double, std::int64_t>> steps{{0.0, 0}};
    for (int i = 1; i <= k; ++i) {
        double v = sbl::capacity(u, i);
        csv += domain + "," + std::to_string(i) + ",";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", v);
        csv += buf;
        csv += ",certified-tolerance:1e-3\n";
        steps.push_back({v, 2 * i});
    }
    write_text(out, csv);
    if (!svg.empty()) write_text(svg, sbl::svg_rank_steps(steps, "capacity staircase"));
    return kExitOk;
}

int cmd_spectrum(const std::string& domain, int kmax, const std::string& out) {
    sbl::DomainSpec u = parse_domain(domain);
    json j = {{"domain", domain},
              {"capacity", u.capacity()},
              {"spectrum", u.spectrum(kmax)},
              {"provenance", "exact (closed Reeb orbits of the quadratic boundary)"}};
    write_text(out, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_gf(const std::string& hpath, const std::string& window,
           const std::string& backend, int resolution, const std::string& out) {
    sbl::HamiltonianSpec h = sbl::hamiltonian_from_json(read_json_file(hpath));
    auto [a, b] = parse_window(window);
    sbl::GfBackend be;
    if (backend == "grid") be = sbl::GfBackend::Grid;
    else if (backend == "comb" || backend == "combinatorial")
        be = sbl::GfBackend::Combinatorial;
    else throw InputError("--backend must be grid or comb");
    sbl::WindowDims w = sbl::gf_homology_window(h, a, b, be, resolution);
    json j = {{"window", {a, b}},
              {"dims", sbl::dims_to_json(w.dims)},
              {"provenance_mode", w.exact ? "exact" : "bounds"},
              {"notes", w.notes}};
    write_text(out, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_selftest(std::uint64_t seed, const std::string& out) {
    std::vector<sbl::CriterionResult> rs = sbl::run_acceptance(seed);
    write_text(out, sbl::acceptance_report(rs));
    for (const auto& r : rs)
        if (!r.pass) return 1;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructible-sheaf convolution, window invariants, capacities"};
    app.require_subcommand(1);

    std::string field = "f2", out = "-", svg, window, domain, mode = "out",
                schedule, backend = "comb", hpath;
    std::string fpath, gpath;
    bool oracle = false;
    int k = 1, kmax = 3, resolution = 257;
    std::uint64_t seed = 20260826u;

    auto* convolve = app.add_subcommand("convolve", "convolution of two sheaves");
    convolve->add_option("f", fpath)->required();
    convolve->add_option("g", gpath)->required();
    convolve->add_flag("--oracle", oracle);

    auto* barcode = app.add_subcommand("barcode", "Tamarkin normal form as a barcode");
    barcode->add_option("f", fpath)->required();

    auto* hh = app.add_subcommand("hh", "window Hochschild-style invariant");
    hh->add_option("--domain", domain)->required();
    hh->add_option("--window", window)->required();
    hh->add_option("--mode", mode);
    hh->add_option("--schedule", schedule);

    auto* cap = app.add_subcommand("capacity", "symplectic capacities");
    cap->add_option("--domain", domain)->required();
    cap->add_option("--k", k);

    auto* spec = app.add_subcommand("spectrum", "Reeb action spectrum");
    spec->add_option("--domain", domain)->required();
    spec->add_option("--k-max", kmax);

    auto* gf = app.add_subcommand("gf", "generating-function window homology");
    gf->add_option("--hamiltonian", hpath)->required();
    gf->add_option("--window", window)->required();
    gf->add_option("--backend", backend);
    gf->add_option("--resolution", resolution);

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_option("--seed", seed);

    for (auto* sc : {convolve, barcode, hh, cap, spec, gf, selftest}) {
        sc->add_option("--field", field);
        sc->add_option("-o,--output", out);
        sc->add_option("--svg", svg);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        threads_from_env(); // validated; computation is single-process
        if (convolve->parsed()) return cmd_convolve(fpath, gpath, oracle, field, out);
        if (barcode->parsed()) return cmd_barcode(fpath, field, out, svg);
        if (hh->parsed()) return cmd_hh(domain, window, mode, schedule, out, svg);
        if (cap->parsed()) return cmd_capacity(domain, k, out, svg);
        if (spec->parsed()) return cmd_spectrum(domain, kmax, out);
        if (gf->parsed()) return cmd_gf(hpath, window, backend, resolution, out);
        if (selftest->parsed()) return cmd_selftest(seed, out);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const sbl::WindowError& e) {
        std::cerr << "input error (window on spectrum): " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
