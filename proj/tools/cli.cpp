// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "tfshear/decision.hpp"
#include "tfshear/gabor.hpp"
#include "tfshear/io.hpp"
#include "tfshear/schrodinger.hpp"
#include "tfshear/shear.hpp"
#include "tfshear/sweep.hpp"
#include "tfshear/tf_core.hpp"

namespace tfshear::cli {

namespace {

using json = nlohmann::json;

struct CliError : std::runtime_error {
    CliError(int code, std::string kind, const std::string& msg)
        : std::runtime_error(msg), code(code), kind(std::move(kind)) {}
    int code;
    std::string kind;
};

[[noreturn]] void usage(const std::string& kind, const std::string& msg) { throw CliError(kUsage, kind, msg); }
[[noreturn]] void data(const std::string& kind, const std::string& msg) { throw CliError(kData, kind, msg); }

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    std::replace(s.begin(), s.end(), '\r', ' ');
    return s;
}

Exponent exponent_arg(const std::string& name, const std::string& text) {
    try {
        return Exponent::parse(text);
    } catch (const std::exception& e) {
        usage("invalid_exponent", name + "='" + text + "': " + e.what());
    }
}

Number number_arg(const std::string& name, const std::string& text) {
    try {
        return Number::parse(text);
    } catch (const std::exception& e) {
        usage("invalid_number", name + "='" + text + "': " + e.what());
    }
}

bool is_integer(const Number& n) { return n.is_exact() && n.exact()->den() == 1; }

double real_arg(const std::string& name, const std::string& text) { return number_arg(name, text).value(); }

int dim_arg(const std::string& text) {
    const Number n = number_arg("d", text);
    if (!is_integer(n) || n.value() < 1 || n.value() > 8)
        usage("invalid_dimension", "d='" + text + "' must be an integer in [1, 8]");
    return static_cast<int>(n.value());
}

ExponentQuad quad_args(const std::string& p1, const std::string& q1, const std::string& p2, const std::string& q2) {
    return {exponent_arg("p1", p1), exponent_arg("q1", q1), exponent_arg("p2", p2), exponent_arg("q2", q2)};
}

std::vector<int> scales_arg(const std::vector<std::string>& texts) {
    std::vector<int> Ns;
    for (const auto& t : texts) {
        const Number n = number_arg("N", t);
        if (!is_integer(n) || n.value() < 1)
            usage("invalid_scale", "N='" + t + "' must be a positive integer");
        Ns.push_back(static_cast<int>(n.value()));
    }
    if (Ns.size() < 3 || !std::is_sorted(Ns.begin(), Ns.end()) ||
        std::adjacent_find(Ns.begin(), Ns.end()) != Ns.end())
        usage("invalid_scale", "need at least three increasing scales N");
    return Ns;
}

std::optional<Profile> profile_arg(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    if (text == "ones")
        return Profile::ones();
    if (text == "point")
        return Profile::point();
    if (text.rfind("power:", 0) == 0)
        return Profile::power(real_arg("profile", text.substr(6)));
    usage("invalid_profile", "profile '" + text + "' (expected ones, point or power:<e>)");
}

struct GridOptions {
    int L = 1024;
    std::string h = "1/32";

    GridSpec spec() const {
        GridSpec g{1, L, real_arg("h", h)};
        try {
            g.validate();
        } catch (const std::exception& e) {
            usage("invalid_grid", e.what());
        }
        return g;
    }
};

// gaussian[:width] | hermite:k | chirp[:rate] | noise:seed[:band] | file:path
SampledSignal signal_arg(const std::string& what, const std::string& text, const GridSpec& g) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');)
        parts.push_back(item);
    if (parts.empty())
        usage("invalid_signal", what + " is empty");
    const std::string& kind = parts[0];
    try {
        if (kind == "file") {
            if (text.size() <= 5)
                usage("invalid_signal", what + ": file: needs a path");
            SampledSignal s = load_signal(text.substr(5));
            if (s.grid.dim != 1)
                data("unresolvable_window", what + ": only one-dimensional signals are supported here");
            return s;
        }
        if (kind == "gaussian" && parts.size() <= 2)
            return gaussian(g, parts.size() == 2 ? real_arg(what, parts[1]) : 1.0);
        if (kind == "hermite" && parts.size() == 2) {
            const Number k = number_arg(what, parts[1]);
            if (!is_integer(k))
                usage("invalid_signal", what + ": hermite order must be an integer");
            return hermite(g, static_cast<int>(k.value()));
        }
        if (kind == "chirp" && parts.size() <= 2)
            return chirped_gaussian(g, parts.size() == 2 ? real_arg(what, parts[1]) : 1.0);
        if (kind == "noise" && (parts.size() == 2 || parts.size() == 3)) {
            const Number seed = number_arg(what, parts[1]);
            if (!is_integer(seed) || seed.value() < 0)
                usage("invalid_signal", what + ": noise seed must be a nonnegative integer");
            return bandlimited_noise(g, static_cast<std::uint64_t>(seed.value()),
                                     parts.size() == 3 ? real_arg(what, parts[2]) : 2.0);
        }
    } catch (const FormatError& e) {
        data("malformed_file", e.what());
    } catch (const std::invalid_argument& e) {
        usage("invalid_signal", what + ": " + e.what());
    }
    usage("invalid_signal",
          what + "='" + text + "' (expected gaussian[:w], hermite:k, chirp[:r], noise:seed[:band] or file:path)");
}

// Signal first; generated windows follow its grid, file windows must match it.
std::pair<SampledSignal, SampledSignal> signal_pair(const std::string& f_text, const std::string& g_text,
                                                    const GridOptions& grid) {
    const GridSpec base = grid.spec();
    SampledSignal f = signal_arg("signal", f_text, base);
    SampledSignal g = signal_arg("window", g_text, f.grid);
    if (g.grid.L != f.grid.L || g.grid.h != f.grid.h)
        data("unresolvable_window", "window grid differs from the signal grid");
    return {std::move(f), std::move(g)};
}

void write_output(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f || !(f << text))
        data("io", "cannot write '" + path + "'");
}

json number_json(const Number& n) { return n.is_exact() ? json(n.to_string()) : json(n.value()); }

std::string csv_real(double v) { return format_real(v); }

// ---------------------------------------------------------------- commands

int cmd_decide(const std::vector<std::string>& a, const std::string& op, std::ostream& out) {
    const int d = dim_arg(a[0]);
    const ExponentQuad quad = quad_args(a[1], a[2], a[3], a[4]);
    const Number s = number_arg("s", a[5]);
    const Verdict v = op == "schrodinger" ? decide_schrodinger(d, quad, s) : decide_shear(d, quad, s);
    json j = to_json(v);
    j["d"] = d;
    j["quad"] = {quad.p1.to_string(), quad.q1.to_string(), quad.p2.to_string(), quad.q2.to_string()};
    j["s"] = number_json(s);
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_embed(const std::vector<std::string>& a, std::ostream& out) {
    const int d = dim_arg(a[0]);
    const Exponent q = exponent_arg("q", a[1]);
    const Exponent p = exponent_arg("p", a[2]);
    const Number s = number_arg("s", a[3]);
    json j;
    j["d"] = d;
    j["q"] = q.to_string();
    j["p"] = p.to_string();
    j["s"] = number_json(s);
    j["embeds"] = embed(d, q, p, s);
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_growth(const std::vector<std::string>& a, const std::string& profile_text, const std::string& format,
               const std::string& summary, std::ostream& out) {
    WitnessId id;
    try {
        id = parse_witness_id(a[0]);
    } catch (const std::exception& e) {
        usage("invalid_family", e.what());
    }
    const int d = dim_arg(a[1]);
    const ExponentQuad quad = quad_args(a[2], a[3], a[4], a[5]);
    const Number s = number_arg("s", a[6]);
    const std::vector<int> Ns = scales_arg({a.begin() + 7, a.end()});
    std::optional<Profile> profile = profile_arg(profile_text);
    if (!profile && requires_profile(id))
        profile = Profile::ones();
    GrowthResult g;
    try {
        g = growth_slope(id, profile, d, quad, s.value(), Ns);
    } catch (const std::domain_error& e) {
        data("degenerate_family", e.what());
    }
    json j;
    j["family"] = to_string(id);
    j["profile"] = profile ? profile->to_string() : "none";
    j["d"] = d;
    j["quad"] = {quad.p1.to_string(), quad.q1.to_string(), quad.p2.to_string(), quad.q2.to_string()};
    j["s"] = number_json(s);
    j["N"] = g.Ns;
    j["ratios"] = g.ratios;
    j["slope"] = g.fit.slope;
    j["intercept"] = g.fit.intercept;
    j["residual"] = g.fit.residual;
    j["bounded"] = decide_shear(d, quad, s).bounded;
    if (format == "json") {
        out << j.dump(2) << '\n';
    } else {
        out << growth_csv_header() << growth_csv_rows(id, d, quad, s, g);
    }
    if (!summary.empty())
        write_output(summary, out, j.dump(2) + "\n");
    return kOk;
}

int cmd_opnorm(const std::vector<std::string>& a, const std::vector<std::string>& N_texts, int random_trials,
               std::uint64_t seed, std::ostream& out) {
    const int d = dim_arg(a[0]);
    const ExponentQuad quad = quad_args(a[1], a[2], a[3], a[4]);
    const Number s = number_arg("s", a[5]);
    const std::vector<int> Ns = scales_arg(N_texts);
    const Verdict v = decide_shear(d, quad, s);

    std::vector<WitnessFamily> fams = bounded_probe_families();
    if (v.witness_hint)
        fams.push_back({*v.witness_hint, v.hint_profile, 1});
    json families = json::array();
    double best = 0.0;
    json argmax;
    for (const auto& fam : fams) {
        json rows = json::array();
        for (int N : Ns) {
            WitnessFamily f = fam;
            f.N = N;
            double r = 0.0;
            try {
                r = ratio(make_witness(f, d), d, quad, s.value());
            } catch (const std::domain_error&) {
                continue;
            }
            rows.push_back({{"N", N}, {"ratio", r}});
            if (r > best) {
                best = r;
                argmax = {{"family", to_string(fam.id)},
                          {"profile", fam.profile ? fam.profile->to_string() : "none"},
                          {"N", N}};
            }
        }
        families.push_back({{"family", to_string(fam.id)},
                            {"profile", fam.profile ? fam.profile->to_string() : "none"},
                            {"ratios", rows}});
    }
    // Random blocks on the largest box, reproducible from the seed.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const int Nmax = Ns.back();
    double best_random = 0.0;
    for (int t = 0; t < random_trials; ++t) {
        Block b(Box::uniform(d, 0, Nmax - 1), Box::uniform(d, 0, Nmax - 1));
        for (auto& x : b.values)
            x = cplx(U(rng), U(rng));
        best_random = std::max(best_random, ratio(b, d, quad, s.value()));
    }
    if (best_random > best) {
        best = best_random;
        argmax = {{"family", "random"}, {"N", Nmax}};
    }
    json j;
    j["d"] = d;
    j["quad"] = {quad.p1.to_string(), quad.q1.to_string(), quad.p2.to_string(), quad.q2.to_string()};
    j["s"] = number_json(s);
    j["bounded"] = v.bounded;
    j["lower_bound"] = best;
    j["argmax"] = argmax;
    j["families"] = families;
    j["random"] = {{"trials", random_trials}, {"seed", seed}, {"max_ratio", best_random}};
    out << j.dump(2) << '\n';
    return kOk;
}

std::vector<TFPoint> random_points(int count, double radius, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<TFPoint> pts;
    for (int i = 0; i < count; ++i) {
        // Raw 53-bit draws keep the points identical across standard libraries.
        const double x = ((rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0) * radius;
        const double w = ((rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0) * radius;
        pts.push_back({{x, 0.0}, {w, 0.0}});
    }
    return pts;
}

int cmd_magic(const std::string& f_text, const std::string& g_text, const GridOptions& grid, int count,
              const std::string& radius_text, std::uint64_t seed, int keep, const std::string& tol_text,
              const std::string& format, std::ostream& out) {
    const double radius = real_arg("radius", radius_text);
    const double tol = real_arg("tol", tol_text);
    if (count < 1 || keep < 1 || !(radius > 0.0))
        usage("invalid_argument", "points, keep and radius must be positive");
    auto [f, g] = signal_pair(f_text, g_text, grid);
    const auto pts = random_points(count, radius, seed);
    const MagicReport rep = magic_formula_report(f, g, pts, static_cast<std::size_t>(keep));
    if (format == "json") {
        json worst = json::array();
        for (const auto& r : rep.worst)
            worst.push_back({{"x", r.point.x[0]},
                             {"omega", r.point.xi[0]},
                             {"residual", r.residual},
                             {"lhs", {r.lhs.real(), r.lhs.imag()}},
                             {"rhs", {r.rhs.real(), r.rhs.imag()}}});
        out << json{{"max_residual", rep.max_residual}, {"tolerance", tol}, {"points", count},
                    {"worst", worst}}
                   .dump(2)
            << '\n';
    } else {
        out << "rank,x,omega,residual,lhs_re,lhs_im,rhs_re,rhs_im\n";
        int rank = 1;
        for (const auto& r : rep.worst)
            out << rank++ << ',' << csv_real(r.point.x[0]) << ',' << csv_real(r.point.xi[0]) << ','
                << csv_real(r.residual) << ',' << csv_real(r.lhs.real()) << ',' << csv_real(r.lhs.imag()) << ','
                << csv_real(r.rhs.real()) << ',' << csv_real(r.rhs.imag()) << '\n';
    }
    if (rep.max_residual > tol)
        throw CliError(kConsistency, "consistency",
                       "magic formula residual " + csv_real(rep.max_residual) + " exceeds " + csv_real(tol));
    return kOk;
}

int cmd_dgt(const std::string& f_text, const std::string& g_text, const GridOptions& grid, int a, int b,
            const std::string& coeffs, const std::string& recon, std::ostream& out) {
    auto [f, g] = signal_pair(f_text, g_text, grid);
    GaborSystem sys{g, a, b};
    try {
        sys.validate();
    } catch (const std::invalid_argument& e) {
        usage("invalid_lattice", e.what());
    }
    const FrameBounds fb = frame_bounds(sys);
    const WalnutEnvelope env = walnut_check(g, a);
    const Block c = analysis(sys, f);
    double coeff_energy = 0.0;
    for (const auto& v : c.values)
        coeff_energy += std::norm(v);
    json j;
    j["L"] = sys.L();
    j["a"] = a;
    j["b"] = b;
    j["redundancy"] = sys.redundancy();
    j["A"] = fb.A;
    j["B"] = fb.B;
    j["is_frame"] = fb.is_frame;
    j["converged"] = fb.converged;
    j["walnut"] = {{"lower", env.lower}, {"upper", env.upper}};
    j["signal_energy"] = f.energy();
    j["coefficient_energy"] = coeff_energy;
    if (!coeffs.empty()) {
        std::ostringstream os;
        write_block_csv(os, c);
        write_output(coeffs, out, os.str());
    }
    if (fb.is_frame) {
        SampledSignal gamma;
        try {
            gamma = dual_window(sys);
        } catch (const DualWindowError& e) {
            data("unresolvable_window", e.what());
        }
        const GaborSystem dual{gamma, a, b};
        const SampledSignal r1 = synthesis(dual, c);
        const SampledSignal r2 = synthesis(sys, analysis(dual, f));
        double e1 = 0.0, e2 = 0.0;
        for (std::size_t i = 0; i < f.samples.size(); ++i) {
            e1 += std::norm(r1.samples[i] - f.samples[i]);
            e2 += std::norm(r2.samples[i] - f.samples[i]);
        }
        // Relative l2 errors; the cell factor h cancels.
        const double fn = std::sqrt(f.energy() / f.grid.h);
        j["reconstruction_residual"] = fn > 0.0 ? std::sqrt(e1) / fn : std::sqrt(e1);
        j["dual_expansion_residual"] = fn > 0.0 ? std::sqrt(e2) / fn : std::sqrt(e2);
        if (!recon.empty()) {
            std::ostringstream os;
            write_signal(os, r1);
            write_output(recon, out, os.str());
        }
    } else if (!recon.empty()) {
        data("unresolvable_window", "window does not generate a frame on this lattice; no reconstruction");
    }
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_propagate(const std::string& input, const std::string& f_text, const GridOptions& grid,
                  const std::string& kind, const std::string& t_text, const std::string& path_text,
                  const std::string& output, std::ostream& out) {
    SampledSignal f;
    if (!input.empty()) {
        try {
            f = load_signal(input);
        } catch (const FormatError& e) {
            data("malformed_file", e.what());
        }
    } else {
        f = signal_arg("signal", f_text, grid.spec());
    }
    const double t = real_arg("t", t_text);
    PropagatorSpec spec;
    if (kind == "chirp")
        spec = PropagatorSpec::chirp(t);
    else
        spec = PropagatorSpec::free_schrodinger(t);
    const PropagatorPath path = path_text == "dilation" ? PropagatorPath::dilation : PropagatorPath::direct;
    SampledSignal u;
    try {
        u = apply_propagator(spec, f, path);
    } catch (const std::invalid_argument& e) {
        data("invalid_grid", e.what());
    }
    std::ostringstream os;
    write_signal(os, u);
    write_output(output, out, os.str());
    return kOk;
}

int cmd_norms(const std::string& f_text, const std::string& g_text, const GridOptions& grid,
              const std::string& p_text, const std::string& q_text, const std::string& s_text,
              const std::string& x_step, int x_count, const std::string& xi_step, int xi_count, int a, int b,
              std::ostream& out) {
    const Exponent p = exponent_arg("p", p_text), q = exponent_arg("q", q_text);
    const double s = real_arg("s", s_text);
    auto [f, g] = signal_pair(f_text, g_text, grid);
    if (x_count < 1 || xi_count < 1)
        usage("invalid_lattice", "lattice counts must be positive");
    const TFLattice lat = TFLattice::symmetric(real_arg("x-step", x_step), x_count, real_arg("xi-step", xi_step),
                                               xi_count);
    const TFGrid V = stft(f, g, lat);
    const TFNorm w = wiener_grid_norm(V, p, q, TFWeight{0.0, s});
    const TFNorm m = modulation_grid_norm(V, p, q, TFWeight{0.0, s});
    json j;
    j["p"] = p.to_string();
    j["q"] = q.to_string();
    j["s"] = s;
    j["l2"] = f.l2_norm();
    j["window_l2"] = g.l2_norm();
    j["lattice"] = {{"x_step", lat.x_step}, {"x_count", x_count}, {"xi_step", lat.xi_step}, {"xi_count", xi_count}};
    j["wiener_amalgam"] = {{"value", w.value}, {"tail", w.tail}};
    j["modulation"] = {{"value", m.value}, {"tail", m.tail}};
    if (a > 0 && b > 0) {
        GaborSystem sys{g, a, b};
        try {
            sys.validate();
        } catch (const std::invalid_argument& e) {
            usage("invalid_lattice", e.what());
        }
        const GaborNorm gn = gabor_wiener_norm(sys, f, p, q, s);
        j["gabor"] = {{"a", a}, {"b", b}, {"value", gn.value}, {"scaled", gn.scaled}};
    }
    out << j.dump(2) << '\n';
    return kOk;
}

int cmd_sweep(int d, unsigned workers, const std::string& csv, std::ostream& out) {
    SweepConfig cfg;
    cfg.d = d;
    cfg.workers = workers;
    const auto rows = run_sweep(cfg, default_sweep_grid(d));
    std::size_t bad = 0, bounded = 0;
    json jr = json::array();
    std::string csv_text = growth_csv_header();
    for (const auto& r : rows) {
        bad += r.consistent ? 0 : 1;
        bounded += r.verdict.bounded ? 1 : 0;
        jr.push_back(to_json(r, d));
        for (const auto& f : r.families)
            csv_text += growth_csv_rows(f.id, d, r.tuple.quad, r.tuple.s, f.growth);
    }
    if (!csv.empty())
        write_output(csv, out, csv_text);
    json j;
    j["d"] = d;
    j["tuples"] = rows.size();
    j["bounded"] = bounded;
    j["unbounded"] = rows.size() - bounded;
    j["inconsistent"] = bad;
    j["N"] = cfg.Ns;
    j["rows"] = jr;
    out << j.dump(2) << '\n';
    if (bad > 0)
        throw CliError(kConsistency, "consistency", std::to_string(bad) + " verdict/witness inconsistencies");
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tfshear: time-frequency shear and Schrodinger propagator experiments", "tfshear"};
    app.require_subcommand(1);
    std::string format = "csv";
    GridOptions grid;
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--L", grid.L, "samples per axis (dgt default 256)");
        sub->add_option("--spacing", grid.h, "grid spacing h, fractions allowed (dgt default 1/16)");
    };

    std::vector<std::string> pos;
    auto* decide = app.add_subcommand("decide", "boundedness verdict: decide d p1 q1 p2 q2 s");
    std::string op = "shear";
    decide->add_option("args", pos, "d p1 q1 p2 q2 s")->expected(6)->required();
    decide->add_option("--operator", op, "shear or schrodinger")
        ->check(CLI::IsMember({"shear", "schrodinger"}))
        ->capture_default_str();

    auto* emb = app.add_subcommand("embed", "weighted embedding: embed d q p s");
    emb->add_option("args", pos, "d q p s")->expected(4)->required();

    auto* growth = app.add_subcommand("growth", "witness growth: growth family d p1 q1 p2 q2 s N...");
    std::string profile, summary;
    growth->add_option("args", pos, "family d p1 q1 p2 q2 s N N N ...")->expected(10, 1000)->required();
    growth->add_option("--profile", profile, "ones, point or power:<e>");
    growth->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    growth->add_option("--summary", summary, "also write the JSON summary to this file");

    auto* opnorm = app.add_subcommand("opnorm-lb", "operator-norm lower bound: opnorm-lb d p1 q1 p2 q2 s");
    std::vector<std::string> op_N{"32", "64", "128", "256", "512"};
    int trials = 20;
    std::uint64_t seed = 1;
    opnorm->add_option("args", pos, "d p1 q1 p2 q2 s")->expected(6)->required();
    opnorm->add_option("--N", op_N, "box sizes")->delimiter(',');
    opnorm->add_option("--random", trials, "random blocks on the largest box")->capture_default_str();
    opnorm->add_option("--seed", seed, "seed for random blocks")->capture_default_str();

    std::string f_text = "gaussian", g_text = "gaussian";
    int count = 50, keep = 5;
    std::string radius = "4", tol = "1e-6";
    auto* magic = app.add_subcommand("magic", "chirp magic formula residuals");
    magic->add_option("--signal", f_text, "signal spec")->capture_default_str();
    magic->add_option("--window", g_text, "window spec")->capture_default_str();
    magic->add_option("--points", count, "number of random points")->capture_default_str();
    magic->add_option("--radius", radius, "points in |x|, |omega| <= radius")->capture_default_str();
    magic->add_option("--seed", seed, "seed for the points")->capture_default_str();
    magic->add_option("--keep", keep, "worst points to print")->capture_default_str();
    magic->add_option("--tol", tol, "exit 4 above this residual")->capture_default_str();
    magic->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    int a = 4, b = 4;
    std::string coeffs, recon;
    auto* dgt = app.add_subcommand("dgt", "discrete Gabor transform, frame bounds and reconstruction");
    dgt->add_option("--signal", f_text, "signal spec");
    dgt->add_option("--window", g_text, "window spec");
    dgt->add_option("--a", a, "time step (divides L)")->capture_default_str();
    dgt->add_option("--b", b, "frequency step (divides L)")->capture_default_str();
    dgt->add_option("--coeffs", coeffs, "write coefficients as CSV");
    dgt->add_option("--reconstruct", recon, "write the dual-window reconstruction");

    std::string input, kind = "schrodinger", t_text = "1", path_text = "direct", output;
    auto* prop = app.add_subcommand("propagate", "apply chirp(t) or the free propagator");
    prop->add_option("--input", input, "signal file");
    prop->add_option("--signal", f_text, "signal spec when no input file is given");
    prop->add_option("--kind", kind, "chirp or schrodinger")
        ->check(CLI::IsMember({"chirp", "schrodinger"}))
        ->capture_default_str();
    prop->add_option("--t", t_text, "time parameter")->capture_default_str();
    prop->add_option("--path", path_text, "direct or dilation")
        ->check(CLI::IsMember({"direct", "dilation"}))
        ->capture_default_str();
    prop->add_option("--output", output, "output file (default stdout)");

    std::string p_text = "2", q_text = "2", s_text = "0", x_step = "1/8", xi_step = "1/8";
    int x_count = 96, xi_count = 48, na = 0, nb = 0;
    auto* norms = app.add_subcommand("norms", "Wiener amalgam, modulation and Gabor norms");
    norms->add_option("--signal", f_text, "signal spec");
    norms->add_option("--window", g_text, "window spec");
    norms->add_option("--p", p_text, "exponent p")->capture_default_str();
    norms->add_option("--q", q_text, "exponent q")->capture_default_str();
    norms->add_option("--s", s_text, "frequency weight order")->capture_default_str();
    norms->add_option("--x-step", x_step, "lattice step in x")->capture_default_str();
    norms->add_option("--x-count", x_count, "|j| <= x-count")->capture_default_str();
    norms->add_option("--xi-step", xi_step, "lattice step in xi (multiple of 1/(L h) is fastest)")
        ->capture_default_str();
    norms->add_option("--xi-count", xi_count, "|l| <= xi-count")->capture_default_str();
    norms->add_option("--a", na, "Gabor time step; with --b adds the Gabor norm");
    norms->add_option("--b", nb, "Gabor frequency step");

    int sweep_d = 1;
    unsigned workers = 0;
    std::string csv;
    auto* sweep = app.add_subcommand("sweep", "verdict versus witness consistency over the acceptance grid");
    sweep->add_option("--d", sweep_d, "dimension")->check(CLI::Range(1, 3))->capture_default_str();
    sweep->add_option("--workers", workers, "worker threads (0 = hardware)");
    sweep->add_option("--csv", csv, "write every growth row as CSV");

    for (auto* sub : {magic, norms, prop, dgt})
        add_grid(sub);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        // dgt works at a smaller default size.
        if (!args.empty() && args[0] == "dgt") {
            grid.L = 256;
            grid.h = "1/16";
            f_text = "noise:1";
        }
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: usage: " << one_line(e.what()) << '\n';
        return kUsage;
    }

    try {
        if (*decide)
            return cmd_decide(pos, op, out);
        if (*emb)
            return cmd_embed(pos, out);
        if (*growth)
            return cmd_growth(pos, profile, format, summary, out);
        if (*opnorm)
            return cmd_opnorm(pos, op_N, trials, seed, out);
        if (*magic)
            return cmd_magic(f_text, g_text, grid, count, radius, seed, keep, tol, format, out);
        if (*dgt)
            return cmd_dgt(f_text, g_text, grid, a, b, coeffs, recon, out);
        if (*prop)
            return cmd_propagate(input, f_text, grid, kind, t_text, path_text, output, out);
        if (*norms)
            return cmd_norms(f_text, g_text, grid, p_text, q_text, s_text, x_step, x_count, xi_step, xi_count, na,
                             nb, out);
        if (*sweep)
            return cmd_sweep(sweep_d, workers, csv, out);
    } catch (const CliError& e) {
        err << "error: " << e.kind << ": " << one_line(e.what()) << '\n';
        return e.code;
    } catch (const FormatError& e) {
        err << "error: malformed_file: " << one_line(e.what()) << '\n';
        return kData;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid_argument: " << one_line(e.what()) << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: data: " << one_line(e.what()) << '\n';
        return kData;
    }
    err << "error: usage: no command\n";
    return kUsage;
}

}  // namespace tfshear::cli
