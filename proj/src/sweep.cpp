// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include "tfshear/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "tfshear/parallel.hpp"

namespace tfshear {

std::string to_string(SweepRow::Check c) {
    switch (c) {
        case SweepRow::Check::grows: return "grows";
        case SweepRow::Check::stays_bounded: return "stays_bounded";
        case SweepRow::Check::unchecked: return "unchecked";
    }
    return "?";
}

namespace {

std::vector<ExponentQuad> pick_even(const std::vector<ExponentQuad>& from, std::size_t count) {
    std::vector<ExponentQuad> out;
    if (from.empty())
        return out;
    count = std::min(count, from.size());
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(from[i * from.size() / count]);
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::vector<SweepTuple> default_sweep_grid(int d) {
    const std::vector<Exponent> values{Exponent::parse("1/2"), Exponent::parse("1"),
                                       Exponent::parse("2"), Exponent::infinity()};
    std::vector<ExponentQuad> by_class[6];  // p_violation, X0, X1, X2, X3 (p1 != p2), X3 (p1 = p2)
    for (const auto& p1 : values)
        for (const auto& q1 : values)
            for (const auto& p2 : values)
                for (const auto& q2 : values) {
                    const ExponentQuad quad{p1, q1, p2, q2};
                    if (p2.recip() > p1.recip()) {
                        by_class[0].push_back(quad);
                        continue;
                    }
                    switch (region_classify(d, quad)) {
                        case Region::X0: by_class[1].push_back(quad); break;
                        case Region::X1: by_class[2].push_back(quad); break;
                        case Region::X2: by_class[3].push_back(quad); break;
                        case Region::X3: by_class[p1 == p2 ? 5 : 4].push_back(quad); break;
                        case Region::p_violation: break;
                    }
                }
    // X3 over this value set is small; its shortfall goes to X0, X1 and X2.
    auto x3 = pick_even(by_class[5], 8);
    auto x3_other = pick_even(by_class[4], 8 - x3.size());
    x3.insert(x3.end(), x3_other.begin(), x3_other.end());
    std::size_t quota[4] = {8, 8, 8, 8};
    for (std::size_t extra = 8 - x3.size(), c = 1; extra > 0; --extra, c = c % 3 + 1)
        ++quota[c];
    std::vector<ExponentQuad> quads;
    for (int c = 0; c < 4; ++c) {
        auto part = pick_even(by_class[c], quota[c]);
        quads.insert(quads.end(), part.begin(), part.end());
    }
    quads.insert(quads.end(), x3.begin(), x3.end());

    const Rational deltas[] = {Rational(-1, 2), Rational(-1, 4), Rational(0), Rational(1, 4),
                               Rational(1, 2)};
    std::vector<SweepTuple> tuples;
    for (const auto& quad : quads) {
        const Verdict v = decide_shear(d, quad, Number(0));
        for (const auto& delta : deltas)
            tuples.push_back({quad, v.threshold + Number(delta)});
    }
    return tuples;
}

std::vector<WitnessFamily> bounded_probe_families() {
    return {{WitnessId::row_delta, Profile::ones(), 0},
            {WitnessId::column_delta, Profile::ones(), 0},
            {WitnessId::antidiagonal, Profile::ones(), 0},
            {WitnessId::box, std::nullopt, 0}};
}

namespace {

FamilyReport measure(const SweepConfig& cfg, WitnessId id, const std::optional<Profile>& profile,
                     const SweepTuple& t) {
    FamilyReport r;
    r.id = id;
    r.profile = profile;
    r.growth = growth_slope(id, profile, cfg.d, t.quad, t.s.value(), cfg.Ns);
    const double first = r.growth.ratios.front();
    r.max_rel = *std::max_element(r.growth.ratios.begin(), r.growth.ratios.end()) / first;
    r.end_factor = r.growth.ratios.back() / first;
    return r;
}

}  // namespace

SweepRow evaluate_tuple(const SweepConfig& cfg, const SweepTuple& t) {
    SweepRow row;
    row.tuple = t;
    row.verdict = decide_shear(cfg.d, t.quad, t.s);
    if (!row.verdict.bounded) {
        row.check = SweepRow::Check::grows;
        if (!row.verdict.witness_hint) {
            row.consistent = false;
            row.failure = "unbounded verdict without a witness hint";
            return row;
        }
        const FamilyReport r = measure(cfg, *row.verdict.witness_hint, row.verdict.hint_profile, t);
        row.families.push_back(r);
        const bool grows = r.growth.fit.slope > cfg.min_slope || r.end_factor >= cfg.min_factor;
        if (!grows) {
            row.consistent = false;
            row.failure = to_string(r.id) + " does not grow: slope " + fmt(r.growth.fit.slope) +
                          ", factor " + fmt(r.end_factor);
        } else if (r.growth.fit.residual >= cfg.max_residual) {
            row.consistent = false;
            row.failure = to_string(r.id) + " fit residual " + fmt(r.growth.fit.residual);
        }
        return row;
    }
    if (t.s - row.verdict.threshold < Number::approx(cfg.margin))
        return row;
    row.check = SweepRow::Check::stays_bounded;
    for (const auto& fam : bounded_probe_families()) {
        const FamilyReport r = measure(cfg, fam.id, fam.profile, t);
        row.families.push_back(r);
        if (!row.consistent)
            continue;
        if (r.max_rel > 1.0 + cfg.tolerance) {
            row.consistent = false;
            row.failure = to_string(r.id) + " ratio rises by factor " + fmt(r.max_rel);
        } else if (r.growth.fit.residual >= cfg.max_residual) {
            row.consistent = false;
            row.failure = to_string(r.id) + " fit residual " + fmt(r.growth.fit.residual);
        }
    }
    return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, const std::vector<SweepTuple>& tuples) {
    std::vector<SweepRow> rows(tuples.size());
    parallel_for(tuples.size(), [&](std::size_t i) { rows[i] = evaluate_tuple(cfg, tuples[i]); },
                 cfg.workers);
    return rows;
}

std::string growth_csv_header() { return "family,d,p1,q1,p2,q2,s,N,ratio\n"; }

std::string growth_csv_rows(WitnessId id, int d, const ExponentQuad& quad, const Number& s,
                            const GrowthResult& g) {
    std::ostringstream os;
    for (std::size_t i = 0; i < g.Ns.size(); ++i)
        os << to_string(id) << ',' << d << ',' << quad.p1.to_string() << ',' << quad.q1.to_string()
           << ',' << quad.p2.to_string() << ',' << quad.q2.to_string() << ',' << s.to_string() << ','
           << g.Ns[i] << ',' << fmt(g.ratios[i]) << '\n';
    return os.str();
}

nlohmann::json to_json(const SweepRow& row, int d) {
    nlohmann::json j;
    j["d"] = d;
    j["quad"] = {row.tuple.quad.p1.to_string(), row.tuple.quad.q1.to_string(),
                 row.tuple.quad.p2.to_string(), row.tuple.quad.q2.to_string()};
    j["s"] = row.tuple.s.to_string();
    j["verdict"] = to_json(row.verdict);
    j["check"] = to_string(row.check);
    j["consistent"] = row.consistent;
    if (!row.failure.empty())
        j["failure"] = row.failure;
    nlohmann::json fams = nlohmann::json::array();
    for (const auto& f : row.families)
        fams.push_back({{"family", to_string(f.id)},
                        {"profile", f.profile ? f.profile->to_string() : "none"},
                        {"slope", f.growth.fit.slope},
                        {"residual", f.growth.fit.residual},
                        {"max_rel", f.max_rel},
                        {"end_factor", f.end_factor}});
    j["families"] = fams;
    return j;
}

}  // namespace tfshear
