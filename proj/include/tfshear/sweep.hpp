// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tfshear/decision.hpp"
#include "tfshear/shear.hpp"

namespace tfshear {

/// Verdict-vs-witness consistency sweep over (quad, s) tuples.
struct SweepConfig {
    int d = 1;
    std::vector<int> Ns{32, 64, 128, 256, 512};
    /// An unbounded verdict is confirmed by slope > min_slope or
    /// ratio(N_last) / ratio(N_first) >= min_factor.
    double min_slope = 0.05;
    double min_factor = 2.0;
    /// Bounded verdicts with s >= s* + margin must keep every witness ratio
    /// at most (1 + tolerance) times its value at N_first.
    double margin = 0.25;
    double tolerance = 0.2;
    double max_residual = 0.05;
    unsigned workers = 0;
};

struct SweepTuple {
    ExponentQuad quad;
    Number s;
};

struct FamilyReport {
    WitnessId id = WitnessId::box;
    std::optional<Profile> profile;
    GrowthResult growth;
    /// max_N ratio(N) / ratio(N_first).
    double max_rel = 1.0;
    /// ratio(N_last) / ratio(N_first).
    double end_factor = 1.0;
};

struct SweepRow {
    SweepTuple tuple;
    Verdict verdict;
    enum class Check { grows, stays_bounded, unchecked };
    Check check = Check::unchecked;
    std::vector<FamilyReport> families;
    bool consistent = true;
    std::string failure;
};

std::string to_string(SweepRow::Check c);

/// 40 quads over {1/2, 1, 2, inf}^4 stratified by region: eight
/// p_violation quads, every X3 quad (there are five), and the rest spread
/// evenly over X0, X1 and X2. Each quad is taken at
/// s = s* + {-1/2, -1/4, 0, 1/4, 1/2}, giving 200 tuples.
std::vector<SweepTuple> default_sweep_grid(int d = 1);

/// Families used to confirm a bounded verdict: the three deltas with the
/// ones profile and the box.
std::vector<WitnessFamily> bounded_probe_families();

SweepRow evaluate_tuple(const SweepConfig& cfg, const SweepTuple& t);
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, const std::vector<SweepTuple>& tuples);

/// CSV header and rows (family, d, p1, q1, p2, q2, s, N, ratio).
std::string growth_csv_header();
std::string growth_csv_rows(WitnessId id, int d, const ExponentQuad& quad, const Number& s,
                            const GrowthResult& g);

nlohmann::json to_json(const SweepRow& row, int d);

}  // namespace tfshear
