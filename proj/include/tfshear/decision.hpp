// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tfshear/exponents.hpp"
#include "tfshear/number.hpp"
#include "tfshear/shear.hpp"

namespace tfshear {

enum class Region { X0, X1, X2, X3, p_violation };

std::string to_string(Region r);

struct Verdict {
    bool bounded = true;
    Region region = Region::X0;
    Number A;
    Number B;
    /// s* = max(A, B, A + B, 0).
    Number threshold;
    bool strict_required = false;
    /// Present whenever bounded is false.
    std::optional<WitnessId> witness_hint;
    /// Coefficient rule that makes the hinted family grow at this s.
    std::optional<Profile> hint_profile;
    std::string explanation;
};

/// l^q_{v_s} embeds in l^p iff s >= max(d(1/p - 1/q), 0), strictly when 1/p > 1/q.
bool embed(int d, const Exponent& q, const Exponent& p, const Number& s);

/// Sign pattern of (A, B): X0 (A, B <= 0), X1 (A > 0 >= B), X2 (B > 0 >= A), X3 (A, B > 0).
Region region_classify(int d, const ExponentQuad& quad);

/// Boundedness of T from l^(p1,q1)_{1 (x) v_s} to l^(p2,q2).
Verdict decide_shear(int d, const ExponentQuad& quad, const Number& s);
inline Verdict decide_shear(int d, const ExponentQuad& quad, double s) {
    return decide_shear(d, quad, Number::approx(s));
}

/// Boundedness of e^{i Delta} from W^(p1,q1)_{1 (x) v_s} to W^(p2,q2). The
/// dilations D_2 and D_{1/2} only change 1 (x) v_s by a bounded factor, so
/// this coincides with decide_shear.
Verdict decide_schrodinger(int d, const ExponentQuad& quad, const Number& s);

/// s = 0 closed form: q1 <= p2 and p1 <= min(q2, p2).
bool decide_unweighted(const ExponentQuad& quad);

/// s >= d|1/p - 1/q|, strictly when p != q. Defined for 1 <= p, q <= inf;
/// throws std::invalid_argument outside that range.
bool theoremA_check(int d, const Exponent& p, const Exponent& q, const Number& s);

nlohmann::json to_json(const Verdict& v);

}  // namespace tfshear
