// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include "tfshear/decision.hpp"

#include <stdexcept>

namespace tfshear {

std::string to_string(Region r) {
    switch (r) {
        case Region::X0: return "X0";
        case Region::X1: return "X1";
        case Region::X2: return "X2";
        case Region::X3: return "X3";
        case Region::p_violation: return "p_violation";
    }
    return "?";
}

bool embed(int d, const Exponent& q, const Exponent& p, const Number& s) {
    const Number gap = Number(d) * (p.recip() - q.recip());
    const Number t = max(gap, Number(0));
    return p.recip() > q.recip() ? s > t : s >= t;
}

namespace {

Region sign_region(const Number& A, const Number& B) {
    const bool a = A.sign() > 0, b = B.sign() > 0;
    if (a && b)
        return Region::X3;
    if (a)
        return Region::X1;
    if (b)
        return Region::X2;
    return Region::X0;
}

std::string strict_reason(const Number& A, const Number& B) {
    if (A.sign() > 0 && B.sign() <= 0)
        return "A > 0 >= B";
    if (B.sign() > 0 && A.sign() <= 0)
        return "B > 0 >= A";
    return "A, B > 0 and p1 = p2";
}

}  // namespace

Region region_classify(int d, const ExponentQuad& quad) {
    const AB ab = compute_AB(d, quad);
    return sign_region(ab.A, ab.B);
}

Verdict decide_shear(int d, const ExponentQuad& quad, const Number& s) {
    if (d <= 0)
        throw std::invalid_argument("dimension must be positive");
    Verdict v;
    const AB ab = compute_AB(d, quad);
    v.A = ab.A;
    v.B = ab.B;
    v.threshold = max(max(v.A, v.B), max(v.A + v.B, Number(0)));
    const bool a_pos = v.A.sign() > 0, b_pos = v.B.sign() > 0;
    v.strict_required = (a_pos && !b_pos) || (b_pos && !a_pos) ||
                        (a_pos && b_pos && quad.p1 == quad.p2);

    const Region xr = sign_region(v.A, v.B);
    const bool p_ok = quad.p2.recip() <= quad.p1.recip();
    const bool s_ok = v.strict_required ? s > v.threshold : s >= v.threshold;
    v.bounded = p_ok && s_ok;
    v.region = p_ok ? xr : Region::p_violation;

    const std::string ss = s.to_string(), ts = v.threshold.to_string();
    if (!p_ok) {
        v.witness_hint = WitnessId::row_delta;
        v.hint_profile = Profile::ones();
        v.explanation = "unbounded: 1/p2 = " + quad.p2.recip().to_string() + " exceeds 1/p1 = " +
                        quad.p1.recip().to_string() + ", so l^p1 does not embed in l^p2";
        return v;
    }
    if (v.bounded) {
        v.explanation = v.strict_required
                            ? "bounded: s = " + ss + " > s* = " + ts + " (strict since " +
                                  strict_reason(v.A, v.B) + ")"
                            : "bounded: s = " + ss + " >= s* = " + ts + " and 1/p2 <= 1/p1";
        return v;
    }
    v.explanation = v.strict_required
                        ? "unbounded: s = " + ss + " does not exceed s* = " + ts + " (strict since " +
                              strict_reason(v.A, v.B) + ")"
                        : "unbounded: s = " + ss + " is below s* = " + ts;

    const double dd = static_cast<double>(d);
    switch (xr) {
        case Region::X0:
            v.witness_hint = WitnessId::column_delta;
            v.hint_profile = Profile::point();
            break;
        case Region::X1:
            v.witness_hint = WitnessId::column_delta;
            v.hint_profile = s < v.A ? Profile::ones()
                                     : Profile::power(-s.value() - dd * quad.q1.recip_value());
            break;
        case Region::X2:
            v.witness_hint = WitnessId::antidiagonal;
            v.hint_profile = s < v.B ? Profile::ones()
                                     : Profile::power(-s.value() - dd * quad.p1.recip_value());
            break;
        case Region::X3:
            if (s < v.threshold) {
                v.witness_hint = WitnessId::box;
            } else {
                v.witness_hint = WitnessId::row_profile_box;
                v.hint_profile = Profile::power(-s.value() - dd * quad.q1.recip_value());
            }
            break;
        case Region::p_violation:
            break;
    }
    return v;
}

Verdict decide_schrodinger(int d, const ExponentQuad& quad, const Number& s) {
    return decide_shear(d, quad, s);
}

bool decide_unweighted(const ExponentQuad& quad) {
    return quad.q1.recip() >= quad.p2.recip() && quad.p1.recip() >= quad.q2.recip() &&
           quad.p1.recip() >= quad.p2.recip();
}

bool theoremA_check(int d, const Exponent& p, const Exponent& q, const Number& s) {
    if (p.recip() > Number(1) || q.recip() > Number(1))
        throw std::invalid_argument("diagonal check needs 1 <= p, q <= inf");
    Number gap = Number(d) * (p.recip() - q.recip());
    if (gap.sign() < 0)
        gap = -gap;
    return p == q ? s >= gap : s > gap;
}

nlohmann::json to_json(const Verdict& v) {
    nlohmann::json j;
    j["bounded"] = v.bounded;
    j["region"] = to_string(v.region);
    j["A"] = v.A.value();
    j["B"] = v.B.value();
    j["threshold"] = v.threshold.value();
    j["strict_required"] = v.strict_required;
    j["witness_hint"] = v.witness_hint ? nlohmann::json(to_string(*v.witness_hint)) : nlohmann::json();
    j["witness_profile"] = v.hint_profile ? nlohmann::json(v.hint_profile->to_string()) : nlohmann::json();
    j["exact"] = {{"A", v.A.to_string()}, {"B", v.B.to_string()}, {"threshold", v.threshold.to_string()}};
    j["explanation"] = v.explanation;
    return j;
}

}  // namespace tfshear
