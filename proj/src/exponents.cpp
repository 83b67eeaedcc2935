// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include "tfshear/exponents.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace tfshear {

Exponent Exponent::from_recip(Number recip) {
    if (recip.sign() < 0)
        throw std::invalid_argument("exponent reciprocal must be >= 0, got " + recip.to_string());
    if (recip.sign() == 0)
        recip = Number(0);
    return Exponent(std::move(recip));
}

Exponent Exponent::from_value(Number p) {
    if (p.value() <= 0.0)
        throw std::invalid_argument("exponent must be positive, got " + p.to_string());
    return Exponent(Number(1) / p);
}

Exponent Exponent::from_value(double p) {
    if (std::isinf(p) && p > 0)
        return infinity();
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::invalid_argument("exponent must be in (0, inf]");
    return Exponent(Number::approx(1.0 / p));
}

Exponent Exponent::parse(std::string_view text) {
    std::string lower;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "inf" || lower == "+inf" || lower == "infinity")
        return infinity();
    return from_value(Number::parse(lower));
}

double Exponent::value() const {
    if (is_infinite())
        return std::numeric_limits<double>::infinity();
    return 1.0 / recip_.value();
}

std::string Exponent::to_string() const {
    if (is_infinite())
        return "inf";
    if (recip_.is_exact()) {
        const Rational& r = *recip_.exact();
        return Rational(r.den(), r.num()).to_string();
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value());
    return buf;
}

ExponentQuad ExponentQuad::parse(std::string_view p1, std::string_view q1, std::string_view p2,
                                 std::string_view q2) {
    return {Exponent::parse(p1), Exponent::parse(q1), Exponent::parse(p2), Exponent::parse(q2)};
}

std::string ExponentQuad::to_string() const {
    return "(" + p1.to_string() + "," + q1.to_string() + "," + p2.to_string() + "," +
           q2.to_string() + ")";
}

AB compute_AB(int d, const ExponentQuad& quad) {
    const Number dd(d);
    return {dd * (quad.p2.recip() - quad.q1.recip()), dd * (quad.q2.recip() - quad.p1.recip())};
}

double bracket(std::span<const int> v) {
    double s = 1.0;
    for (int x : v)
        s += static_cast<double>(x) * static_cast<double>(x);
    return std::sqrt(s);
}

double bracket(std::span<const double> v) {
    double s = 1.0;
    for (double x : v)
        s += x * x;
    return std::sqrt(s);
}

WeightSpec WeightSpec::tensor_power(int dim, double s1, double s2) {
    if (dim <= 0)
        throw std::invalid_argument("weight dimension must be positive");
    if (!std::isfinite(s1) || !std::isfinite(s2))
        throw std::invalid_argument("weight orders must be finite");
    WeightSpec w;
    w.kind_ = Kind::tensor_power;
    w.dim_ = dim;
    w.s1_ = s1;
    w.s2_ = s2;
    return w;
}

WeightSpec WeightSpec::sampled(Box k_window, Box n_window, std::vector<double> table) {
    if (k_window.dim() != n_window.dim() || k_window.dim() <= 0)
        throw std::invalid_argument("sampled weight windows must share a positive dimension");
    if (table.size() != k_window.size() * n_window.size())
        throw std::invalid_argument("sampled weight table size does not match its windows");
    if (std::any_of(table.begin(), table.end(), [](double v) { return !(v > 0.0) || !std::isfinite(v); }))
        throw std::invalid_argument("sampled weight entries must be positive and finite");
    WeightSpec w;
    w.kind_ = Kind::sampled;
    w.dim_ = k_window.dim();
    w.k_window_ = std::move(k_window);
    w.n_window_ = std::move(n_window);
    w.table_ = std::move(table);
    return w;
}

double WeightSpec::operator()(std::span<const int> k, std::span<const int> n) const {
    if (static_cast<int>(k.size()) != dim_ || static_cast<int>(n.size()) != dim_)
        throw std::invalid_argument("weight index dimension mismatch");
    if (kind_ == Kind::tensor_power) {
        double v = 1.0;
        if (s1_ != 0.0)
            v *= std::pow(bracket(k), s1_);
        if (s2_ != 0.0)
            v *= std::pow(bracket(n), s2_);
        return v;
    }
    if (!k_window_.contains(k) || !n_window_.contains(n))
        throw std::out_of_range("sampled weight queried outside its window");
    return table_[k_window_.offset(k) * n_window_.size() + n_window_.offset(n)];
}

double WeightSpec::at(std::span<const double> x, std::span<const double> xi) const {
    if (kind_ != Kind::tensor_power)
        throw std::logic_error("continuous evaluation needs a tensor-power weight");
    double v = 1.0;
    if (s1_ != 0.0)
        v *= std::pow(bracket(x), s1_);
    if (s2_ != 0.0)
        v *= std::pow(bracket(xi), s2_);
    return v;
}

}  // namespace tfshear
