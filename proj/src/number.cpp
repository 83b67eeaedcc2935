// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include "tfshear/number.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tfshear {

using i128 = __int128;

struct RationalAccess {
    static Rational raw(std::int64_t num, std::int64_t den) {
        Rational r;
        r.num_ = num;
        r.den_ = den;
        return r;
    }
};

namespace {

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

std::optional<Rational> reduce(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    if (num > kMax || num < -kMax || den > kMax)
        return std::nullopt;
    return RationalAccess::raw(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::int64_t parse_integer(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    auto r = reduce(num, den);
    num_ = r->num_;
    den_ = r->den_;
}

std::optional<Rational> Rational::add(const Rational& a, const Rational& b) {
    return reduce(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                  static_cast<i128>(a.den_) * b.den_);
}

std::optional<Rational> Rational::mul(const Rational& a, const Rational& b) {
    return reduce(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

std::optional<Rational> Rational::div(const Rational& a, const Rational& b) {
    if (b.num_ == 0)
        throw std::domain_error("division by zero");
    return reduce(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

int Rational::compare(const Rational& a, const Rational& b) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return l < r ? -1 : (l > r ? 1 : 0);
}

std::string Rational::to_string() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Number Number::approx(double v) {
    if (!std::isfinite(v))
        throw std::invalid_argument("non-finite number");
    Number n;
    n.value_ = v;
    n.exact_.reset();
    return n;
}

Number Number::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty())
        throw std::invalid_argument("empty number");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        const std::int64_t num = parse_integer(s.substr(0, slash));
        const std::int64_t den = parse_integer(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
        return Number(Rational(num, den));
    }

    // sign digits [. digits] [e|E [sign] digits]
    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        ++i;
    }
    i128 mantissa = 0;
    int scale = 0;
    bool overflow = false;
    bool any_digit = false;
    auto take_digit = [&](char c, bool fractional) {
        any_digit = true;
        if (mantissa > kMax / 10) {
            overflow = true;
            return;
        }
        mantissa = mantissa * 10 + (c - '0');
        if (fractional)
            --scale;
    };
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        take_digit(s[i++], false);
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            take_digit(s[i++], true);
    }
    if (!any_digit)
        throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        const std::string_view exp_text = s.substr(i);
        if (exp_text.empty())
            throw std::invalid_argument("malformed number '" + std::string(s) + "'");
        scale += static_cast<int>(parse_integer(exp_text));
        i = s.size();
    }
    if (i != s.size())
        throw std::invalid_argument("malformed number '" + std::string(s) + "'");

    const double approx_value = std::strtod(std::string(s).c_str(), nullptr);
    if (overflow || scale > 18 || scale < -18)
        return approx(approx_value);
    i128 num = negative ? -mantissa : mantissa;
    i128 den = 1;
    for (int k = 0; k < std::abs(scale); ++k) {
        if (scale > 0)
            num *= 10;
        else
            den *= 10;
    }
    auto r = reduce(num, den);
    if (!r)
        return approx(approx_value);
    return Number(*r);
}

Number Number::operator-() const {
    if (exact_)
        return Number(-*exact_);
    return approx(-value_);
}

Number operator+(const Number& a, const Number& b) {
    if (a.exact_ && b.exact_)
        if (auto r = Rational::add(*a.exact_, *b.exact_))
            return Number(*r);
    return Number::approx(a.value_ + b.value_);
}

Number operator-(const Number& a, const Number& b) { return a + (-b); }

Number operator*(const Number& a, const Number& b) {
    if (a.exact_ && b.exact_)
        if (auto r = Rational::mul(*a.exact_, *b.exact_))
            return Number(*r);
    return Number::approx(a.value_ * b.value_);
}

Number operator/(const Number& a, const Number& b) {
    if (b.value_ == 0.0)
        throw std::domain_error("division by zero");
    if (a.exact_ && b.exact_)
        if (auto r = Rational::div(*a.exact_, *b.exact_))
            return Number(*r);
    return Number::approx(a.value_ / b.value_);
}

int compare(const Number& a, const Number& b) {
    if (a.exact_ && b.exact_)
        return Rational::compare(*a.exact_, *b.exact_);
    const double d = a.value_ - b.value_;
    if (std::abs(d) <= Number::kTolerance)
        return 0;
    return d < 0 ? -1 : 1;
}

std::string Number::to_string() const {
    if (exact_)
        return exact_->to_string();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value_);
    return buf;
}

Number max(const Number& a, const Number& b) { return a >= b ? a : b; }
Number min(const Number& a, const Number& b) { return a <= b ? a : b; }

}  // namespace tfshear
