// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include "tfshear/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace tfshear {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw FormatError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

cplx parse_pair(std::string_view text, std::size_t line) {
    const auto parts = split(text, ',');
    double re = 0.0, im = 0.0;
    if (parts.size() != 2 || !parse_number(parts[0], re) || !parse_number(parts[1], im))
        fail(line, "expected 're,im'");
    if (!std::isfinite(re) || !std::isfinite(im))
        fail(line, "non-finite sample");
    return {re, im};
}

}  // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_signal(std::ostream& os, const SampledSignal& s) {
    os << "signal " << s.grid.dim << ' ' << s.grid.L << ' ' << format_real(s.grid.h) << '\n';
    for (const auto& v : s.samples)
        os << format_real(v.real()) << ',' << format_real(v.imag()) << '\n';
}

SampledSignal read_signal(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(is, line))
        throw FormatError("line 1: empty signal file");
    ++lineno;
    std::istringstream head(line);
    std::string tag, extra;
    GridSpec g;
    if (!(head >> tag >> g.dim >> g.L >> g.h) || tag != "signal" || (head >> extra))
        fail(lineno, "expected header 'signal <dim> <L> <h>'");
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        fail(lineno, e.what());
    }
    SampledSignal s(g);
    for (auto& v : s.samples) {
        if (!std::getline(is, line))
            fail(lineno + 1, "missing samples (expected " + std::to_string(s.samples.size()) + ")");
        ++lineno;
        v = parse_pair(line, lineno);
    }
    while (std::getline(is, line)) {
        ++lineno;
        if (!trim(line).empty())
            fail(lineno, "trailing data after samples");
    }
    return s;
}

SampledSignal load_signal(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open '" + path.string() + "'");
    try {
        return read_signal(in);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void save_signal(const std::filesystem::path& path, const SampledSignal& s) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    write_signal(out, s);
    if (!out)
        throw std::runtime_error("write to '" + path.string() + "' failed");
}

void write_block_csv(std::ostream& os, const Block& b) {
    if (b.dim != 1)
        throw std::invalid_argument("block CSV is one-dimensional");
    os << "k,n,re,im\n";
    const Interval kw = b.k_window.axis(0), nw = b.n_window.axis(0);
    std::size_t i = 0;
    for (int k = kw.lo; k <= kw.hi; ++k)
        for (int n = nw.lo; n <= nw.hi; ++n, ++i)
            os << k << ',' << n << ',' << format_real(b.values[i].real()) << ','
               << format_real(b.values[i].imag()) << '\n';
}

Block read_block_csv(std::istream& is) {
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(is, line) || trim(line) != "k,n,re,im")
        fail(1, "expected header 'k,n,re,im'");
    std::map<std::pair<int, int>, cplx> entries;
    int klo = 0, khi = -1, nlo = 0, nhi = -1;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty())
            continue;
        const auto parts = split(line, ',');
        int k = 0, n = 0;
        double re = 0.0, im = 0.0;
        if (parts.size() != 4 || !parse_number(parts[0], k) || !parse_number(parts[1], n) ||
            !parse_number(parts[2], re) || !parse_number(parts[3], im))
            fail(lineno, "expected 'k,n,re,im'");
        if (!entries.emplace(std::make_pair(k, n), cplx(re, im)).second)
            fail(lineno, "duplicate entry");
        if (entries.size() == 1) {
            klo = khi = k;
            nlo = nhi = n;
        }
        klo = std::min(klo, k);
        khi = std::max(khi, k);
        nlo = std::min(nlo, n);
        nhi = std::max(nhi, n);
    }
    if (entries.empty())
        fail(lineno, "no coefficients");
    const std::size_t expect = static_cast<std::size_t>(khi - klo + 1) * static_cast<std::size_t>(nhi - nlo + 1);
    if (entries.size() != expect)
        fail(lineno, "coefficients do not fill a rectangle");
    Block b(Box({Interval{klo, khi}}), Box({Interval{nlo, nhi}}));
    std::size_t i = 0;
    for (const auto& [key, v] : entries)
        b.values[i++] = v;
    return b;
}

}  // namespace tfshear
