// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tfshear {

/// Closed integer interval [lo, hi]; empty when hi < lo.
struct Interval {
    int lo = 0;
    int hi = -1;

    std::size_t size() const { return hi < lo ? 0 : static_cast<std::size_t>(hi - lo + 1); }
    bool contains(int i) const { return lo <= i && i <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Rectangular window in Z^d, iterated in row-major order (last axis fastest).
class Box {
public:
    Box() = default;
    explicit Box(std::vector<Interval> axes) : axes_(std::move(axes)) {}

    /// [-r, r]^d
    static Box cube(int dim, int radius);
    /// [lo, hi]^d
    static Box uniform(int dim, int lo, int hi);

    int dim() const { return static_cast<int>(axes_.size()); }
    const Interval& axis(int i) const { return axes_[static_cast<std::size_t>(i)]; }
    const std::vector<Interval>& axes() const { return axes_; }

    std::size_t size() const;
    bool empty() const { return size() == 0; }
    bool contains(std::span<const int> idx) const;

    /// Row-major offset of a multi-index; the index must be inside the box.
    std::size_t offset(std::span<const int> idx) const;
    /// Inverse of offset().
    void index(std::size_t offset, std::span<int> idx) const;

    /// Per-axis Minkowski sum and difference.
    Box operator+(const Box& other) const;
    Box operator-(const Box& other) const;

    friend bool operator==(const Box&, const Box&) = default;

private:
    std::vector<Interval> axes_;
};

}  // namespace tfshear
