// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include "tfshear/lattice.hpp"

#include <cassert>
#include <stdexcept>

namespace tfshear {

Box Box::cube(int dim, int radius) { return uniform(dim, -radius, radius); }

Box Box::uniform(int dim, int lo, int hi) {
    if (dim <= 0)
        throw std::invalid_argument("box dimension must be positive");
    return Box(std::vector<Interval>(static_cast<std::size_t>(dim), Interval{lo, hi}));
}

std::size_t Box::size() const {
    if (axes_.empty())
        return 0;
    std::size_t n = 1;
    for (const auto& a : axes_)
        n *= a.size();
    return n;
}

bool Box::contains(std::span<const int> idx) const {
    if (idx.size() != axes_.size())
        return false;
    for (std::size_t i = 0; i < axes_.size(); ++i)
        if (!axes_[i].contains(idx[i]))
            return false;
    return true;
}

std::size_t Box::offset(std::span<const int> idx) const {
    assert(contains(idx));
    std::size_t off = 0;
    for (std::size_t i = 0; i < axes_.size(); ++i)
        off = off * axes_[i].size() + static_cast<std::size_t>(idx[i] - axes_[i].lo);
    return off;
}

void Box::index(std::size_t offset, std::span<int> idx) const {
    for (std::size_t i = axes_.size(); i-- > 0;) {
        const std::size_t n = axes_[i].size();
        idx[i] = axes_[i].lo + static_cast<int>(offset % n);
        offset /= n;
    }
}

Box Box::operator+(const Box& other) const {
    if (other.dim() != dim())
        throw std::invalid_argument("box dimension mismatch");
    std::vector<Interval> out(axes_.size());
    for (std::size_t i = 0; i < axes_.size(); ++i)
        out[i] = {axes_[i].lo + other.axes_[i].lo, axes_[i].hi + other.axes_[i].hi};
    return Box(std::move(out));
}

Box Box::operator-(const Box& other) const {
    if (other.dim() != dim())
        throw std::invalid_argument("box dimension mismatch");
    std::vector<Interval> out(axes_.size());
    for (std::size_t i = 0; i < axes_.size(); ++i)
        out[i] = {axes_[i].lo - other.axes_[i].hi, axes_[i].hi - other.axes_[i].lo};
    return Box(std::move(out));
}

}  // namespace tfshear
