// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include "tfshear/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace tfshear {

namespace {

std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

fftw_plan get_plan(int dim, int L, int sign) {
    static std::map<std::tuple<int, int, int>, fftw_plan> cache;
    std::lock_guard lock(plan_mutex());
    const auto key = std::make_tuple(dim, L, sign);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;
    std::size_t n = 1;
    for (int a = 0; a < dim; ++a)
        n *= static_cast<std::size_t>(L);
    fftw_complex* buf = fftw_alloc_complex(n);
    int dims[3] = {L, L, L};
    fftw_plan plan = fftw_plan_dft(dim, dims, buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    if (!plan)
        throw std::runtime_error("FFT plan creation failed");
    cache.emplace(key, plan);
    return plan;
}

}  // namespace

void dft(std::vector<std::complex<double>>& data, int dim, int L, int sign) {
    if (dim < 1 || dim > 3 || L <= 0)
        throw std::invalid_argument("unsupported transform shape");
    std::size_t n = 1;
    for (int a = 0; a < dim; ++a)
        n *= static_cast<std::size_t>(L);
    if (data.size() != n)
        throw std::invalid_argument("transform size mismatch");
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(get_plan(dim, L, sign), p, p);
}

void centered_dft(std::vector<std::complex<double>>& data, int dim, int L, int sign) {
    if (L % 2 != 0)
        throw std::invalid_argument("centered transform needs even length");
    // (j - L/2)(m - L/2) = jm - (j + m) L/2 + L^2/4, so the centering is a
    // (-1)^j pre-twist, a (-1)^m post-twist and a constant (-1)^(L/2) per axis.
    auto twist = [&](bool with_constant) {
        const std::size_t n = data.size();
        const bool flip_all = with_constant && (dim * (L / 2)) % 2 != 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t rest = i;
            int parity = 0;
            for (int a = 0; a < dim; ++a) {
                parity += static_cast<int>(rest % static_cast<std::size_t>(L));
                rest /= static_cast<std::size_t>(L);
            }
            if ((parity % 2 != 0) != flip_all)
                data[i] = -data[i];
        }
    };
    twist(false);
    dft(data, dim, L, sign);
    twist(true);
}

}  // namespace tfshear
