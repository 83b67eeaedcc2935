// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include "tfshear/gabor.hpp"

#include <cmath>
#include <limits>

#include "tfshear/fft.hpp"
#include "tfshear/parallel.hpp"

namespace tfshear {

namespace {

constexpr double kFrameTolerance = 1e-8;

std::size_t wrap(long i, int L) {
    const long r = i % L;
    return static_cast<std::size_t>(r < 0 ? r + L : r);
}

// (-1)^{b n}, the factor exp(2 pi i b n (L/2) / L).
double centering_sign(int b, int n) { return (static_cast<long>(b) * n) % 2 == 0 ? 1.0 : -1.0; }

void require_grid(const GaborSystem& sys, const SampledSignal& f) {
    if (f.grid.dim != 1 || f.grid.L != sys.L() || f.grid.h != sys.window.grid.h)
        throw std::invalid_argument("signal does not match the Gabor system grid");
}

double norm2(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const auto& x : v)
        s += std::norm(x);
    return std::sqrt(s);
}

cplx dotc(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    cplx s{};
    for (std::size_t i = 0; i < x.size(); ++i)
        s += std::conj(x[i]) * y[i];
    return s;
}

// S f_j = h M sum_p f_{j - pM} W_p(j), W_p(j) = sum_k g_{j - ak} conj(g_{j - pM - ak}).
class WalnutOperator {
public:
    explicit WalnutOperator(const GaborSystem& sys)
        : L_(sys.L()), M_(sys.modulations()), b_(sys.b), scale_(sys.window.grid.h * sys.modulations()) {
        const auto& g = sys.window.samples;
        W_.assign(static_cast<std::size_t>(b_) * L_, cplx{});
        for (int p = 0; p < b_; ++p)
            for (int j = 0; j < L_; ++j) {
                cplx s{};
                for (int k = 0; k < sys.shifts(); ++k)
                    s += g[wrap(j - static_cast<long>(sys.a) * k, L_)] *
                         std::conj(g[wrap(j - static_cast<long>(p) * M_ - static_cast<long>(sys.a) * k, L_)]);
                W_[static_cast<std::size_t>(p) * L_ + j] = scale_ * s;
            }
    }

    void apply(const std::vector<cplx>& f, std::vector<cplx>& out) const {
        out.assign(f.size(), cplx{});
        for (int p = 0; p < b_; ++p) {
            const cplx* w = W_.data() + static_cast<std::size_t>(p) * L_;
            for (int j = 0; j < L_; ++j)
                out[static_cast<std::size_t>(j)] += w[j] * f[wrap(j - static_cast<long>(p) * M_, L_)];
        }
    }

private:
    int L_, M_, b_;
    double scale_;
    std::vector<cplx> W_;
};

std::vector<cplx> start_vector(int L) {
    // Fixed pseudo-random start so results are reproducible.
    std::vector<cplx> v(static_cast<std::size_t>(L));
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
    };
    for (auto& x : v)
        x = cplx(next(), next());
    const double n = norm2(v);
    for (auto& x : v)
        x /= n;
    return v;
}

struct PowerResult {
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Largest eigenvalue of shift I - sign S (Hermitian, positive semidefinite
// for the shifts used), by power iteration with a residual stopping rule.
template <class Op>
PowerResult power_iteration(const Op& apply, int L, double scale_hint) {
    constexpr int kMaxIter = 100000;
    std::vector<cplx> v = start_vector(L), w;
    PowerResult r;
    for (int it = 1; it <= kMaxIter; ++it) {
        apply(v, w);
        const double lambda = dotc(v, w).real();
        double res = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i)
            res += std::norm(w[i] - lambda * v[i]);
        r.value = lambda;
        r.iterations = it;
        if (std::sqrt(res) <= 1e-10 * std::max(scale_hint, std::abs(lambda))) {
            r.converged = true;
            return r;
        }
        const double n = norm2(w);
        if (n == 0.0) {
            r.converged = true;
            return r;
        }
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = w[i] / n;
    }
    return r;
}

}  // namespace

void GaborSystem::validate() const {
    window.grid.validate();
    if (window.grid.dim != 1)
        throw std::invalid_argument("Gabor systems are one-dimensional");
    if (a <= 0 || b <= 0 || L() % a != 0 || L() % b != 0)
        throw std::invalid_argument("lattice steps a and b must divide L");
    if (window.l2_norm() == 0.0)
        throw std::invalid_argument("Gabor window is zero");
}

Box GaborSystem::k_window() const { return Box({Interval{-shifts() / 2, shifts() - shifts() / 2 - 1}}); }
Box GaborSystem::n_window() const {
    return Box({Interval{-modulations() / 2, modulations() - modulations() / 2 - 1}});
}

Block analysis(const GaborSystem& sys, const SampledSignal& f) {
    sys.validate();
    require_grid(sys, f);
    const int L = sys.L(), K = sys.shifts(), M = sys.modulations();
    const Box kw = sys.k_window(), nw = sys.n_window();
    const int k0 = kw.axis(0).lo, n0 = nw.axis(0).lo;
    const double h = f.grid.h;
    Block out(kw, nw);
    const auto& g = sys.window.samples;
    parallel_for(static_cast<std::size_t>(K), [&](std::size_t ki) {
        const int k = k0 + static_cast<int>(ki);
        // Fold f conj(T_{ak} g) modulo M, then one length-M transform.
        std::vector<cplx> P(static_cast<std::size_t>(M), cplx{});
        for (int j = 0; j < L; ++j)
            P[static_cast<std::size_t>(j % M)] +=
                f.samples[static_cast<std::size_t>(j)] * std::conj(g[wrap(j - static_cast<long>(sys.a) * k, L)]);
        dft(P, 1, M, -1);
        cplx* row = out.values.data() + ki * static_cast<std::size_t>(M);
        for (int ni = 0; ni < M; ++ni) {
            const int n = n0 + ni;
            row[ni] = h * centering_sign(sys.b, n) * P[wrap(n, M)];
        }
    });
    return out;
}

SampledSignal synthesis(const GaborSystem& sys, const Block& c) {
    sys.validate();
    if (c.dim != 1 || !(c.k_window == sys.k_window()) || !(c.n_window == sys.n_window()))
        throw std::invalid_argument("coefficient block does not match the Gabor lattice");
    const int L = sys.L(), K = sys.shifts(), M = sys.modulations();
    const int k0 = sys.k_window().axis(0).lo, n0 = sys.n_window().axis(0).lo;
    const auto& g = sys.window.samples;
    std::vector<std::vector<cplx>> parts(static_cast<std::size_t>(K));
    parallel_for(static_cast<std::size_t>(K), [&](std::size_t ki) {
        const int k = k0 + static_cast<int>(ki);
        std::vector<cplx> u(static_cast<std::size_t>(M), cplx{});
        const cplx* row = c.values.data() + ki * static_cast<std::size_t>(M);
        for (int ni = 0; ni < M; ++ni) {
            const int n = n0 + ni;
            u[wrap(n, M)] = centering_sign(sys.b, n) * row[ni];
        }
        dft(u, 1, M, +1);
        auto& part = parts[ki];
        part.resize(static_cast<std::size_t>(L));
        for (int j = 0; j < L; ++j)
            part[static_cast<std::size_t>(j)] =
                g[wrap(j - static_cast<long>(sys.a) * k, L)] * u[static_cast<std::size_t>(j % M)];
    });
    SampledSignal out(sys.window.grid);
    for (const auto& part : parts)
        for (int j = 0; j < L; ++j)
            out.samples[static_cast<std::size_t>(j)] += part[static_cast<std::size_t>(j)];
    return out;
}

SampledSignal frame_operator(const GaborSystem& sys, const SampledSignal& f) {
    sys.validate();
    require_grid(sys, f);
    SampledSignal out(f.grid);
    WalnutOperator(sys).apply(f.samples, out.samples);
    return out;
}

FrameBounds frame_bounds(const GaborSystem& sys) {
    sys.validate();
    const WalnutOperator S(sys);
    const int L = sys.L();
    FrameBounds fb;
    const PowerResult top = power_iteration([&](const auto& v, auto& w) { S.apply(v, w); }, L, 0.0);
    fb.B = top.value;
    const double B = fb.B;
    const PowerResult gap = power_iteration(
        [&](const auto& v, auto& w) {
            S.apply(v, w);
            for (std::size_t i = 0; i < v.size(); ++i)
                w[i] = B * v[i] - w[i];
        },
        L, B);
    fb.A = std::max(0.0, B - gap.value);
    fb.converged = top.converged && gap.converged;
    fb.iterations = top.iterations + gap.iterations;
    fb.is_frame = fb.B > 0.0 && fb.A > kFrameTolerance * fb.B;
    return fb;
}

WalnutEnvelope walnut_check(const SampledSignal& g, int a) {
    if (g.grid.dim != 1)
        throw std::invalid_argument("walnut_check is one-dimensional");
    const int L = g.grid.L;
    if (a <= 0 || L % a != 0)
        throw std::invalid_argument("time step a must divide L");
    WalnutEnvelope env{std::numeric_limits<double>::infinity(), 0.0};
    // The sum is a-periodic in j.
    for (int j = 0; j < a; ++j) {
        double s = 0.0;
        for (int k = 0; k < L / a; ++k)
            s += std::norm(g.samples[static_cast<std::size_t>(j + k * a)]);
        env.lower = std::min(env.lower, s);
        env.upper = std::max(env.upper, s);
    }
    return env;
}

SampledSignal dual_window(const GaborSystem& sys) {
    sys.validate();
    // CG also converges on a singular S when g lies in its range, so the
    // frame property is checked up front.
    const FrameBounds fb = frame_bounds(sys);
    const double cond = fb.A > 0.0 ? fb.B / fb.A : std::numeric_limits<double>::infinity();
    if (!fb.is_frame)
        throw DualWindowError("dual window: not a frame (B/A ~ " + std::to_string(cond) + ")", cond);
    const WalnutOperator S(sys);
    const int L = sys.L();
    const std::vector<cplx>& rhs = sys.window.samples;
    const double rhs_norm = norm2(rhs);
    std::vector<cplx> x(rhs.size(), cplx{}), r = rhs, p = rhs, Ap;
    double rr = dotc(r, r).real();
    const int max_iter = 10 * L;
    for (int it = 0; it < max_iter; ++it) {
        if (std::sqrt(rr) <= 1e-13 * rhs_norm) {
            SampledSignal out(sys.window.grid);
            out.samples = std::move(x);
            return out;
        }
        S.apply(p, Ap);
        const double pAp = dotc(p, Ap).real();
        if (!(pAp > 0.0))
            break;
        const double alpha = rr / pAp;
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * Ap[i];
        }
        const double rr_new = dotc(r, r).real();
        for (std::size_t i = 0; i < x.size(); ++i)
            p[i] = r[i] + (rr_new / rr) * p[i];
        rr = rr_new;
    }
    if (std::sqrt(rr) <= 1e-13 * rhs_norm) {
        SampledSignal out(sys.window.grid);
        out.samples = std::move(x);
        return out;
    }
    throw DualWindowError("dual window: conjugate gradients did not converge (B/A ~ " + std::to_string(cond) + ")",
                          cond);
}

GaborNorm gabor_wiener_norm(const GaborSystem& sys, const SampledSignal& f, const Exponent& p,
                            const Exponent& q, double s) {
    const Block c = analysis(sys, f);
    const double h = f.grid.h;
    const double freq_step = sys.b / (sys.L() * h);
    const Box kw = sys.k_window(), nw = sys.n_window();
    std::vector<double> table(c.values.size());
    const std::size_t M = static_cast<std::size_t>(sys.modulations());
    for (std::size_t ki = 0; ki < static_cast<std::size_t>(sys.shifts()); ++ki)
        for (std::size_t ni = 0; ni < M; ++ni) {
            const double xi = (nw.axis(0).lo + static_cast<int>(ni)) * freq_step;
            table[ki * M + ni] = std::pow(std::hypot(1.0, xi), s);
        }
    GaborNorm out;
    out.value = norm_l_paren_pq(c, p, q, WeightSpec::sampled(kw, nw, std::move(table)));
    out.scaled = out.value * std::pow(sys.a * h, p.recip_value()) * std::pow(freq_step, q.recip_value());
    return out;
}

}  // namespace tfshear
