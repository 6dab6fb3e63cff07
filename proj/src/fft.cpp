// Arbitrary-length complex DFT: recursive mixed-radix decimation in time for
// lengths whose prime factors are small, Bluestein's chirp-z convolution
// otherwise.

#include "fftfilt/error.hpp"
#include "fftfilt/signal.hpp"

#include <cstdint>
#include <numbers>
#include <utility>

namespace fftfilt::detail {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Largest prime radix handled by the O(p^2) generic butterfly.
constexpr std::size_t kMaxRadix = 64;

struct Stage {
    std::size_t radix;
    std::size_t span;  // product of the remaining radices
};

std::vector<Stage> plan_stages(std::size_t n) {
    std::vector<std::size_t> radices;
    std::size_t rest = n;
    for (std::size_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        while (rest % p == 0) {
            radices.push_back(p);
            rest /= p;
        }
    }
    if (rest > 1) radices.push_back(rest);

    std::vector<Stage> stages;
    std::size_t remaining = n;
    for (std::size_t p : radices) {
        remaining /= p;
        stages.push_back({p, remaining});
    }
    return stages;
}

bool needs_bluestein(const std::vector<Stage>& stages) {
    for (const auto& s : stages)
        if (s.radix > kMaxRadix) return true;
    return false;
}

class MixedRadix {
public:
    MixedRadix(std::size_t n, bool inverse) : n_(n), stages_(plan_stages(n)), twiddles_(n) {
        const double sign = inverse ? 1.0 : -1.0;
        for (std::size_t j = 0; j < n; ++j)
            twiddles_[j] = std::polar(1.0, sign * kTwoPi * static_cast<double>(j) / static_cast<double>(n));
    }

    std::vector<complex> operator()(const complex* in) const {
        std::vector<complex> out(n_);
        if (n_ == 1) {
            out[0] = in[0];
            return out;
        }
        work(out.data(), in, 1, 0);
        return out;
    }

private:
    void work(complex* out, const complex* in, std::size_t fstride, std::size_t stage) const {
        const auto [p, m] = stages_[stage];
        if (m == 1) {
            for (std::size_t q = 0; q < p; ++q) out[q] = in[q * fstride];
        } else {
            for (std::size_t q = 0; q < p; ++q)
                work(out + q * m, in + q * fstride, fstride * p, stage + 1);
        }
        if (p == 2)
            butterfly2(out, fstride, m);
        else
            butterfly_generic(out, fstride, p, m);
    }

    void butterfly2(complex* out, std::size_t fstride, std::size_t m) const {
        for (std::size_t k = 0; k < m; ++k) {
            const complex t = out[k + m] * twiddles_[k * fstride];
            out[k + m] = out[k] - t;
            out[k] += t;
        }
    }

    void butterfly_generic(complex* out, std::size_t fstride, std::size_t p, std::size_t m) const {
        std::vector<complex> scratch(p);
        for (std::size_t u = 0; u < m; ++u) {
            for (std::size_t q = 0; q < p; ++q) scratch[q] = out[u + q * m];
            for (std::size_t q1 = 0; q1 < p; ++q1) {
                const std::size_t k = u + q1 * m;
                complex acc = scratch[0];
                std::size_t tw = 0;
                for (std::size_t q = 1; q < p; ++q) {
                    tw += fstride * k;
                    tw %= n_;
                    acc += scratch[q] * twiddles_[tw];
                }
                out[k] = acc;
            }
        }
    }

    std::size_t n_;
    std::vector<Stage> stages_;
    std::vector<complex> twiddles_;
};

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

std::vector<complex> bluestein(std::span<const complex> input, bool inverse) {
    const std::size_t n = input.size();
    const std::size_t m = next_pow2(2 * n - 1);
    const double sign = inverse ? 1.0 : -1.0;

    // chirp[k] = exp(sign * i*pi*k^2/n); k^2 reduced mod 2n keeps the angle small.
    std::vector<complex> chirp(n);
    const std::uint64_t period = 2 * static_cast<std::uint64_t>(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t k2 = (static_cast<std::uint64_t>(k) * k) % period;
        chirp[k] = std::polar(1.0, sign * std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n));
    }

    std::vector<complex> a(m), b(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = input[k] * chirp[k];
    b[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = std::conj(chirp[k]);

    const MixedRadix fwd(m, false);
    const MixedRadix inv(m, true);
    auto fa = fwd(a.data());
    const auto fb = fwd(b.data());
    for (std::size_t k = 0; k < m; ++k) fa[k] *= fb[k];
    const auto conv = inv(fa.data());

    std::vector<complex> out(n);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) out[k] = chirp[k] * conv[k] * scale;
    return out;
}

}  // namespace

std::vector<complex> dft(std::span<const complex> input, bool inverse) {
    if (input.empty()) throw InvalidInput("dft: empty input");
    if (needs_bluestein(plan_stages(input.size()))) return bluestein(input, inverse);
    return MixedRadix(input.size(), inverse)(input.data());
}

}  // namespace fftfilt::detail
