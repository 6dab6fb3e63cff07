#include "fftfilt/signal.hpp"

#include "fftfilt/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fftfilt {

namespace {

void require_rate(double fs, const char* who) {
    if (!std::isfinite(fs) || fs <= 0.0)
        throw InvalidInput(std::string(who) + ": sampling rate must be finite and > 0");
}

}  // namespace

Signal::Signal(std::vector<double> samples, double fs) : samples_(std::move(samples)), fs_(fs) {
    if (samples_.empty()) throw InvalidInput("Signal: no samples");
    require_rate(fs_, "Signal");
}

Spectrum::Spectrum(std::vector<complex> bins, double fs) : bins_(std::move(bins)), fs_(fs) {
    if (bins_.empty()) throw InvalidInput("Spectrum: no bins");
    require_rate(fs_, "Spectrum");
}

Spectrum forward_transform(const Signal& signal) {
    std::vector<complex> in(signal.samples().begin(), signal.samples().end());
    auto bins = detail::dft(in, false);
    // Real input: the upper half is the conjugate mirror of the lower half.
    // Writing it that way makes the symmetry exact instead of true to rounding.
    const std::size_t n = bins.size();
    bins[0].imag(0.0);
    if (n % 2 == 0) bins[n / 2].imag(0.0);
    for (std::size_t k = 1; k < (n + 1) / 2; ++k) bins[n - k] = std::conj(bins[k]);
    return Spectrum(std::move(bins), signal.fs());
}

std::vector<complex> inverse_transform(const Spectrum& spectrum) {
    auto out = detail::dft(spectrum.bins(), true);
    const double scale = 1.0 / static_cast<double>(out.size());
    for (auto& v : out) v *= scale;
    return out;
}

Signal inverse_transform_real(const Spectrum& spectrum) {
    const auto full = inverse_transform(spectrum);
    std::vector<double> re(full.size());
    for (std::size_t n = 0; n < full.size(); ++n) re[n] = full[n].real();
    return Signal(std::move(re), spectrum.fs());
}

FrequencyGrid frequency_grid(std::size_t n, double fs) {
    if (n == 0) throw InvalidInput("frequency_grid: n must be >= 1");
    require_rate(fs, "frequency_grid");
    FrequencyGrid grid;
    grid.fs = fs;
    grid.freqs.resize(n);
    const auto dn = static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) grid.freqs[k] = static_cast<double>(k) * fs / dn;
    return grid;
}

std::size_t conjugate_partner(std::size_t k, std::size_t n) {
    if (k >= n)
        throw InvalidInput("conjugate_partner: bin " + std::to_string(k) + " out of range for N=" +
                           std::to_string(n));
    return k == 0 ? 0 : n - k;
}

bool check_hermitian(const Spectrum& spectrum, double tol) {
    const auto bins = spectrum.bins();
    const std::size_t n = bins.size();
    if (std::abs(bins[0].imag()) > tol) return false;
    if (n % 2 == 0 && std::abs(bins[n / 2].imag()) > tol) return false;
    for (std::size_t k = 1; k < n; ++k)
        if (std::abs(bins[k] - std::conj(bins[n - k])) > tol) return false;
    return true;
}

double max_imaginary(std::span<const complex> values) {
    double worst = 0.0;
    for (const auto& v : values) worst = std::max(worst, std::abs(v.imag()));
    return worst;
}

}  // namespace fftfilt
