#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fftfilt {

using complex = std::complex<double>;

/// Uniformly sampled real time series. Never empty; fs finite and > 0.
class Signal {
public:
    Signal(std::vector<double> samples, double fs);

    std::span<const double> samples() const noexcept { return samples_; }
    double operator[](std::size_t n) const noexcept { return samples_[n]; }
    std::size_t size() const noexcept { return samples_.size(); }
    double fs() const noexcept { return fs_; }

    friend bool operator==(const Signal&, const Signal&) = default;

private:
    std::vector<double> samples_;
    double fs_;
};

/// Complex frequency-domain vector; bin k sits at k*fs/N Hz.
class Spectrum {
public:
    Spectrum(std::vector<complex> bins, double fs);

    std::span<const complex> bins() const noexcept { return bins_; }
    const complex& operator[](std::size_t k) const noexcept { return bins_[k]; }
    std::size_t size() const noexcept { return bins_.size(); }
    double fs() const noexcept { return fs_; }

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

private:
    std::vector<complex> bins_;
    double fs_;
};

/// Bin frequencies freqs[k] = k*fs/N for k = 0..N-1.
struct FrequencyGrid {
    std::vector<double> freqs;
    double fs = 0.0;

    std::size_t size() const noexcept { return freqs.size(); }
    double resolution() const noexcept { return fs / static_cast<double>(freqs.size()); }
};

/// Unnormalized DFT: bins[k] = sum_n y[n] exp(-2 pi i k n / N). Any N >= 1.
Spectrum forward_transform(const Signal& signal);

/// Normalized inverse DFT, full complex result (1/N convention).
std::vector<complex> inverse_transform(const Spectrum& spectrum);

/// Real part of inverse_transform(), carrying fs through.
Signal inverse_transform_real(const Spectrum& spectrum);

FrequencyGrid frequency_grid(std::size_t n, double fs);

/// Index of the conjugate partner of bin k in a length-n spectrum (n-k, DC and Nyquist self-paired).
std::size_t conjugate_partner(std::size_t k, std::size_t n);

/// True iff bins[k] == conj(bins[N-k]) within tol and the self-paired bins are real within tol.
bool check_hermitian(const Spectrum& spectrum, double tol);

/// Largest |Im| of a complex time series; what is discarded by inverse_transform_real().
double max_imaginary(std::span<const complex> values);

namespace detail {

/// Complex DFT of arbitrary length. inverse=true uses the +i kernel without 1/N scaling.
std::vector<complex> dft(std::span<const complex> input, bool inverse);

}  // namespace detail

}  // namespace fftfilt
