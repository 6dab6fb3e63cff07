#pragma once

// Linear-phase FIR band-pass used as the comparison baseline for the FFT filter.

#include "fftfilt/signal.hpp"

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace fftfilt {

enum class Window { rectangular, hamming, blackman };

struct FirFilter {
    std::vector<double> coefficients;
    double fs = 0.0;  // rate the design assumed; 0 when unknown (imported taps)

    std::size_t size() const noexcept { return coefficients.size(); }
    /// (L-1)/2 samples for a linear-phase filter of odd length L.
    std::size_t group_delay() const noexcept { return (coefficients.size() - 1) / 2; }
};

struct FirDesignSpec {
    double f_lo = 0.0;
    double f_hi = 0.0;
    std::size_t numtaps = 201;  // odd
    Window window = Window::hamming;
};

std::vector<double> make_window(Window window, std::size_t length);

/// Difference of two windowed ideal low-pass kernels centred at (L-1)/2.
FirFilter design_windowed_sinc_bandpass(const FirDesignSpec& spec, double fs);

/// Complex response H(f) = sum_i h[i] exp(-2 pi i f i / fs).
complex frequency_response(const FirFilter& filter, double freq, double fs);

/// Parses one tap per line, or a CSV whose header has a "b" column.
FirFilter read_coefficients(std::istream& in);
FirFilter import_coefficients(const std::filesystem::path& path);

/// Writes one tap per line with 17 significant digits.
void write_coefficients(std::ostream& out, const FirFilter& filter);
void export_coefficients(const std::filesystem::path& path, const FirFilter& filter);

/// Direct-form convolution with zero padding; output has the input's length.
/// With compensate_delay the output is advanced by (L-1)/2 samples.
Signal apply_fir(const FirFilter& filter, const Signal& signal, bool compensate_delay = true);

}  // namespace fftfilt
