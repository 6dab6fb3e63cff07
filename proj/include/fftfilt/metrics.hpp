#pragma once

#include "fftfilt/fir.hpp"
#include "fftfilt/ideal_filter.hpp"
#include "fftfilt/signal.hpp"
#include "fftfilt/synth.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fftfilt {

/// sqrt(mean((a - b)^2)). Throws InvalidInput on a length mismatch.
double rmse(const Signal& a, const Signal& b);

/// 2|X[k]|/N at the bin matching freq; exact for one on-grid sinusoid.
double amplitude_estimate(const Signal& signal, double freq, std::optional<double> tol = std::nullopt);

struct SpectrumRow {
    std::size_t bin;
    double freq;
    double magnitude;
};

/// |X[k]| for k = 0..N/2.
std::vector<SpectrumRow> magnitude_spectrum(const Signal& signal);

struct ComparisonReport {
    double rmse_fft = 0.0;
    std::optional<double> rmse_fir;
    double rmse_unfiltered = 0.0;
    Interval band;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
};

/// One run of the filter comparison: synthesize spec + noise, filter it with
/// the FFT band-pass and (optionally) the FIR baseline, and score each output
/// against the noise-free components inside the band.
struct ComparisonSetup {
    MultiSineSpec signal = reference_multisine();
    NoiseSpec noise;
    Interval band;
    std::optional<FirFilter> fir;
    bool compensate_delay = true;
    FilterOptions options;
};

ComparisonReport run_comparison(const ComparisonSetup& setup);

}  // namespace fftfilt
