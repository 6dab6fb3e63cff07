#include "fftfilt/metrics.hpp"

#include "fftfilt/error.hpp"

#include <cmath>
#include <string>

namespace fftfilt {

double rmse(const Signal& a, const Signal& b) {
    if (a.size() != b.size())
        throw InvalidInput("rmse: length mismatch (" + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()) + ")");
    double sum = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        const double d = a[n] - b[n];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(a.size()));
}

double amplitude_estimate(const Signal& signal, double freq, std::optional<double> tol) {
    const auto grid = frequency_grid(signal.size(), signal.fs());
    const std::size_t k = point_index(grid, freq, tol.value_or(1e-9 * signal.fs()));
    const auto spectrum = forward_transform(signal);
    return 2.0 * std::abs(spectrum[k]) / static_cast<double>(signal.size());
}

std::vector<SpectrumRow> magnitude_spectrum(const Signal& signal) {
    const auto spectrum = forward_transform(signal);
    const auto grid = frequency_grid(signal.size(), signal.fs());
    std::vector<SpectrumRow> rows;
    rows.reserve(signal.size() / 2 + 1);
    for (std::size_t k = 0; k <= signal.size() / 2; ++k)
        rows.push_back({k, grid.freqs[k], std::abs(spectrum[k])});
    return rows;
}

ComparisonReport run_comparison(const ComparisonSetup& setup) {
    const auto clean = synth_multisine(setup.signal);
    const auto noisy = add_noise(clean, setup.noise);
    const auto band = BandSpec::band(setup.band.lo, setup.band.hi);
    const auto reference = theoretical_component(setup.signal, band);

    ComparisonReport report;
    report.band = setup.band;
    report.n_samples = noisy.size();
    report.seed = setup.noise.seed;
    report.rmse_unfiltered = rmse(noisy, reference);
    report.rmse_fft = rmse(*filter_if(noisy, band, setup.options).filtered_signal, reference);
    if (setup.fir) report.rmse_fir = rmse(apply_fir(*setup.fir, noisy, setup.compensate_delay), reference);
    return report;
}

}  // namespace fftfilt
