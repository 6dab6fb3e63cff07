#include "fftfilt/ideal_filter.hpp"

#include "fftfilt/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace fftfilt {

namespace {

std::string hz(double f) {
    return std::to_string(f) + " Hz";
}

// Asymmetric reference variant: zero (upper+1)..(N-upper-2), 0..(lower-1) and
// (N-lower)..(N-1). Leaves bin N-upper-1 kept while its partner upper+1 is
// zeroed, and bin lower kept while N-lower is zeroed.
std::vector<bool> unshifted_mask(std::size_t n, BandIndices band) {
    std::vector<bool> keep(n, true);
    const auto zero = [&](std::int64_t first, std::int64_t last) {
        for (std::int64_t k = std::max<std::int64_t>(first, 0);
             k <= last && k < static_cast<std::int64_t>(n); ++k)
            keep[static_cast<std::size_t>(k)] = false;
    };
    const auto sn = static_cast<std::int64_t>(n);
    const auto lo = static_cast<std::int64_t>(band.lower);
    const auto hi = static_cast<std::int64_t>(band.upper);
    zero(hi + 1, sn - hi - 2);
    zero(0, lo - 1);
    zero(sn - lo, sn - 1);
    return keep;
}

void check_band_range(std::size_t n, BandIndices band) {
    if (band.lower > band.upper || band.upper > n / 2)
        throw InvalidInput("band indices [" + std::to_string(band.lower) + ", " +
                           std::to_string(band.upper) + "] out of range for N=" + std::to_string(n));
}

// Band selection used by filter_if: lower may be 0, in which case the band
// contains 0 Hz and the DC bin is kept.
Spectrum band_pass(const Spectrum& spectrum, BandIndices band, const FilterOptions& options) {
    check_band_range(spectrum.size(), band);
    const bool band_has_dc = band.lower == 0;
    if (!options.shifted_symmetry) {
        auto keep = unshifted_mask(spectrum.size(), band);
        if (options.preserve_dc || band_has_dc) keep[0] = true;
        return apply_mask(spectrum, keep);
    }
    return apply_mask(spectrum, kept_mask(spectrum.size(), band, options.preserve_dc || band_has_dc));
}

}  // namespace

double FilterOptions::match_tolerance(double fs) const {
    const double tol = freq_match_tol.value_or(1e-9 * fs);
    if (!(tol >= 0.0)) throw InvalidInput("freq_match_tol must be >= 0");
    return tol;
}

BandIndices band_indices(const FrequencyGrid& grid, Interval interval) {
    if (grid.freqs.empty()) throw InvalidInput("band_indices: empty frequency grid");
    const double nyquist = grid.fs / 2.0;
    if (!std::isfinite(interval.lo) || !std::isfinite(interval.hi) || interval.lo < 0.0 ||
        interval.lo > interval.hi || interval.hi > nyquist)
        throw InvalidInput("band [" + hz(interval.lo) + ", " + hz(interval.hi) +
                           "] must satisfy 0 <= lo <= hi <= fs/2 = " + hz(nyquist));

    const std::size_t half = grid.size() / 2;
    std::size_t lower = 0;
    while (lower <= half && grid.freqs[lower] < interval.lo) ++lower;

    std::size_t upper = half;
    while (upper > 0 && grid.freqs[upper] > interval.hi) --upper;

    if (lower > half || lower > upper)
        throw EmptyBand("no frequency bin lies in [" + hz(interval.lo) + ", " + hz(interval.hi) +
                        "] (resolution " + hz(grid.resolution()) + ")");
    return {lower, upper};
}

std::vector<bool> kept_mask(std::size_t n, BandIndices band, bool keep_dc) {
    std::vector<bool> keep(n, false);
    for (std::size_t k = std::max<std::size_t>(band.lower, 1); k <= band.upper && k < n; ++k) {
        keep[k] = true;
        keep[conjugate_partner(k, n)] = true;
    }
    if (keep_dc) keep[0] = true;
    return keep;
}

Spectrum apply_mask(const Spectrum& spectrum, const std::vector<bool>& keep) {
    if (keep.size() != spectrum.size()) throw InvalidInput("apply_mask: mask length differs from spectrum");
    std::vector<complex> out(spectrum.bins().begin(), spectrum.bins().end());
    for (std::size_t k = 0; k < out.size(); ++k)
        if (!keep[k]) out[k] = complex{0.0, 0.0};
    return Spectrum(std::move(out), spectrum.fs());
}

Spectrum apply_band_pass(const Spectrum& spectrum, BandIndices band, const FilterOptions& options) {
    if (band.lower < 1)
        throw InvalidInput("apply_band_pass: lower index must be >= 1 (bin 0 is handled by preserve_dc)");
    return band_pass(spectrum, band, options);
}

std::size_t point_index(const FrequencyGrid& grid, double point_freq, double tol) {
    const double nyquist = grid.fs / 2.0;
    if (!std::isfinite(point_freq) || point_freq < 0.0 || point_freq > nyquist)
        throw InvalidInput("point frequency " + hz(point_freq) + " must lie in [0, " + hz(nyquist) + "]");

    const std::size_t half = grid.size() / 2;
    std::size_t best = 0;
    for (std::size_t k = 1; k <= half; ++k)
        if (std::abs(grid.freqs[k] - point_freq) < std::abs(grid.freqs[best] - point_freq)) best = k;

    if (std::abs(grid.freqs[best] - point_freq) > tol)
        throw OffGridFrequency("point frequency " + hz(point_freq) + " is not on the frequency grid (nearest bin " +
                               std::to_string(best) + " at " + hz(grid.freqs[best]) + ")");
    return best;
}

Spectrum apply_point_pass(const Spectrum& spectrum, double point_freq, const FilterOptions& options) {
    const auto grid = frequency_grid(spectrum.size(), spectrum.fs());
    const std::size_t k = point_index(grid, point_freq, options.match_tolerance(spectrum.fs()));
    std::vector<bool> keep(spectrum.size(), false);
    keep[k] = true;
    keep[conjugate_partner(k, spectrum.size())] = true;
    if (options.preserve_dc) keep[0] = true;
    return apply_mask(spectrum, keep);
}

FilterResult filter_if(const Signal& signal, const BandSpec& band, const FilterOptions& options) {
    if (!band.interval && !band.point_freq)
        throw InvalidInput("At least one of interval or punctual frequencies parameters must be provided");

    const Spectrum spectrum = forward_transform(signal);
    FilterResult result;
    if (band.interval) {
        const auto grid = frequency_grid(signal.size(), signal.fs());
        auto filtered = band_pass(spectrum, band_indices(grid, *band.interval), options);
        result.filtered_signal = inverse_transform_real(filtered);
        result.filtered_spectrum = std::move(filtered);
    }
    if (band.point_freq) {
        auto filtered = apply_point_pass(spectrum, *band.point_freq, options);
        result.point_signal = inverse_transform_real(filtered);
        result.point_spectrum = std::move(filtered);
    }
    return result;
}

FilterResult low_pass(const Signal& signal, double cutoff, FilterOptions options) {
    options.preserve_dc = true;
    const double resolution = signal.fs() / static_cast<double>(signal.size());
    if (cutoff < resolution)
        throw EmptyBand("low_pass: cutoff " + hz(cutoff) + " is below the first bin at " + hz(resolution));
    return filter_if(signal, BandSpec::band(resolution, cutoff), options);
}

FilterResult high_pass(const Signal& signal, double cutoff, const FilterOptions& options) {
    return filter_if(signal, BandSpec::band(cutoff, signal.fs() / 2.0), options);
}

FilterResult band_stop(const Signal& signal, Interval interval, const FilterOptions& options) {
    const auto grid = frequency_grid(signal.size(), signal.fs());
    const auto band = band_indices(grid, interval);
    auto keep = kept_mask(signal.size(), band, band.lower == 0);
    keep.flip();
    if (options.preserve_dc) keep[0] = true;

    FilterResult result;
    auto filtered = apply_mask(forward_transform(signal), keep);
    result.filtered_signal = inverse_transform_real(filtered);
    result.filtered_spectrum = std::move(filtered);
    return result;
}

}  // namespace fftfilt
