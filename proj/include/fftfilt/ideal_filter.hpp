#pragma once

// Brick-wall filtering by zeroing DFT bins in conjugate pairs.
//
// A band [f_lo, f_hi] selects bins lower..upper of the lower half spectrum
// (lower = first bin with freq >= f_lo, upper = last bin <= floor(N/2) with
// freq <= f_hi). With shifted symmetry the kept set is
//
//     { k, N-k : lower <= k <= upper }
//
// i.e. bin k is always kept or dropped together with its partner N-k and the
// DC bin is handled separately, so the edited spectrum stays Hermitian and its
// inverse transform is real. Every other bin is set to exactly zero.

#include "fftfilt/signal.hpp"

#include <optional>
#include <vector>

namespace fftfilt {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// A filtering request: an inclusive passband, a single frequency, or both.
struct BandSpec {
    std::optional<Interval> interval;
    std::optional<double> point_freq;

    static BandSpec band(double lo, double hi) { return {Interval{lo, hi}, std::nullopt}; }
    static BandSpec point(double f) { return {std::nullopt, f}; }
};

struct FilterOptions {
    /// Zero bins in conjugate pairs. false reproduces the asymmetric variant.
    bool shifted_symmetry = true;
    /// Keep bin 0 (the signal mean) regardless of the band.
    bool preserve_dc = false;
    /// Tolerance in Hz for matching a point frequency to the grid; unset means 1e-9*fs.
    std::optional<double> freq_match_tol;

    double match_tolerance(double fs) const;
};

/// Inclusive bin range of the lower half spectrum selected by a band.
struct BandIndices {
    std::size_t lower;  // first bin with freq >= f_lo
    std::size_t upper;  // last bin <= N/2 with freq <= f_hi

    friend bool operator==(const BandIndices&, const BandIndices&) = default;
};

struct FilterResult {
    /// Band-pass outputs, present when the request had an interval.
    std::optional<Spectrum> filtered_spectrum;
    std::optional<Signal> filtered_signal;
    /// Single-frequency outputs, present when the request had a point frequency.
    std::optional<Spectrum> point_spectrum;
    std::optional<Signal> point_signal;
};

/// Throws InvalidInput for a malformed interval, EmptyBand when no bin lies inside it.
BandIndices band_indices(const FrequencyGrid& grid, Interval interval);

/// Keeps bins lower..upper and their partners, zeroing the rest. Requires 1 <= lower <= upper <= N/2.
Spectrum apply_band_pass(const Spectrum& spectrum, BandIndices band, const FilterOptions& options = {});

/// Keeps only the bin at point_freq and its partner. Throws OffGridFrequency if no bin matches.
Spectrum apply_point_pass(const Spectrum& spectrum, double point_freq, const FilterOptions& options = {});

/// Bin k <= N/2 whose frequency equals point_freq within tolerance.
std::size_t point_index(const FrequencyGrid& grid, double point_freq, double tol);

/// Forward transform once, apply the band and/or point selection, invert.
FilterResult filter_if(const Signal& signal, const BandSpec& band, const FilterOptions& options = {});

/// Interval (fs/N, cutoff) with DC kept.
FilterResult low_pass(const Signal& signal, double cutoff, FilterOptions options = {});

/// Interval (cutoff, fs/2).
FilterResult high_pass(const Signal& signal, double cutoff, const FilterOptions& options = {});

/// Keeps everything except the band-pass kept set of [lo, hi]; DC is kept unless the band contains 0 Hz.
FilterResult band_stop(const Signal& signal, Interval interval, const FilterOptions& options = {});

/// Bins kept by a shifted-symmetric band selection, as a mask of length n.
std::vector<bool> kept_mask(std::size_t n, BandIndices band, bool keep_dc);

/// Copies the spectrum with every bin outside the mask set to exactly zero.
Spectrum apply_mask(const Spectrum& spectrum, const std::vector<bool>& keep);

}  // namespace fftfilt
