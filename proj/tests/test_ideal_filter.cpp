#include "fftfilt/error.hpp"
#include "fftfilt/ideal_filter.hpp"
#include "fftfilt/metrics.hpp"
#include "fftfilt/synth.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <numeric>
#include <set>

using namespace fftfilt;

namespace {

Spectrum all_ones(std::size_t n) {
    return Spectrum(std::vector<complex>(n, complex(1.0, 0.0)), static_cast<double>(n));
}

std::set<std::size_t> nonzero_bins(const Spectrum& s) {
    std::set<std::size_t> out;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k] != complex(0.0, 0.0)) out.insert(k);
    return out;
}

std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

double mean(std::span<const double> y) {
    return std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
}

}  // namespace

TEST_SUITE("band_indices") {
    TEST_CASE("integer grid") {
        CHECK(band_indices(frequency_grid(8, 8.0), {2.0, 4.0}) == BandIndices{2, 4});
    }

    TEST_CASE("39-41 Hz at 1 Hz resolution") {
        CHECK(band_indices(frequency_grid(1770, 1770.0), {39.0, 41.0}) == BandIndices{39, 41});
    }

    TEST_CASE("endpoints between grid points round inwards") {
        CHECK(band_indices(frequency_grid(8, 8.0), {1.5, 3.5}) == BandIndices{2, 3});
        CHECK(band_indices(frequency_grid(9, 9.0), {0.0, 4.5}) == BandIndices{0, 4});
    }

    TEST_CASE("empty and malformed bands") {
        const auto grid = frequency_grid(8, 8.0);
        CHECK_THROWS_AS(band_indices(grid, {2.5, 2.6}), EmptyBand);
        CHECK_THROWS_AS(band_indices(grid, {3.0, 2.0}), InvalidInput);
        CHECK_THROWS_AS(band_indices(grid, {-1.0, 2.0}), InvalidInput);
        CHECK_THROWS_AS(band_indices(grid, {1.0, 4.5}), InvalidInput);  // above Nyquist
    }
}

TEST_SUITE("apply_band_pass") {
    TEST_CASE("kept set for N=8, bins 2..3") {
        CHECK(nonzero_bins(apply_band_pass(all_ones(8), {2, 3})) == std::set<std::size_t>{2, 3, 5, 6});

        FilterOptions keep_dc;
        keep_dc.preserve_dc = true;
        CHECK(nonzero_bins(apply_band_pass(all_ones(8), {2, 3}, keep_dc)) == std::set<std::size_t>{0, 2, 3, 5, 6});
    }

    TEST_CASE("unshifted variant zeroes (upper+1)..(N-upper-2), ..lower-1, N-lower..") {
        FilterOptions unshifted;
        unshifted.shifted_symmetry = false;
        CHECK(nonzero_bins(apply_band_pass(all_ones(8), {2, 3}, unshifted)) == std::set<std::size_t>{2, 3, 4, 5});
        CHECK(nonzero_bins(apply_band_pass(all_ones(16), {2, 4}, unshifted)) ==
              std::set<std::size_t>{2, 3, 4, 11, 12, 13});
    }

    TEST_CASE("full band with DC kept is the identity") {
        std::mt19937_64 rng(1);
        FilterOptions keep_dc;
        keep_dc.preserve_dc = true;
        for (std::size_t n : {2, 7, 8, 64, 1770}) {
            const Spectrum s(oracle::random_hermitian(rng, n), 1.0);
            CHECK(apply_band_pass(s, {1, n / 2}, keep_dc) == s);
        }
    }

    TEST_CASE("index errors") {
        CHECK_THROWS_AS(apply_band_pass(all_ones(8), {0, 3}), InvalidInput);
        CHECK_THROWS_AS(apply_band_pass(all_ones(8), {2, 5}), InvalidInput);
        CHECK_THROWS_AS(apply_band_pass(all_ones(8), {3, 2}), InvalidInput);
    }

    TEST_CASE("matches enumerated kept set and leaves kept bins untouched (random)") {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 500; ++trial) {
            const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 200)(rng);
            const std::size_t half = n / 2;
            std::size_t lo = std::uniform_int_distribution<std::size_t>(1, half)(rng);
            std::size_t hi = std::uniform_int_distribution<std::size_t>(1, half)(rng);
            if (lo > hi) std::swap(lo, hi);
            FilterOptions opt;
            opt.preserve_dc = trial % 2 == 0;

            const auto bins = oracle::random_hermitian(rng, n);
            const Spectrum in(bins, 10.0);
            const auto out = apply_band_pass(in, {lo, hi}, opt);
            const auto expected = oracle::kept_set(n, lo, hi, opt.preserve_dc);
            for (std::size_t k = 0; k < n; ++k) {
                if (expected.count(k))
                    CHECK(out[k] == in[k]);
                else
                    CHECK(out[k] == complex(0.0, 0.0));
            }
            CHECK(check_hermitian(out, 0.0));
        }
    }
}

TEST_SUITE("apply_point_pass") {
    TEST_CASE("kept pair") {
        CHECK(nonzero_bins(apply_point_pass(all_ones(64), 3.0)) == std::set<std::size_t>{3, 61});
        CHECK(nonzero_bins(apply_point_pass(all_ones(8), 0.0)) == std::set<std::size_t>{0});
        CHECK(nonzero_bins(apply_point_pass(all_ones(8), 4.0)) == std::set<std::size_t>{4});

        FilterOptions keep_dc;
        keep_dc.preserve_dc = true;
        CHECK(nonzero_bins(apply_point_pass(all_ones(64), 3.0, keep_dc)) == std::set<std::size_t>{0, 3, 61});
    }

    TEST_CASE("off-grid and out-of-range frequencies") {
        CHECK_THROWS_AS(apply_point_pass(all_ones(64), 3.5), OffGridFrequency);
        CHECK_THROWS_AS(apply_point_pass(all_ones(64), 40.0), InvalidInput);
        CHECK_THROWS_AS(apply_point_pass(all_ones(64), -1.0), InvalidInput);

        FilterOptions loose;
        loose.freq_match_tol = 0.25;
        CHECK(nonzero_bins(apply_point_pass(all_ones(64), 3.2, loose)) == std::set<std::size_t>{3, 61});
        loose.freq_match_tol = -1.0;
        CHECK_THROWS_AS(apply_point_pass(all_ones(64), 3.0, loose), InvalidInput);
    }
}

TEST_SUITE("filter_if") {
    const double fs = 64.0;
    const std::size_t n = 64;

    TEST_CASE("isolates the 10 Hz component") {
        const auto s3 = oracle::sine(3.0, 1.0, fs, n);
        const auto s10 = oracle::sine(10.0, 1.0, fs, n);
        const auto result = filter_if(Signal(add(s3, s10), fs), BandSpec::band(9.0, 11.0));
        REQUIRE(result.filtered_signal);
        CHECK_FALSE(result.point_signal);
        CHECK(result.filtered_signal->fs() == fs);
        CHECK(oracle::max_abs_diff(result.filtered_signal->samples(), s10) < 1e-9);
    }

    TEST_CASE("band and point from one call") {
        const auto s3 = oracle::sine(3.0, 1.0, fs, n);
        const auto s10 = oracle::sine(10.0, 1.0, fs, n);
        const BandSpec both{Interval{9.0, 11.0}, 3.0};
        const auto result = filter_if(Signal(add(s3, s10), fs), both);
        REQUIRE(result.filtered_signal);
        REQUIRE(result.point_signal);
        CHECK(oracle::max_abs_diff(result.filtered_signal->samples(), s10) < 1e-9);
        CHECK(oracle::max_abs_diff(result.point_signal->samples(), s3) < 1e-9);
    }

    TEST_CASE("identity band") {
        std::mt19937_64 rng(4);
        auto y = oracle::random_samples(rng, n);
        FilterOptions keep_dc;
        keep_dc.preserve_dc = true;
        const auto result = filter_if(Signal(y, fs), BandSpec::band(fs / n, fs / 2), keep_dc);
        CHECK(oracle::max_abs_diff(result.filtered_signal->samples(), y) < 1e-9);
    }

    TEST_CASE("a band starting at 0 Hz keeps the mean") {
        std::vector<double> y(n, 3.0);
        const auto result = filter_if(Signal(y, fs), BandSpec::band(0.0, 5.0));
        CHECK(oracle::max_abs_diff(result.filtered_signal->samples(), y) < 1e-12);
    }

    TEST_CASE("no band and no point") {
        CHECK_THROWS_WITH_AS(filter_if(Signal({1, 2, 3}, 3.0), BandSpec{}),
                             "At least one of interval or punctual frequencies parameters must be provided",
                             InvalidInput);
    }

    TEST_CASE("errors propagate") {
        CHECK_THROWS_AS(filter_if(Signal(std::vector<double>(8, 0.0), 8.0), BandSpec::band(2.5, 2.6)), EmptyBand);
        CHECK_THROWS_AS(filter_if(Signal(std::vector<double>(8, 0.0), 8.0), BandSpec::point(2.5)), OffGridFrequency);
    }

    TEST_CASE("band and point agree on the 40 Hz amplitude of the benchmark signal") {
        const auto spec = reference_multisine();
        const auto clean = synth_multisine(spec);
        const BandSpec both{Interval{39.0, 41.0}, 40.0};
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto noisy = add_noise(clean, {0.0, 1.0, seed});
            const auto result = filter_if(noisy, both);
            const double band_amp = amplitude_estimate(*result.filtered_signal, 40.0);
            const double point_amp = amplitude_estimate(*result.point_signal, 40.0);
            CHECK(std::abs(band_amp - point_amp) <= 0.05 * point_amp);
        }
    }
}

TEST_SUITE("derived filters") {
    const double fs = 64.0;
    const std::size_t n = 64;

    TEST_CASE("band stop removes the 10 Hz component") {
        const auto s3 = oracle::sine(3.0, 1.0, fs, n);
        const auto s10 = oracle::sine(10.0, 1.0, fs, n);
        const auto result = band_stop(Signal(add(s3, s10), fs), {9.0, 11.0});
        CHECK(oracle::max_abs_diff(result.filtered_signal->samples(), s3) < 1e-9);
    }

    TEST_CASE("band stop keeps DC and is the complement of band pass") {
        std::mt19937_64 rng(8);
        auto y = oracle::random_samples(rng, 33);
        const Signal signal(y, 33.0);
        const auto pass = filter_if(signal, BandSpec::band(4.0, 9.0));
        const auto stop = band_stop(signal, {4.0, 9.0});
        CHECK(stop.filtered_spectrum->bins()[0] == forward_transform(signal)[0]);
        const auto sum = add(std::vector<double>(pass.filtered_signal->samples().begin(),
                                                 pass.filtered_signal->samples().end()),
                             std::vector<double>(stop.filtered_signal->samples().begin(),
                                                 stop.filtered_signal->samples().end()));
        CHECK(oracle::max_abs_diff(sum, y) < 1e-9);
    }

    TEST_CASE("low pass at Nyquist and high pass at the first bin are identities") {
        std::mt19937_64 rng(12);
        auto y = oracle::random_samples(rng, n);
        const auto lp = low_pass(Signal(y, fs), fs / 2);
        CHECK(oracle::max_abs_diff(lp.filtered_signal->samples(), y) < 1e-9);

        const double m = mean(y);
        for (auto& v : y) v -= m;
        const auto hp = high_pass(Signal(y, fs), fs / n);
        CHECK(oracle::max_abs_diff(hp.filtered_signal->samples(), y) < 1e-9);
    }

    TEST_CASE("low pass keeps only components below the cutoff") {
        const auto s3 = oracle::sine(3.0, 1.0, fs, n);
        const auto s10 = oracle::sine(10.0, 1.0, fs, n);
        auto y = add(s3, s10);
        for (auto& v : y) v += 0.5;
        auto expected = s3;
        for (auto& v : expected) v += 0.5;
        CHECK(oracle::max_abs_diff(low_pass(Signal(y, fs), 5.0).filtered_signal->samples(), expected) < 1e-9);
        CHECK_THROWS_AS(low_pass(Signal(y, fs), 0.5), EmptyBand);
    }
}

TEST_SUITE("properties") {
    TEST_CASE("brick-wall exactness and real output") {
        std::mt19937_64 rng(21);
        for (std::size_t n : {8, 9, 64, 65, 1770}) {
            const auto y = oracle::random_samples(rng, n);
            const auto result = filter_if(Signal(y, static_cast<double>(n)), BandSpec::band(2.0, 3.0));
            const auto& spec = *result.filtered_spectrum;
            CHECK(nonzero_bins(spec) == oracle::kept_set(n, 2, 3, false));
            CHECK(check_hermitian(spec, 0.0));
            CHECK(max_imaginary(inverse_transform(spec)) < 1e-9);
        }
    }

    TEST_CASE("unshifted zeroing breaks symmetry") {
        std::mt19937_64 rng(22);
        FilterOptions unshifted;
        unshifted.shifted_symmetry = false;
        for (std::size_t n : {16, 17, 64, 1770}) {
            const Spectrum s(oracle::random_hermitian(rng, n), 1.0);
            const auto out = apply_band_pass(s, {2, 4}, unshifted);
            CHECK_FALSE(check_hermitian(out, 0.0));
            CHECK(max_imaginary(inverse_transform(out)) > 1e-12);
        }
    }

    TEST_CASE("idempotence and linearity") {
        std::mt19937_64 rng(23);
        const BandSpec band = BandSpec::band(5.0, 40.0);
        for (std::size_t n : {100, 101, 1770}) {
            const double fs = 200.0;
            const auto y1 = oracle::random_samples(rng, n);
            const auto y2 = oracle::random_samples(rng, n);
            const auto f1 = *filter_if(Signal(y1, fs), band).filtered_signal;
            const auto f2 = *filter_if(Signal(y2, fs), band).filtered_signal;
            const auto twice = *filter_if(f1, band).filtered_signal;
            CHECK(oracle::max_abs_diff(twice.samples(), f1.samples()) < 1e-9);

            const double a = 1.7, b = -0.4;
            std::vector<double> combo(n), expected(n);
            for (std::size_t i = 0; i < n; ++i) {
                combo[i] = a * y1[i] + b * y2[i];
                expected[i] = a * f1[i] + b * f2[i];
            }
            CHECK(oracle::max_abs_diff(filter_if(Signal(combo, fs), band).filtered_signal->samples(), expected) < 1e-9);
        }
    }

    TEST_CASE("doubling the imaginary parts doubles the amplitude") {
        const double fs = 1770.0, amp = 1.3;
        const auto y = oracle::sine(40.0, amp, fs, 1770);
        const auto spec = *filter_if(Signal(y, fs), BandSpec::band(39.0, 41.0)).filtered_spectrum;
        CHECK(std::abs(spec[40].real()) < 1e-9);
        CHECK(std::abs(spec[1730].real()) < 1e-9);

        std::vector<complex> doubled(spec.bins().begin(), spec.bins().end());
        for (auto& v : doubled) v = complex(v.real(), 2.0 * v.imag());
        const auto out = inverse_transform_real(Spectrum(doubled, fs));
        std::vector<double> expected(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) expected[i] = 2.0 * y[i];
        CHECK(oracle::max_abs_diff(out.samples(), expected) <= 1e-6 * 2.0 * amp);
    }

    TEST_CASE("DC bin controls the output mean") {
        const double fs = 64.0;
        auto y = oracle::sine(5.0, 1.0, fs, 64);
        for (auto& v : y) v += 2.25;
        const Signal signal(y, fs);

        const auto zeroed = *filter_if(signal, BandSpec::band(1.0, 10.0)).filtered_signal;
        CHECK(std::abs(mean(zeroed.samples())) < 1e-9);

        FilterOptions keep_dc;
        keep_dc.preserve_dc = true;
        const auto kept = *filter_if(signal, BandSpec::band(1.0, 10.0), keep_dc).filtered_signal;
        CHECK(std::abs(mean(kept.samples()) - mean(y)) < 1e-9);
    }

    TEST_CASE("no passband droop for on-grid components") {
        const auto spec = reference_multisine();
        const auto clean = synth_multisine(spec);
        const auto out = *filter_if(clean, BandSpec::band(3.0, 80.0)).filtered_signal;
        for (const auto& c : spec.components) {
            const double before = amplitude_estimate(clean, c.freq);
            const double after = amplitude_estimate(out, c.freq);
            CHECK(std::abs(after - before) <= 1e-9 * before);
        }
    }
}
