#pragma once

#include "fftfilt/ideal_filter.hpp"
#include "fftfilt/signal.hpp"

#include <cstdint>
#include <vector>

namespace fftfilt {

struct SineComponent {
    double freq = 0.0;       // Hz, 0 < freq < fs/2
    double amplitude = 1.0;
    double phase = 0.0;      // radians
};

struct MultiSineSpec {
    std::vector<SineComponent> components;
    double fs = 0.0;
    std::size_t n_samples = 0;
};

/// Gaussian noise parameters. Samples come from std::mt19937_64 seeded with
/// `seed`, turned into normals by the Box-Muller transform (see add_noise).
struct NoiseSpec {
    double mean = 0.0;
    double sd = 1.0;
    std::uint64_t seed = 0;
};

/// The benchmark signal: unit sines at 3, 10, 20, 40 and 80 Hz sampled at
/// 1770 Hz for one second (1770 samples, every component on an integer number of cycles).
MultiSineSpec reference_multisine();

/// samples[n] = sum_j A_j sin(2 pi f_j n / fs + phi_j).
Signal synth_multisine(const MultiSineSpec& spec);

/// Adds seeded white Gaussian noise. The same seed always yields bit-identical output.
Signal add_noise(const Signal& signal, const NoiseSpec& noise);

/// Noise-free sum of the components selected by the band (inside the interval or at the point frequency).
Signal theoretical_component(const MultiSineSpec& spec, const BandSpec& band);

}  // namespace fftfilt
