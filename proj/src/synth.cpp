#include "fftfilt/synth.hpp"

#include "fftfilt/error.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace fftfilt {

namespace {

void validate(const MultiSineSpec& spec) {
    if (!std::isfinite(spec.fs) || spec.fs <= 0.0) throw InvalidInput("synth: fs must be finite and > 0");
    if (spec.n_samples == 0) throw InvalidInput("synth: n_samples must be >= 1");
    const double nyquist = spec.fs / 2.0;
    for (const auto& c : spec.components) {
        if (!std::isfinite(c.freq) || c.freq <= 0.0 || c.freq >= nyquist)
            throw InvalidInput("synth: component at " + std::to_string(c.freq) +
                               " Hz must lie strictly between 0 and fs/2 = " + std::to_string(nyquist) + " Hz");
        if (!std::isfinite(c.amplitude) || !std::isfinite(c.phase))
            throw InvalidInput("synth: non-finite amplitude or phase");
    }
}

std::vector<double> sum_components(const std::vector<SineComponent>& components, double fs, std::size_t n) {
    std::vector<double> samples(n, 0.0);
    for (const auto& c : components) {
        const double omega = 2.0 * std::numbers::pi * c.freq / fs;
        for (std::size_t i = 0; i < n; ++i)
            samples[i] += c.amplitude * std::sin(omega * static_cast<double>(i) + c.phase);
    }
    return samples;
}

// Uniform on (0, 1] from the top 53 bits of one engine draw.
double unit_open_closed(std::mt19937_64& engine) {
    return (static_cast<double>(engine() >> 11) + 1.0) * 0x1.0p-53;
}

bool selected(const SineComponent& c, const BandSpec& band, double tol) {
    if (band.interval && c.freq >= band.interval->lo && c.freq <= band.interval->hi) return true;
    return band.point_freq && std::abs(c.freq - *band.point_freq) <= tol;
}

}  // namespace

MultiSineSpec reference_multisine() {
    MultiSineSpec spec;
    for (double f : {3.0, 10.0, 20.0, 40.0, 80.0}) spec.components.push_back({f, 1.0, 0.0});
    spec.fs = 1770.0;
    spec.n_samples = 1770;
    return spec;
}

Signal synth_multisine(const MultiSineSpec& spec) {
    validate(spec);
    return Signal(sum_components(spec.components, spec.fs, spec.n_samples), spec.fs);
}

Signal add_noise(const Signal& signal, const NoiseSpec& noise) {
    if (!(noise.sd >= 0.0) || !std::isfinite(noise.sd) || !std::isfinite(noise.mean))
        throw InvalidInput("add_noise: sd must be finite and >= 0");
    std::vector<double> out(signal.samples().begin(), signal.samples().end());
    if (noise.sd == 0.0 && noise.mean == 0.0) return Signal(std::move(out), signal.fs());

    // Box-Muller: each pair of uniforms gives two independent standard normals.
    std::mt19937_64 engine(noise.seed);
    for (std::size_t i = 0; i < out.size(); i += 2) {
        const double radius = std::sqrt(-2.0 * std::log(unit_open_closed(engine)));
        const double angle = 2.0 * std::numbers::pi * unit_open_closed(engine);
        out[i] += noise.mean + noise.sd * radius * std::cos(angle);
        if (i + 1 < out.size()) out[i + 1] += noise.mean + noise.sd * radius * std::sin(angle);
    }
    return Signal(std::move(out), signal.fs());
}

Signal theoretical_component(const MultiSineSpec& spec, const BandSpec& band) {
    validate(spec);
    const double tol = 1e-9 * spec.fs;
    std::vector<SineComponent> picked;
    for (const auto& c : spec.components)
        if (selected(c, band, tol)) picked.push_back(c);
    return Signal(sum_components(picked, spec.fs, spec.n_samples), spec.fs);
}

}  // namespace fftfilt
