#include "fftfilt/cli.hpp"

#include "fftfilt/error.hpp"
#include "fftfilt/fir.hpp"
#include "fftfilt/ideal_filter.hpp"
#include "fftfilt/io.hpp"
#include "fftfilt/metrics.hpp"
#include "fftfilt/synth.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include "CLI11.hpp"

namespace fftfilt::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::vector<double> parse_list(const std::string& text, const char* flag) {
    std::vector<double> values;
    if (trim(text).empty()) return values;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto item = std::string_view(text).substr(start, comma == std::string::npos ? comma : comma - start);
        const auto v = try_parse_double(item);
        if (!v) throw UsageError(std::string(flag) + ": not a number: \"" + std::string(trim(item)) + "\"");
        values.push_back(*v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

Interval parse_band(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--band expects lo:hi, got \"" + text + "\"");
    const auto lo = try_parse_double(std::string_view(text).substr(0, colon));
    const auto hi = try_parse_double(std::string_view(text).substr(colon + 1));
    if (!lo || !hi) throw UsageError("--band expects lo:hi, got \"" + text + "\"");
    return {*lo, *hi};
}

std::size_t samples_for(double fs, double duration) {
    const double n = std::round(fs * duration);
    if (!std::isfinite(n) || n < 2.0) throw UsageError("signal needs at least 2 samples (fs * duration >= 2)");
    return static_cast<std::size_t>(n);
}

// "dir/name.ext" -> "dir/name.<tag>.ext"
fs::path sibling(const fs::path& path, const std::string& tag) {
    return path.parent_path() / (path.stem().string() + "." + tag + path.extension().string());
}

struct SynthArgs {
    std::string freqs;
    std::string amps;
    double fs = 0.0;
    double duration = 1.0;
    std::size_t n = 0;
    double noise_sd = 0.0;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_synth(const SynthArgs& a, std::ostream& out) {
    const auto freqs = parse_list(a.freqs, "--freqs");
    auto amps = parse_list(a.amps, "--amps");
    if (a.amps.empty()) amps.assign(freqs.size(), 1.0);
    if (amps.size() != freqs.size())
        throw UsageError("--freqs and --amps have different lengths (" + std::to_string(freqs.size()) + " vs " +
                         std::to_string(amps.size()) + ")");

    MultiSineSpec spec;
    spec.fs = a.fs;
    spec.n_samples = a.n != 0 ? a.n : samples_for(a.fs, a.duration);
    if (spec.n_samples < 2) throw UsageError("--n must be >= 2");
    for (std::size_t j = 0; j < freqs.size(); ++j) spec.components.push_back({freqs[j], amps[j], 0.0});

    const auto signal = add_noise(synth_multisine(spec), NoiseSpec{0.0, a.noise_sd, a.seed});
    save_signal(a.out, signal);

    // The file must reproduce the requested rate when read back.
    const double inferred = load_signal(a.out).fs();
    if (std::abs(inferred - a.fs) > 1e-9 * a.fs)
        throw UsageError("written time column implies fs=" + format_double(inferred) + " Hz, requested " +
                         format_double(a.fs));

    out << "N=" << signal.size() << " resolution=" << format_double(a.fs / static_cast<double>(signal.size()))
        << " Hz\n";
    return kSuccess;
}

struct FilterArgs {
    std::string in;
    std::string band;
    std::optional<double> point;
    bool shifted = true;
    bool preserve_dc = false;
    std::string out;
    std::string point_out;
    std::string spectrum_out;
};

int cmd_filter(const FilterArgs& a, std::ostream& out) {
    BandSpec spec;
    if (!a.band.empty()) spec.interval = parse_band(a.band);
    spec.point_freq = a.point;
    if (!spec.interval && !spec.point_freq)
        throw UsageError("At least one of interval or punctual frequencies parameters must be provided");

    const auto input = load_signal(a.in);
    FilterOptions options;
    options.shifted_symmetry = a.shifted;
    options.preserve_dc = a.preserve_dc;
    const auto result = filter_if(input, spec, options);

    const fs::path out_path = a.out;
    const Spectrum* primary = nullptr;
    if (result.filtered_signal) {
        save_signal(out_path, *result.filtered_signal);
        primary = &*result.filtered_spectrum;
        out << "band-pass: wrote " << out_path.string() << '\n';
    }
    if (result.point_signal) {
        const fs::path p = !result.filtered_signal ? out_path : !a.point_out.empty() ? fs::path(a.point_out)
                                                                                    : sibling(out_path, "point");
        save_signal(p, *result.point_signal);
        if (!primary) primary = &*result.point_spectrum;
        out << "point-pass: wrote " << p.string() << '\n';
    }
    if (!a.spectrum_out.empty()) {
        const fs::path post = a.spectrum_out;
        save_spectrum(sibling(post, "pre"), forward_transform(input));
        save_spectrum(post, *primary);
        out << "spectra: wrote " << sibling(post, "pre").string() << " and " << post.string() << '\n';
    }
    return kSuccess;
}

struct CompareArgs {
    std::string band;
    double fs = 1770.0;
    double duration = 1.0;
    std::uint64_t seed = 42;
    double noise_sd = 1.0;
    std::string fir_taps;
    std::size_t fir_design = 201;
    std::string window = "hamming";
    bool no_delay_comp = false;
    std::string out;
    std::string csv_out;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
    ComparisonSetup setup;
    setup.band = parse_band(a.band);
    setup.signal.fs = a.fs;
    setup.signal.n_samples = samples_for(a.fs, a.duration);
    setup.noise = NoiseSpec{0.0, a.noise_sd, a.seed};
    setup.compensate_delay = !a.no_delay_comp;

    if (!a.fir_taps.empty()) {
        try {
            setup.fir = import_coefficients(a.fir_taps);
        } catch (const Error& e) {
            throw UsageError("--fir-taps " + a.fir_taps + ": " + e.what());
        }
    } else {
        static const std::map<std::string, Window> windows{
            {"rectangular", Window::rectangular}, {"hamming", Window::hamming}, {"blackman", Window::blackman}};
        setup.fir = design_windowed_sinc_bandpass({setup.band.lo, setup.band.hi, a.fir_design, windows.at(a.window)},
                                                  a.fs);
    }

    const auto report = run_comparison(setup);
    if (!a.out.empty()) {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) throw UsageError("cannot write " + a.out);
        f << report_to_json(report);
    }
    if (!a.csv_out.empty()) {
        std::ofstream f(a.csv_out, std::ios::binary);
        if (!f) throw UsageError("cannot write " + a.csv_out);
        f << report_to_csv(report);
    }

    std::vector<std::pair<double, std::string>> ranked{{report.rmse_fft, "fft"},
                                                       {report.rmse_unfiltered, "unfiltered"}};
    if (report.rmse_fir) ranked.emplace_back(*report.rmse_fir, "fir");
    std::stable_sort(ranked.begin(), ranked.end());

    out << "rmse fft=" << format_double(report.rmse_fft);
    if (report.rmse_fir) out << " fir=" << format_double(*report.rmse_fir);
    out << " unfiltered=" << format_double(report.rmse_unfiltered) << '\n' << "ordering:";
    for (std::size_t i = 0; i < ranked.size(); ++i) out << (i ? " < " : " ") << ranked[i].second;
    out << '\n';
    return kSuccess;
}

int cmd_spectrum(const std::string& in, const std::string& out_path, std::ostream& out) {
    const auto spectrum = forward_transform(load_signal(in));
    save_spectrum(out_path, spectrum);
    out << "N=" << spectrum.size() << " wrote " << out_path << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Brick-wall FFT filtering with conjugate-pair bin zeroing", "fftfilt"};
    app.require_subcommand(1);

    SynthArgs synth;
    auto* synth_cmd = app.add_subcommand("synth", "Write a sum of sines plus seeded Gaussian noise");
    synth_cmd->add_option("--freqs", synth.freqs, "Comma-separated component frequencies (Hz)");
    synth_cmd->add_option("--amps", synth.amps, "Comma-separated amplitudes (default 1 each)");
    synth_cmd->add_option("--fs", synth.fs, "Sampling rate (Hz)")->required()->check(CLI::PositiveNumber);
    auto* duration = synth_cmd->add_option("--duration", synth.duration, "Length in seconds (default 1)");
    synth_cmd->add_option("--n", synth.n, "Number of samples")->excludes(duration);
    synth_cmd->add_option("--noise-sd", synth.noise_sd, "Noise standard deviation")->check(CLI::NonNegativeNumber);
    synth_cmd->add_option("--seed", synth.seed, "Noise seed");
    synth_cmd->add_option("--out", synth.out, "Output signal CSV")->required();

    FilterArgs filter;
    auto* filter_cmd = app.add_subcommand("filter", "Band-pass and/or point-pass a signal file");
    filter_cmd->add_option("--in", filter.in, "Input signal CSV")->required();
    filter_cmd->add_option("--band", filter.band, "Passband lo:hi in Hz");
    filter_cmd->add_option("--point", filter.point, "Single frequency to keep (Hz)");
    filter_cmd->add_flag("--shifted,!--no-shifted", filter.shifted, "Zero bins in conjugate pairs (default on)");
    filter_cmd->add_flag("--preserve-dc", filter.preserve_dc, "Keep the mean (bin 0)");
    filter_cmd->add_option("--out", filter.out, "Output signal CSV")->required();
    filter_cmd->add_option("--point-out", filter.point_out, "Point-pass output when --band is also given");
    filter_cmd->add_option("--spectrum-out", filter.spectrum_out,
                           "Filtered spectrum CSV; the input spectrum goes to <name>.pre<ext>");

    CompareArgs compare;
    auto* compare_cmd = app.add_subcommand("compare", "RMSE of FFT filter, FIR baseline and raw signal");
    compare_cmd->add_option("--band", compare.band, "Passband lo:hi in Hz")->required();
    compare_cmd->add_option("--fs", compare.fs, "Sampling rate (Hz)")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--duration", compare.duration, "Length in seconds");
    compare_cmd->add_option("--seed", compare.seed, "Noise seed");
    compare_cmd->add_option("--noise-sd", compare.noise_sd, "Noise standard deviation")
        ->check(CLI::NonNegativeNumber);
    auto* taps = compare_cmd->add_option("--fir-taps", compare.fir_taps, "FIR coefficient file");
    compare_cmd->add_option("--fir-design", compare.fir_design, "Windowed-sinc tap count (odd, default 201)")
        ->excludes(taps);
    compare_cmd->add_option("--window", compare.window, "Design window")
        ->check(CLI::IsMember({"rectangular", "hamming", "blackman"}));
    compare_cmd->add_flag("--no-delay-comp", compare.no_delay_comp, "Do not advance FIR output by its group delay");
    compare_cmd->add_option("--out", compare.out, "JSON report");
    compare_cmd->add_option("--csv-out", compare.csv_out, "Single-row CSV report");

    std::string spectrum_in, spectrum_out;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Write the full DFT of a signal file");
    spectrum_cmd->add_option("--in", spectrum_in, "Input signal CSV")->required();
    spectrum_cmd->add_option("--out", spectrum_out, "Output spectrum CSV")->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*synth_cmd) return cmd_synth(synth, out);
        if (*filter_cmd) return cmd_filter(filter, out);
        if (*compare_cmd) return cmd_compare(compare, out);
        return cmd_spectrum(spectrum_in, spectrum_out, out);
    } catch (const EmptyBand& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const OffGridFrequency& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace fftfilt::cli
