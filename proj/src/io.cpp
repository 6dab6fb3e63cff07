#include "fftfilt/io.hpp"

#include "fftfilt/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace fftfilt {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            return fields;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path.string());
    return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path.string());
    return out;
}

}  // namespace

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string_view trim(std::string_view s) {
    const auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && space(s.front())) s.remove_prefix(1);
    while (!s.empty() && space(s.back())) s.remove_suffix(1);
    return s;
}

std::optional<double> try_parse_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

double parse_double(std::string_view s, std::size_t line) {
    if (auto v = try_parse_double(s)) return *v;
    throw FormatError("not a finite number: \"" + std::string(trim(s)) + "\"", line);
}

double infer_sampling_rate(std::span<const double> times) {
    if (times.size() < 2) throw FormatError("need at least two samples to infer the sampling rate", 0);
    const double step = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
    if (!(step > 0.0)) throw FormatError("time column must be strictly increasing", 0);
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (std::abs((times[i] - times[i - 1]) - step) > 1e-9 * step)
            throw FormatError("non-uniform time step", i + 2);  // +1 header, +1 for 1-based
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", 1.0 / step);
    return std::strtod(buf, nullptr);
}

void write_signal_csv(std::ostream& out, const Signal& signal) {
    out << "t,y\n";
    for (std::size_t n = 0; n < signal.size(); ++n)
        out << format_double(static_cast<double>(n) / signal.fs()) << ',' << format_double(signal[n]) << '\n';
}

Signal read_signal_csv(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<double> times;
    std::vector<double> values;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty()) continue;
        if (!header_seen) {
            const auto fields = split_fields(line);
            if (fields.size() != 2 || fields[0] != "t" || fields[1] != "y")
                throw FormatError("expected header \"t,y\"", line_no);
            header_seen = true;
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 2) throw FormatError("expected 2 fields", line_no);
        times.push_back(parse_double(fields[0], line_no));
        values.push_back(parse_double(fields[1], line_no));
    }
    if (!header_seen) throw FormatError("empty signal file", 0);
    return Signal(std::move(values), infer_sampling_rate(times));
}

void save_signal(const std::filesystem::path& path, const Signal& signal) {
    auto out = open_for_write(path);
    write_signal_csv(out, signal);
}

Signal load_signal(const std::filesystem::path& path) {
    auto in = open_for_read(path);
    return read_signal_csv(in);
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum) {
    const auto grid = frequency_grid(spectrum.size(), spectrum.fs());
    out << "k,freq_hz,re,im,mag\n";
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        const auto& v = spectrum[k];
        out << k << ',' << format_double(grid.freqs[k]) << ',' << format_double(v.real()) << ','
            << format_double(v.imag()) << ',' << format_double(std::abs(v)) << '\n';
    }
}

Spectrum read_spectrum_csv(std::istream& in, double fs) {
    std::string raw;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<complex> bins;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (!header_seen) {
            if (line != "k,freq_hz,re,im,mag") throw FormatError("expected header \"k,freq_hz,re,im,mag\"", line_no);
            header_seen = true;
            continue;
        }
        if (fields.size() != 5) throw FormatError("expected 5 fields", line_no);
        if (parse_double(fields[0], line_no) != static_cast<double>(bins.size()))
            throw FormatError("bin indices must be contiguous from 0", line_no);
        bins.emplace_back(parse_double(fields[2], line_no), parse_double(fields[3], line_no));
    }
    if (bins.empty()) throw FormatError("empty spectrum file", 0);
    return Spectrum(std::move(bins), fs);
}

void save_spectrum(const std::filesystem::path& path, const Spectrum& spectrum) {
    auto out = open_for_write(path);
    write_spectrum_csv(out, spectrum);
}

std::string report_to_json(const ComparisonReport& report) {
    nlohmann::ordered_json j;
    j["band"] = {report.band.lo, report.band.hi};
    j["seed"] = report.seed;
    j["n"] = report.n_samples;
    j["rmse"]["fft"] = report.rmse_fft;
    j["rmse"]["fir"] = report.rmse_fir ? nlohmann::ordered_json(*report.rmse_fir) : nlohmann::ordered_json(nullptr);
    j["rmse"]["unfiltered"] = report.rmse_unfiltered;
    return j.dump() + "\n";
}

std::string report_to_csv(const ComparisonReport& report) {
    std::ostringstream out;
    out << "band_lo,band_hi,seed,n,rmse_fft,rmse_fir,rmse_unfiltered\n"
        << format_double(report.band.lo) << ',' << format_double(report.band.hi) << ',' << report.seed << ','
        << report.n_samples << ',' << format_double(report.rmse_fft) << ','
        << (report.rmse_fir ? format_double(*report.rmse_fir) : std::string{}) << ','
        << format_double(report.rmse_unfiltered) << '\n';
    return out.str();
}

}  // namespace fftfilt
