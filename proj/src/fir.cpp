#include "fftfilt/fir.hpp"

#include "fftfilt/error.hpp"
#include "fftfilt/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <string>

namespace fftfilt {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double x) {
    if (x == 0.0) return 1.0;
    return std::sin(kPi * x) / (kPi * x);
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

}  // namespace

std::vector<double> make_window(Window window, std::size_t length) {
    std::vector<double> w(length, 1.0);
    if (length <= 1 || window == Window::rectangular) return w;
    const double denom = static_cast<double>(length - 1);
    for (std::size_t i = 0; i < length; ++i) {
        const double x = 2.0 * kPi * static_cast<double>(i) / denom;
        switch (window) {
            case Window::hamming: w[i] = 0.54 - 0.46 * std::cos(x); break;
            case Window::blackman: w[i] = 0.42 - 0.5 * std::cos(x) + 0.08 * std::cos(2.0 * x); break;
            case Window::rectangular: break;
        }
    }
    return w;
}

FirFilter design_windowed_sinc_bandpass(const FirDesignSpec& spec, double fs) {
    if (!std::isfinite(fs) || fs <= 0.0) throw InvalidInput("fir design: fs must be finite and > 0");
    if (spec.numtaps == 0 || spec.numtaps % 2 == 0)
        throw InvalidInput("fir design: numtaps must be odd, got " + std::to_string(spec.numtaps));
    if (!(spec.f_lo > 0.0 && spec.f_lo < spec.f_hi && spec.f_hi < fs / 2.0))
        throw InvalidInput("fir design: need 0 < f_lo < f_hi < fs/2");

    const std::size_t taps = spec.numtaps;
    const auto w = make_window(spec.window, taps);
    const double centre = static_cast<double>(taps - 1) / 2.0;
    const double lo = spec.f_lo / fs;
    const double hi = spec.f_hi / fs;

    FirFilter filter{std::vector<double>(taps), fs};
    // Mirror the lower half so the taps are bit-exactly symmetric.
    for (std::size_t i = 0; i <= taps / 2; ++i) {
        const double m = static_cast<double>(i) - centre;
        const double h = w[i] * (2.0 * hi * sinc(2.0 * hi * m) - 2.0 * lo * sinc(2.0 * lo * m));
        filter.coefficients[i] = h;
        filter.coefficients[taps - 1 - i] = h;
    }
    return filter;
}

complex frequency_response(const FirFilter& filter, double freq, double fs) {
    complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < filter.size(); ++i)
        acc += filter.coefficients[i] * std::polar(1.0, -2.0 * kPi * freq * static_cast<double>(i) / fs);
    return acc;
}

FirFilter read_coefficients(std::istream& in) {
    FirFilter filter;
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::size_t> column;  // set when the file is a CSV with a "b" header
    bool first = true;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.find(',') != std::string_view::npos || !try_parse_double(line)) {
                const auto header = split_commas(line);
                for (std::size_t c = 0; c < header.size(); ++c)
                    if (header[c] == "b") column = c;
                if (!column) throw FormatError("expected a tap value or a CSV header with column \"b\"", line_no);
                continue;
            }
        }
        if (column) {
            const auto fields = split_commas(line);
            if (*column >= fields.size()) throw FormatError("missing column \"b\"", line_no);
            filter.coefficients.push_back(parse_double(fields[*column], line_no));
        } else {
            filter.coefficients.push_back(parse_double(line, line_no));
        }
    }
    if (filter.coefficients.empty()) throw InvalidInput("coefficient file contains no taps");
    return filter;
}

FirFilter import_coefficients(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open coefficient file " + path.string());
    return read_coefficients(in);
}

void write_coefficients(std::ostream& out, const FirFilter& filter) {
    for (double h : filter.coefficients) out << format_double(h) << '\n';
}

void export_coefficients(const std::filesystem::path& path, const FirFilter& filter) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write coefficient file " + path.string());
    write_coefficients(out, filter);
}

Signal apply_fir(const FirFilter& filter, const Signal& signal, bool compensate_delay) {
    const std::size_t taps = filter.size();
    const std::size_t n = signal.size();
    if (taps == 0) throw InvalidInput("apply_fir: filter has no taps");
    if (taps > n)
        throw InvalidInput("apply_fir: filter length " + std::to_string(taps) + " exceeds signal length " +
                           std::to_string(n));

    const std::size_t shift = compensate_delay ? filter.group_delay() : 0;
    const auto x = signal.samples();
    const auto& h = filter.coefficients;
    std::vector<double> out(n, 0.0);
    for (std::size_t m = 0; m < n; ++m) {
        // y[m + shift] = sum_i h[i] x[m + shift - i], x zero outside [0, n)
        const std::size_t t = m + shift;
        const std::size_t i_min = t >= n ? t - n + 1 : 0;
        const std::size_t i_max = std::min(taps - 1, t);
        double acc = 0.0;
        for (std::size_t i = i_min; i <= i_max; ++i) acc += h[i] * x[t - i];
        out[m] = acc;
    }
    return Signal(std::move(out), signal.fs());
}

}  // namespace fftfilt
