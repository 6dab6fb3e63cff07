#pragma once

// Text formats shared by the CLI and the tests.
//
//   signal file     CSV, header "t,y", t = n/fs in seconds
//   spectrum file   CSV, header "k,freq_hz,re,im,mag", k = 0..N-1
//   report          single-row CSV or JSON object
//
// Numbers are written with 17 significant digits so doubles round-trip exactly.
// Lines end in LF.

#include "fftfilt/metrics.hpp"
#include "fftfilt/signal.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace fftfilt {

std::string format_double(double value);
std::string_view trim(std::string_view s);
std::optional<double> try_parse_double(std::string_view s);
/// Throws FormatError tagged with `line` when s is not a complete finite number.
double parse_double(std::string_view s, std::size_t line);

/// Sampling rate implied by a time column: 1/step, rounded to 12 significant
/// digits. Throws FormatError when the step is not uniform to 1e-9 relative.
double infer_sampling_rate(std::span<const double> times);

void write_signal_csv(std::ostream& out, const Signal& signal);
Signal read_signal_csv(std::istream& in);
void save_signal(const std::filesystem::path& path, const Signal& signal);
Signal load_signal(const std::filesystem::path& path);

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum);
Spectrum read_spectrum_csv(std::istream& in, double fs);
void save_spectrum(const std::filesystem::path& path, const Spectrum& spectrum);

/// {"band":[lo,hi],"seed":s,"n":N,"rmse":{"fft":x,"fir":y|null,"unfiltered":z}}
std::string report_to_json(const ComparisonReport& report);
/// Header "band_lo,band_hi,seed,n,rmse_fft,rmse_fir,rmse_unfiltered" and one row; empty rmse_fir when absent.
std::string report_to_csv(const ComparisonReport& report);

}  // namespace fftfilt
