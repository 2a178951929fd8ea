#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bincayley/particlebox.hpp"
#include "bincayley/spectra.hpp"

namespace bincayley::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

// Parses argv (without the program name), runs the subcommand and writes the
// report to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Tabular renderings and their readers.
std::string spectrum_csv(const spectra::SpectrumReport& r);
spectra::SpectrumReport parse_spectrum_csv(std::string_view text);
std::string family_csv(const particlebox::MarginalFamily& f);
particlebox::MarginalFamily parse_family_csv(const particlebox::SystemSpec& s, std::string_view text);

}  // namespace bincayley::cli
