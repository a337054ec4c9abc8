#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace imag::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kDomainError = 3,
  kIoError = 4,
};

/// 12 significant digits with trailing zeros kept ("4.00000000000");
/// an exact zero prints as "0".
std::string format_scalar(double v);

/// 12 significant digits, shortest form ("%.12g"); used for CSV fields.
std::string format_csv(double v);

struct CsvFile {
  std::string name;
  std::string content;
};

/// CSV data behind the figures: "1a" and "1b" give an (alpha, beta) surface
/// for mh and me on a fixed qubit; "2" gives the Werner k-series.
/// Throws ParseError for an unknown figure id.
std::vector<CsvFile> figure_data(const std::string& which);

/// Full command-line entry point; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace imag::cli
