#pragma once

#include <atomic>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wk/algo.hpp"
#include "wk/bench.hpp"
#include "wk/gen.hpp"
#include "wk/io.hpp"
#include "wk/reduce.hpp"

namespace wk::cli {

enum Exit { kOk = 0, kParseError = 1, kInvalidSpec = 2, kOracleLimit = 3, kCheckFailed = 4, kInterrupted = 130 };

enum class Format { Json, Csv };

struct RunSpec {
  std::string input_path;
  std::string output_path;  // empty: stdout
  std::string result_path;  // verify: a prior solve output
  std::optional<double> eps;  // overrides the file header
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::Auto;
  bool oracle = false;
  Format format = Format::Json;
  OracleLimits limits;
};

// What verify reads back from a solve output.
struct ResultFile {
  int digits = io::kDefaultDigits;
  double eps = 0;
  Point answer;
  PointSet set;
};

// Parses a solve output (JSON or CSV, detected from the content). Throws
// io::ParseError on malformed input or unknown fields.
ResultFile read_result(std::istream& in);

int cmd_solve(const RunSpec& spec, std::ostream& err);
int cmd_verify(const RunSpec& spec, std::ostream& out, std::ostream& err);
int cmd_gen(const GeneratorSpec& spec, const std::string& output_path, std::ostream& err);
int cmd_bench(const BenchSpec& spec, const std::string& output_path, std::ostream& err,
              const std::atomic<bool>* stop = nullptr);

// Full argv front end.
int run(int argc, char** argv);

}  // namespace wk::cli
