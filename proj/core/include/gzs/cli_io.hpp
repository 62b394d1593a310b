#pragma once

// Command dispatch and document output for the gzs tool.

#include "gzs/roots_weyl.hpp"
#include "gzs/schubert.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace gzs {

enum class Command {
  Vertices,
  Face,
  Chevalley,
  ChevalleyClassical,
  Admissible,
  Verify,
  LatticeCount,
  OracleFaces,
};

enum class Format { Text, Json };

// Throws InvalidArgument on unknown names.
Command parse_command(std::string_view name);
std::string command_name(Command c);
Format parse_format(std::string_view name);

struct RunConfig {
  Command command = Command::Vertices;
  int n = 0;  // 0: taken from lambda
  AmbientWeight lambda;
  std::optional<Permutation> vertex;
  std::optional<Permutation> borel;  // default: B+
  Format format = Format::Text;
  unsigned threads = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  // the document on success, an error line otherwise
};

// Never throws for library errors; they become exit code 2.
RunResult run(const RunConfig& config);

// Structured documents. Cell lists, expansions and mismatches share one schema:
// {"n", "lambda", "pairs", "cells": [{"sigma", "borel", "class", "dim",
// "admissible", "chevalley": [{"class", "coefficient", "k"}]}], "mismatches":
// [{"check", "sigma", "borel", "detail"}], "checks": {"distance", "transposition"}}.
std::string to_json(const VerificationReport& report);
// Throws InvalidArgument on malformed documents.
VerificationReport report_from_json(std::string_view document);

}  // namespace gzs
