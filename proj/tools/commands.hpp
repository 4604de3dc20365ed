#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "germcalc/invariants.hpp"
#include "germfile.hpp"

namespace germcalc::app {

inline constexpr const char* kSchema = "germcalc.report/1";
inline constexpr const char* kEngineVersion = "0.1.0";

/// Exit statuses shared by all subcommands.
enum ExitCode : int { kOk = 0, kFailure = 1, kInputError = 2, kResourceCap = 3 };

/// A finished subcommand: the JSON document, a plain-text rendering and the
/// exit status. Timing lives under "timing" only.
struct Outcome {
  nlohmann::ordered_json doc;
  std::string text;
  int exit = kOk;
};

/// Exact integers stay numbers up to 2^53; larger ones become strings.
nlohmann::ordered_json exactNumber(const ExtendedNat& v);
nlohmann::ordered_json exactNumber(std::optional<std::int64_t> v);

/// Reads GERMCALC_DEGREE_CAP; throws std::invalid_argument on a bad value.
std::uint32_t degreeCapFromEnvironment();

Outcome computeCommand(const Germfile& g, const std::vector<std::string>& names, Method method, std::uint64_t seed);
Outcome verifyCommand(const Germfile& g, const std::vector<std::string>& identities, std::uint64_t seed);
/// Several germfiles verified independently on up to `jobs` threads; the
/// verdict is the conjunction and the report keeps input order.
Outcome verifyCorpus(const std::vector<std::string>& paths, const std::vector<std::string>& identities,
                     std::optional<std::uint64_t> seed, unsigned jobs, std::uint32_t degreeCap);
Outcome conjectureCommand(std::size_t n, std::size_t k, std::uint64_t trials, std::uint32_t maxdeg,
                          std::uint64_t seed, const Field& field, ScanStratum stratum);
/// Also writes the document to `outPath`.
Outcome lcCommand(const Germfile& g, const std::string& outPath, std::uint64_t seed);
Outcome oracleCommand(const Germfile& g, std::uint32_t truncation);

/// Maps an exception escaping a command to a document and exit status.
Outcome errorOutcome(const std::string& command, const std::exception& e);

}  // namespace germcalc::app
