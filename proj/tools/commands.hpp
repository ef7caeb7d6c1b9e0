#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "erdos/construct.hpp"
#include "erdos/core.hpp"
#include "erdos/oracle.hpp"

namespace erdos::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kInputError = 2,
  kBoundViolated = 3,
  kResourceLimit = 4,
  kTrialsExhausted = 5,
};

/// A report document plus the exit code the command should terminate with.
struct CommandResult {
  int exit_code = kOk;
  nlohmann::json report;
};

inline constexpr const char* kReportFormat = "erdos-report";
inline constexpr int kReportVersion = 1;

// ---- bounds ----

struct BoundsRequest {
  std::string subject;  // ramsey | multicolor | hyper | discrepancy
  std::uint64_t n = 0;
  std::uint64_t k = 2;
  std::uint64_t l = 0;
  std::uint64_t s = 0;
  std::optional<std::uint64_t> r;  // ramsey: vertex count for the union-bound verdict
  std::optional<std::uint64_t> m;  // hyper: ground-set size for the union-bound verdict
  std::vector<std::uint64_t> check_a;  // discrepancy: extra values of a to test
};

CommandResult run_bounds(const BoundsRequest& request);

// ---- oracle ----

CommandResult oracle_count_bad(std::size_t n, const std::vector<std::size_t>& set_one_based, std::int64_t a,
                               const std::string& mode, const EnumerationLimits& limits);
CommandResult oracle_count_exceeding(const SetSystem& system, std::int64_t a, const EnumerationLimits& limits);
CommandResult oracle_exact_discrepancy(const SetSystem& system, const EnumerationLimits& limits);
CommandResult oracle_count_ramsey(std::size_t r, std::size_t n, const EnumerationLimits& limits);

// ---- construct ----

struct ConstructRequest {
  std::string kind;  // ramsey | multicolor | hyper | coloring
  std::size_t n = 0;
  std::uint32_t k = 2;
  std::size_t l = 0;
  std::optional<std::size_t> r;
  std::optional<std::size_t> m;
  std::optional<std::int64_t> a;
  std::optional<SetSystem> system;  // coloring
  TrialOptions trials;
  std::size_t vertex_cap = kDefaultVertexCap;
  std::uint64_t subset_cap = kDefaultSubsetCap;
  std::optional<std::filesystem::path> out;
};

CommandResult run_construct(const ConstructRequest& request);

// ---- verify ----

struct VerifyRequest {
  std::string kind;  // ramsey | multicolor | hyper | discrepancy
  std::filesystem::path certificate;
  std::size_t n = 0;
  std::int64_t a = 0;
  std::optional<std::filesystem::path> system;  // discrepancy
};

CommandResult run_verify(const VerifyRequest& request);

/// Full command-line entry point. Reports go to `out` as JSON, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace erdos::cli
