#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "askey/identities.hpp"
#include "askey/numerics.hpp"

namespace askey {

inline constexpr std::string_view kToolVersion = "1.0.0";

const std::vector<std::string_view>& suite_names();
bool is_suite(std::string_view name);

/// Resolved grid for a suite run.
struct SuiteGrid {
  ParamGrid grid;
  std::size_t mmax = 6;  // cap on m (and on n where a grid has one index)
};

struct SuiteEntry {
  CheckReport report;
  std::optional<LimitReport> limit;
};

struct SuiteTask {
  std::string id;
  ParamList params;
  std::function<SuiteEntry(const CheckOptions&)> run;
};

/// Every task of a suite ("all" is the union). Throws std::invalid_argument
/// for an unknown suite.
std::vector<SuiteTask> suite_tasks(std::string_view suite, const SuiteGrid& grid);

/// Runs tasks on up to `jobs` worker threads. Exceptions become
/// Verdict::error entries. Results are sorted by id, then params.
std::vector<SuiteEntry> run_tasks(const std::vector<SuiteTask>& tasks, std::size_t jobs,
                                  const CheckOptions& opt = {});

struct Summary {
  std::size_t pass = 0, fail = 0, error = 0;
};
Summary summarize(const std::vector<SuiteEntry>& entries);
/// 0 if everything passed, 1 otherwise.
int exit_code(const Summary& s);

enum class Format { json, text, csv };

struct ReportDocument {
  std::string suite;
  SuiteGrid grid;
  std::vector<SuiteEntry> checks;
  Summary summary;
  long long wall_time_ms = 0;

  /// Byte-stable apart from the wallTimeMs field.
  std::string render(Format f) const;
};

}  // namespace askey
