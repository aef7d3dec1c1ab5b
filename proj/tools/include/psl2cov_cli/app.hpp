#ifndef PSL2COV_CLI_APP_HPP_
#define PSL2COV_CLI_APP_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "psl2cov/psl2_tables.hpp"
#include "psl2cov/tensor_covering.hpp"
#include "psl2cov_cli/verify.hpp"

namespace psl2cov::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitExponentCap = 3,
  kExitVerificationFailed = 4,
};

struct SweepRow {
  std::uint64_t q = 0;
  ParityCase parity = ParityCase::Even;
  std::optional<int> covering_number;
  std::optional<int> theorem_expected;
  std::optional<bool> matches;
  std::string error;  // empty on success
  bool exponent_cap = false;
};

inline constexpr const char* kSweepHeader = "q,case,covering_number,theorem_expected,match";

/// One row per prime power in [q_min, q_max], ordered by q. on_row is called in q order
/// as soon as each row and all rows before it are ready.
std::vector<SweepRow> sweep(std::uint64_t q_min, std::uint64_t q_max, int tmax, unsigned jobs,
                            const std::function<void(const SweepRow&)>& on_row = {});

std::string csv_line(const SweepRow& row);
json to_json(const SweepRow& row);
SweepRow sweep_row_from_json(const json& j);

std::string render_table(const CharacterTable& table);
std::string render_decomposition(const DecompositionPayload& d);
std::string render_covering(const CoveringReport& report, const GroupParams& params);
std::string render_verification(const VerificationReport& report);

/// Entry point of the psl2cov executable; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psl2cov::cli

#endif  // PSL2COV_CLI_APP_HPP_
