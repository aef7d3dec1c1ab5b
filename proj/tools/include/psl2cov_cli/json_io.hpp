#ifndef PSL2COV_CLI_JSON_IO_HPP_
#define PSL2COV_CLI_JSON_IO_HPP_

#include <string>

#include "json.hpp"

#include "psl2cov/cyclotomic.hpp"
#include "psl2cov/psl2_tables.hpp"
#include "psl2cov/tensor_covering.hpp"

namespace psl2cov::cli {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Integers that fit in int64 are emitted as numbers, larger ones as decimal strings.
json big_to_json(const BigInt& v);
BigInt big_from_json(const json& j);

/// {"conductor": n, "terms": [[exponent, coefficient], ...], "approx": [re, im]}
json to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const json& j);

json to_json(const CharacterTable& table);
CharacterTable table_from_json(const json& j);

struct DecompositionPayload {
  std::uint64_t q = 0;
  CharacterLabel base;
  int power = 1;
  Decomposition decomposition;
  BigInt dimension;
};

json to_json(const DecompositionPayload& d);
DecompositionPayload decomposition_from_json(const json& j);

json to_json(const CoveringReport& report, const GroupParams& params, int tmax);
CoveringReport covering_from_json(const json& j);

ClassKind class_kind_from_name(const std::string& name);

/// {"schema_version", "command", ["generated_at"], "payload"}
json make_document(const std::string& command, json payload, bool reproducible);

}  // namespace psl2cov::cli

#endif  // PSL2COV_CLI_JSON_IO_HPP_
