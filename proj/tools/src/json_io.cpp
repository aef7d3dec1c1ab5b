#include "psl2cov_cli/json_io.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "psl2cov/errors.hpp"

namespace psl2cov::cli {

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

BigInt big_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

json to_json(const Cyclotomic& x) {
  json terms = json::array();
  for (const auto& t : x.terms()) terms.push_back({t.exponent, big_to_json(t.coefficient)});
  const auto z = x.approx();
  return {{"conductor", x.conductor()}, {"terms", std::move(terms)}, {"approx", {z.real(), z.imag()}}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
  std::vector<Cyclotomic::Term> terms;
  for (const auto& t : j.at("terms")) {
    terms.push_back({t.at(0).get<std::uint64_t>(), big_from_json(t.at(1))});
  }
  return Cyclotomic::from_terms(j.at("conductor").get<std::uint64_t>(), std::move(terms));
}

ClassKind class_kind_from_name(const std::string& name) {
  for (auto kind : {ClassKind::Identity, ClassKind::UnipN, ClassKind::UnipNPrime, ClassKind::Split,
                    ClassKind::SplitHalf, ClassKind::NonSplit, ClassKind::NonSplitHalf}) {
    if (kind_name(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown class kind '" + name + "'");
}

json to_json(const CharacterTable& table) {
  const auto& params = table.params();
  json classes = json::array();
  for (const auto& c : table.classes()) {
    classes.push_back({{"label", c.label.to_string()},
                       {"kind", kind_name(c.label.kind)},
                       {"param", c.label.param},
                       {"size", c.size}});
  }
  json characters = json::array();
  for (const auto& chi : table.characters()) {
    json values = json::array();
    for (const auto& v : chi.values) values.push_back(to_json(v));
    characters.push_back({{"label", chi.label.to_string()}, {"degree", chi.degree}, {"values", std::move(values)}});
  }
  return {{"q", params.q},
          {"p", params.p},
          {"m", params.m},
          {"case", to_string(params.parity)},
          {"order", params.order},
          {"conductor", params.conductor},
          {"classes", std::move(classes)},
          {"characters", std::move(characters)}};
}

CharacterTable table_from_json(const json& j) {
  const auto params = group_params(j.at("q").get<std::uint64_t>());
  std::vector<ConjugacyClass> classes;
  for (const auto& c : j.at("classes")) {
    classes.push_back({{class_kind_from_name(c.at("kind").get<std::string>()), c.at("param").get<int>()},
                       c.at("size").get<std::uint64_t>()});
  }
  std::vector<Character> characters;
  for (const auto& c : j.at("characters")) {
    Character chi;
    chi.label = CharacterLabel::parse(c.at("label").get<std::string>());
    chi.degree = c.at("degree").get<std::uint64_t>();
    for (const auto& v : c.at("values")) chi.values.push_back(cyclotomic_from_json(v));
    characters.push_back(std::move(chi));
  }
  return CharacterTable(params, std::move(classes), std::move(characters));
}

json to_json(const DecompositionPayload& d) {
  json entries = json::array();
  for (const auto& e : d.decomposition.entries) {
    entries.push_back({{"label", e.label.to_string()}, {"multiplicity", big_to_json(e.multiplicity)}});
  }
  return {{"q", d.q},
          {"char", d.base.to_string()},
          {"power", d.power},
          {"dimension", big_to_json(d.dimension)},
          {"multiplicities", std::move(entries)},
          {"complete", d.decomposition.complete()}};
}

DecompositionPayload decomposition_from_json(const json& j) {
  DecompositionPayload d;
  d.q = j.at("q").get<std::uint64_t>();
  d.base = CharacterLabel::parse(j.at("char").get<std::string>());
  d.power = j.at("power").get<int>();
  d.dimension = big_from_json(j.at("dimension"));
  for (const auto& e : j.at("multiplicities")) {
    d.decomposition.entries.push_back(
        {CharacterLabel::parse(e.at("label").get<std::string>()), big_from_json(e.at("multiplicity"))});
  }
  return d;
}

json to_json(const CoveringReport& report, const GroupParams& params, int tmax) {
  json records = json::array();
  for (const auto& r : report.records) {
    records.push_back({{"label", r.label.to_string()}, {"e", r.e}, {"t", r.t}});
  }
  json expected = report.theorem_expected ? json(*report.theorem_expected) : json("not-applicable");
  json matches = report.matches_theorem ? json(*report.matches_theorem) : json("not-applicable");
  return {{"q", report.q},
          {"case", to_string(params.parity)},
          {"tmax", tmax},
          {"records", std::move(records)},
          {"covering_number", report.covering_number},
          {"theorem_expected", std::move(expected)},
          {"matches_theorem", std::move(matches)}};
}

CoveringReport covering_from_json(const json& j) {
  CoveringReport report;
  report.q = j.at("q").get<std::uint64_t>();
  for (const auto& r : j.at("records")) {
    report.records.push_back(
        {CharacterLabel::parse(r.at("label").get<std::string>()), r.at("e").get<int>(), r.at("t").get<int>()});
  }
  report.covering_number = j.at("covering_number").get<int>();
  if (j.at("theorem_expected").is_number()) report.theorem_expected = j.at("theorem_expected").get<int>();
  if (j.at("matches_theorem").is_boolean()) report.matches_theorem = j.at("matches_theorem").get<bool>();
  return report;
}

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

json make_document(const std::string& command, json payload, bool reproducible) {
  json doc = {{"schema_version", kSchemaVersion}, {"command", command}};
  if (!reproducible) doc["generated_at"] = utc_timestamp();
  doc["payload"] = std::move(payload);
  return doc;
}

}  // namespace psl2cov::cli
