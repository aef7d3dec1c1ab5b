#include "psl2cov_cli/app.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "psl2cov/errors.hpp"
#include "psl2cov/numtheory.hpp"

namespace psl2cov::cli {

namespace {

SweepRow sweep_one(std::uint64_t q, int tmax) {
  SweepRow row;
  row.q = q;
  try {
    const auto params = group_params(q);
    row.parity = params.parity;
    row.theorem_expected = theorem_expectation(params);
    const auto report = covering_report(character_table(params), tmax);
    row.covering_number = report.covering_number;
    row.matches = report.matches_theorem;
  } catch (const ExponentCapExceeded& e) {
    row.error = e.what();
    row.exponent_cap = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> sweep(std::uint64_t q_min, std::uint64_t q_max, int tmax, unsigned jobs,
                            const std::function<void(const SweepRow&)>& on_row) {
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = q_min; q <= q_max; ++q) {
    if (prime_power(q)) qs.push_back(q);
  }
  std::vector<std::promise<SweepRow>> promises(qs.size());
  std::vector<std::future<SweepRow>> futures;
  for (auto& p : promises) futures.push_back(p.get_future());

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < qs.size(); i = next++) promises[i].set_value(sweep_one(qs[i], tmax));
  };
  std::vector<std::jthread> pool;
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(qs.size())));
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);

  std::vector<SweepRow> rows;
  for (auto& f : futures) {
    rows.push_back(f.get());
    if (on_row) on_row(rows.back());
  }
  return rows;
}

std::string csv_line(const SweepRow& row) {
  std::ostringstream out;
  out << row.q << ',' << to_string(row.parity) << ',';
  if (!row.error.empty()) {
    out << "ERROR,";
  } else {
    out << *row.covering_number << ',';
  }
  out << (row.theorem_expected ? std::to_string(*row.theorem_expected) : "NA") << ',';
  if (!row.error.empty()) {
    out << "ERROR";
  } else if (row.matches) {
    out << (*row.matches ? "true" : "false");
  } else {
    out << "NA";
  }
  return out.str();
}

json to_json(const SweepRow& row) {
  json j = {{"q", row.q}, {"case", to_string(row.parity)}};
  j["covering_number"] = row.covering_number ? json(*row.covering_number) : json(nullptr);
  j["theorem_expected"] = row.theorem_expected ? json(*row.theorem_expected) : json("not-applicable");
  j["match"] = row.matches ? json(*row.matches) : json("not-applicable");
  if (!row.error.empty()) j["error"] = row.error;
  return j;
}

SweepRow sweep_row_from_json(const json& j) {
  SweepRow row;
  row.q = j.at("q").get<std::uint64_t>();
  row.parity = group_params(row.q).parity;
  if (j.at("covering_number").is_number()) row.covering_number = j.at("covering_number").get<int>();
  if (j.at("theorem_expected").is_number()) row.theorem_expected = j.at("theorem_expected").get<int>();
  if (j.at("match").is_boolean()) row.matches = j.at("match").get<bool>();
  if (j.contains("error")) {
    row.error = j.at("error").get<std::string>();
    row.exponent_cap = row.error.starts_with("ExponentCapExceeded");
  }
  return row;
}

namespace {

struct Options {
  std::uint64_t q = 0;
  std::string label;
  int power = 1;
  int tmax = kDefaultExponentCap;
  std::string format = "text";
  bool oracle = false;
  std::uint64_t q_min = 0;
  std::uint64_t q_max = 0;
  std::string out_path;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool reproducible = false;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  int table() {
    const auto table = character_table(group_params(opt_.q));
    if (json_output()) return emit("table", to_json(table));
    out_ << render_table(table);
    return kExitOk;
  }

  int decompose() {
    const auto table = character_table(group_params(opt_.q));
    const auto& chi = table.character(CharacterLabel::parse(opt_.label));
    DecompositionPayload d;
    d.q = opt_.q;
    d.base = chi.label;
    d.power = opt_.power;
    d.decomposition = psl2cov::decompose(table, pointwise_power(chi, static_cast<unsigned>(opt_.power)));
    d.dimension = boost::multiprecision::pow(BigInt(chi.degree), static_cast<unsigned>(opt_.power));
    if (json_output()) return emit("decompose", to_json(d));
    out_ << render_decomposition(d);
    return kExitOk;
  }

  int covering() {
    const auto params = group_params(opt_.q);
    const auto report = covering_report(character_table(params), opt_.tmax);
    if (json_output()) return emit("covering", to_json(report, params, opt_.tmax));
    out_ << render_covering(report, params);
    return kExitOk;
  }

  int verify() {
    const auto report = run_verification(opt_.q, opt_.oracle);
    if (json_output()) {
      emit("verify", to_json(report));
    } else {
      out_ << render_verification(report);
    }
    return report.internal_failure() ? kExitVerificationFailed : kExitOk;
  }

  int sweep() {
    if (opt_.q_min < 4 || opt_.q_min > opt_.q_max) {
      err_ << "invalid range: need 4 <= q-min <= q-max\n";
      return kExitUsage;
    }
    std::ofstream file;
    if (!opt_.out_path.empty()) {
      file.open(opt_.out_path, std::ios::out | std::ios::trunc);
      if (!file) {
        err_ << "cannot open " << opt_.out_path << " for writing\n";
        return kExitUsage;
      }
    }
    std::ostream& sink = opt_.out_path.empty() ? out_ : file;

    std::function<void(const SweepRow&)> on_row;
    if (!json_output()) {
      sink << kSweepHeader << "\n" << std::flush;
      on_row = [&](const SweepRow& row) { sink << csv_line(row) << "\n" << std::flush; };
    }
    const auto rows = psl2cov::cli::sweep(opt_.q_min, opt_.q_max, opt_.tmax, opt_.jobs, on_row);
    if (json_output()) {
      json list = json::array();
      for (const auto& r : rows) list.push_back(to_json(r));
      sink << make_document("sweep",
                            {{"q_min", opt_.q_min}, {"q_max", opt_.q_max}, {"tmax", opt_.tmax}, {"rows", list}},
                            opt_.reproducible)
                  .dump(2)
           << "\n";
    }

    int code = kExitOk;
    for (const auto& r : rows) {
      if (r.error.empty()) continue;
      err_ << "q = " << r.q << ": " << r.error << "\n";
      code = std::max<int>(code, r.exponent_cap ? kExitExponentCap : kExitVerificationFailed);
    }
    return code;
  }

 private:
  bool json_output() const { return opt_.format == "json"; }

  int emit(const std::string& command, json payload) {
    out_ << make_document(command, std::move(payload), opt_.reproducible).dump(2) << "\n";
    return kExitOk;
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Character tables, tensor powers and character covering numbers of PSL2(q)", "psl2cov"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "psl2cov 1.0.0");

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--reproducible", opt.reproducible, "Omit the timestamp from JSON output");
  };
  const auto add_q = [&](CLI::App* sub) { sub->add_option("--q", opt.q, "Prime power q >= 4")->required(); };
  const auto add_tmax = [&](CLI::App* sub) {
    sub->add_option("--tmax", opt.tmax, "Largest tensor power tried")->check(CLI::PositiveNumber);
  };

  auto* table = app.add_subcommand("table", "Print the character table");
  add_q(table);
  add_format(table);

  auto* decompose = app.add_subcommand("decompose", "Decompose a power of an irreducible character");
  add_q(decompose);
  decompose->add_option("--char", opt.label, "triv, st, pp:k, dd:j, half+:1, half+:2, half-:1, half-:2")
      ->required();
  decompose->add_option("--power", opt.power, "Tensor power")->check(CLI::PositiveNumber);
  add_format(decompose);

  auto* covering = app.add_subcommand("covering", "Compute e(chi), t(chi) and the covering number");
  add_q(covering);
  add_tmax(covering);
  add_format(covering);

  auto* verify = app.add_subcommand("verify", "Run the consistency checks and compare published values");
  add_q(verify);
  verify->add_flag("--oracle", opt.oracle, "Cross-check against the explicit matrix group");
  add_format(verify);

  auto* sweep = app.add_subcommand("sweep", "Covering numbers for every prime power in a range");
  sweep->add_option("--q-min", opt.q_min, "Lower bound")->required();
  sweep->add_option("--q-max", opt.q_max, "Upper bound")->required();
  sweep->add_option("--out", opt.out_path, "Write rows to this file instead of stdout");
  sweep->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_tmax(sweep);
  add_format(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Runner runner(opt, out, err);
  try {
    if (*table) return runner.table();
    if (*decompose) return runner.decompose();
    if (*covering) return runner.covering();
    if (*verify) return runner.verify();
    return runner.sweep();
  } catch (const NotAPrimePower& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidLabel& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const ExponentCapExceeded& e) {
    err << e.what() << "\n";
    return kExitExponentCap;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace psl2cov::cli
