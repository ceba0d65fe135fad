// Command-line front end.
//
// Exit codes: 0 ok, 1 violation or counterexample, 2 usage error,
// 3 search budget exhausted. Errors are reported on stderr as one JSON line.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "stanley/constructions.hpp"
#include "stanley/error.hpp"
#include "stanley/random_ideal.hpp"
#include "stanley/search.hpp"
#include "stanley/selftest.hpp"
#include "stanley/witness_io.hpp"

using nlohmann::json;
using namespace stanley;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

struct Options {
  std::string ideal_text;
  std::string ideal_file;
  std::string witness_file;
  std::string out;
  std::string g_text;
  std::string construction;
  int k = -1;
  int n = -1;
  int m = -1;
  int pivot = 0;
  std::uint64_t budget = SearchConfig{}.node_budget;
  std::uint64_t seed = 1;
  int count = 10;
  unsigned threads = 1;
  bool json_out = false;
  bool trace = false;
  int criterion = 0;
};

MonomialIdeal load_ideal(const Options& o) {
  if (!o.ideal_text.empty() && !o.ideal_file.empty()) {
    throw PreconditionError("give either --ideal or --file, not both");
  }
  if (!o.ideal_file.empty()) {
    std::ifstream in(o.ideal_file);
    if (!in) throw ParseError("cannot open " + o.ideal_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ideal(ss.str());
  }
  if (o.ideal_text.empty()) throw PreconditionError("an ideal is required (--ideal or --file)");
  return parse_ideal(o.ideal_text);
}

std::optional<Exponent> load_g(const Options& o, int n) {
  if (o.g_text.empty()) return std::nullopt;
  std::vector<std::uint32_t> c;
  std::stringstream ss(o.g_text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      c.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw ParseError("bad --g entry '" + tok + "'");
    }
  }
  if (static_cast<int>(c.size()) != n) throw ParseError("--g must have n entries");
  return Exponent(std::move(c));
}

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.node_budget = o.budget;
  cfg.parallel = o.threads != 1;
  cfg.threads = o.threads;
  return cfg;
}

void emit_partition(const Options& o, const IntervalPartition& part, const MonomialIdeal& ideal,
                    json& report) {
  if (!o.out.empty()) {
    write_witness_file(o.out, part, &ideal);
    report["witness"] = o.out;
  } else {
    report["witness"] = partition_to_json(part, &ideal);
  }
}

void print(const Options& o, const json& report, const std::string& text) {
  if (o.json_out) {
    std::cout << report.dump() << '\n';
  } else {
    std::cout << text << '\n';
  }
}

int cmd_sdepth(const Options& o) {
  const auto ideal = load_ideal(o);
  const auto result = sdepth_exact(ideal, search_config(o), load_g(o, ideal.n()));
  json report{{"n", ideal.n()}, {"m", ideal.size()}, {"sdepth", result.value},
              {"nodes", result.nodes}};
  emit_partition(o, result.witness, ideal, report);
  std::string text = "sdepth " + std::to_string(result.value);
  if (!o.out.empty()) text += "\nwitness written to " + o.out;
  print(o, report, text);
  return kOk;
}

int cmd_witness(const Options& o) {
  const auto ideal = load_ideal(o);
  if (o.k < 0) throw PreconditionError("witness needs --k");
  const auto poset = build_poset(ideal, load_g(o, ideal.n()));
  const auto outcome = has_partition_min_rho(poset, o.k, search_config(o));
  json report{{"n", ideal.n()}, {"k", o.k}, {"nodes", outcome.nodes}};
  switch (outcome.status) {
    case SearchStatus::found:
      report["status"] = "found";
      emit_partition(o, *outcome.witness, ideal, report);
      print(o, report, "found a partition with min rho >= " + std::to_string(o.k));
      return kOk;
    case SearchStatus::not_found:
      report["status"] = "not_found";
      print(o, report, "no partition with min rho >= " + std::to_string(o.k));
      return kViolation;
    case SearchStatus::budget_exceeded:
      report["status"] = "budget_exceeded";
      print(o, report, "budget exhausted");
      return kBudget;
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  auto file = read_witness_file(o.witness_file);
  const bool have_ideal = !o.ideal_text.empty() || !o.ideal_file.empty();
  if (!have_ideal && !file.ideal) {
    throw PreconditionError("witness file has no ideal; pass --ideal");
  }
  const MonomialIdeal ideal = have_ideal ? load_ideal(o) : *file.ideal;
  if (ideal.n() != file.partition.n()) {
    throw PreconditionError("witness and ideal have different numbers of variables");
  }
  const auto poset = build_poset(ideal, file.partition.box.g());
  const auto v = verify_partition(poset, file.partition);
  if (!v.ok()) {
    const json report = violation_to_json(poset.box(), *v.violation);
    print(o, report, "violation: " + report.dump());
    return kViolation;
  }
  json report{{"status", "ok"}, {"intervals", file.partition.intervals.size()}};
  std::string text = "Ok";
  if (!file.partition.intervals.empty()) {
    const int sd = partition_sdepth(poset, file.partition);
    report["sdepth"] = sd;
    text += ", min rho " + std::to_string(sd);
  }
  if (o.k >= 0) {
    if (!poset.squarefree()) throw PreconditionError("--k needs a squarefree witness");
    const bool ud = is_upper_discrete(file.partition, o.k);
    report["upper_discrete"] = ud;
    text += std::string(ud ? ", upper-discrete" : ", not upper-discrete") + " at k=" +
            std::to_string(o.k);
  }
  print(o, report, text);
  return kOk;
}

IntervalPartition input_partition(const Options& o, const MonomialIdeal& ideal) {
  if (o.witness_file.empty()) {
    return sdepth_exact(ideal, search_config(o)).witness;
  }
  auto file = read_witness_file(o.witness_file);
  if (file.partition.n() != ideal.n()) throw PreconditionError("witness has the wrong n");
  return file.partition;
}

int cmd_construct(const Options& o) {
  const std::string& name = o.construction;
  json report{{"construction", name}};
  if (name == "upper-discrete") {
    if (o.n < 0 || o.k < 0) throw PreconditionError("upper-discrete needs --n and --k");
    const auto part = boolean_upper_discrete(o.n, o.k);
    const auto unit = MonomialIdeal::from_masks(o.n, std::vector<Mask>{0}, UnitPolicy::allow);
    emit_partition(o, part, unit, report);
    print(o, report, std::to_string(part.intervals.size()) + " intervals");
    return kOk;
  }

  const auto ideal = load_ideal(o);
  IntervalPartition part;
  MonomialIdeal target = ideal;
  if (name == "ci") {
    part = ci_partition(ideal);
  } else if (name == "three-gen") {
    std::vector<LiftInstruction> trace;
    part = three_gen_partition(ideal, &trace);
    json steps = json::array();
    for (const auto& s : trace) {
      steps.push_back({{"kind", to_string(s.kind)},
                       {"appended", s.appended_variable},
                       {"generators", s.target_generators},
                       {"degree", s.degree}});
    }
    if (o.trace) report["trace"] = steps;
  } else if (name == "four-gen") {
    part = four_gen_partition(ideal);
  } else if (name == "split") {
    const auto split = split_ideal(ideal);
    report["without_last"] = to_compact(split.without_last);
    report["with_last"] = to_compact(split.with_last);
    print(o, report,
          "I0 = " + to_compact(split.without_last) + "\nI1 = " + to_compact(split.with_last));
    return kOk;
  } else if (name == "lem" || name == "rem" || name == "refine") {
    const auto base = input_partition(o, ideal);
    if (name == "refine") {
      if (o.k < 0) throw PreconditionError("refine needs --k");
      part = upper_discrete_refine(ideal, base, o.k);
    } else if (name == "lem") {
      part = lem_lift(ideal, base, o.pivot, ideal.n() + 1);
      target = lem_lifted_ideal(ideal, o.pivot, ideal.n() + 1);
    } else {
      if (o.k < 0) throw PreconditionError("rem needs --k");
      part = rem_lift(ideal, base, o.k, o.pivot, ideal.n() + 1);
      target = lem_lifted_ideal(ideal, o.pivot, ideal.n() + 1);
    }
  } else {
    throw PreconditionError("unknown construction '" + name + "'");
  }
  const int sd = part.intervals.empty() ? target.n() : min_rho(part);
  report["ideal"] = to_compact(target);
  report["min_rho"] = sd;
  emit_partition(o, part, target, report);
  std::string text = to_compact(target) + "\nmin rho " + std::to_string(sd) + " over " +
                     std::to_string(part.intervals.size()) + " intervals";
  if (o.out.empty() && !o.json_out) text += "\n" + report["witness"].dump();
  print(o, report, text);
  return kOk;
}

int cmd_survey(const Options& o) {
  if (o.n < 1 || o.m < 1) throw PreconditionError("survey needs --n and --m");
  if (o.count < 0) throw PreconditionError("--count must be non-negative");
  std::mt19937_64 rng(o.seed);
  std::vector<MonomialIdeal> ideals;
  for (int i = 0; i < o.count; ++i) ideals.push_back(random_squarefree_ideal(rng, o.n, o.m));

  struct Row {
    int sdepth = 0;
    bool budget = false;
  };
  std::vector<Row> rows(ideals.size());
  SearchConfig cfg;
  cfg.node_budget = o.budget;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ideals.size();) {
      try {
        rows[i].sdepth = sdepth_exact(ideals[i], cfg).value;
      } catch (const BudgetExceededError&) {
        rows[i].budget = true;
      }
    }
  };
  unsigned threads = o.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                    : o.threads;
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  const int bound = o.n - o.m / 2;
  int min_slack = o.n;
  bool budget = false;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    json row{{"seed", o.seed}, {"idx", i}, {"n", o.n}, {"m", o.m}};
    if (rows[i].budget) {
      budget = true;
      row["sdepth"] = nullptr;
      row["status"] = "budget_exceeded";
    } else {
      row["sdepth"] = rows[i].sdepth;
      row["bound"] = bound;
      row["slack"] = rows[i].sdepth - bound;
      min_slack = std::min(min_slack, rows[i].sdepth - bound);
    }
    if (o.json_out) {
      std::cout << row.dump() << '\n';
    } else {
      std::cout << i << '\t' << to_compact(ideals[i]) << '\t'
                << (rows[i].budget ? std::string("budget") : std::to_string(rows[i].sdepth))
                << '\n';
    }
  }
  if (!o.json_out) {
    std::cout << "bound n - floor(m/2) = " << bound << ", min slack " << min_slack << '\n';
  }
  if (min_slack < 0) return kViolation;
  return budget ? kBudget : kOk;
}

int cmd_selftest(const Options& o) {
  std::vector<CriterionReport> reports;
  auto show = [&](const CriterionReport& r) {
    if (o.json_out) {
      std::cout << json{{"criterion", r.id}, {"title", r.title}, {"passed", r.passed},
                        {"detail", r.detail}, {"seconds", r.seconds}}
                       .dump()
                << std::endl;
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.title << ": " << r.detail
                << std::endl;
    }
  };
  if (o.criterion > 0) {
    reports.push_back(run_criterion(o.criterion));
    show(reports.back());
  } else {
    reports = run_selftest(show);
  }
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const CriterionReport& r) { return r.passed; });
  return ok ? kOk : kViolation;
}

int exit_code_for(const Error& e) {
  const std::string kind = e.kind();
  if (kind == "budget") return kBudget;
  if (kind == "verification") return kViolation;
  return kUsage;
}

void report_error(const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stanley depth of monomial ideals"};
  app.require_subcommand(1, 1);
  Options o;

  auto ideal_flags = [&](CLI::App* sub) {
    sub->add_option("-i,--ideal", o.ideal_text, "Ideal, e.g. \"n=3; x1*x2, x2*x3\" or JSON");
    sub->add_option("--file", o.ideal_file, "Read the ideal from a file");
  };
  auto search_flags = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Search node budget");
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  };

  auto* sdepth = app.add_subcommand("sdepth", "Exact Stanley depth with a witness");
  ideal_flags(sdepth);
  search_flags(sdepth);
  sdepth->add_option("--g", o.g_text, "Box corner as comma-separated exponents");
  sdepth->add_option("--out", o.out, "Write the witness to this file");
  sdepth->add_flag("--json", o.json_out);

  auto* witness = app.add_subcommand("witness", "Partition with min rho >= k, if any");
  ideal_flags(witness);
  search_flags(witness);
  witness->add_option("--k", o.k)->required();
  witness->add_option("--g", o.g_text, "Box corner as comma-separated exponents");
  witness->add_option("--out", o.out);
  witness->add_flag("--json", o.json_out);

  auto* verify = app.add_subcommand("verify", "Check a witness file");
  verify->add_option("witness", o.witness_file)->required();
  ideal_flags(verify);
  verify->add_option("--k", o.k, "Also test upper-discreteness of degree k");
  verify->add_flag("--json", o.json_out);

  auto* construct = app.add_subcommand("construct", "Run an explicit construction");
  construct->add_option("name", o.construction,
                        "lem, rem, ci, upper-discrete, refine, three-gen, four-gen, split")
      ->required();
  ideal_flags(construct);
  construct->add_option("--witness", o.witness_file, "Input partition (default: exact search)");
  construct->add_option("--k", o.k);
  construct->add_option("--n", o.n);
  construct->add_option("--pivot", o.pivot, "Variable whose generator gains x_{n+1}");
  construct->add_option("--budget", o.budget);
  construct->add_option("--out", o.out);
  construct->add_flag("--trace", o.trace, "Include the lift sequence (three-gen)");
  construct->add_flag("--json", o.json_out);

  auto* survey = app.add_subcommand("survey", "sdepth - (n - floor(m/2)) on random ideals");
  survey->add_option("--n", o.n)->required();
  survey->add_option("--m", o.m)->required();
  survey->add_option("--count", o.count);
  survey->add_option("--seed", o.seed);
  search_flags(survey);
  survey->add_flag("--json", o.json_out);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suites");
  selftest->add_option("--criterion", o.criterion, "Run a single criterion");
  selftest->add_flag("--json", o.json_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", e.what());
    return kUsage;
  }

  try {
    if (*sdepth) return cmd_sdepth(o);
    if (*witness) return cmd_witness(o);
    if (*verify) return cmd_verify(o);
    if (*construct) return cmd_construct(o);
    if (*survey) return cmd_survey(o);
    return cmd_selftest(o);
  } catch (const BudgetExceededError& e) {
    std::cerr << json{{"error", "budget"}, {"message", e.what()}, {"lower", e.lower()},
                      {"upper", e.upper()}}
                     .dump()
              << '\n';
    return kBudget;
  } catch (const Error& e) {
    report_error(e.kind(), e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    report_error("internal", e.what());
    return kViolation;
  }
}
