// Command-line front end: closed-form counts, the genus census, normal forms
// and orbit-oracle comparisons.
//
// Exit codes: 0 success (discrepancy flags are findings, not failures),
// 1 usage error, 2 a computation stopped at its state budget.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclic_actions/cyclic_actions.hpp"
#include "cyclic_actions/report_format.hpp"

namespace ca = cyclic_actions;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIncomplete = 2;

struct Args {
  std::uint64_t p = 0;
  std::optional<std::uint64_t> genus;
  std::string tuple;
  std::uint64_t k = 0;
  std::int64_t j = -1;
  bool per_tuple = false;
  bool list = false;
  bool no_header = false;
  std::uint64_t max_states = 1'000'000;
  unsigned workers = 1;
  std::string format = "table";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ca::OddPrime prime_arg(const Args& a) {
  try {
    return ca::OddPrime(a.p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--p: ") + e.what());
  }
}

ca::Genus genus_arg(const Args& a) {
  if (!a.genus) throw UsageError("--genus is required");
  try {
    return ca::Genus(*a.genus);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--genus: ") + e.what());
  }
}

ca::Tuple5 tuple_arg(const Args& a) {
  if (a.tuple.empty()) throw UsageError("--tuple is required");
  try {
    ca::Tuple5 v = ca::Tuple5::parse(a.tuple);
    v.validate();
    return v;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--tuple: ") + e.what());
  }
}

ca::Tuple5 admissible_tuple_arg(const Args& a, const ca::OddPrime& p) {
  const ca::Tuple5 v = tuple_arg(a);
  if (ca::raw_genus(p, v) < 1)
    throw UsageError("tuple " + v.to_string() + " is inadmissible for p=" + std::to_string(p.value()));
  return v;
}

ca::OutputFormat format_arg(const Args& a) {
  try {
    return ca::parse_format(a.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--format: ") + e.what());
  }
}

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_akj(const Args& a) {
  if (a.k < 1) throw UsageError("--k must be >= 1");
  if (a.j < 0) throw UsageError("--j must be >= 0");
  const auto j = static_cast<std::uint64_t>(a.j);
  const ca::BigCount value = ca::count_A(a.k, j);
  switch (format_arg(a)) {
    case ca::OutputFormat::kTable: std::cout << ca::to_decimal(value) << '\n'; break;
    case ca::OutputFormat::kJson:
      print_json({{"k", a.k}, {"j", j}, {"count", ca::to_decimal(value)}});
      break;
    case ca::OutputFormat::kCsv:
      if (!a.no_header) std::cout << "k,j,count\n";
      std::cout << a.k << ',' << j << ',' << ca::to_decimal(value) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_tuples(const Args& a) {
  const ca::OddPrime p = prime_arg(a);
  const ca::Genus g = genus_arg(a);
  const auto tuples = ca::admissible_tuples(p, g);
  switch (format_arg(a)) {
    case ca::OutputFormat::kTable:
      if (!a.no_header) std::cout << "p=" << p.value() << " g=" << g.value() << " tuples=" << tuples.size() << '\n';
      for (const auto& v : tuples) std::cout << "  " << v << "  " << ca::case_name(ca::classify(v)) << '\n';
      break;
    case ca::OutputFormat::kJson: {
      nlohmann::ordered_json j{{"p", p.value()}, {"g", g.value()}, {"rows", nlohmann::ordered_json::array()}};
      for (const auto& v : tuples)
        j["rows"].push_back({{"tuple", ca::tuple_field(v)}, {"case", std::string(ca::case_name(ca::classify(v)))}});
      j["total"] = std::to_string(tuples.size());
      print_json(j);
      break;
    }
    case ca::OutputFormat::kCsv:
      if (!a.no_header) std::cout << "r,s,t,m,n,case\n";
      for (const auto& v : tuples) std::cout << ca::tuple_field(v) << ',' << ca::case_name(ca::classify(v)) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_census(const Args& a) {
  const ca::OddPrime p = prime_arg(a);
  const ca::Genus g = genus_arg(a);
  const ca::CountReport rep = ca::census(p, g);
  switch (format_arg(a)) {
    case ca::OutputFormat::kTable: std::cout << ca::census_to_table(rep, a.per_tuple, !a.no_header); break;
    case ca::OutputFormat::kJson: print_json(ca::census_to_json(rep)); break;
    case ca::OutputFormat::kCsv: std::cout << ca::census_to_csv(rep, !a.no_header); break;
  }
  return kExitOk;
}

int cmd_canonical(const Args& a) {
  const ca::OddPrime p = prime_arg(a);
  const ca::Tuple5 v = admissible_tuple_arg(a, p);
  std::vector<std::string> lines;
  std::uint64_t count = 0;
  try {
    count = ca::for_each_canonical(p, v, a.max_states, [&](const ca::EpimorphismState& s) {
      if (a.list) lines.push_back(ca::dump_state(s));
    });
  } catch (const ca::ResourceError& e) {
    std::cerr << "canonical: " << e.what() << '\n';
    return kExitIncomplete;
  }
  switch (format_arg(a)) {
    case ca::OutputFormat::kTable:
      if (!a.no_header) std::cout << ca::dump_header(p, v) << '\n';
      for (const auto& line : lines) std::cout << line << '\n';
      std::cout << "count " << count << '\n';
      break;
    case ca::OutputFormat::kJson:
      print_json({{"p", p.value()}, {"tuple", ca::tuple_field(v)}, {"rows", lines}, {"total", std::to_string(count)}});
      break;
    case ca::OutputFormat::kCsv:
      if (!a.no_header) std::cout << "state\n";
      for (const auto& line : lines) std::cout << line << '\n';
      break;
  }
  return kExitOk;
}

ca::OrbitOptions orbit_options(const Args& a) {
  ca::OrbitOptions opts;
  opts.budget = a.max_states;
  opts.workers = a.workers;
  return opts;
}

int cmd_orbits(const Args& a) {
  const ca::OddPrime p = prime_arg(a);
  const ca::Tuple5 v = admissible_tuple_arg(a, p);
  ca::OrbitResult res;
  try {
    res = ca::orbit_count(p, v, orbit_options(a));
  } catch (const ca::ResourceError& e) {
    std::cerr << "orbits: " << e.what() << '\n';
    return kExitIncomplete;
  }
  std::vector<std::string> reps;
  if (a.list)
    for (const auto& s : res.representatives) reps.push_back(ca::dump_state(s));
  switch (format_arg(a)) {
    case ca::OutputFormat::kTable:
      if (!a.no_header) std::cout << ca::dump_header(p, v) << '\n';
      for (const auto& line : reps) std::cout << line << '\n';
      std::cout << "orbits " << ca::to_decimal(res.orbit_count) << "  states " << res.state_space_size << "  valid "
                << res.valid_states << "  largest " << res.largest_orbit << '\n';
      break;
    case ca::OutputFormat::kJson:
      print_json({{"p", p.value()},
                  {"tuple", ca::tuple_field(v)},
                  {"rows", reps},
                  {"total", ca::to_decimal(res.orbit_count)},
                  {"state_space_size", res.state_space_size},
                  {"valid_states", res.valid_states},
                  {"largest_orbit", res.largest_orbit}});
      break;
    case ca::OutputFormat::kCsv:
      if (!a.no_header) std::cout << "r,s,t,m,n,orbit_count,state_space_size,valid_states,largest_orbit\n";
      std::cout << ca::tuple_field(v) << ',' << ca::to_decimal(res.orbit_count) << ',' << res.state_space_size << ','
                << res.valid_states << ',' << res.largest_orbit << '\n';
      break;
  }
  return kExitOk;
}

int cmd_verify(const Args& a) {
  const ca::OddPrime p = prime_arg(a);
  if (a.max_states < 1) throw UsageError("--max-states must be >= 1");
  if (a.genus.has_value() == !a.tuple.empty()) throw UsageError("verify needs exactly one of --genus or --tuple");

  std::vector<ca::Tuple5> tuples;
  nlohmann::ordered_json scope;
  if (a.genus) {
    const ca::Genus g = genus_arg(a);
    tuples = ca::admissible_tuples(p, g);
    scope["g"] = g.value();
  } else {
    const ca::Tuple5 v = admissible_tuple_arg(a, p);
    tuples.push_back(v);
    scope["tuple"] = ca::tuple_field(v);
  }

  std::vector<ca::ComparisonReport> reports;
  for (const auto& v : tuples) reports.push_back(ca::compare(p, v, orbit_options(a)));

  switch (format_arg(a)) {
    case ca::OutputFormat::kTable: std::cout << ca::verify_to_table(p.value(), reports, !a.no_header); break;
    case ca::OutputFormat::kJson: print_json(ca::verify_to_json(p.value(), scope, reports)); break;
    case ca::OutputFormat::kCsv: std::cout << ca::verify_to_csv(reports, !a.no_header); break;
  }
  for (const auto& rep : reports)
    if (!rep.complete) return kExitIncomplete;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count cyclic p^2 actions on handlebodies and verify the counts by exhaustive search"};
  app.require_subcommand(1);
  Args args;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", args.format, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_flag("--no-header", args.no_header, "Omit table/CSV header lines");
  };

  auto* akj = app.add_subcommand("akj", "Number of nondecreasing j-tuples over k letters");
  akj->add_option("--k", args.k, "Alphabet size")->required();
  akj->add_option("--j", args.j, "Tuple length")->required();
  add_format(akj);

  auto* tuples = app.add_subcommand("tuples", "Admissible (r,s,t,m,n) for a genus");
  tuples->add_option("--p", args.p, "Odd prime")->required();
  tuples->add_option("--genus", args.genus, "Handlebody genus")->required();
  add_format(tuples);

  auto* census = app.add_subcommand("census", "Class counts for every admissible tuple");
  census->add_option("--p", args.p, "Odd prime")->required();
  census->add_option("--genus", args.genus, "Handlebody genus")->required();
  census->add_flag("--per-tuple", args.per_tuple, "Show per-tuple rows in table output");
  add_format(census);

  auto* canonical = app.add_subcommand("canonical", "Normal-form epimorphisms for one tuple");
  canonical->add_option("--p", args.p, "Odd prime")->required();
  canonical->add_option("--tuple", args.tuple, "r,s,t,m,n")->required();
  canonical->add_flag("--list", args.list, "Print every state");
  canonical->add_option("--max-states", args.max_states, "State budget");
  add_format(canonical);

  auto* orbits = app.add_subcommand("orbits", "Orbit count of epimorphisms under handle moves");
  orbits->add_option("--p", args.p, "Odd prime")->required();
  orbits->add_option("--tuple", args.tuple, "r,s,t,m,n")->required();
  orbits->add_flag("--list", args.list, "Print the smallest state of each orbit");
  orbits->add_option("--max-states", args.max_states, "State budget");
  orbits->add_option("--workers", args.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  add_format(orbits);

  auto* verify = app.add_subcommand("verify", "Compare formula, normal-form and orbit counts");
  verify->add_option("--p", args.p, "Odd prime")->required();
  verify->add_option("--genus", args.genus, "Handlebody genus (all admissible tuples)");
  verify->add_option("--tuple", args.tuple, "r,s,t,m,n");
  verify->add_option("--max-states", args.max_states, "State budget per tuple");
  verify->add_option("--workers", args.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*akj) return cmd_akj(args);
    if (*tuples) return cmd_tuples(args);
    if (*census) return cmd_census(args);
    if (*canonical) return cmd_canonical(args);
    if (*orbits) return cmd_orbits(args);
    if (*verify) return cmd_verify(args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
