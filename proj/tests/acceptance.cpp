// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cyclic_actions/cyclic_actions.hpp"

using namespace cyclic_actions;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string run_cli(const std::string& args, int* exit_code) {
  const std::string cmd = std::string(CYCLIC_ACTIONS_CLI) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Outcome a_function_oracle() {
  Outcome o;
  const auto t0 = Clock::now();
  for (std::uint64_t k = 1; k <= 8; ++k)
    for (std::uint64_t j = 0; j <= 6; ++j)
      if (count_A(k, j) != brute_count_nondecreasing(k, j))
        o.fail("k=" + std::to_string(k) + " j=" + std::to_string(j));
  const double dt = seconds_since(t0);
  if (dt >= 5.0) o.fail("took " + std::to_string(dt) + " s");
  if (o.ok) o.detail = "56 pairs, " + std::to_string(dt) + " s";
  return o;
}

Outcome c_recurrence() {
  Outcome o;
  for (std::uint64_t k = 1; k <= 8; ++k)
    for (std::uint64_t j = 1; j <= 5; ++j) {
      BigCount row_sum = 0;
      BigCount prefix = 0;
      for (std::uint64_t l = 1; l <= k; ++l) {
        row_sum += count_C_jl(k, j, l);
        prefix += count_C_jl(k, j, l);
        if (count_C_jl(k, j + 1, l) != prefix)
          o.fail("step k=" + std::to_string(k) + " j=" + std::to_string(j) + " l=" + std::to_string(l));
      }
      if (row_sum != count_A(k, j)) o.fail("row sum k=" + std::to_string(k) + " j=" + std::to_string(j));
    }
  return o;
}

Outcome tuple_recovery() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto got = admissible_tuples(OddPrime(5), Genus(26));
  const double dt = seconds_since(t0);
  const std::vector<Tuple5> want = {{0, 0, 0, 2, 0}, {0, 1, 0, 1, 0}, {0, 2, 0, 0, 0},
                                    {1, 0, 0, 1, 0}, {1, 1, 0, 0, 0}, {2, 0, 0, 0, 0}};
  if (got != want) {
    std::ostringstream os;
    for (const auto& v : got) os << v << ' ';
    o.fail("got " + os.str());
  }
  if (dt >= 1.0) o.fail("took " + std::to_string(dt) + " s");
  return o;
}

Outcome consistent_counts() {
  Outcome o;
  const OddPrime p(5);
  auto expect = [&](const char* what, const BigCount& got, long want) {
    if (got != want) o.fail(std::string(what) + " = " + to_decimal(got));
  };
  expect("st(0,2,0,0,0)", count_case_st(p, {0, 2, 0, 0, 0}), 55);
  expect("r(2,0,0,0,0)", count_case_r(p, {2, 0, 0, 0, 0}), 10);
  expect("st(1,1,0,0,0)", count_case_st(p, {1, 1, 0, 0, 0}), 10);
  expect("st(0,1,0,1,0)", count_case_st(p, {0, 1, 0, 1, 0}), 100);
  return o;
}

Outcome discrepancy_surfacing() {
  Outcome o;
  const CountReport rep = census(OddPrime(5), Genus(26));
  auto row_count = [&](const Tuple5& v) -> BigCount {
    for (const auto& row : rep.rows)
      if (row.tuple == v) return row.count;
    return -1;
  };
  if (row_count({0, 0, 0, 2, 0}) != 80) o.fail("(0,0,0,2,0) = " + to_decimal(row_count({0, 0, 0, 2, 0})));
  if (row_count({1, 0, 0, 1, 0}) != 28) o.fail("(1,0,0,1,0) = " + to_decimal(row_count({1, 0, 0, 1, 0})));
  if (rep.total != 283) o.fail("total " + to_decimal(rep.total));
  if (!rep.paper_reference_total || *rep.paper_reference_total != 248) o.fail("reference total missing");
  if (rep.flags().size() != 2) o.fail(std::to_string(rep.flags().size()) + " flags");
  return o;
}

Outcome canonical_equals_theorem() {
  Outcome o;
  const auto t0 = Clock::now();
  std::uint64_t checked = 0, skipped = 0;
  for (const auto& [pv, gmax] : {std::pair<std::uint64_t, std::uint64_t>{3, 30}, {5, 60}}) {
    const OddPrime p(pv);
    for (std::uint64_t g = 1; g <= gmax; ++g)
      for (const auto& v : admissible_tuples(p, Genus(g))) {
        const BigCount want = theorem_count(p, v);
        if (want > 1'000'000) {
          ++skipped;
          continue;
        }
        try {
          const BigCount got = canonical_count(p, v, 1'000'000);
          if (got != want)
            o.fail("p=" + std::to_string(pv) + ' ' + v.to_string() + " canonical " + to_decimal(got) +
                   " theorem " + to_decimal(want));
        } catch (const ResourceError& e) {
          o.fail("p=" + std::to_string(pv) + ' ' + v.to_string() + ": " + e.what());
        }
        ++checked;
      }
  }
  const double dt = seconds_since(t0);
  if (dt >= 60.0) o.fail("took " + std::to_string(dt) + " s");
  if (o.ok)
    o.detail = std::to_string(checked) + " tuples, " + std::to_string(skipped) + " above 1e6, " +
               std::to_string(dt) + " s";
  return o;
}

Outcome orbit_spot_checks() {
  Outcome o;
  const OddPrime p(3);
  const std::pair<Tuple5, long> cases[] = {
      {{0, 1, 0, 0, 0}, 3}, {{0, 0, 1, 0, 0}, 3}, {{1, 0, 0, 0, 0}, 3}, {{0, 0, 0, 1, 0}, 2}, {{0, 1, 1, 0, 0}, 9}};
  for (const auto& [v, want] : cases) {
    OrbitOptions opts;
    opts.method = OrbitMethod::kBfs;
    const auto t0 = Clock::now();
    const OrbitResult res = orbit_count(p, v, opts);
    const double dt = seconds_since(t0);
    if (res.orbit_count != want) o.fail(v.to_string() + " orbits " + to_decimal(res.orbit_count));
    if (theorem_count(p, v) != want) o.fail(v.to_string() + " theorem " + to_decimal(theorem_count(p, v)));
    if (dt >= 1.0) o.fail(v.to_string() + " took " + std::to_string(dt) + " s");
  }
  return o;
}

// Every p=3 tuple with a nonperiodic factor whose domain product is at most 1e5.
std::vector<Tuple5> small_p3_tuples() {
  const OddPrime p(3);
  std::vector<Tuple5> out;
  constexpr std::uint64_t kLimit = 100'000;
  for (std::uint32_t r = 0; r <= 6; ++r)
    for (std::uint32_t s = 0; s <= 3; ++s)
      for (std::uint32_t t = 0; t <= 7; ++t)
        for (std::uint32_t m = 0; m <= 4; ++m)
          for (std::uint32_t n = 0; n <= 17; ++n) {
            const Tuple5 v{r, s, t, m, n};
            if (!v.has_nonperiodic_factor()) continue;
            if (DenseIndexer::state_space_size(p, v) <= kLimit) out.push_back(v);
          }
  return out;
}

Outcome property_suite() {
  Outcome o;
  const OddPrime p(3);
  const std::uint64_t q = p.squared();
  const auto tuples = small_p3_tuples();
  for (const auto& v : tuples) {
    const DenseIndexer ix(p, v, 100'000);
    const StateLayout& layout = ix.layout();
    const auto moves = full_moves(p, layout);
    std::vector<Move> inverses;
    for (const auto& mv : moves) {
      Move inv = inverse_move(p, mv);
      if (std::find(moves.begin(), moves.end(), inv) == moves.end())
        o.fail(v.to_string() + " inverse of " + mv.to_string() + " not in alphabet");
      inverses.push_back(inv);
    }
    std::vector<std::uint32_t> x(layout.width()), y(layout.width());
    for (std::uint64_t i = 0; i < ix.size() && o.ok; ++i) {
      ix.decode(i, x);
      if (!ix.generates(x)) continue;
      for (std::size_t k = 0; k < moves.size(); ++k) {
        y = x;
        apply_move_unchecked(q, layout, moves[k], y);
        if (!ix.generates(y)) {
          o.fail(v.to_string() + ' ' + moves[k].to_string() + " leaves the valid set");
          break;
        }
        apply_move_unchecked(q, layout, inverses[k], y);
        if (y != x) {
          o.fail(v.to_string() + ' ' + moves[k].to_string() + " not undone by its inverse");
          break;
        }
      }
    }
    if (!o.ok) break;

    const OrbitPartition part = orbit_partition(p, v);
    std::vector<std::uint8_t> touched(ix.size(), 0);
    std::uint64_t canonical = 0;
    for_each_canonical(p, v, 1'000'000, [&](const EpimorphismState& s) {
      ++canonical;
      const std::uint64_t idx = ix.encode(s.coords());
      if (idx == DenseIndexer::kAbsent || part.label[idx] == OrbitPartition::kInvalid) {
        o.fail(v.to_string() + " canonical state outside the valid set: " + dump_state(s));
        return;
      }
      touched[part.label[idx]] = 1;
    });
    for (std::uint64_t i = 0; i < ix.size(); ++i)
      if (part.label[i] == i && !touched[i]) {
        o.fail(v.to_string() + " orbit of index " + std::to_string(i) + " has no canonical state");
        break;
      }
    if (part.orbits > canonical)
      o.fail(v.to_string() + " orbits " + std::to_string(part.orbits) + " > canonical " + std::to_string(canonical));
    if (!o.ok) break;
  }
  if (o.ok) o.detail = std::to_string(tuples.size()) + " tuples";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string base = "verify --p 3 --genus 10 --max-states 1000000 --format json";
  int code = 0;
  const std::string first = run_cli(base, &code);
  if (code != 0 || first.empty()) o.fail("exit " + std::to_string(code));
  if (run_cli(base, &code) != first) o.fail("second run differs");
  for (int w : {1, 2, 8})
    if (run_cli(base + " --workers " + std::to_string(w), &code) != first)
      o.fail("workers=" + std::to_string(w) + " differs");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 A-function oracle equivalence", a_function_oracle},
      {"2 C(j,l) recurrence", c_recurrence},
      {"3 admissible tuples for p=5 g=26", tuple_recovery},
      {"4 reference counts where consistent", consistent_counts},
      {"5 discrepancy surfacing", discrepancy_surfacing},
      {"6 canonical count equals formula", canonical_equals_theorem},
      {"7 orbit spot checks", orbit_spot_checks},
      {"8 move and orbit property suite", property_suite},
      {"9 verify determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS " : "FAIL ") << name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ')';
    std::cout << '\n';
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
