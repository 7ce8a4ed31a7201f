// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// asserted criterion fails. Criterion 10 is a report: it passes when the
// measurements are emitted with exact counts, whatever their values.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "beatty_lab/classify.hpp"
#include "beatty_lab/identities.hpp"
#include "beatty_lab/partition.hpp"

#ifndef BEATTY_LAB_CLI
#error "BEATTY_LAB_CLI must name the CLI binary"
#endif

using namespace beatty_lab;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(BEATTY_LAB_CLI) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
  status = pclose(pipe);
  return out;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

Outcome golden_tables() {
  const auto start = Clock::now();
  int status = 0;
  const std::string gen = run_cli("gen --n 3 --h phi --limit 33", status);
  if (status != 0) return {false, "gen exited with " + std::to_string(status)};
  std::map<int, std::vector<std::int64_t>> columns;
  for (const auto& row : csv_rows(gen)) columns[std::stoi(row[0])].push_back(std::stoll(row[2]));

  // The table rows (D_3, D_2, D_1) and the longer lists given alongside it.
  const std::vector<std::array<std::int64_t, 3>> table{{1, 2, 4},  {3, 6, 11},  {5, 9, 15},
                                                       {7, 13, 22}, {8, 17, 29}, {10, 20, 33}};
  const std::vector<std::int64_t> d1{4, 11, 15, 22, 29, 33};
  const std::vector<std::int64_t> d2{2, 6, 9, 13, 17, 20, 24, 27};
  const std::vector<std::int64_t> d3{1, 3, 5, 7, 8, 10, 12, 14, 16};
  auto prefix_is = [&](int col, const std::vector<std::int64_t>& want) {
    const auto& got = columns[col];
    return got.size() >= want.size() && std::equal(want.begin(), want.end(), got.begin());
  };
  bool ok = prefix_is(1, d1) && prefix_is(2, d2) && prefix_is(3, d3);
  for (std::size_t i = 0; i < table.size() && ok; ++i) {
    ok = columns[3][i] == table[i][0] && columns[2][i] == table[i][1] && columns[1][i] == table[i][2];
  }
  if (!ok) return {false, "gen output differs from the golden table"};

  const std::string rows = run_cli("classify rows --N 6", status);
  if (status != 0) return {false, "classify rows exited with " + std::to_string(status)};
  const std::vector<std::string> classes{"ABA", "AAA", "BAB", "BBA", "AAA", "BBA"};
  const auto parsed = csv_rows(rows);
  if (parsed.size() != 6) return {false, "classify rows printed " + std::to_string(parsed.size()) + " rows"};
  for (std::size_t i = 0; i < 6; ++i) {
    if (parsed[i][4] != classes[i] || std::stoll(parsed[i][1]) != table[i][0] ||
        std::stoll(parsed[i][2]) != table[i][1] || std::stoll(parsed[i][3]) != table[i][2]) {
      return {false, "row " + std::to_string(i + 1) + " differs from the classification table"};
    }
  }
  const double t = seconds_since(start);
  return {t < 1.0, "gen + classify rows match exactly in " + std::to_string(t) + " s"};
}

Outcome partition_property() {
  std::vector<PartitionSpec> specs;
  for (int n = 2; n <= 8; ++n) specs.push_back(PartitionSpec::identity(n));
  for (int n = 2; n <= 4; ++n) specs.push_back(PartitionSpec::phi_extension(n));
  specs.emplace_back(2, FromAlpha{QuadraticSqrt2::root()});
  for (const auto& spec : specs) {
    const VerificationReport r = verify_partition(spec, 100000, 4);
    if (!r.ok()) return {false, spec.describe() + " defect at " + std::to_string(r.first_defect.value_or(0))};
  }
  return {true, std::to_string(specs.size()) + " specs covered and disjoint up to 100000"};
}

Outcome klm_grid() {
  const auto start = Clock::now();
  IdentityOptions opt;
  opt.N = 500;
  opt.klm_max_n = 500;
  opt.klm_range = 5;
  opt.shards = 4;
  const IdentitySummary s = run_identity("klm", opt);
  const double t = seconds_since(start);
  std::string detail = std::to_string(s.passed) + "/" + std::to_string(s.checked) + " in " + std::to_string(t) + " s";
  if (s.first_failure) detail += ", first failure n=" + std::to_string(s.first_failure->n) + " " + s.first_failure->kase;
  return {s.ok() && t < 60.0, detail};
}

Outcome identity_suite() {
  IdentityOptions opt;
  opt.N = 10000;
  opt.fib_rs = {1, 3, 5, 7};
  opt.fib_max_k = 200;
  opt.shards = 4;
  const std::vector<std::string> names{
      "frac-a-closed-form", "frac-b-closed-form", "a-of-a",        "a-of-b",         "b-minus-phi-a",
      "frac-a-plus-phi-frac-b", "summary-a",      "summary-b",     "d-interval",     "c-interval",
      "d-split-half",       "c-odd-split-lambda", "summary-c",     "summary-d",      "fib-floor",
      "phi-power",          "cassini",            "frac-d3",       "frac-c3",        "frac-s3",
      "c3-plus-phi-d3"};
  std::int64_t checks = 0;
  for (const auto& s : run_identities(opt, names)) {
    checks += s.checked;
    if (!s.ok()) {
      return {false, s.identity + " fails at n=" + std::to_string(s.first_failure ? s.first_failure->n : 0)};
    }
  }
  return {true, std::to_string(names.size()) + " identities, " + std::to_string(checks) + " exact checks"};
}

Outcome fibonacci_shift() {
  const auto start = Clock::now();
  IdentityOptions fwd;
  fwd.N = 1000;
  fwd.fib_rs = {1, 3, 5, 7};
  fwd.shards = 4;
  const IdentitySummary forward = run_identity("fib-shift", fwd);

  IdentityOptions conv;
  conv.N = 50;
  conv.converse_rs = {1, 3};
  conv.converse_max_n = 50;
  conv.converse_bound = 10000;
  conv.shards = 4;
  const IdentitySummary converse = run_identity("fib-shift-converse", conv);
  const double t = seconds_since(start);
  const std::string detail = "forward " + std::to_string(forward.passed) + "/" + std::to_string(forward.checked) +
                             ", converse " + std::to_string(converse.passed) + "/" +
                             std::to_string(converse.checked) + " in " + std::to_string(t) + " s";
  return {forward.ok() && forward.checked == 4000 && converse.ok() && converse.checked == 100 && t < 60.0, detail};
}

Outcome six_row_classes() {
  const RowCensus census = row_class_census(100000, 4);
  std::string firsts;
  for (const auto& [rc, k] : census.first_k) firsts += " " + rc.to_string() + "@" + std::to_string(k);
  bool no_cd_bb = true;
  for (const auto& [rc, count] : census.counts) no_cd_bb = no_cd_bb && !(rc.c == ABLabel::B && rc.d == ABLabel::B);
  const bool ok = census.only_admissible() && census.counts.size() == 6 && no_cd_bb;
  return {ok, std::to_string(census.counts.size()) + " classes, first occurrences:" + firsts};
}

Outcome densities() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const std::int64_t N = 100000;
  const DensityReport d = measure_densities(N, 4);
  bool ok = std::abs(d.c_half_in_a.approx() - 0.5) <= 0.01 && std::abs(d.a_in_c.approx() - 1 / phi) <= 0.01 &&
            std::abs(d.a_in_d.approx() - 1 / (phi * phi)) <= 0.01;
  std::ostringstream detail;
  detail << "c in A " << d.c_half_in_a.decimal() << ", a in C " << d.a_in_c.decimal() << ", a in D "
         << d.a_in_d.decimal();

  const PairCensus pairs = ab_over_scd_census(N, 4);
  using L = SCDLabel;
  const std::map<SCDPair, double> expected{{{L::S, L::C}, 0.2},           {{L::C, L::S}, 0.2},
                                           {{L::D, L::S}, 0.2},           {{L::C, L::D}, (phi - 1) / 5},
                                           {{L::S, L::S}, (3 - phi) / 5}, {{L::D, L::C}, 0.0},
                                           {{L::S, L::D}, 0.0},           {{L::C, L::C}, 0.0},
                                           {{L::D, L::D}, 0.0}};
  for (const auto& [pair, want] : expected) {
    const std::int64_t count = pairs.counts.at(pair);
    const double got = static_cast<double>(count) / static_cast<double>(N);
    if (want == 0.0) {
      ok = ok && count == 0;
    } else {
      ok = ok && std::abs(got - want) <= 0.01;
    }
    detail << ", " << to_string(pair) << " " << make_frequency(count, N).decimal();
  }
  return {ok, detail.str()};
}

Outcome limiting_prefixes() {
  const auto start = Clock::now();
  int checks = 0;
  for (int n = 2; n <= 16; ++n) {
    for (int e = 0; e <= n - 1; ++e) {
      if (!limiting_prefix_check(n, e)) return {false, "n=" + std::to_string(n) + " e=" + std::to_string(e)};
      ++checks;
    }
  }
  const double t = seconds_since(start);
  return {t < 1.0, std::to_string(checks) + " (n, e) pairs in " + std::to_string(t) + " s"};
}

Outcome structural() {
  const PartitionSpec spec = PartitionSpec::phi_extension(3);
  std::int64_t round_trips = 0;
  for (std::int64_t k = 1; *spec.l(k) - spec.radius() <= 10000; ++k) {
    for (int j = 0; j < 3; ++j) {
      for (const auto& e : all_sign_prefixes(j)) {
        const std::int64_t v = linear_form(3, *spec.l(k), j, e);
        if (v < 1 || v > 10000) continue;
        const Decomposition dec = decompose(v, spec);
        if (dec.column != j + 1 || reconstruct(dec, spec) != v) {
          return {false, "decompose(" + std::to_string(v) + ") does not invert the linear form"};
        }
        ++round_trips;
      }
    }
  }

  // Fixed sample of centres per n; the window must be filled once each.
  const std::array<std::int64_t, 10> centres{128, 200, 1001, 4096, 5555, 12345, 65536, 99991, 250000, 1000003};
  int windows = 0;
  for (int n = 2; n <= 8; ++n) {
    const std::int64_t radius = (std::int64_t{1} << (n - 1)) - 1;
    for (std::int64_t t : centres) {
      std::map<std::int64_t, int> hits;
      for (int j = 0; j < n; ++j) {
        for (const auto& e : all_sign_prefixes(j)) ++hits[linear_form(n, t, j, e)];
      }
      bool filled = static_cast<std::int64_t>(hits.size()) == 2 * radius + 1 && hits.begin()->first == t - radius &&
                    hits.rbegin()->first == t + radius;
      for (const auto& [v, c] : hits) filled = filled && c == 1;
      if (!filled) return {false, "window I(" + std::to_string(t) + ") for n=" + std::to_string(n)};
      ++windows;
    }
  }
  return {true, std::to_string(round_trips) + " round trips, " + std::to_string(windows) + " windows filled exactly once"};
}

Outcome open_measurements() {
  const std::int64_t N = 100000;
  const DensityReport d = measure_densities(N, 4);
  const RowCensus census = row_class_census(N, 4);
  std::ostringstream detail;
  detail << "empirical - open in paper: s in A " << d.s_in_a.count << "/" << N << " " << d.s_in_a.decimal();
  bool emitted = d.s_in_a.total == N;
  std::int64_t total = 0;
  for (const RowClass& rc : admissible_row_classes()) {
    const auto it = census.counts.find(rc);
    const std::int64_t count = it == census.counts.end() ? 0 : it->second;
    total += count;
    detail << ", " << rc.to_string() << " " << count << "/" << N;
  }
  emitted = emitted && total == N;
  return {emitted, detail.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden tables", golden_tables},
      {"partition property", partition_property},
      {"KLM grid", klm_grid},
      {"identity suite", identity_suite},
      {"Fibonacci shift both directions", fibonacci_shift},
      {"six row classes", six_row_classes},
      {"densities", densities},
      {"limiting prefixes", limiting_prefixes},
      {"structural properties", structural},
      {"open-question measurements (reported)", open_measurements},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
