#include "beatty_lab/classify.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>

#include "beatty_lab/golden.hpp"

namespace beatty_lab {

namespace {

QuadraticReal Q(std::int64_t v) { return QuadraticReal(static_cast<long>(v)); }

void require_positive(std::int64_t k, const char* what) {
  if (k < 1) throw DomainError(std::string(what) + ": index must be at least 1");
}

QuadraticReal sqrt5_over_phi_squared() { return golden::sqrt5() * golden::inv_phi_squared(); }
QuadraticReal sqrt5_over_phi() { return golden::sqrt5() * golden::inv_phi(); }
QuadraticReal sqrt5_over_two_phi() { return sqrt5_over_phi() * golden::one_half(); }

QuadraticReal direct_frac(std::int64_t value) { return (Q(value) * golden::phi()).frac(); }

// Runs fn(lo, hi) over [1, N] in `shards` contiguous blocks and returns the parts in order.
template <typename Fn>
auto run_blocks(std::int64_t N, unsigned shards, Fn fn) {
  using Part = decltype(fn(std::int64_t{1}, std::int64_t{1}));
  shards = std::max(1u, shards);
  const std::int64_t block = std::max<std::int64_t>(1, (N + shards - 1) / shards);
  std::vector<std::future<Part>> futures;
  for (std::int64_t lo = 1; lo <= N; lo += block) {
    const std::int64_t hi = std::min(N, lo + block - 1);
    futures.push_back(std::async(shards > 1 ? std::launch::async : std::launch::deferred,
                                 [fn, lo, hi] { return fn(lo, hi); }));
  }
  std::vector<Part> parts;
  for (auto& f : futures) parts.push_back(f.get());
  return parts;
}

}  // namespace

char to_char(SCDLabel label) {
  switch (label) {
    case SCDLabel::S: return 'S';
    case SCDLabel::C: return 'C';
    case SCDLabel::D: return 'D';
  }
  return '?';
}

std::int64_t column_d(std::int64_t k) {
  require_positive(k, "column_d");
  return 3 * a(k) + k;
}

std::int64_t column_c(std::int64_t k) {
  require_positive(k, "column_c");
  return a(k) + 2 * k - 1;
}

std::int64_t column_s(std::int64_t k) {
  require_positive(k, "column_s");
  return k % 2 == 0 ? column_c(k / 2) + 1 : column_c((k + 1) / 2) - 1;
}

SCDTriple scd(std::int64_t k) { return {k, column_s(k), column_c(k), column_d(k)}; }

QuadraticReal frac_d3(std::int64_t k) {
  require_positive(k, "frac_d3");
  return QuadraticReal(1) - sqrt5_over_phi_squared() * frac_n_phi(k);
}

C3Frac frac_c3(std::int64_t k) {
  require_positive(k, "frac_c3");
  const QuadraticReal x = frac_n_phi(k);
  if (x < golden::inv_sqrt5()) {
    return {InvSqrt5Side::Below, sqrt5_over_phi() * x + QuadraticReal::make(3, -1, 2)};
  }
  return {InvSqrt5Side::Above, sqrt5_over_phi() * x + QuadraticReal::make(1, -1, 2)};
}

std::pair<QuadraticReal, QuadraticReal> c3_plus_phi_d3(std::int64_t k) {
  const C3Frac c = frac_c3(k);
  const QuadraticReal sum = c.value + golden::phi() * frac_d3(k);
  return {sum, QuadraticReal(c.side == InvSqrt5Side::Above ? 1 : 2)};
}

std::vector<QuadraticReal> s3_offsets(bool even) {
  if (even) {
    return {QuadraticReal(0), QuadraticReal::make(1, -1, 4), QuadraticReal::make(5, -1, 4)};
  }
  return {QuadraticReal::make(-1, 0, 2), QuadraticReal::make(1, 0, 2), QuadraticReal::make(3, -1, 4),
          QuadraticReal::make(2, -1, 2), QuadraticReal::make(4, -1, 2)};
}

S3Frac frac_s3(std::int64_t k) {
  require_positive(k, "frac_s3");
  const QuadraticReal x = frac_n_phi(k);
  const QuadraticReal slope = sqrt5_over_two_phi();  // (5 − √5)/4
  S3Frac out{direct_frac(column_s(k)), {}, 0, {}, false};
  out.offset = out.value - slope * x;

  const QuadraticReal half = golden::one_half();
  const bool even = k % 2 == 0;
  if (even) {
    const QuadraticReal h = frac_n_phi(k / 2);
    if (h == half * x) {
      out.halving_case = 1;
      out.predicted = 0;
    } else if (h == half * (QuadraticReal(1) + x)) {
      out.halving_case = 2;
      out.predicted = x > golden::inv_sqrt5() ? QuadraticReal::make(1, -1, 4) : QuadraticReal::make(5, -1, 4);
    }
  } else {
    const QuadraticReal h = frac_n_phi((k + 1) / 2);
    const QuadraticReal& phi = golden::phi();
    if (h == half * phi + half * x) {
      out.halving_case = 1;
      const QuadraticReal inner = slope * x + QuadraticReal::make(2, -1, 2);
      out.predicted = inner.sign() > 0 ? QuadraticReal::make(2, -1, 2) : QuadraticReal::make(4, -1, 2);
    } else if (h == half * (phi - QuadraticReal(1)) + half * x) {
      out.halving_case = 2;
      out.predicted = QuadraticReal::make(3, -1, 4);
    } else if (h == half * (phi - QuadraticReal(2)) + half * x) {
      out.halving_case = 3;
      const QuadraticReal inner = slope * x + half;
      out.predicted = inner < QuadraticReal(1) ? half : -half;
    }
  }
  if (out.halving_case == 0) out.predicted = out.offset + QuadraticReal(1);  // marks the check failed
  const auto allowed = s3_offsets(even);
  out.offset_in_set = std::find(allowed.begin(), allowed.end(), out.offset) != allowed.end();
  return out;
}

std::string RowClass::to_string() const {
  return {beatty_lab::to_char(s), beatty_lab::to_char(c), beatty_lab::to_char(d)};
}

RowClass row_class(std::int64_t k) {
  const SCDTriple t = scd(k);
  return {ab_label(t.s), ab_label(t.c), ab_label(t.d)};
}

std::pair<ABLabel, ABLabel> cd_class_from_breakpoints(std::int64_t k) {
  require_positive(k, "cd_class_from_breakpoints");
  const QuadraticReal x = frac_n_phi(k);
  if (x < golden::inv_sqrt5()) return {ABLabel::A, ABLabel::A};
  if (x < golden::cd_breakpoint()) return {ABLabel::B, ABLabel::A};
  return {ABLabel::A, ABLabel::B};
}

std::vector<RowClass> admissible_row_classes() {
  using enum ABLabel;
  return {{A, A, A}, {A, A, B}, {A, B, A}, {B, A, A}, {B, B, A}, {B, A, B}};
}

std::string Frequency::decimal() const {
  if (den == 0) return "~nan";
  return QuadraticReal::make(num, 0, den).approx(6);
}

Frequency make_frequency(std::int64_t count, std::int64_t total) {
  Frequency f;
  f.count = count;
  f.total = total;
  if (total == 0) {
    f.num = 0;
    f.den = 1;
    return f;
  }
  const std::int64_t g = std::gcd(count, total);
  f.num = count / g;
  f.den = total / g;
  return f;
}

bool RowCensus::only_admissible() const {
  return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.first.admissible(); });
}

RowCensus row_class_census(std::int64_t N, unsigned shards) {
  if (N < 1) throw DomainError("row_class_census: N must be at least 1");
  auto parts = run_blocks(N, shards, [](std::int64_t lo, std::int64_t hi) {
    RowCensus part;
    for (std::int64_t k = lo; k <= hi; ++k) {
      const RowClass rc = row_class(k);
      ++part.counts[rc];
      part.first_k.try_emplace(rc, k);
    }
    return part;
  });
  RowCensus census;
  census.N = N;
  for (const auto& part : parts) {
    for (const auto& [rc, count] : part.counts) census.counts[rc] += count;
    for (const auto& [rc, k] : part.first_k) {
      auto [it, inserted] = census.first_k.try_emplace(rc, k);
      if (!inserted) it->second = std::min(it->second, k);
    }
  }
  return census;
}

ScdTable::ScdTable(std::int64_t limit) {
  const Columns cols = build_columns(PartitionSpec::phi_extension(3), limit);
  labels_.assign(static_cast<std::size_t>(limit), SCDLabel::S);
  std::vector<bool> seen(static_cast<std::size_t>(limit), false);
  const SCDLabel by_column[3] = {SCDLabel::D, SCDLabel::C, SCDLabel::S};
  for (int j = 0; j < 3; ++j) {
    for (std::int64_t v : cols.columns[static_cast<std::size_t>(j)]) {
      const auto idx = static_cast<std::size_t>(v - 1);
      if (seen[idx]) throw std::logic_error("ScdTable: value in two columns");
      seen[idx] = true;
      labels_[idx] = by_column[j];
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::logic_error("ScdTable: columns do not cover the range");
  }
}

SCDLabel ScdTable::operator()(std::int64_t m) const {
  if (m < 1 || m > limit()) throw DomainError("ScdTable: value outside the table");
  return labels_[static_cast<std::size_t>(m - 1)];
}

SCDLabel scd_lookup(std::int64_t m) {
  static const PartitionSpec spec = PartitionSpec::phi_extension(3);
  switch (decompose(m, spec).column) {
    case 1: return SCDLabel::D;
    case 2: return SCDLabel::C;
    default: return SCDLabel::S;
  }
}

std::string to_string(const SCDPair& pair) { return {to_char(pair.first), to_char(pair.second)}; }

PairCensus ab_over_scd_census(std::int64_t N, unsigned shards) {
  if (N < 1) throw DomainError("ab_over_scd_census: N must be at least 1");
  const ScdTable table(b(N));
  auto parts = run_blocks(N, shards, [&table](std::int64_t lo, std::int64_t hi) {
    std::map<SCDPair, std::int64_t> counts;
    for (std::int64_t n = lo; n <= hi; ++n) ++counts[{table(a(n)), table(b(n))}];
    return counts;
  });
  PairCensus census;
  census.N = N;
  for (SCDLabel x : {SCDLabel::S, SCDLabel::C, SCDLabel::D}) {
    for (SCDLabel y : {SCDLabel::S, SCDLabel::C, SCDLabel::D}) census.counts[{x, y}] = 0;
  }
  for (const auto& part : parts) {
    for (const auto& [pair, count] : part) census.counts[pair] += count;
  }
  return census;
}

DensityReport measure_densities(std::int64_t N, unsigned shards) {
  if (N < 1) throw DomainError("measure_densities: N must be at least 1");
  struct Tally {
    std::int64_t c_in_a = 0, a_in_c = 0, a_in_d = 0, s_in_a = 0;
  };
  auto parts = run_blocks(N, shards, [](std::int64_t lo, std::int64_t hi) {
    Tally t;
    for (std::int64_t n = lo; n <= hi; ++n) {
      if (ab_label(c_half(n)) == ABLabel::A) ++t.c_in_a;
      if (cd_label(a(n)) == CDLabel::C) {
        ++t.a_in_c;
      } else {
        ++t.a_in_d;
      }
      if (ab_label(column_s(n)) == ABLabel::A) ++t.s_in_a;
    }
    return t;
  });
  Tally total;
  for (const auto& t : parts) {
    total.c_in_a += t.c_in_a;
    total.a_in_c += t.a_in_c;
    total.a_in_d += t.a_in_d;
    total.s_in_a += t.s_in_a;
  }
  return {N, make_frequency(total.c_in_a, N), make_frequency(total.a_in_c, N),
          make_frequency(total.a_in_d, N), make_frequency(total.s_in_a, N)};
}

}  // namespace beatty_lab
