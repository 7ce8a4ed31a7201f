#include "beatty_lab/partition.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <future>
#include <limits>
#include <sstream>

#include "beatty_lab/beatty.hpp"
#include "beatty_lab/golden.hpp"

namespace beatty_lab {

namespace {

constexpr int kMaxN = 30;

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

std::int64_t floor_alpha(const Alpha& alpha, std::int64_t k) {
  return std::visit([k](const auto& x) { return beatty_term(x, k); }, alpha);
}

bool alpha_positive(const Alpha& alpha) {
  return std::visit([](const auto& x) { return x.sign() > 0; }, alpha);
}

// Σ_{s=2}^{j+1} ε_{n−s}·2^{n−s} over every sign prefix of length j.
std::vector<std::int64_t> form_offsets(int n, int j) {
  std::vector<std::int64_t> out{0};
  for (int s = 2; s <= j + 1; ++s) {
    const std::int64_t step = pow2(n - s);
    std::vector<std::int64_t> next;
    next.reserve(out.size() * 2);
    for (std::int64_t o : out) {
      next.push_back(o - step);
      next.push_back(o + step);
    }
    out = std::move(next);
  }
  return out;
}

bool in_gap_set(int n, std::int64_t gap) {
  const auto gaps = gap_set(n);
  return std::binary_search(gaps.begin(), gaps.end(), gap);
}

}  // namespace

std::string describe(const Alpha& alpha) {
  return std::visit([](const auto& x) { return x.to_string(); }, alpha);
}

PartitionSpec::PartitionSpec(int n, Generator generator) : n_(n), generator_(std::move(generator)) {
  if (n_ < 2 || n_ > kMaxN) throw DomainError("partition: n must lie in [2, 30]");
  auto check_alpha = [](const Alpha& alpha) {
    if (!alpha_positive(alpha)) throw DomainError("partition: alpha must be positive");
  };
  if (const auto* h = std::get_if<FromH>(&generator_)) {
    if (const auto* fa = std::get_if<FloorAlphaH>(&h->h)) check_alpha(fa->alpha);
  } else if (const auto* fa = std::get_if<FromAlpha>(&generator_)) {
    check_alpha(fa->alpha);
  }
}

PartitionSpec PartitionSpec::phi_extension(int n) {
  return PartitionSpec(n, FromH{FloorAlphaH{golden::phi()}});
}

PartitionSpec PartitionSpec::identity(int n) { return PartitionSpec(n, FromH{IdentityH{}}); }

std::optional<std::int64_t> PartitionSpec::l(std::int64_t k) const {
  if (k < 1) throw DomainError("partition: generator index must be at least 1");
  const std::int64_t r = radius();
  return std::visit(
      [&](const auto& g) -> std::optional<std::int64_t> {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, ExplicitList>) {
          if (k > static_cast<std::int64_t>(g.values.size())) return std::nullopt;
          return g.values[static_cast<std::size_t>(k - 1)];
        } else if constexpr (std::is_same_v<G, FromH>) {
          const std::int64_t h = std::holds_alternative<IdentityH>(g.h)
                                      ? k
                                      : floor_alpha(std::get<FloorAlphaH>(g.h).alpha, k);
          return r * h + k;
        } else {
          return r * floor_alpha(g.alpha, k) + k;
        }
      },
      generator_);
}

std::optional<std::int64_t> PartitionSpec::length() const {
  if (const auto* list = std::get_if<ExplicitList>(&generator_)) {
    return static_cast<std::int64_t>(list->values.size());
  }
  return std::nullopt;
}

bool PartitionSpec::is_phi_extension() const {
  const Alpha* alpha = nullptr;
  if (const auto* h = std::get_if<FromH>(&generator_)) {
    if (const auto* fa = std::get_if<FloorAlphaH>(&h->h)) alpha = &fa->alpha;
  } else if (const auto* fa = std::get_if<FromAlpha>(&generator_)) {
    alpha = &fa->alpha;
  }
  if (alpha == nullptr) return false;
  const auto* x = std::get_if<QuadraticReal>(alpha);
  return x != nullptr && *x == golden::phi();
}

std::string PartitionSpec::describe() const {
  std::ostringstream os;
  os << "n=" << n_ << " ";
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, ExplicitList>) {
          os << "explicit(" << g.values.size() << " values)";
        } else if constexpr (std::is_same_v<G, FromH>) {
          if (std::holds_alternative<IdentityH>(g.h)) {
            os << "h=identity";
          } else {
            os << "h=floor(k*" << beatty_lab::describe(std::get<FloorAlphaH>(g.h).alpha) << ")";
          }
        } else {
          os << "alpha=" << beatty_lab::describe(g.alpha);
        }
      },
      generator_);
  return os.str();
}

std::vector<std::int64_t> gap_set(int n) {
  if (n < 2) throw DomainError("gap_set: n must be at least 2");
  if (n > kMaxN) throw DomainError("gap_set: n must be at most 30");
  std::vector<std::int64_t> gaps;
  std::int64_t sum = 0;
  for (int i = 1; i <= n; ++i) {
    sum += pow2(n - i);
    gaps.push_back(sum);
  }
  return gaps;
}

GeneratorReport validate_generator(const PartitionSpec& spec, std::int64_t count) {
  GeneratorReport report;
  const int n = spec.n();
  for (std::int64_t k = 1; k <= count; ++k) {
    const auto value = spec.l(k);
    if (!value) break;
    report.values.push_back(*value);
    if (k == 1 && *value != pow2(n - 1)) {
      report.ok = false;
      report.violation_index = 1;
      report.reason = "l(1) = " + std::to_string(*value) + ", expected " + std::to_string(pow2(n - 1));
      break;
    }
    if (k > 1) {
      const std::int64_t gap = *value - report.values[report.values.size() - 2];
      if (!in_gap_set(n, gap)) {
        report.ok = false;
        report.violation_index = k;
        report.reason = "gap l(" + std::to_string(k) + ") - l(" + std::to_string(k - 1) +
                        ") = " + std::to_string(gap) + " is not in G";
        break;
      }
    }
  }
  return report;
}

GeneratorViolation::GeneratorViolation(GeneratorReport report)
    : std::runtime_error("generator violation: " + report.reason), report_(std::move(report)) {}

SignVector::SignVector(std::vector<int> epsilons) : eps_(std::move(epsilons)) {
  for (int e : eps_) {
    if (e != 1 && e != -1) throw DomainError("SignVector: entries must be -1 or +1");
  }
}

SignVector SignVector::prefix(std::size_t length) const {
  if (length > eps_.size()) throw ArityError("SignVector::prefix: longer than the vector");
  return SignVector(std::vector<int>(eps_.begin(), eps_.begin() + static_cast<std::ptrdiff_t>(length)));
}

std::string SignVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < eps_.size(); ++i) {
    if (i) out += ",";
    out += eps_[i] > 0 ? "+1" : "-1";
  }
  return out + ")";
}

std::int64_t linear_form(int n, std::int64_t t, int j, std::span<const int> signs) {
  if (n < 2 || n > kMaxN) throw DomainError("linear_form: n must lie in [2, 30]");
  if (j < 0 || j > n - 1) throw DomainError("linear_form: j must lie in [0, n-1]");
  if (static_cast<int>(signs.size()) != j) {
    throw ArityError("linear_form: L_" + std::to_string(j) + " needs " + std::to_string(j) +
                     " signs, got " + std::to_string(signs.size()));
  }
  std::int64_t value = t;
  for (int i = 0; i < j; ++i) {
    if (signs[static_cast<std::size_t>(i)] != 1 && signs[static_cast<std::size_t>(i)] != -1) {
      throw DomainError("linear_form: signs must be -1 or +1");
    }
    value += signs[static_cast<std::size_t>(i)] * pow2(n - 2 - i);
  }
  return value;
}

std::vector<SignVector> all_sign_prefixes(int j) {
  if (j < 0 || j > kMaxN) throw DomainError("all_sign_prefixes: length out of range");
  std::vector<SignVector> out;
  out.reserve(static_cast<std::size_t>(pow2(j)));
  for (std::int64_t mask = 0; mask < pow2(j); ++mask) {
    std::vector<int> eps(static_cast<std::size_t>(j));
    for (int i = 0; i < j; ++i) eps[static_cast<std::size_t>(i)] = (mask >> (j - 1 - i)) & 1 ? 1 : -1;
    out.emplace_back(std::move(eps));
  }
  return out;
}

ColumnStream::ColumnStream(PartitionSpec spec, int column)
    : spec_(std::move(spec)), column_(column) {
  if (column_ < 1 || column_ > spec_.n()) throw DomainError("ColumnStream: column must lie in [1, n]");
  offsets_ = form_offsets(spec_.n(), column_ - 1);
}

void ColumnStream::feed(std::int64_t k, std::int64_t value) {
  const int n = spec_.n();
  GeneratorReport report;
  if (k == 1 && value != pow2(n - 1)) {
    report.reason = "l(1) = " + std::to_string(value) + ", expected " + std::to_string(pow2(n - 1));
  } else if (prev_l_ && !in_gap_set(n, value - *prev_l_)) {
    report.reason = "gap l(" + std::to_string(k) + ") - l(" + std::to_string(k - 1) + ") = " +
                    std::to_string(value - *prev_l_) + " is not in G";
  }
  if (!report.reason.empty()) {
    report.ok = false;
    report.violation_index = k;
    throw GeneratorViolation(std::move(report));
  }
  prev_l_ = value;
  for (std::int64_t o : offsets_) pending_.push(value + o);
}

std::optional<std::int64_t> ColumnStream::next() {
  while (true) {
    if (!exhausted_ && !lookahead_) {
      lookahead_ = spec_.l(next_k_);
      if (!lookahead_) exhausted_ = true;
    }
    // Everything below the next window's floor is final.
    const std::int64_t threshold =
        exhausted_ ? std::numeric_limits<std::int64_t>::max() : *lookahead_ - spec_.radius();
    if (!pending_.empty() && pending_.top() < threshold) {
      const std::int64_t v = pending_.top();
      pending_.pop();
      if (last_emitted_ && *last_emitted_ == v) continue;  // overlapping windows
      last_emitted_ = v;
      return v;
    }
    if (exhausted_) return std::nullopt;
    feed(next_k_++, *lookahead_);
    lookahead_.reset();
  }
}

Columns build_columns(const PartitionSpec& spec, std::int64_t limit) {
  Columns out;
  out.n = spec.n();
  out.limit = limit;
  for (int j = 1; j <= spec.n(); ++j) {
    ColumnStream stream(spec, j);
    std::vector<std::int64_t> column;
    while (auto v = stream.next()) {
      if (*v > limit) break;
      column.push_back(*v);
    }
    out.columns.push_back(std::move(column));
  }
  return out;
}

namespace {

// Solve r = Σ_{i<j} ε_i·2^{n−2−i}: the number of terms is fixed by the
// 2-adic valuation of r, the signs by the greedy choice.
std::optional<std::pair<int, SignVector>> solve_offset(int n, std::int64_t r) {
  if (r == 0) return std::make_pair(0, SignVector{});
  const int valuation = std::countr_zero(static_cast<std::uint64_t>(std::llabs(r)));
  const int j = n - 1 - valuation;
  if (j < 1 || j > n - 1) return std::nullopt;
  std::vector<int> eps;
  std::int64_t rem = r;
  for (int i = 0; i < j; ++i) {
    const int e = rem > 0 ? 1 : -1;
    eps.push_back(e);
    rem -= e * pow2(n - 2 - i);
  }
  if (rem != 0) return std::nullopt;
  return std::make_pair(j, SignVector(std::move(eps)));
}

}  // namespace

Decomposition decompose(std::int64_t m, const PartitionSpec& spec) {
  if (m < 1) throw DomainError("decompose: m must be at least 1");
  const std::int64_t radius = spec.radius();
  // Smallest k with l(k) + radius ≥ m. Valid generators have l(k) ≥ k·2^{n−1}.
  std::int64_t lo = 1;
  std::int64_t hi = m / pow2(spec.n() - 1) + 2;
  if (const auto len = spec.length()) hi = std::min(hi, *len);
  if (hi < 1 || *spec.l(hi) + radius < m) {
    throw std::runtime_error("decompose: generator does not reach " + std::to_string(m));
  }
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (*spec.l(mid) + radius >= m) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  for (std::int64_t k = lo; k <= lo + 1; ++k) {
    const auto t = spec.l(k);
    if (!t || std::llabs(m - *t) > radius) continue;
    if (auto solved = solve_offset(spec.n(), m - *t)) {
      return {solved->first + 1, k, std::move(solved->second)};
    }
  }
  throw std::logic_error("decompose: no representation for " + std::to_string(m));
}

std::int64_t reconstruct(const Decomposition& dec, const PartitionSpec& spec) {
  const auto t = spec.l(dec.k);
  if (!t) throw std::runtime_error("reconstruct: generator index out of range");
  return linear_form(spec.n(), *t, dec.column - 1, dec.signs);
}

namespace {

struct ShardResult {
  std::optional<std::int64_t> missing;
  std::optional<std::int64_t> clash;
};

ShardResult verify_range(const PartitionSpec& spec, std::int64_t lo, std::int64_t hi) {
  const int n = spec.n();
  const std::int64_t radius = spec.radius();
  std::vector<std::vector<std::int64_t>> offsets;
  for (int j = 0; j < n; ++j) offsets.push_back(form_offsets(n, j));

  std::vector<std::uint8_t> label(static_cast<std::size_t>(hi - lo + 1), 0);
  ShardResult result;
  // l(k) ≥ k for every admissible generator, so k never needs to pass hi + radius.
  for (std::int64_t k = 1; k <= hi + radius + 1; ++k) {
    const auto t = spec.l(k);
    if (!t) break;
    if (*t - radius > hi && !spec.length()) break;  // h-generators are increasing
    if (*t + radius < lo || *t - radius > hi) continue;
    for (int j = 0; j < n; ++j) {
      for (std::int64_t o : offsets[static_cast<std::size_t>(j)]) {
        const std::int64_t v = *t + o;
        if (v < lo || v > hi) continue;
        auto& slot = label[static_cast<std::size_t>(v - lo)];
        const auto column = static_cast<std::uint8_t>(j + 1);
        if (slot == 0) {
          slot = column;
        } else if (slot != column) {
          if (!result.clash || v < *result.clash) result.clash = v;
        }
      }
    }
  }
  for (std::int64_t v = lo; v <= hi; ++v) {
    if (label[static_cast<std::size_t>(v - lo)] == 0) {
      result.missing = v;
      break;
    }
  }
  return result;
}

}  // namespace

VerificationReport verify_partition(const PartitionSpec& spec, std::int64_t limit, unsigned shards) {
  VerificationReport report;
  if (limit < 1) return report;
  shards = std::max(1u, shards);
  const std::int64_t block = (limit + shards - 1) / shards;
  std::vector<std::future<ShardResult>> parts;
  for (std::int64_t lo = 1; lo <= limit; lo += block) {
    const std::int64_t hi = std::min(limit, lo + block - 1);
    parts.push_back(std::async(shards > 1 ? std::launch::async : std::launch::deferred,
                               [&spec, lo, hi] { return verify_range(spec, lo, hi); }));
  }
  for (auto& part : parts) {
    const ShardResult r = part.get();
    if (r.missing) {
      report.covered = false;
      if (!report.first_defect || *r.missing < *report.first_defect) report.first_defect = r.missing;
    }
    if (r.clash) {
      report.disjoint = false;
      if (!report.first_defect || *r.clash < *report.first_defect) report.first_defect = r.clash;
    }
  }
  return report;
}

std::int64_t d2_closed_form(const PartitionSpec& spec, std::int64_t k) {
  if (!spec.is_phi_extension()) {
    throw UnsupportedGenerator("d2_closed_form: only derived for h(k) = floor(k*phi)");
  }
  return d2_closed_form(spec.n(), k);
}

std::int64_t d2_closed_form(int n, std::int64_t k) {
  if (n < 2 || n > kMaxN) throw DomainError("d2_closed_form: n must lie in [2, 30]");
  return a(k) + (pow2(n - 1) - 2) * k - (pow2(n - 2) - 1);
}

bool limiting_prefix_check(const PartitionSpec& spec, int e) {
  const int n = spec.n();
  if (e < 0 || e > n - 1) throw DomainError("limiting_prefix_check: e must lie in [0, n-1]");
  const std::int64_t count = pow2(n - e - 1);
  ColumnStream stream(spec, n - e);
  for (std::int64_t i = 1; i <= count; ++i) {
    const auto v = stream.next();
    if (!v || *v != pow2(e) * (2 * i - 1)) return false;
  }
  return true;
}

bool limiting_prefix_check(int n, int e) { return limiting_prefix_check(PartitionSpec::identity(n), e); }

}  // namespace beatty_lab
