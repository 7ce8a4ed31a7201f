#pragma once

/**
 * @file partition.hpp
 * @brief n-set partitions of the positive integers built from a gap sequence.
 *
 * Given n ≥ 2 and a strictly increasing sequence l with l(1) = 2^{n−1} and
 * every gap l(k+1) − l(k) in G = {2^{n−1}, 2^{n−1} + 2^{n−2}, ..., 2^n − 1},
 * the sets
 *
 *   D_1 = {l(k)},  D_{j+1} = {L_j(l(k), E)}  with  L_j(t, E) = t + Σ ε_{n−s}·2^{n−s}, s = 2..j+1,
 *
 * partition the positive integers. The values of all forms at one t fill the
 * window I(t) = [t − (2^{n−1} − 1), t + (2^{n−1} − 1)] exactly once each.
 *
 * Generators come in three flavours: an explicit list of l values, an
 * h-sequence with l(k) = (2^{n−1} − 1)·h(k) + k, or h(k) = ⌊kα⌋ for an exact
 * quadratic α.
 */

#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "beatty_lab/quadratic.hpp"

namespace beatty_lab {

/// α for ⌊kα⌋ generators; √2-type and √5-type values are both exact.
using Alpha = std::variant<QuadraticReal, QuadraticSqrt2>;

std::string describe(const Alpha& alpha);

struct ExplicitList {
  std::vector<std::int64_t> values;  // l(1), l(2), ...
};

struct IdentityH {};
struct FloorAlphaH {
  Alpha alpha;
};
using HSequence = std::variant<IdentityH, FloorAlphaH>;

struct FromH {
  HSequence h;
};

struct FromAlpha {
  Alpha alpha;
};

using Generator = std::variant<ExplicitList, FromH, FromAlpha>;

class PartitionSpec {
 public:
  /// Throws DomainError for n outside [2, 30] or a non-positive α.
  PartitionSpec(int n, Generator generator);

  /// (2^{n−1} − 1)·⌊kφ⌋ + k, the φ-extension.
  static PartitionSpec phi_extension(int n);
  /// (2^{n−1} − 1)·k + k.
  static PartitionSpec identity(int n);

  int n() const { return n_; }
  const Generator& generator() const { return generator_; }

  /// 2^{n−1} − 1, the half-width of every window I(t).
  std::int64_t radius() const { return (std::int64_t{1} << (n_ - 1)) - 1; }

  /// l(k), or nullopt once an explicit list is exhausted. k ≥ 1.
  std::optional<std::int64_t> l(std::int64_t k) const;

  /// Number of l values available, or nullopt when unbounded.
  std::optional<std::int64_t> length() const;

  /// True for h(k) = ⌊kφ⌋, in either FromH or FromAlpha form.
  bool is_phi_extension() const;

  std::string describe() const;

 private:
  int n_;
  Generator generator_;
};

/// {Σ_{i=1}^{b} 2^{n−i} : 1 ≤ b ≤ n}, ascending. Throws DomainError for n < 2.
std::vector<std::int64_t> gap_set(int n);

struct GeneratorReport {
  bool ok = true;
  std::optional<std::int64_t> violation_index;  // first k at which the hypotheses fail
  std::string reason;
  std::vector<std::int64_t> values;  // l(1..count) as far as materialized
};

/// Checks l(1) = 2^{n−1} and every gap ∈ G over l(1..count).
GeneratorReport validate_generator(const PartitionSpec& spec, std::int64_t count);

/// Thrown by build_columns when the generator breaks the hypotheses.
class GeneratorViolation : public std::runtime_error {
 public:
  explicit GeneratorViolation(GeneratorReport report);
  const GeneratorReport& report() const { return report_; }

 private:
  GeneratorReport report_;
};

/// Signs ε_{n−2}, ε_{n−3}, ..., in the order the linear forms consume them.
class SignVector {
 public:
  SignVector() = default;
  /// Throws DomainError when an entry is not ±1.
  explicit SignVector(std::vector<int> epsilons);

  std::size_t size() const { return eps_.size(); }
  int operator[](std::size_t i) const { return eps_[i]; }
  std::span<const int> view() const { return eps_; }
  SignVector prefix(std::size_t length) const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

  std::string to_string() const;  // "(-1,+1)"

 private:
  std::vector<int> eps_;
};

/// L_j(t, E) = t + Σ_{s=2}^{j+1} ε_{n−s}·2^{n−s}. `signs` holds exactly j entries,
/// else ArityError. j must lie in [0, n − 1].
std::int64_t linear_form(int n, std::int64_t t, int j, std::span<const int> signs);
inline std::int64_t linear_form(int n, std::int64_t t, int j, const SignVector& signs) {
  return linear_form(n, t, j, signs.view());
}

/// All 2^j sign prefixes of length j, in lexicographic order with −1 < +1.
std::vector<SignVector> all_sign_prefixes(int j);

/// Column D_{j+1} as an ascending, duplicate-free stream. Windows I(l(k)) are
/// processed in order of k; a value is released once no later window can
/// produce anything smaller.
class ColumnStream {
 public:
  /// column is 1-based. A start or gap violation throws GeneratorViolation
  /// when the stream reaches it.
  ColumnStream(PartitionSpec spec, int column);

  /// Next value, or nullopt when an explicit generator is exhausted.
  std::optional<std::int64_t> next();

 private:
  void feed(std::int64_t k, std::int64_t value);

  PartitionSpec spec_;
  int column_;
  std::int64_t next_k_ = 1;
  std::optional<std::int64_t> prev_l_;
  std::optional<std::int64_t> lookahead_;  // l(next_k_) once computed
  std::optional<std::int64_t> last_emitted_;
  std::priority_queue<std::int64_t, std::vector<std::int64_t>, std::greater<>> pending_;
  std::vector<std::int64_t> offsets_;  // every Σ ε·2^{n−s} for this column
  bool exhausted_ = false;
};

struct Columns {
  int n = 0;
  std::int64_t limit = 0;
  std::vector<std::vector<std::int64_t>> columns;  // columns[0] is D_1
};

/// D_1..D_n restricted to [1, limit], each strictly increasing.
/// Throws GeneratorViolation if the generator breaks the hypotheses in range.
Columns build_columns(const PartitionSpec& spec, std::int64_t limit);

struct Decomposition {
  int column = 0;         // j in [1, n]
  std::int64_t k = 0;     // generator index; the smallest one when windows overlap
  SignVector signs;       // length column − 1

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Column, generator index and signs with m = L_{column−1}(l(k), signs).
/// Throws DomainError for m < 1 and std::runtime_error when the generator
/// cannot reach m (an exhausted explicit list).
Decomposition decompose(std::int64_t m, const PartitionSpec& spec);

/// Value of a decomposition: L_{column−1}(l(k), signs).
std::int64_t reconstruct(const Decomposition& dec, const PartitionSpec& spec);

struct VerificationReport {
  bool covered = true;
  bool disjoint = true;
  std::optional<std::int64_t> first_defect;  // smallest m missing or in two columns
  bool ok() const { return covered && disjoint; }
};

/// Bitmap check that every m ∈ [1, limit] lies in exactly one column. The
/// generator is taken as given (no validation), so broken generators show up
/// as defects. The range is split into `shards` blocks checked concurrently.
VerificationReport verify_partition(const PartitionSpec& spec, std::int64_t limit, unsigned shards = 1);

/// a(k) + (2^{n−1} − 2)k − (2^{n−2} − 1), the k-th element of D_2 for the
/// φ-extension. Throws UnsupportedGenerator for other generators.
std::int64_t d2_closed_form(const PartitionSpec& spec, std::int64_t k);
std::int64_t d2_closed_form(int n, std::int64_t k);

/// Whether the first 2^{n−e−1} elements of column n − e are 2^e·(1, 3, ..., 2^{n−e} − 1).
bool limiting_prefix_check(const PartitionSpec& spec, int e);
/// Same, on the identity-h spec.
bool limiting_prefix_check(int n, int e);

}  // namespace beatty_lab
