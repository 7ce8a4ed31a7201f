#pragma once

/**
 * @file classify.hpp
 * @brief How the A/B partition meets the 3-set φ-extension S, C, D.
 *
 * For the n = 3 φ-extension the k-th elements of the three columns are
 *
 *   d(k) = 3a(k) + k,   c(k) = a(k) + 2k − 1,   s(k) = c(k/2) + 1 or c((k+1)/2) − 1,
 *
 * (these c and d are not the C/D Beatty sequences of beatty.hpp). Each row
 * (s, c, d) is labelled by the A/B membership of its entries. Only six of the
 * eight labels occur, because (c, d) is never (B, B).
 *
 * Censuses split the index range into blocks processed concurrently; block
 * tallies are summed, so results do not depend on the shard count.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beatty_lab/beatty.hpp"
#include "beatty_lab/partition.hpp"

namespace beatty_lab {

enum class SCDLabel { S, C, D };
char to_char(SCDLabel label);

struct SCDTriple {
  std::int64_t k;
  std::int64_t s;
  std::int64_t c;
  std::int64_t d;
  friend bool operator==(const SCDTriple&, const SCDTriple&) = default;
};

std::int64_t column_d(std::int64_t k);
std::int64_t column_c(std::int64_t k);
std::int64_t column_s(std::int64_t k);
SCDTriple scd(std::int64_t k);

/// 1 − (√5/φ²){kφ}, the closed form of {d(k)φ}.
QuadraticReal frac_d3(std::int64_t k);

enum class InvSqrt5Side { Below, Above };  // {kφ} < 1/√5 or {kφ} > 1/√5

struct C3Frac {
  InvSqrt5Side side;
  QuadraticReal value;  // (√5/φ){kφ} + (3−√5)/2 below, + (1−√5)/2 above
};
C3Frac frac_c3(std::int64_t k);

/// {c(k)φ} + φ{d(k)φ} from the closed forms, and the 1 or 2 it should equal.
std::pair<QuadraticReal, QuadraticReal> c3_plus_phi_d3(std::int64_t k);

struct S3Frac {
  QuadraticReal value;       // {s(k)φ} computed directly
  QuadraticReal offset;      // realized b = value − (√5/(2φ)){kφ}
  int halving_case;          // which form {(k/2)φ} or {((k+1)/2)φ} takes, 1-based
  QuadraticReal predicted;   // b derived from halving_case and the sub-breakpoint
  bool offset_in_set;        // b is one of the parity-appropriate offsets
  bool holds() const { return offset_in_set && offset == predicted; }
};
S3Frac frac_s3(std::int64_t k);

/// The allowed offsets for even and odd k.
std::vector<QuadraticReal> s3_offsets(bool even);

struct RowClass {
  ABLabel s;
  ABLabel c;
  ABLabel d;

  std::string to_string() const;  // "ABA"
  bool admissible() const { return !(c == ABLabel::B && d == ABLabel::B); }
  friend auto operator<=>(const RowClass&, const RowClass&) = default;
};

RowClass row_class(std::int64_t k);

/// (c, d) labels as predicted by where {kφ} falls against 1/√5 and (5+√5)/10.
std::pair<ABLabel, ABLabel> cd_class_from_breakpoints(std::int64_t k);

/// The six admissible classes in a fixed order.
std::vector<RowClass> admissible_row_classes();

/// count/total as an exact reduced fraction plus a labelled decimal.
struct Frequency {
  std::int64_t count = 0;
  std::int64_t total = 0;
  std::int64_t num = 0;  // reduced
  std::int64_t den = 1;
  std::string decimal() const;  // "~0.20003"
  double approx() const { return total ? static_cast<double>(count) / static_cast<double>(total) : 0.0; }
};
Frequency make_frequency(std::int64_t count, std::int64_t total);

struct RowCensus {
  std::int64_t N = 0;
  std::map<RowClass, std::int64_t> counts;
  std::map<RowClass, std::int64_t> first_k;
  bool only_admissible() const;
};
RowCensus row_class_census(std::int64_t N, unsigned shards = 1);

/// Column label for every m in [1, limit], from the n = 3 φ-extension columns.
class ScdTable {
 public:
  explicit ScdTable(std::int64_t limit);
  SCDLabel operator()(std::int64_t m) const;
  std::int64_t limit() const { return static_cast<std::int64_t>(labels_.size()); }

 private:
  std::vector<SCDLabel> labels_;
};

/// Column of the 3-set φ-extension containing m, via decompose.
SCDLabel scd_lookup(std::int64_t m);

using SCDPair = std::pair<SCDLabel, SCDLabel>;
std::string to_string(const SCDPair& pair);  // "SC"

struct PairCensus {
  std::int64_t N = 0;
  std::map<SCDPair, std::int64_t> counts;  // all nine pairs, zeros included
};
/// Tally of (column of a(n), column of b(n)) for n ∈ [1, N].
PairCensus ab_over_scd_census(std::int64_t N, unsigned shards = 1);

struct DensityReport {
  std::int64_t N = 0;
  Frequency c_half_in_a;   // {n : c(n) ∈ A}, with c(n) = ⌊nφ²/2⌋
  Frequency a_in_c;        // {n : a(n) ∈ C}, with C the ⌊nφ²/2⌋ values
  Frequency a_in_d;        // {n : a(n) ∈ D}
  Frequency s_in_a;        // {k : s(k) ∈ A}; no claim is made about its limit
};
DensityReport measure_densities(std::int64_t N, unsigned shards = 1);

}  // namespace beatty_lab
