#pragma once

/**
 * @file beatty.hpp
 * @brief The golden Beatty sequences and their fractional-part identities.
 *
 *   a(n) = ⌊nφ⌋        b(n) = ⌊nφ²⌋        (the A/B partition)
 *   c(n) = ⌊nφ²/2⌋     d(n) = ⌊nφ³⌋        (the C/D partition)
 *
 * Every value is an exact floor in Q(√5). Every breakpoint comparison
 * ({nφ} against 1/2, λ, 1/√5, ...) is exact; an equality would mean an
 * arithmetic bug because the breakpoints are never hit by irrational {nφ}.
 */

#include <cstdint>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "beatty_lab/golden.hpp"
#include "beatty_lab/quadratic.hpp"

namespace beatty_lab {

enum class ABLabel { A, B };
enum class CDLabel { C, D };

/// The four pieces (0, 1/φ²), (1/φ², 1/2), (1/2, (4−√5)/2), ((4−√5)/2, 1) of the unit interval.
enum class IntervalLabel { I1, I2, I3, I4 };

char to_char(ABLabel label);
char to_char(CDLabel label);
std::string to_string(IntervalLabel label);

/// Narrowing that throws std::overflow_error instead of wrapping.
std::int64_t to_int64(const BigInt& value);

std::int64_t a(std::int64_t n);
std::int64_t b(std::int64_t n);
std::int64_t c_half(std::int64_t n);
std::int64_t d_cubed(std::int64_t n);

/// ⌊k·alpha⌋ for alpha > 0 and k ≥ 1.
template <unsigned R>
std::int64_t beatty_term(const Quadratic<R>& alpha, std::int64_t k) {
  if (alpha.sign() <= 0) throw DomainError("beatty_term: alpha must be positive");
  if (k < 1) throw DomainError("beatty_term: index must be at least 1");
  return to_int64((Quadratic<R>(static_cast<long>(k)) * alpha).floor());
}

/// K·b(n) + L·a(n) + ⌊Mφ + (Lφ − K)·{nφ}/φ⌋, which equals a(K·a(n) + L·n + M).
/// Throws DomainError unless K·a(n) + L·n + M ≥ 1.
std::int64_t klm(std::int64_t K, std::int64_t L, std::int64_t M, std::int64_t n);

/// 1 − {nφ}/φ, the closed form of {a(n)φ}.
QuadraticReal frac_a(std::int64_t n);
/// {nφ}/φ², the closed form of {b(n)φ}.
QuadraticReal frac_b(std::int64_t n);

/// A iff {mφ} > 1/φ².
ABLabel ab_label(std::int64_t m);
/// C iff {mφ} falls in I1 ∪ I3.
CDLabel cd_label(std::int64_t m);
IntervalLabel interval_of(const QuadraticReal& unit_value);

struct ABClass {
  ABLabel label;
  std::int64_t witness;  // a(witness) == m or b(witness) == m
};

struct CDClass {
  CDLabel label;
  std::int64_t witness;  // c_half(witness) == m or d_cubed(witness) == m
};

/// Label plus the index i with a(i) = m or b(i) = m, validated by recomputation.
ABClass classify_ab(std::int64_t m);
CDClass classify_cd(std::int64_t m);

enum class HalfSide { Below, Above };  // {nφ} < 1/2 or {nφ} > 1/2

/// d(n) = 2a(n) + n, plus one when {nφ} > 1/2.
struct DCubedSplit {
  HalfSide side;
  std::int64_t by_formula;
  std::int64_t direct;
  bool holds() const { return by_formula == direct; }
};
DCubedSplit d_cubed_split(std::int64_t n);

/// c(2n+1) = b(n) + e(n) with e(n) = 1 below λ and 2 above.
struct COddSplit {
  int e;
  std::int64_t by_formula;
  std::int64_t direct;
  bool holds() const { return by_formula == direct; }
};
COddSplit c_half_odd_split(std::int64_t n);

struct DIntervalCheck {
  HalfSide side;
  QuadraticReal value;        // {d(n)φ} computed directly
  QuadraticReal closed_form;  // 1 − (√5−2){nφ} or 1/φ − (√5−2){nφ}
  bool in_interval;
  bool holds() const { return in_interval && value == closed_form; }
};
DIntervalCheck frac_d_interval(std::int64_t n);

enum class CCase { Even, OddBelowLambda, OddAboveLambda };
std::string to_string(CCase kase);

/// φ³{c(m)φ} − φ{nφ} ∈ {0, φ², 1}, split by the parity of m and {nφ} against λ.
struct CFracCheck {
  CCase kase;
  std::int64_t n;  // m = 2n or m = 2n + 1
  QuadraticReal frac;      // {c(m)φ}
  QuadraticReal lhs;       // φ³{c(m)φ} − φ{nφ}
  QuadraticReal expected;  // 0, φ² or 1
  bool in_interval;        // (0, (3−√5)/2) for even m, (1/2, (4−√5)/2) for odd m
  bool holds() const { return in_interval && lhs == expected; }
};
/// Throws DomainError for m < 2: the odd case is only stated from m = 3.
CFracCheck frac_c_cases(std::int64_t m);

/// (label of c(n), label of d(n)) in the A/B partition.
std::pair<ABLabel, ABLabel> cd_pair_class(std::int64_t n);
/// (label of a(n), label of b(n)) in the C/D partition.
std::pair<CDLabel, CDLabel> ab_pair_class(std::int64_t n);

/// φ^r{mφ} − φ^{r−2}{nφ}, with φ^{−1} = φ − 1 for r = 1. r must be odd.
QuadraticReal fib_shift_lhs(unsigned r, std::int64_t m, std::int64_t n);

struct FibShift {
  std::int64_t m;             // a(n) + n + F_r
  QuadraticReal lhs;          // φ^r{mφ} − φ^{r−2}{nφ}
  BigInt floor_value;         // ⌊F_r·φ + (φ−1){nφ}/φ⌋
  BigInt expected_floor;      // F_{r+1}
  bool identity_holds() const { return lhs == QuadraticReal(1); }
  bool floor_holds() const { return floor_value == expected_floor; }
};
/// Throws DomainError for even r, r = 0 or n < 1.
FibShift fib_shift(unsigned r, std::int64_t n);

/// Every m in [1, search_bound] with φ^r{mφ} − φ^{r−2}{nφ} = 1, by exhaustive test.
std::vector<std::int64_t> fib_shift_converse(unsigned r, std::int64_t n, std::int64_t search_bound);

/// Memoized prefixes of a, b, c, d. Internally locked; results are identical
/// to the uncached functions.
class PrefixCache {
 public:
  enum class Sequence { A, B, CHalf, DCubed };

  std::int64_t get(Sequence seq, std::int64_t n);
  std::size_t size(Sequence seq) const;

 private:
  mutable std::mutex mutex_;
  std::vector<std::int64_t> prefixes_[4];
};

}  // namespace beatty_lab
