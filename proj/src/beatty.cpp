#include "beatty_lab/beatty.hpp"

#include <limits>
#include <stdexcept>

namespace beatty_lab {

namespace {

QuadraticReal Q(std::int64_t v) { return QuadraticReal(static_cast<long>(v)); }

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": index must be at least 1");
}

std::int64_t floor_times(const QuadraticReal& alpha, std::int64_t n) {
  return to_int64((Q(n) * alpha).floor());
}

// One of i0 − 1, i0, i0 + 1 maps to m under seq; validated, never assumed.
template <typename Seq>
std::int64_t invert_near(Seq seq, std::int64_t guess, std::int64_t m) {
  for (std::int64_t i : {guess, guess - 1, guess + 1}) {
    if (i >= 1 && seq(i) == m) return i;
  }
  return 0;
}

}  // namespace

char to_char(ABLabel label) { return label == ABLabel::A ? 'A' : 'B'; }
char to_char(CDLabel label) { return label == CDLabel::C ? 'C' : 'D'; }

std::string to_string(IntervalLabel label) {
  switch (label) {
    case IntervalLabel::I1: return "I1";
    case IntervalLabel::I2: return "I2";
    case IntervalLabel::I3: return "I3";
    case IntervalLabel::I4: return "I4";
  }
  return "?";
}

std::string to_string(CCase kase) {
  switch (kase) {
    case CCase::Even: return "even";
    case CCase::OddBelowLambda: return "odd<lambda";
    case CCase::OddAboveLambda: return "odd>lambda";
  }
  return "?";
}

std::int64_t to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits");
  return value.get_si();
}

std::int64_t a(std::int64_t n) {
  require_positive(n, "a");
  return floor_times(golden::phi(), n);
}

std::int64_t b(std::int64_t n) {
  require_positive(n, "b");
  return floor_times(golden::phi_squared(), n);
}

std::int64_t c_half(std::int64_t n) {
  require_positive(n, "c");
  return floor_times(golden::half_phi_squared(), n);
}

std::int64_t d_cubed(std::int64_t n) {
  require_positive(n, "d");
  return floor_times(golden::phi_cubed(), n);
}

std::int64_t klm(std::int64_t K, std::int64_t L, std::int64_t M, std::int64_t n) {
  require_positive(n, "klm");
  const std::int64_t an = a(n);
  if (K * an + L * n + M < 1) throw DomainError("klm: argument K·a(n) + L·n + M must be positive");
  const QuadraticReal correction =
      Q(M) * golden::phi() + (Q(L) * golden::phi() - Q(K)) * frac_n_phi(n) * golden::inv_phi();
  return K * b(n) + L * an + to_int64(correction.floor());
}

QuadraticReal frac_a(std::int64_t n) {
  require_positive(n, "frac_a");
  return QuadraticReal(1) - frac_n_phi(n) * golden::inv_phi();
}

QuadraticReal frac_b(std::int64_t n) {
  require_positive(n, "frac_b");
  return frac_n_phi(n) * golden::inv_phi_squared();
}

IntervalLabel interval_of(const QuadraticReal& x) {
  if (x < golden::inv_phi_squared()) return IntervalLabel::I1;
  if (x < golden::one_half()) return IntervalLabel::I2;
  if (x < golden::four_minus_sqrt5_half()) return IntervalLabel::I3;
  return IntervalLabel::I4;
}

ABLabel ab_label(std::int64_t m) {
  require_positive(m, "ab_label");
  return frac_n_phi(m) > golden::inv_phi_squared() ? ABLabel::A : ABLabel::B;
}

CDLabel cd_label(std::int64_t m) {
  require_positive(m, "cd_label");
  const IntervalLabel where = interval_of(frac_n_phi(m));
  return (where == IntervalLabel::I1 || where == IntervalLabel::I3) ? CDLabel::C : CDLabel::D;
}

ABClass classify_ab(std::int64_t m) {
  const ABLabel label = ab_label(m);
  std::int64_t witness = 0;
  if (label == ABLabel::A) {
    witness = invert_near(a, floor_times(golden::inv_phi(), m + 1), m);
  } else {
    witness = invert_near(b, floor_times(golden::inv_phi_squared(), m + 1), m);
  }
  if (witness == 0) throw std::logic_error("classify_ab: witness did not validate for m = " + std::to_string(m));
  return {label, witness};
}

CDClass classify_cd(std::int64_t m) {
  const CDLabel label = cd_label(m);
  std::int64_t witness = 0;
  if (label == CDLabel::C) {
    // 2/φ² = 3 − √5
    witness = invert_near(c_half, floor_times(QuadraticReal::make(3, -1, 1), m + 1), m);
  } else {
    // 1/φ³ = √5 − 2
    witness = invert_near(d_cubed, floor_times(QuadraticReal::make(-2, 1, 1), m + 1), m);
  }
  if (witness == 0) throw std::logic_error("classify_cd: witness did not validate for m = " + std::to_string(m));
  return {label, witness};
}

DCubedSplit d_cubed_split(std::int64_t n) {
  require_positive(n, "d_cubed_split");
  const HalfSide side = frac_n_phi(n) < golden::one_half() ? HalfSide::Below : HalfSide::Above;
  const std::int64_t formula = 2 * a(n) + n + (side == HalfSide::Above ? 1 : 0);
  return {side, formula, d_cubed(n)};
}

COddSplit c_half_odd_split(std::int64_t n) {
  require_positive(n, "c_half_odd_split");
  const int e = frac_n_phi(n) < golden::lambda() ? 1 : 2;
  return {e, b(n) + e, c_half(2 * n + 1)};
}

DIntervalCheck frac_d_interval(std::int64_t n) {
  require_positive(n, "frac_d_interval");
  const QuadraticReal x = frac_n_phi(n);
  const QuadraticReal slope = golden::sqrt5() - QuadraticReal(2);
  DIntervalCheck out{HalfSide::Below, (Q(d_cubed(n)) * golden::phi()).frac(), {}, false};
  if (x < golden::one_half()) {
    out.side = HalfSide::Below;
    out.closed_form = QuadraticReal(1) - slope * x;
    out.in_interval = golden::four_minus_sqrt5_half() < out.value && out.value < QuadraticReal(1);
  } else {
    out.side = HalfSide::Above;
    out.closed_form = golden::inv_phi() - slope * x;
    out.in_interval = golden::three_minus_sqrt5_half() < out.value && out.value < golden::one_half();
  }
  return out;
}

CFracCheck frac_c_cases(std::int64_t m) {
  if (m < 2) throw DomainError("frac_c_cases: m = 1 is outside the stated range (odd case starts at m = 3)");
  const std::int64_t n = m / 2;
  const QuadraticReal x = frac_n_phi(n);
  CFracCheck out{CCase::Even, n, (Q(c_half(m)) * golden::phi()).frac(), {}, {}, false};
  out.lhs = golden::phi_cubed() * out.frac - golden::phi() * x;
  if (m % 2 == 0) {
    out.kase = CCase::Even;
    out.expected = 0;
    out.in_interval = out.frac.sign() > 0 && out.frac < golden::three_minus_sqrt5_half();
  } else {
    out.kase = x < golden::lambda() ? CCase::OddBelowLambda : CCase::OddAboveLambda;
    out.expected = out.kase == CCase::OddBelowLambda ? golden::phi_squared() : QuadraticReal(1);
    out.in_interval = golden::one_half() < out.frac && out.frac < golden::four_minus_sqrt5_half();
  }
  return out;
}

std::pair<ABLabel, ABLabel> cd_pair_class(std::int64_t n) {
  return {ab_label(c_half(n)), ab_label(d_cubed(n))};
}

std::pair<CDLabel, CDLabel> ab_pair_class(std::int64_t n) {
  return {cd_label(a(n)), cd_label(b(n))};
}

namespace {

void require_odd(unsigned r) {
  if (r == 0 || r % 2 == 0) throw DomainError("fib_shift: r must be an odd positive integer");
}

QuadraticReal phi_pow_from_minus_one(unsigned r) {
  // Only r − 2 = −1 needs a negative exponent.
  return r == 1 ? golden::inv_phi() : phi_pow(r - 2);
}

}  // namespace

QuadraticReal fib_shift_lhs(unsigned r, std::int64_t m, std::int64_t n) {
  require_odd(r);
  require_positive(m, "fib_shift");
  require_positive(n, "fib_shift");
  return phi_pow(r) * frac_n_phi(m) - phi_pow_from_minus_one(r) * frac_n_phi(n);
}

FibShift fib_shift(unsigned r, std::int64_t n) {
  require_odd(r);
  require_positive(n, "fib_shift");
  const BigInt fr = fib(r);
  const std::int64_t m = a(n) + n + to_int64(fr);
  const QuadraticReal floor_arg =
      QuadraticReal(fr) * golden::phi() + golden::inv_phi() * frac_n_phi(n) * golden::inv_phi();
  return {m, fib_shift_lhs(r, m, n), floor_arg.floor(), fib(r + 1)};
}

std::vector<std::int64_t> fib_shift_converse(unsigned r, std::int64_t n, std::int64_t search_bound) {
  require_odd(r);
  require_positive(n, "fib_shift_converse");
  const QuadraticReal scale = phi_pow(r);
  const QuadraticReal target = QuadraticReal(1) + phi_pow_from_minus_one(r) * frac_n_phi(n);
  std::vector<std::int64_t> solutions;
  for (std::int64_t m = 1; m <= search_bound; ++m) {
    if (scale * frac_n_phi(m) == target) solutions.push_back(m);
  }
  return solutions;
}

std::int64_t PrefixCache::get(Sequence seq, std::int64_t n) {
  require_positive(n, "PrefixCache::get");
  std::lock_guard<std::mutex> lock(mutex_);
  auto& prefix = prefixes_[static_cast<int>(seq)];
  while (static_cast<std::int64_t>(prefix.size()) < n) {
    const std::int64_t i = static_cast<std::int64_t>(prefix.size()) + 1;
    switch (seq) {
      case Sequence::A: prefix.push_back(a(i)); break;
      case Sequence::B: prefix.push_back(b(i)); break;
      case Sequence::CHalf: prefix.push_back(c_half(i)); break;
      case Sequence::DCubed: prefix.push_back(d_cubed(i)); break;
    }
  }
  return prefix[static_cast<std::size_t>(n - 1)];
}

std::size_t PrefixCache::size(Sequence seq) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return prefixes_[static_cast<int>(seq)].size();
}

}  // namespace beatty_lab
