#include "beatty_lab/golden.hpp"

#include <utility>

namespace beatty_lab {

BigInt fib(FibIndex index) {
  BigInt prev = 0;
  BigInt cur = 1;
  if (index.k == 0) return prev;
  for (std::uint32_t i = 1; i < index.k; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

QuadraticReal phi_pow(std::uint32_t k) {
  if (k == 0) throw DomainError("phi_pow: exponent must be at least 1");
  return QuadraticReal(fib(k)) * golden::phi() + QuadraticReal(fib(k - 1));
}

QuadraticReal binet(std::uint32_t k) {
  // φ^{-1} = φ − 1, and (φ − 1)^k by repeated multiplication.
  QuadraticReal up = 1;
  QuadraticReal down = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    up *= golden::phi();
    down *= golden::inv_phi();
  }
  if (k % 2 == 1) down = -down;
  return (up - down) / golden::sqrt5();
}

namespace golden {

const QuadraticReal& phi() {
  static const QuadraticReal value = QuadraticReal::make(1, 1, 2);
  return value;
}
const QuadraticReal& phi_squared() {
  static const QuadraticReal value = QuadraticReal::make(3, 1, 2);
  return value;
}
const QuadraticReal& phi_cubed() {
  static const QuadraticReal value = QuadraticReal::make(2, 1, 1);
  return value;
}
const QuadraticReal& half_phi_squared() {
  static const QuadraticReal value = QuadraticReal::make(3, 1, 4);
  return value;
}
const QuadraticReal& sqrt5() {
  static const QuadraticReal value = QuadraticReal::root();
  return value;
}
const QuadraticReal& inv_phi() {
  static const QuadraticReal value = QuadraticReal::make(-1, 1, 2);
  return value;
}
const QuadraticReal& inv_phi_squared() {
  static const QuadraticReal value = QuadraticReal::make(3, -1, 2);
  return value;
}
const QuadraticReal& inv_sqrt5() {
  static const QuadraticReal value = QuadraticReal::make(0, 1, 5);
  return value;
}
const QuadraticReal& one_half() {
  static const QuadraticReal value = QuadraticReal::make(1, 0, 2);
  return value;
}
const QuadraticReal& lambda() {
  static const QuadraticReal value = QuadraticReal::make(5, -1, 4);
  return value;
}
const QuadraticReal& cd_breakpoint() {
  static const QuadraticReal value = QuadraticReal::make(5, 1, 10);
  return value;
}
const QuadraticReal& four_minus_sqrt5_half() {
  static const QuadraticReal value = QuadraticReal::make(4, -1, 2);
  return value;
}
const QuadraticReal& three_minus_sqrt5_half() {
  static const QuadraticReal value = QuadraticReal::make(3, -1, 2);
  return value;
}

}  // namespace golden

QuadraticReal frac_n_phi(std::int64_t n) {
  return (QuadraticReal(static_cast<long>(n)) * golden::phi()).frac();
}

}  // namespace beatty_lab
