#pragma once

// Golden-ratio constants, Fibonacci numbers and powers of φ in Q(√5).

#include <cstdint>

#include "beatty_lab/quadratic.hpp"

namespace beatty_lab {

/// Non-negative index into the Fibonacci sequence.
struct FibIndex {
  std::uint32_t k;
};

/// F_k from F_0 = 0, F_1 = 1 and the additive recurrence.
BigInt fib(FibIndex index);
inline BigInt fib(std::uint32_t k) { return fib(FibIndex{k}); }

/// φ^k = F_k·φ + F_{k−1} for k ≥ 1. Throws DomainError for k = 0.
QuadraticReal phi_pow(std::uint32_t k);

/// (φ^k − (−1)^k·φ^{−k})/√5, evaluated in the field. Checked against fib().
QuadraticReal binet(std::uint32_t k);

namespace golden {

const QuadraticReal& phi();            // (1 + √5)/2
const QuadraticReal& phi_squared();    // (3 + √5)/2 = φ + 1
const QuadraticReal& phi_cubed();      // 2 + √5
const QuadraticReal& half_phi_squared();  // (3 + √5)/4
const QuadraticReal& sqrt5();
const QuadraticReal& inv_phi();        // φ − 1
const QuadraticReal& inv_phi_squared();   // (3 − √5)/2 = 2 − φ
const QuadraticReal& inv_sqrt5();      // √5/5
const QuadraticReal& one_half();
const QuadraticReal& lambda();         // (5 − √5)/4; φ²/2 + λ = 2
const QuadraticReal& cd_breakpoint();  // (5 + √5)/10
const QuadraticReal& four_minus_sqrt5_half();  // (4 − √5)/2
const QuadraticReal& three_minus_sqrt5_half();  // (3 − √5)/2

}  // namespace golden

/// {n·φ} for an integer n.
QuadraticReal frac_n_phi(std::int64_t n);

}  // namespace beatty_lab
