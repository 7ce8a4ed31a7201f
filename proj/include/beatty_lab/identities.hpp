#pragma once

// Exhaustive checking of the fractional-part identities, the KLM grid and the
// Fibonacci shift over index ranges. Every identity compares a closed form
// against an independent direct computation, exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace beatty_lab {

struct IdentityRecord {
  std::string identity;
  std::int64_t n = 0;
  std::string kase;  // sub-case tag, e.g. "r=5" or "odd<lambda"; may be empty
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct IdentitySummary {
  std::string identity;
  std::int64_t checked = 0;
  std::int64_t passed = 0;
  std::optional<IdentityRecord> first_failure;
  std::vector<IdentityRecord> records;  // only when IdentityOptions::keep_records
  bool ok() const { return checked > 0 && checked == passed; }
};

struct IdentityOptions {
  std::int64_t N = 1000;
  std::vector<unsigned> fib_rs{1, 3, 5, 7};   // fib-floor and fib-shift
  std::vector<unsigned> converse_rs{1, 3};
  std::int64_t converse_max_n = 50;
  std::int64_t converse_bound = 10000;
  std::int64_t klm_max_n = 500;
  std::int64_t klm_range = 5;                 // K, L, M ∈ [−klm_range, klm_range]
  std::uint32_t fib_max_k = 200;              // phi-power and cassini
  bool fault_a_off_by_one = false;            // test mode: the checker's a(n) is a(n) + 1
  bool keep_records = false;
  unsigned shards = 1;
};

/// Names accepted by run_identity, in reporting order.
const std::vector<std::string>& identity_names();

/// Throws std::invalid_argument for an unknown name.
IdentitySummary run_identity(const std::string& name, const IdentityOptions& options);

/// All identities, or only `only` when it is non-empty.
std::vector<IdentitySummary> run_identities(const IdentityOptions& options,
                                            const std::vector<std::string>& only = {});

}  // namespace beatty_lab
