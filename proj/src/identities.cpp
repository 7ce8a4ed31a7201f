#include "beatty_lab/identities.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string_view>

#include "beatty_lab/beatty.hpp"
#include "beatty_lab/classify.hpp"
#include "beatty_lab/golden.hpp"

namespace beatty_lab {

namespace {

QuadraticReal Q(std::int64_t v) { return QuadraticReal(static_cast<long>(v)); }

std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(const BigInt& v) { return v.get_str(); }
std::string str(const QuadraticReal& v) { return v.to_string(); }
std::string str(const std::vector<std::int64_t>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "}";
}

struct Tally {
  std::string name;
  bool keep = false;
  IdentitySummary summary;

  template <typename L, typename R>
  void expect_eq(std::int64_t n, std::string_view kase, const L& lhs, const R& rhs) {
    record(n, kase, lhs == rhs, [&] { return str(lhs); }, [&] { return str(rhs); });
  }

  template <typename FL, typename FR>
  void record(std::int64_t n, std::string_view kase, bool pass, FL lhs, FR rhs) {
    ++summary.checked;
    if (pass) ++summary.passed;
    if (!keep && (pass || summary.first_failure)) return;
    IdentityRecord rec{name, n, std::string(kase), lhs(), rhs(), pass};
    if (!pass && !summary.first_failure) summary.first_failure = rec;
    if (keep) summary.records.push_back(std::move(rec));
  }
};

struct Context {
  const IdentityOptions& opt;
  // Checker-side a(n); the fault switch perturbs only this copy.
  std::int64_t A(std::int64_t n) const {
    return to_int64((Q(n) * golden::phi()).floor()) + (opt.fault_a_off_by_one ? 1 : 0);
  }
};

QuadraticReal direct_frac(std::int64_t v) { return (Q(v) * golden::phi()).frac(); }

std::string rs(unsigned r) { return "r=" + std::to_string(r); }

enum class Range { N, Klm, Converse, FibK };

using CheckFn = void (*)(std::int64_t, const Context&, Tally&);

struct Identity {
  const char* name;
  Range range;
  CheckFn check;
};

const std::vector<Identity>& registry() {
  static const std::vector<Identity> all = {
      {"frac-a-closed-form", Range::N,
       [](std::int64_t n, const Context& c, Tally& t) { t.expect_eq(n, "", frac_a(n), direct_frac(c.A(n))); }},
      {"frac-b-closed-form", Range::N,
       [](std::int64_t n, const Context&, Tally& t) { t.expect_eq(n, "", frac_b(n), direct_frac(b(n))); }},
      {"a-of-a", Range::N,
       [](std::int64_t n, const Context& c, Tally& t) {
         const std::int64_t aa = c.A(c.A(n));
         t.expect_eq(n, "a(n)+n-1", aa, c.A(n) + n - 1);
         t.expect_eq(n, "b(n)-1", aa, b(n) - 1);
       }},
      {"a-of-b", Range::N,
       [](std::int64_t n, const Context& c, Tally& t) { t.expect_eq(n, "", c.A(b(n)), c.A(n) + b(n)); }},
      {"b-minus-phi-a", Range::N,
       [](std::int64_t n, const Context& c, Tally& t) {
         t.expect_eq(n, "", Q(b(n)) - golden::phi() * Q(c.A(n)), frac_n_phi(n) * golden::inv_phi());
       }},
      {"frac-a-plus-phi-frac-b", Range::N,
       [](std::int64_t n, const Context& c, Tally& t) {
         t.expect_eq(n, "", direct_frac(c.A(n)) + golden::phi() * direct_frac(b(n)), QuadraticReal(1));
       }},
      {"summary-a", Range::N,
       [](std::int64_t n, const Context& c, Tally& t) {
         t.expect_eq(n, "", golden::phi() * direct_frac(c.A(n)) + frac_n_phi(n), golden::phi());
       }},
      {"summary-b", Range::N,
       [](std::int64_t n, const Context&, Tally& t) {
         t.expect_eq(n, "", golden::phi_squared() * direct_frac(b(n)) - frac_n_phi(n), QuadraticReal(0));
       }},
      {"d-interval", Range::N,
       [](std::int64_t n, const Context&, Tally& t) {
         const DIntervalCheck chk = frac_d_interval(n);
         const bool below = chk.side == HalfSide::Below;
         t.record(
             n, below ? "{nphi}<1/2" : "{nphi}>1/2", chk.in_interval, [&] { return str(chk.value); },
             [&] { return std::string(below ? "in ((4-√5)/2, 1)" : "in ((3-√5)/2, 1/2)"); });
       }},
      {"summary-d", Range::N,
       [](std::int64_t n, const Context&, Tally& t) {
         const QuadraticReal x = frac_n_phi(n);
         const bool below = x < golden::one_half();
         const QuadraticReal lhs = direct_frac(d_cubed(n)) + (golden::sqrt5() - QuadraticReal(2)) * x;
         t.expect_eq(n, below ? "{nphi}<1/2" : "{nphi}>1/2", lhs, below ? QuadraticReal(1) : golden::inv_phi());
       }},
      {"d-split-half", Range::N,
       [](std::int64_t n, const Context& c, Tally& t) {
         const bool below = frac_n_phi(n) < golden::one_half();
         const DCubedSplit split = d_cubed_split(n);
         t.expect_eq(n, below ? "{nphi}<1/2" : "{nphi}>1/2", d_cubed(n), 2 * c.A(n) + n + (below ? 0 : 1));
         t.expect_eq(n, "library", split.by_formula, split.direct);
       }},
      {"c-interval", Range::N,
       [](std::int64_t n, const Context&, Tally& t) {
         for (std::int64_t m : {2 * n, 2 * n + 1}) {
           const CFracCheck chk = frac_c_cases(m);
           t.record(
               m, to_string(chk.kase), chk.in_interval, [&] { return str(chk.frac); },
               [&] { return std::string(m % 2 == 0 ? "in (0, (3-√5)/2)" : "in (1/2, (4-√5)/2)"); });
         }
       }},
      {"summary-c", Range::N,
       [](std::int64_t n, const Context&, Tally& t) {
         for (std::int64_t m : {2 * n, 2 * n + 1}) {
           const CFracCheck chk = frac_c_cases(m);
           t.expect_eq(m, to_string(chk.kase), chk.lhs, chk.expected);
         }
       }},
      {"c-odd-split-lambda", Range::N,
       [](std::int64_t n, const Context&, Tally& t) {
         const bool below = frac_n_phi(n) < golden::lambda();
         t.expect_eq(n, below ? "e=1" : "e=2", c_half(2 * n + 1), b(n) + (below ? 1 : 2));
         const COddSplit split = c_half_odd_split(n);
         t.expect_eq(n, "library", split.by_formula, split.direct);
       }},
      {"fib-floor", Range::N,
       [](std::int64_t n, const Context& c, Tally& t) {
         for (unsigned r : c.opt.fib_rs) {
           const FibShift fs = fib_shift(r, n);
           t.expect_eq(n, rs(r), fs.floor_value, fib(r + 1));
         }
       }},
      {"fib-shift", Range::N,
       [](std::int64_t n, const Context& c, Tally& t) {
         for (unsigned r : c.opt.fib_rs) {
           const std::int64_t m = c.A(n) + n + to_int64(fib(r));
           t.expect_eq(n, rs(r), fib_shift_lhs(r, m, n), QuadraticReal(1));
         }
       }},
      {"fib-shift-converse", Range::Converse,
       [](std::int64_t n, const Context& c, Tally& t) {
         for (unsigned r : c.opt.converse_rs) {
           const std::int64_t m = c.A(n) + n + to_int64(fib(r));
           std::vector<std::int64_t> expected;
           if (m <= c.opt.converse_bound) expected.push_back(m);
           t.expect_eq(n, rs(r), fib_shift_converse(r, n, c.opt.converse_bound), expected);
         }
       }},
      {"phi-power", Range::FibK,
       [](std::int64_t k, const Context&, Tally& t) {
         QuadraticReal power = golden::phi();
         for (std::int64_t i = 1; i < k; ++i) power *= golden::phi();
         t.expect_eq(k, "F_k*phi+F_(k-1)", phi_pow(static_cast<std::uint32_t>(k)), power);
         t.expect_eq(k, "binet", binet(static_cast<std::uint32_t>(k)), QuadraticReal(fib(static_cast<std::uint32_t>(k))));
       }},
      {"cassini", Range::FibK,
       [](std::int64_t k, const Context&, Tally& t) {
         const auto u = static_cast<std::uint32_t>(k);
         const BigInt lhs = fib(u + 1) * fib(u - 1) - fib(u) * fib(u);
         t.expect_eq(k, "", lhs, BigInt(k % 2 == 0 ? 1 : -1));
       }},
      {"frac-d3", Range::N,
       [](std::int64_t k, const Context& c, Tally& t) { t.expect_eq(k, "", frac_d3(k), direct_frac(3 * c.A(k) + k)); }},
      {"frac-c3", Range::N,
       [](std::int64_t k, const Context& c, Tally& t) {
         const C3Frac cf = frac_c3(k);
         t.expect_eq(k, cf.side == InvSqrt5Side::Below ? "{kphi}<1/sqrt5" : "{kphi}>1/sqrt5", cf.value,
                     direct_frac(c.A(k) + 2 * k - 1));
       }},
      {"frac-s3", Range::N,
       [](std::int64_t k, const Context&, Tally& t) {
         const S3Frac sf = frac_s3(k);
         const std::string kase = std::string(k % 2 == 0 ? "even" : "odd") + ",halving=" + std::to_string(sf.halving_case);
         t.record(k, kase, sf.holds(), [&] { return str(sf.offset); }, [&] { return str(sf.predicted); });
       }},
      {"c3-plus-phi-d3", Range::N,
       [](std::int64_t k, const Context& c, Tally& t) {
         const bool above = frac_n_phi(k) > golden::inv_sqrt5();
         const QuadraticReal lhs =
             direct_frac(c.A(k) + 2 * k - 1) + golden::phi() * direct_frac(3 * c.A(k) + k);
         t.expect_eq(k, above ? "{kphi}>1/sqrt5" : "{kphi}<1/sqrt5", lhs, QuadraticReal(above ? 1 : 2));
         const auto [sum, expected] = c3_plus_phi_d3(k);
         t.expect_eq(k, "closed-form", sum, expected);
       }},
      {"a-or-a-plus-one", Range::N,
       [](std::int64_t n, const Context&, Tally& t) {
         const bool ok = ab_label(n) == ABLabel::A || (n > 1 && ab_label(n - 1) == ABLabel::A);
         t.record(n, "", ok, [&] { return str(n); }, [] { return std::string("in A or A+1"); });
       }},
      {"c-column-gap", Range::N,
       [](std::int64_t k, const Context&, Tally& t) {
         const std::int64_t gap = column_c(k + 1) - column_c(k);
         t.record(k, "", gap == 3 || gap == 4, [&] { return str(gap); }, [] { return std::string("3 or 4"); });
       }},
      {"klm", Range::Klm,
       [](std::int64_t n, const Context& c, Tally& t) {
         const std::int64_t R = c.opt.klm_range;
         const std::int64_t an = c.A(n);
         for (std::int64_t K = -R; K <= R; ++K) {
           for (std::int64_t L = -R; L <= R; ++L) {
             for (std::int64_t M = -R; M <= R; ++M) {
               const std::int64_t arg = K * an + L * n + M;
               if (arg < 1 || K * a(n) + L * n + M < 1) continue;
               const std::string kase = "K=" + str(K) + ",L=" + str(L) + ",M=" + str(M);
               t.expect_eq(n, kase, klm(K, L, M, n), c.A(arg));
             }
           }
         }
       }},
  };
  return all;
}

std::int64_t upper_bound_for(Range range, const IdentityOptions& opt) {
  switch (range) {
    case Range::N: return opt.N;
    case Range::Klm: return std::min(opt.N, opt.klm_max_n);
    case Range::Converse: return std::min(opt.N, opt.converse_max_n);
    case Range::FibK: return opt.fib_max_k;
  }
  return 0;
}

IdentitySummary run_block(const Identity& id, const IdentityOptions& opt, std::int64_t lo, std::int64_t hi) {
  Tally tally{id.name, opt.keep_records, {}};
  tally.summary.identity = id.name;
  const Context ctx{opt};
  for (std::int64_t n = lo; n <= hi; ++n) id.check(n, ctx, tally);
  return tally.summary;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& id : registry()) out.emplace_back(id.name);
    return out;
  }();
  return names;
}

IdentitySummary run_identity(const std::string& name, const IdentityOptions& options) {
  const auto& all = registry();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Identity& id) { return name == id.name; });
  if (it == all.end()) throw std::invalid_argument("unknown identity: " + name);
  if (options.N < 1) throw DomainError("identities: N must be at least 1");

  const std::int64_t hi = upper_bound_for(it->range, options);
  const unsigned shards = std::max(1u, options.shards);
  const std::int64_t block = std::max<std::int64_t>(1, (hi + shards - 1) / shards);
  std::vector<std::future<IdentitySummary>> futures;
  for (std::int64_t lo = 1; lo <= hi; lo += block) {
    const std::int64_t top = std::min(hi, lo + block - 1);
    futures.push_back(std::async(shards > 1 ? std::launch::async : std::launch::deferred,
                                 [&options, id = *it, lo, top] { return run_block(id, options, lo, top); }));
  }

  IdentitySummary total;
  total.identity = name;
  for (auto& f : futures) {
    IdentitySummary part = f.get();
    total.checked += part.checked;
    total.passed += part.passed;
    if (!total.first_failure && part.first_failure) total.first_failure = std::move(part.first_failure);
    std::move(part.records.begin(), part.records.end(), std::back_inserter(total.records));
  }
  return total;
}

std::vector<IdentitySummary> run_identities(const IdentityOptions& options, const std::vector<std::string>& only) {
  std::vector<IdentitySummary> out;
  for (const auto& name : only.empty() ? identity_names() : only) out.push_back(run_identity(name, options));
  return out;
}

}  // namespace beatty_lab
