// beatty-lab: generate, verify and classify golden Beatty partitions and
// their n-set extensions, and check the fractional-part identities.
//
// Exit codes: 0 success, 1 a mathematical defect was found, 2 invalid input
// or a generator that breaks the partition hypotheses.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "beatty_lab/classify.hpp"
#include "beatty_lab/identities.hpp"
#include "beatty_lab/json.hpp"
#include "beatty_lab/partition.hpp"

namespace {

using namespace beatty_lab;
using nlohmann::json;

constexpr const char* kEmpirical = "empirical - open in paper";

enum class Format { Csv, Json };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int n = 3;
  std::string h;
  std::string alpha;
  std::string explicit_file;
  std::int64_t limit = 100;
  std::int64_t N = 1000;
  std::string format = "csv";
  unsigned shards = 1;
  std::string out;

  // decompose
  std::vector<std::int64_t> values;
  // identities
  std::vector<std::string> identities;
  std::vector<unsigned> rs;
  std::int64_t converse_bound = 10000;
  std::int64_t converse_max_n = 50;
  std::int64_t klm_max_n = 500;
  std::int64_t klm_range = 5;
  bool records = false;
  std::string fault;
  // classify
  std::string mode;

  Format fmt() const { return format == "json" ? Format::Json : Format::Csv; }
};

Alpha parse_alpha(const std::string& text) {
  if (text == "phi") return golden::phi();
  if (text == "phi2") return golden::phi_squared();
  if (text == "phi3") return golden::phi_cubed();
  if (text == "phi2/2") return golden::half_phi_squared();
  if (text == "sqrt2") return QuadraticSqrt2::make(0, 1, 1);

  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 4) {
    throw UsageError("--alpha: expected phi, phi2, phi3, phi2/2, sqrt2 or p,q,d,radicand");
  }
  BigInt p, q, d;
  if (p.set_str(parts[0], 10) != 0 || q.set_str(parts[1], 10) != 0 || d.set_str(parts[2], 10) != 0) {
    throw UsageError("--alpha: p, q and d must be integers");
  }
  if (parts[3] == "5") return QuadraticReal::make(p, q, d);
  if (parts[3] == "2") return QuadraticSqrt2::make(p, q, d);
  throw UsageError("--alpha: radicand must be 2 or 5");
}

std::vector<std::int64_t> read_explicit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::vector<std::int64_t> values;
  std::string token;
  while (in >> token) {
    for (char& ch : token) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream ts(token);
    std::int64_t v = 0;
    while (ts >> v) values.push_back(v);
    if (!ts.eof()) throw UsageError(path + ": not an integer list");
  }
  if (values.empty()) throw UsageError(path + ": empty generator list");
  return values;
}

PartitionSpec make_spec(const Config& cfg) {
  const int given = !cfg.h.empty() + !cfg.alpha.empty() + !cfg.explicit_file.empty();
  if (given > 1) throw UsageError("use only one of --h, --alpha, --explicit");
  if (!cfg.explicit_file.empty()) return PartitionSpec(cfg.n, ExplicitList{read_explicit(cfg.explicit_file)});
  if (!cfg.alpha.empty()) return PartitionSpec(cfg.n, FromAlpha{parse_alpha(cfg.alpha)});
  if (cfg.h == "identity") return PartitionSpec::identity(cfg.n);
  return PartitionSpec::phi_extension(cfg.n);
}

json frequency_json(const Frequency& f) {
  return {{"count", f.count}, {"total", f.total}, {"num", f.num}, {"den", f.den}, {"decimal", f.decimal()}};
}

std::string frequency_csv(const Frequency& f) { return std::to_string(f.num) + "/" + std::to_string(f.den); }

// ---- subcommands; each writes to `os` and returns the exit code ----

int cmd_gen(const Config& cfg, std::ostream& os) {
  const PartitionSpec spec = make_spec(cfg);
  Columns cols;
  try {
    cols = build_columns(spec, cfg.limit);
  } catch (const GeneratorViolation& e) {
    std::cerr << "generator violation";
    if (e.report().violation_index) std::cerr << " at k=" << *e.report().violation_index;
    std::cerr << ": " << e.report().reason << "\n";
    return 2;
  }
  if (cfg.fmt() == Format::Json) {
    json j{{"n", spec.n()}, {"generator", spec.describe()}, {"limit", cfg.limit}, {"columns", cols.columns}};
    os << j.dump(2) << "\n";
  } else {
    os << "column,k,value\n";
    for (std::size_t c = 0; c < cols.columns.size(); ++c) {
      for (std::size_t k = 0; k < cols.columns[c].size(); ++k) {
        os << c + 1 << ',' << k + 1 << ',' << cols.columns[c][k] << '\n';
      }
    }
  }
  return 0;
}

int cmd_verify(const Config& cfg, std::ostream& os) {
  const PartitionSpec spec = make_spec(cfg);
  const VerificationReport r = verify_partition(spec, cfg.limit, cfg.shards);
  if (cfg.fmt() == Format::Json) {
    json j{{"n", spec.n()},
           {"generator", spec.describe()},
           {"limit", cfg.limit},
           {"covered", r.covered},
           {"disjoint", r.disjoint},
           {"first_defect", r.first_defect ? json(*r.first_defect) : json(nullptr)}};
    os << j.dump(2) << "\n";
  } else {
    os << "n,generator,limit,covered,disjoint,first_defect\n"
       << spec.n() << ",\"" << spec.describe() << "\"," << cfg.limit << ',' << r.covered << ',' << r.disjoint
       << ',' << (r.first_defect ? std::to_string(*r.first_defect) : "") << '\n';
  }
  return r.ok() ? 0 : 1;
}

int cmd_decompose(const Config& cfg, std::ostream& os) {
  if (cfg.values.empty()) throw UsageError("decompose: give at least one --m");
  const PartitionSpec spec = make_spec(cfg);
  json rows = json::array();
  if (cfg.fmt() == Format::Csv) os << "m,column,k,l_k,signs\n";
  for (std::int64_t m : cfg.values) {
    const Decomposition d = decompose(m, spec);
    const std::int64_t lk = *spec.l(d.k);
    if (cfg.fmt() == Format::Json) {
      rows.push_back({{"m", m}, {"column", d.column}, {"k", d.k}, {"l_k", lk}, {"signs", d.signs.view()}});
    } else {
      os << m << ',' << d.column << ',' << d.k << ',' << lk << ",\"" << d.signs.to_string() << "\"\n";
    }
  }
  if (cfg.fmt() == Format::Json) os << rows.dump(2) << "\n";
  return 0;
}

json record_json(const IdentityRecord& r) {
  return {{"identity", r.identity}, {"n", r.n}, {"case", r.kase}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}};
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

int cmd_identities(const Config& cfg, std::ostream& os) {
  IdentityOptions opt;
  opt.N = cfg.N;
  if (!cfg.rs.empty()) {
    for (unsigned r : cfg.rs) {
      if (r % 2 == 0) throw UsageError("--r must be odd");
    }
    opt.fib_rs = cfg.rs;
    opt.converse_rs = cfg.rs;
  }
  opt.converse_bound = cfg.converse_bound;
  opt.converse_max_n = cfg.converse_max_n;
  opt.klm_max_n = cfg.klm_max_n;
  opt.klm_range = cfg.klm_range;
  opt.keep_records = cfg.records;
  opt.shards = cfg.shards;
  opt.fault_a_off_by_one = cfg.fault == "a-off-by-one";

  const auto summaries = run_identities(opt, cfg.identities);
  bool all_ok = true;
  json out = json::array();
  if (cfg.fmt() == Format::Csv) {
    os << (cfg.records ? "identity,n,case,lhs,rhs,pass\n" : "identity,checked,passed,status,first_failure_n,case,lhs,rhs\n");
  }
  for (const auto& s : summaries) {
    all_ok = all_ok && s.ok();
    if (cfg.fmt() == Format::Json) {
      json j{{"identity", s.identity}, {"checked", s.checked}, {"passed", s.passed}, {"ok", s.ok()}};
      j["first_failure"] = s.first_failure ? record_json(*s.first_failure) : json(nullptr);
      if (cfg.records) {
        j["records"] = json::array();
        for (const auto& r : s.records) j["records"].push_back(record_json(r));
      }
      out.push_back(std::move(j));
    } else if (cfg.records) {
      for (const auto& r : s.records) {
        os << r.identity << ',' << r.n << ',' << csv_quote(r.kase) << ',' << csv_quote(r.lhs) << ','
           << csv_quote(r.rhs) << ',' << (r.pass ? "pass" : "fail") << '\n';
      }
    } else {
      os << s.identity << ',' << s.checked << ',' << s.passed << ',' << (s.ok() ? "pass" : "fail") << ',';
      if (s.first_failure) {
        const auto& f = *s.first_failure;
        os << f.n << ',' << csv_quote(f.kase) << ',' << csv_quote(f.lhs) << ',' << csv_quote(f.rhs);
      } else {
        os << ",,,";
      }
      os << '\n';
    }
  }
  if (cfg.fmt() == Format::Json) os << out.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int classify_rows(const Config& cfg, std::ostream& os) {
  json rows = json::array();
  bool ok = true;
  if (cfg.fmt() == Format::Csv) os << "k,s,c,d,class\n";
  for (std::int64_t k = 1; k <= cfg.N; ++k) {
    const SCDTriple t = scd(k);
    const RowClass rc = row_class(k);
    ok = ok && rc.admissible();
    if (cfg.fmt() == Format::Json) {
      rows.push_back({{"k", k}, {"s", t.s}, {"c", t.c}, {"d", t.d}, {"class", rc.to_string()}});
    } else {
      os << k << ',' << t.s << ',' << t.c << ',' << t.d << ',' << rc.to_string() << '\n';
    }
  }
  if (cfg.fmt() == Format::Json) os << rows.dump(2) << "\n";
  return ok ? 0 : 1;
}

int classify_census(const Config& cfg, std::ostream& os) {
  const RowCensus census = row_class_census(cfg.N, cfg.shards);
  const bool cd_never_bb = census.only_admissible();
  if (cfg.fmt() == Format::Json) {
    json classes = json::array();
    for (const auto& [rc, count] : census.counts) {
      classes.push_back({{"class", rc.to_string()},
                         {"frequency", frequency_json(make_frequency(count, census.N))},
                         {"first_k", census.first_k.at(rc)}});
    }
    json j{{"N", census.N},
           {"classes", classes},
           {"only_admissible", cd_never_bb},
           {"distinct_classes", census.counts.size()},
           {"note", kEmpirical}};
    os << j.dump(2) << "\n";
  } else {
    os << "class,count,frequency,first_k\n";
    for (const auto& [rc, count] : census.counts) {
      os << rc.to_string() << ',' << count << ',' << frequency_csv(make_frequency(count, census.N)) << ','
         << census.first_k.at(rc) << '\n';
    }
  }
  return cd_never_bb ? 0 : 1;
}

int classify_ab_over_scd(const Config& cfg, std::ostream& os) {
  const PairCensus census = ab_over_scd_census(cfg.N, cfg.shards);
  if (cfg.fmt() == Format::Json) {
    json pairs = json::array();
    for (const auto& [pair, count] : census.counts) {
      pairs.push_back({{"pair", to_string(pair)}, {"frequency", frequency_json(make_frequency(count, census.N))}});
    }
    os << json{{"N", census.N}, {"pairs", pairs}}.dump(2) << "\n";
  } else {
    os << "pair,count,frequency,decimal\n";
    for (const auto& [pair, count] : census.counts) {
      const Frequency f = make_frequency(count, census.N);
      os << to_string(pair) << ',' << count << ',' << frequency_csv(f) << ',' << f.decimal() << '\n';
    }
  }
  return 0;
}

int cmd_classify(const Config& cfg, std::ostream& os) {
  if (cfg.mode == "rows") return classify_rows(cfg, os);
  if (cfg.mode == "census") return classify_census(cfg, os);
  return classify_ab_over_scd(cfg, os);
}

int cmd_density(const Config& cfg, std::ostream& os) {
  const DensityReport d = measure_densities(cfg.N, cfg.shards);
  const RowCensus census = row_class_census(cfg.N, cfg.shards);
  struct Row {
    std::string quantity;
    Frequency f;
    std::string expected;
  };
  std::vector<Row> rows = {
      {"c_half_in_A", d.c_half_in_a, "1/2"},
      {"a_in_C", d.a_in_c, "1/phi"},
      {"a_in_D", d.a_in_d, "1/phi^2"},
      {"s_in_A", d.s_in_a, kEmpirical},
  };
  for (const RowClass& rc : admissible_row_classes()) {
    const auto it = census.counts.find(rc);
    rows.push_back({"row_" + rc.to_string(), make_frequency(it == census.counts.end() ? 0 : it->second, cfg.N),
                    kEmpirical});
  }
  if (cfg.fmt() == Format::Json) {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"quantity", r.quantity}, {"frequency", frequency_json(r.f)}, {"expected", r.expected}});
    }
    os << json{{"N", cfg.N}, {"densities", out}}.dump(2) << "\n";
  } else {
    os << "quantity,count,N,frequency,decimal,expected\n";
    for (const auto& r : rows) {
      os << r.quantity << ',' << r.f.count << ',' << r.f.total << ',' << frequency_csv(r.f) << ',' << r.f.decimal()
         << ',' << r.expected << '\n';
    }
  }
  return 0;
}

void add_spec_options(CLI::App* sub, Config& cfg) {
  sub->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
  sub->add_option("--n", cfg.n, "number of sets")->check(CLI::Range(2, 30));
  sub->add_option("--h", cfg.h, "h-sequence")->check(CLI::IsMember({"identity", "phi"}));
  sub->add_option("--alpha", cfg.alpha, "phi, phi2, phi3, phi2/2, sqrt2 or p,q,d,radicand");
  sub->add_option("--explicit", cfg.explicit_file, "file with l(1), l(2), ...");
}

void add_output_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out, "write output to FILE");
  sub->add_option("--shards", cfg.shards, "worker count")
      ->envname("BEATTY_LAB_SHARDS")
      ->check(CLI::Range(1u, 256u));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Golden Beatty partitions, their n-set extensions and fractional-part identities"};
  app.require_subcommand(1);
  Config cfg;

  auto* gen = app.add_subcommand("gen", "print the columns D_1..D_n up to --limit");
  add_spec_options(gen, cfg);
  gen->add_option("--limit", cfg.limit)->check(CLI::PositiveNumber);
  add_output_options(gen, cfg);

  auto* verify = app.add_subcommand("verify", "check that the columns partition [1, limit]");
  add_spec_options(verify, cfg);
  verify->add_option("--limit", cfg.limit)->check(CLI::PositiveNumber);
  add_output_options(verify, cfg);

  auto* dec = app.add_subcommand("decompose", "column, generator index and signs of each --m");
  add_spec_options(dec, cfg);
  dec->add_option("--m", cfg.values, "values to decompose")->check(CLI::PositiveNumber);
  add_output_options(dec, cfg);

  auto* ids = app.add_subcommand("identities", "check the identity suite for n <= N");
  ids->add_option("--N", cfg.N)->check(CLI::PositiveNumber);
  ids->add_option("--identity", cfg.identities, "restrict to these identities")
      ->check(CLI::IsMember(identity_names()));
  ids->add_option("--r", cfg.rs, "odd r values for the Fibonacci shift checks");
  ids->add_option("--converse-bound", cfg.converse_bound)->check(CLI::PositiveNumber);
  ids->add_option("--converse-max-n", cfg.converse_max_n)->check(CLI::PositiveNumber);
  ids->add_option("--klm-max-n", cfg.klm_max_n)->check(CLI::PositiveNumber);
  ids->add_option("--klm-range", cfg.klm_range)->check(CLI::Range(0, 50));
  ids->add_flag("--records", cfg.records, "emit every check, not only summaries");
  ids->add_option("--fault", cfg.fault, "test mode: perturb the checker")
      ->check(CLI::IsMember({"a-off-by-one"}))
      ->group("");
  add_output_options(ids, cfg);

  auto* cls = app.add_subcommand("classify", "row classes of the 3-set extension");
  cls->add_option("mode", cfg.mode)->required()->check(CLI::IsMember({"rows", "census", "ab-over-scd"}));
  cls->add_option("--N", cfg.N)->check(CLI::PositiveNumber);
  add_output_options(cls, cfg);

  auto* den = app.add_subcommand("density", "A/B/C/D/S densities and row-class frequencies");
  den->add_option("--N", cfg.N)->check(CLI::PositiveNumber);
  add_output_options(den, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 2;
    }
  }
  std::ostream& os = cfg.out.empty() ? std::cout : file;

  try {
    if (*gen) return cmd_gen(cfg, os);
    if (*verify) return cmd_verify(cfg, os);
    if (*dec) return cmd_decompose(cfg, os);
    if (*ids) return cmd_identities(cfg, os);
    if (*cls) return cmd_classify(cfg, os);
    if (*den) return cmd_density(cfg, os);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
