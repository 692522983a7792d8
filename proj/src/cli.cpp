#include "mulpart/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "mulpart/batch.hpp"
#include "mulpart/closed_forms.hpp"
#include "mulpart/oracle.hpp"
#include "mulpart/recursive.hpp"

namespace mulpart::cli {

namespace {

using u64 = std::uint64_t;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CountOptions {
  u64 m = 0;
  unsigned k = 0;
  u64 ell = 1;
  std::string method = "closed";
  bool ordered = false;
  bool total = false;
  bool verbose = false;
};

struct TableOptions {
  u64 max = 0;
  unsigned k = 0;
  u64 ell = 1;
  std::string method = "closed";
  bool ordered = false;
  bool total = false;
  std::string format = "bfile";
  std::string out;
  std::string compare;
  unsigned threads = 1;
};

struct VerifyOptions {
  u64 max = 0;
  unsigned k_max = 4;
  u64 ell_max = 2;
};

struct BenchOptions {
  u64 max = 0;
  unsigned k = 4;
  u64 ell = 1;
  std::string method = "all";
  unsigned threads = 1;
};

const std::map<std::string, std::string> kMethods{
    {"closed", "closed"}, {"recursive", "recursive"}, {"oracle", "oracle"}};

ExactCount oracle_count(u64 m, unsigned k, u64 ell, bool ordered, const oracle::Limits& limits) {
  return ordered ? oracle::count_ordered(m, k, ell, limits)
                 : oracle::count_nondecreasing(m, k, ell, limits);
}

int cmd_count(const CountOptions& o, std::ostream& out) {
  if (o.m == 0) throw UsageError("--m must be >= 1");
  if (!o.total && o.k == 0) throw UsageError("--k is required (or --total)");
  if (o.ell == 0) throw UsageError("--ell must be >= 1");
  const auto limits = oracle::Limits::from_env();

  if (o.total) {
    if (o.ell < 2) throw UsageError("--total requires --ell >= 2");
    if (o.m < 2) throw UsageError("--total requires --m >= 2");
    if (o.method == "closed") throw UsageError("--total has no closed form; use recursive or oracle");
    if (o.method == "oracle") {
      out << oracle::count_all_k(o.m, o.ell, o.ordered, limits).str() << '\n';
    } else {
      out << (o.ordered ? nu_total(o.m, o.ell) : mu_total(o.m, o.ell)).str() << '\n';
    }
    return kOk;
  }

  if (o.method == "closed") {
    if (o.m < 2) throw UsageError("closed forms require --m >= 2");
    if (o.ell > 2) throw UsageError("closed forms require --ell 1 or 2");
    if (!o.ordered && o.k > 4) throw UsageError("closed forms require --k <= 4");
    const auto f = factorize(o.m);
    const ExactCount v = o.ordered ? (o.ell == 1 ? nu1(f, o.k) : nu2(f, o.k))
                                   : mu_closed(f, o.k, static_cast<unsigned>(o.ell));
    out << v.str() << '\n';
  } else if (o.method == "recursive") {
    const CountQuery q{o.m, o.k, o.ell};
    out << (o.ordered ? nu_rec(q) : mu_rec(q)).str() << '\n';
  } else {
    if (o.m > limits.max_m || o.k > limits.max_k) throw UsageError("query exceeds oracle budget");
    out << oracle_count(o.m, o.k, o.ell, o.ordered, limits).str() << '\n';
    if (o.verbose) {
      for (const auto& t : oracle::enum_nondecreasing(o.m, o.k, o.ell, limits)) {
        for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i];
        out << '\n';
      }
    }
  }
  return kOk;
}

Quantity make_quantity(bool total, bool ordered, unsigned k, u64 ell, const std::string& method) {
  Quantity q;
  if (total) {
    q.kind = ordered ? Quantity::Kind::nu_total : Quantity::Kind::mu_total;
  } else {
    q.kind = ordered ? Quantity::Kind::nu : Quantity::Kind::mu;
  }
  q.k = k;
  q.ell = ell;
  q.method = method == "recursive" ? Method::recursive : Method::closed;
  try {
    q.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return q;
}

int cmd_table(const TableOptions& o, std::ostream& out, std::ostream& err) {
  if (o.max < 2) throw UsageError("--max must be >= 2");
  if (!o.total && o.k == 0) throw UsageError("--k is required (or --total)");
  if (o.method == "oracle") throw UsageError("tables use --method closed or recursive");
  const Quantity q = make_quantity(o.total, o.ordered, o.k, o.ell, o.method);

  std::vector<TableRow> reference;
  if (!o.compare.empty()) reference = read_bfile(o.compare);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write " + o.out);
    sink = &file;
  }

  SpfTable table(o.max);
  TableWriter writer(*sink, o.format == "csv" ? TableFormat::csv : TableFormat::bfile);
  std::vector<TableRow> kept;
  generate_table(o.max, q, table,
                 [&](const TableRow& row) {
                   writer.write(row);
                   if (!reference.empty()) kept.push_back(row);
                 },
                 o.threads);
  sink->flush();
  if (file.is_open() && !file) throw std::runtime_error("write failed: " + o.out);

  if (!o.compare.empty()) {
    const auto report = compare_reference(kept, reference);
    print_report(o.out.empty() ? err : out, report);
    if (!report.ok()) return kMismatch;
  }
  return kOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  if (o.max < 2) throw UsageError("--max must be >= 2");
  if (o.k_max == 0) throw UsageError("--k-max must be >= 1");
  if (o.ell_max == 0) throw UsageError("--ell-max must be >= 1");
  const auto limits = oracle::Limits::from_env();
  if (o.max > limits.max_m) throw UsageError("--max exceeds oracle budget");
  if (o.k_max > limits.max_k) throw UsageError("--k-max exceeds oracle budget");

  std::size_t checks = 0;
  auto fail = [&](u64 m, unsigned k, u64 ell, const char* what, const ExactCount& got,
                  const ExactCount& want) {
    out << "MISMATCH " << what << " m=" << m << " k=" << k << " ell=" << ell << ": got "
        << got.str() << ", oracle " << want.str() << '\n';
    return kMismatch;
  };

  for (u64 m = 2; m <= o.max; ++m) {
    const auto f = factorize(m);
    for (unsigned k = 1; k <= o.k_max; ++k) {
      for (u64 ell = 1; ell <= o.ell_max; ++ell) {
        const ExactCount mu_want = oracle::count_nondecreasing(m, k, ell, limits);
        const ExactCount nu_want = oracle::count_ordered(m, k, ell, limits);
        const ExactCount mu_got = mu_rec(f, k, ell);
        const ExactCount nu_got = nu_rec(f, k, ell);
        if (mu_got != mu_want) return fail(m, k, ell, "mu recursive", mu_got, mu_want);
        if (nu_got != nu_want) return fail(m, k, ell, "nu recursive", nu_got, nu_want);
        checks += 2;
        if (ell <= 2) {
          const ExactCount nu_c = ell == 1 ? nu1(f, k) : nu2(f, k);
          if (nu_c != nu_want) return fail(m, k, ell, "nu closed", nu_c, nu_want);
          ++checks;
          if (k <= 4) {
            const ExactCount mu_c = mu_closed(f, k, static_cast<unsigned>(ell));
            if (mu_c != mu_want) return fail(m, k, ell, "mu closed", mu_c, mu_want);
            ++checks;
          }
        }
      }
    }
  }
  out << "verified m=2.." << o.max << " k<=" << o.k_max << " ell<=" << o.ell_max << ": "
      << checks << " comparisons, 0 mismatches\n";
  return kOk;
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  if (o.max < 2) throw UsageError("--max must be >= 2");
  if (o.k == 0 || o.ell == 0) throw UsageError("--k and --ell must be >= 1");
  const auto limits = oracle::Limits::from_env();
  if (o.method == "oracle" && (o.max > limits.max_m || o.k > limits.max_k)) {
    throw UsageError("oracle bench refused: --max exceeds oracle budget " +
                     std::to_string(limits.max_m));
  }

  std::vector<std::string> methods;
  if (o.method == "all") {
    if (o.k <= 4 && o.ell <= 2) methods.push_back("closed");
    methods.push_back("recursive");
  } else {
    methods.push_back(o.method);
  }

  out << "bench mu(k=" << o.k << ",ell=" << o.ell << ") m=2.." << o.max << " rows=" << o.max - 1
      << '\n';
  SpfTable table(o.max);
  for (const auto& method : methods) {
    ExactCount checksum = 0;
    const auto start = std::chrono::steady_clock::now();
    if (method == "oracle") {
      for (u64 m = 2; m <= o.max; ++m) checksum += oracle::count_nondecreasing(m, o.k, o.ell, limits);
    } else {
      const Quantity q = make_quantity(false, false, o.k, o.ell, method);
      generate_table(o.max, q, table, [&](const TableRow& r) { checksum += r.value; }, o.threads);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << method << " checksum=" << checksum.str() << '\n';
    out << "[timing] " << method << ": " << std::fixed << std::setprecision(3) << secs << " s, "
        << std::setprecision(0) << (secs > 0 ? static_cast<double>(o.max - 1) / secs : 0.0)
        << " rows/s\n"
        << std::defaultfloat;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count factorizations of integers into k factors", "mulpart"};
  app.require_subcommand(1);

  CountOptions count;
  auto* c = app.add_subcommand("count", "Count factorizations of one m");
  c->add_option("--m", count.m, "Integer to factor")->required();
  c->add_option("--k", count.k, "Number of factors");
  c->add_option("--ell", count.ell, "Lower bound on each factor");
  c->add_option("--method", count.method, "closed | recursive | oracle")
      ->transform(CLI::IsMember(kMethods));
  c->add_flag("--ordered", count.ordered, "Count ordered tuples instead of nondecreasing");
  c->add_flag("--total", count.total, "Sum over all k (needs --ell >= 2)");
  c->add_flag("-v,--verbose", count.verbose, "With --method oracle, list the tuples");

  TableOptions table;
  auto* t = app.add_subcommand("table", "Tabulate a count for m up to --max");
  t->add_option("--max", table.max, "Largest m")->required();
  t->add_option("--k", table.k, "Number of factors");
  t->add_option("--ell", table.ell, "Lower bound on each factor");
  t->add_option("--method", table.method, "closed | recursive")->transform(CLI::IsMember(kMethods));
  t->add_flag("--ordered", table.ordered, "Ordered tuples");
  t->add_flag("--total", table.total, "Sum over all k (needs --ell >= 2)");
  t->add_option("--format", table.format, "csv | bfile")->check(CLI::IsMember({"csv", "bfile"}));
  t->add_option("--out", table.out, "Output path (default stdout)");
  t->add_option("--compare", table.compare, "Reference b-file to compare against");
  t->add_option("--threads", table.threads, "Worker threads")->check(CLI::Range(1u, 256u));

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Cross-check closed, recursive and brute-force counts");
  v->add_option("--max", verify.max, "Largest m")->required();
  v->add_option("--k-max", verify.k_max, "Largest k");
  v->add_option("--ell-max", verify.ell_max, "Largest ell");

  BenchOptions bench;
  auto* b = app.add_subcommand("bench", "Time table generation");
  b->add_option("--max", bench.max, "Largest m")->required();
  b->add_option("--k", bench.k, "Number of factors");
  b->add_option("--ell", bench.ell, "Lower bound on each factor");
  b->add_option("--method", bench.method, "all | closed | recursive | oracle")
      ->check(CLI::IsMember({"all", "closed", "recursive", "oracle"}));
  b->add_option("--threads", bench.threads, "Worker threads")->check(CLI::Range(1u, 256u));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*c) return cmd_count(count, out);
    if (*t) return cmd_table(table, out, err);
    if (*v) return cmd_verify(verify, out);
    if (*b) return cmd_bench(bench, out);
  } catch (const IntegrityError& e) {
    err << "internal assertion failed: " << e.what() << '\n';
    return kInternal;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mulpart::cli
