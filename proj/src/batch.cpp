#include "mulpart/batch.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "mulpart/closed_forms.hpp"
#include "mulpart/recursive.hpp"

namespace mulpart {

using u64 = std::uint64_t;

std::uint64_t SpfTable::budget_from_env() {
  const char* raw = std::getenv("MULPART_SIEVE_MAX");
  if (!raw || !*raw) return kDefaultBudget;
  return std::stoull(raw);
}

SpfTable::SpfTable(u64 limit, u64 budget) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("sieve limit must be >= 2");
  if (limit > budget) {
    throw std::length_error("sieve limit " + std::to_string(limit) + " exceeds budget " +
                            std::to_string(budget));
  }
  spf_.assign(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    for (u64 j = i * i; j <= limit; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

std::uint32_t SpfTable::at(u64 m) const {
  if (m < 2 || m > limit_) throw std::out_of_range("spf index out of range");
  return spf_[m];
}

PrimeSignature factorize_fast(u64 m, const SpfTable& table) {
  if (m == 0) throw std::invalid_argument("factorize_fast: m must be >= 1");
  if (m > table.limit()) throw std::out_of_range("factorize_fast: m exceeds sieve limit");
  std::vector<PrimePower> factors;
  while (m > 1) {
    const u64 p = table.at(m);
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  return PrimeSignature::from_factors(std::move(factors));
}

void Quantity::validate() const {
  if (ell == 0) throw std::invalid_argument("ell must be >= 1");
  if (is_total()) {
    if (ell < 2) throw std::invalid_argument("totals require ell >= 2");
    return;
  }
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (method == Method::closed) {
    if (ell > 2) throw std::invalid_argument("closed forms need ell in {1,2}");
    if (kind == Kind::mu && k > 4) throw std::invalid_argument("closed forms need k <= 4");
  }
}

std::string Quantity::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::mu: os << "mu"; break;
    case Kind::nu: os << "nu"; break;
    case Kind::mu_total: os << "mu_total"; break;
    case Kind::nu_total: os << "nu_total"; break;
  }
  os << "(";
  if (!is_total()) os << "k=" << k << ",";
  os << "ell=" << ell << ")";
  if (!is_total()) os << (method == Method::closed ? " closed" : " recursive");
  return os.str();
}

ExactCount evaluate(const Quantity& q, const PrimeSignature& f) {
  switch (q.kind) {
    case Quantity::Kind::mu:
      if (q.method == Method::closed) return mu_closed(f, q.k, static_cast<unsigned>(q.ell));
      return mu_rec(f, q.k, q.ell);
    case Quantity::Kind::nu:
      if (q.method == Method::closed) return q.ell == 1 ? nu1(f, q.k) : nu2(f, q.k);
      return nu_rec(f, q.k, q.ell);
    case Quantity::Kind::mu_total:
      return mu_total(f, q.ell);
    case Quantity::Kind::nu_total:
      return nu_total(f, q.ell);
  }
  throw std::logic_error("unknown quantity");
}

namespace {

constexpr u64 kChunk = 8192;

void compute_range(u64 lo, u64 hi, const Quantity& q, const SpfTable& table,
                   std::vector<TableRow>& out) {
  out.clear();
  out.reserve(hi - lo + 1);
  for (u64 m = lo; m <= hi; ++m) out.push_back({m, evaluate(q, factorize_fast(m, table))});
}

}  // namespace

void generate_table(u64 n, const Quantity& q, const SpfTable& table, const RowSink& sink,
                    unsigned threads) {
  q.validate();
  if (n < 2) throw std::invalid_argument("table range must include m = 2");
  if (n > table.limit()) throw std::out_of_range("table range exceeds sieve limit");
  if (q.is_total()) sink({1, 1});
  threads = std::max(threads, 1u);

  if (threads == 1) {
    for (u64 m = 2; m <= n; ++m) sink({m, evaluate(q, factorize_fast(m, table))});
    return;
  }

  // Waves of `threads` chunks; each wave is flushed in index order before
  // the next starts, so memory stays bounded by threads * kChunk rows.
  std::vector<std::vector<TableRow>> buffers(threads);
  for (u64 wave_lo = 2; wave_lo <= n;) {
    std::vector<std::jthread> workers;
    std::vector<std::exception_ptr> errors(threads);
    unsigned used = 0;
    for (unsigned t = 0; t < threads && wave_lo <= n; ++t, ++used) {
      const u64 lo = wave_lo;
      const u64 hi = std::min(n, lo + kChunk - 1);
      wave_lo = hi + 1;
      workers.emplace_back([&, t, lo, hi] {
        try {
          compute_range(lo, hi, q, table, buffers[t]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    workers.clear();
    for (unsigned t = 0; t < used; ++t) {
      if (errors[t]) std::rethrow_exception(errors[t]);
      for (const auto& row : buffers[t]) sink(row);
    }
  }
}

std::vector<TableRow> generate_table(u64 n, const Quantity& q, const SpfTable& table,
                                     unsigned threads) {
  std::vector<TableRow> rows;
  generate_table(n, q, table, [&rows](const TableRow& r) { rows.push_back(r); }, threads);
  return rows;
}

TableWriter::TableWriter(std::ostream& out, TableFormat format) : out_(out), format_(format) {
  if (format_ == TableFormat::csv) out_ << "m,value\n";
}

void TableWriter::write(const TableRow& row) {
  out_ << row.m << (format_ == TableFormat::csv ? ',' : ' ') << row.value.str() << '\n';
}

BFileParseError::BFileParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::vector<TableRow> parse_bfile(std::istream& in) {
  std::vector<TableRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string index, value, extra;
    fields >> index >> value;
    if (value.empty()) throw BFileParseError(lineno, "expected \"index value\"");
    if (fields >> extra) throw BFileParseError(lineno, "trailing field '" + extra + "'");
    if (!is_integer_token(index, false)) throw BFileParseError(lineno, "bad index '" + index + "'");
    if (!is_integer_token(value, true)) throw BFileParseError(lineno, "bad value '" + value + "'");

    u64 m = 0;
    try {
      m = std::stoull(index);
    } catch (const std::out_of_range&) {
      throw BFileParseError(lineno, "index out of range");
    }
    if (!rows.empty() && m <= rows.back().m) {
      throw BFileParseError(lineno, "indices must be strictly increasing");
    }
    rows.push_back({m, ExactCount(value)});
  }
  return rows;
}

std::vector<TableRow> read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_bfile(in);
}

ComparisonReport compare_reference(const std::vector<TableRow>& computed,
                                   const std::vector<TableRow>& reference) {
  ComparisonReport report;
  auto c = computed.begin();
  auto r = reference.begin();
  while (c != computed.end() && r != reference.end()) {
    if (c->m < r->m) {
      ++report.computed_only;
      ++c;
    } else if (r->m < c->m) {
      ++report.reference_only;
      ++r;
    } else {
      if (!report.first) report.first = c->m;
      report.last = c->m;
      ++report.compared;
      if (c->value == r->value) {
        ++report.matched;
      } else {
        report.mismatches.push_back({c->m, c->value, r->value});
      }
      ++c;
      ++r;
    }
  }
  report.computed_only += static_cast<std::size_t>(computed.end() - c);
  report.reference_only += static_cast<std::size_t>(reference.end() - r);
  return report;
}

void print_report(std::ostream& out, const ComparisonReport& report) {
  if (report.first) {
    out << "compared m=" << *report.first << ".." << *report.last << ": " << report.compared
        << " rows, " << report.matched << " matched, " << report.mismatches.size()
        << " mismatched\n";
  } else {
    out << "no overlapping indices\n";
  }
  if (report.computed_only) out << "note: " << report.computed_only << " computed rows not in reference\n";
  if (report.reference_only) out << "note: " << report.reference_only << " reference rows not computed\n";
  for (const auto& mm : report.mismatches) {
    out << "mismatch m=" << mm.m << " computed=" << mm.computed.str()
        << " reference=" << mm.reference.str() << '\n';
  }
}

}  // namespace mulpart
