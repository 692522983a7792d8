#ifndef MULPART_BATCH_HPP
#define MULPART_BATCH_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mulpart/arith.hpp"

namespace mulpart {

/// Smallest-prime-factor table for 2..limit.
class SpfTable {
 public:
  /// Default ceiling on limit; MULPART_SIEVE_MAX overrides it.
  static constexpr std::uint64_t kDefaultBudget = 100'000'000;
  static std::uint64_t budget_from_env();

  /// Throws std::invalid_argument for limit < 2 and std::length_error when
  /// limit exceeds `budget`.
  explicit SpfTable(std::uint64_t limit, std::uint64_t budget = budget_from_env());

  std::uint64_t limit() const { return limit_; }
  /// Least prime divisor of m, 2 <= m <= limit.
  std::uint32_t at(std::uint64_t m) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
};

/// Identical to factorize(m), by repeated smallest-factor division.
PrimeSignature factorize_fast(std::uint64_t m, const SpfTable& table);

enum class Method { closed, recursive };

/// Which counting function a table tabulates.
struct Quantity {
  enum class Kind { mu, nu, mu_total, nu_total };
  Kind kind = Kind::mu;
  unsigned k = 1;          // ignored for totals
  std::uint64_t ell = 1;
  Method method = Method::closed;

  /// Throws std::invalid_argument for unsupported combinations.
  void validate() const;
  bool is_total() const { return kind == Kind::mu_total || kind == Kind::nu_total; }
  std::string describe() const;
};

/// Value of `q` at m (m >= 2).
ExactCount evaluate(const Quantity& q, const PrimeSignature& f);

struct TableRow {
  std::uint64_t m;
  ExactCount value;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

using RowSink = std::function<void(const TableRow&)>;

/// Streams rows in increasing m. Per-k tables cover m = 2..N; totals also
/// emit m = 1 with value 1 (empty product), matching external sequences.
/// With threads > 1 the range is cut into chunks computed concurrently and
/// re-emitted in order, so the sink sees exactly the single-threaded stream.
void generate_table(std::uint64_t n, const Quantity& q, const SpfTable& table, const RowSink& sink,
                    unsigned threads = 1);

std::vector<TableRow> generate_table(std::uint64_t n, const Quantity& q, const SpfTable& table,
                                     unsigned threads = 1);

enum class TableFormat { csv, bfile };

/// Formats rows: CSV with header "m,value", or b-file "m value" lines.
class TableWriter {
 public:
  TableWriter(std::ostream& out, TableFormat format);
  void write(const TableRow& row);

 private:
  std::ostream& out_;
  TableFormat format_;
};

class BFileParseError : public std::runtime_error {
 public:
  BFileParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads "index value" lines; '#' comments and blank lines are skipped.
/// Indices must be strictly increasing.
std::vector<TableRow> parse_bfile(std::istream& in);
std::vector<TableRow> read_bfile(const std::string& path);

struct Mismatch {
  std::uint64_t m;
  ExactCount computed;
  ExactCount reference;
};

struct ComparisonReport {
  std::optional<std::uint64_t> first;  // overlap range compared
  std::optional<std::uint64_t> last;
  std::size_t compared = 0;
  std::size_t matched = 0;
  std::size_t computed_only = 0;   // computed rows with no reference entry
  std::size_t reference_only = 0;  // reference rows with no computed entry
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

ComparisonReport compare_reference(const std::vector<TableRow>& computed,
                                   const std::vector<TableRow>& reference);

void print_report(std::ostream& out, const ComparisonReport& report);

}  // namespace mulpart

#endif  // MULPART_BATCH_HPP
