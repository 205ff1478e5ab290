#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qheis {

enum class Status { Pass, Fail, SkippedDegenerate };
const char *to_string(Status s);
/// Inverse of to_string; throws std::invalid_argument.
Status parse_status(const std::string &s);

/// Named indices of one checked instance, in generation order.
using Tuple = std::vector<std::pair<std::string, long>>;
std::string to_string(const Tuple &t);

struct Entry {
  std::string check;
  Tuple tuple;
  Status status = Status::Pass;
  std::string lhs;
  std::string rhs;
  /// Rendered lhs - rhs (or the error text) for failures; empty otherwise.
  std::string residual;
  friend bool operator==(const Entry &, const Entry &) = default;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  friend bool operator==(const Summary &, const Summary &) = default;
};

struct Report {
  std::string suite;
  std::string q;
  std::map<std::string, long> bounds;
  std::vector<Entry> entries;

  Summary summary() const;
  bool all_pass() const { return summary().fail == 0; }
  friend bool operator==(const Report &, const Report &) = default;
};

/// {suite, q, bounds, entries: [{check, tuple, status, lhs, rhs, residual}], summary}.
std::string to_json(const Report &r, int indent = 2);
/// Throws std::invalid_argument on malformed input.
Report report_from_json(const std::string &text);

/// One line per entry plus a summary line; failures carry both sides and the residual.
std::string to_text(const Report &r, bool verbose = false);

} // namespace qheis
