#pragma once

// Verification reports.
//
// Every verifier is expressed as a list of named clauses. A clause scans a
// finite index domain (basis elements, group tuples, tensor keys) and stops at
// the first point where its identity fails; that point is the witness. Feeding
// the witness point back to the same clause re-checks only that point, which
// is what `--replay` does.

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qdouble {

using Point = std::vector<long long>;

struct Witness {
  Point point;
  std::string detail;
};

enum class Status { pass, fail, skipped };

const char* status_name(Status s);

struct ClauseResult {
  std::string name;
  Status status = Status::pass;
  std::optional<Witness> witness;
  std::string note;
};

class Report {
 public:
  void add(ClauseResult r) { clauses_.push_back(std::move(r)); }
  void pass(const std::string& name, std::string note = {});
  void skip(const std::string& name, std::string note);
  void fail(const std::string& name, Witness w);
  /// Appends all clauses of `other`, prefixing their names with `prefix.`.
  void append(const Report& other, const std::string& prefix = {});

  bool passed() const;
  std::size_t failures() const;
  const std::vector<ClauseResult>& clauses() const noexcept { return clauses_; }
  const ClauseResult* find(const std::string& name) const;
  const ClauseResult* first_failure() const;

 private:
  std::vector<ClauseResult> clauses_;
};

/// A replayable check. `only == nullptr` scans the whole domain; otherwise
/// just the given point is re-checked.
struct Clause {
  std::string name;
  std::function<std::optional<Witness>(const Point* only)> check;
  /// Set when the clause does not apply (missing data); the check is not run.
  std::optional<std::string> skipped;
};

using ClauseList = std::vector<Clause>;

/// Moves the clauses of `src` to the end of `dst`, renaming them `prefix.name`.
void append_clauses(ClauseList& dst, ClauseList src, const std::string& prefix);

Report run_clauses(const ClauseList& clauses, const std::string& prefix = {});

/// Re-runs one clause (matched by full name, with `prefix.` applied) at
/// `point`. Throws if no clause has that name.
ClauseResult replay_clause(const ClauseList& clauses, const std::string& name, const Point& point,
                           const std::string& prefix = {});

/// Predicate over a single point: nullopt if the identity holds there,
/// otherwise a human-readable detail.
using PointCheck = std::function<std::optional<std::string>(const Point&)>;

/// Scans the box [0,extents[0]) x ... in lexicographic order and returns the
/// first failing point. The first coordinate may be split across worker
/// threads (QDOUBLE_WORKERS); the lexicographically smallest failure is
/// reported either way.
std::optional<Witness> scan_points(const std::vector<long long>& extents, const Point* only,
                                   const PointCheck& check);

/// Worker count from QDOUBLE_WORKERS (default 1, clamped to >= 1).
unsigned worker_count();

std::string report_to_json(const Report& r, int indent = 2);
std::string report_to_text(const Report& r);
std::string point_to_string(const Point& p);

}  // namespace qdouble
