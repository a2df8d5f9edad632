#include "qdouble/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qdouble/error.hpp"

namespace qdouble {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

void Report::pass(const std::string& name, std::string note) {
  clauses_.push_back({name, Status::pass, std::nullopt, std::move(note)});
}

void Report::skip(const std::string& name, std::string note) {
  clauses_.push_back({name, Status::skipped, std::nullopt, std::move(note)});
}

void Report::fail(const std::string& name, Witness w) {
  clauses_.push_back({name, Status::fail, std::move(w), {}});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto c : other.clauses_) {
    if (!prefix.empty()) c.name = prefix + "." + c.name;
    clauses_.push_back(std::move(c));
  }
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(clauses_.begin(), clauses_.end(), [](const auto& c) { return c.status == Status::fail; }));
}

const ClauseResult* Report::find(const std::string& name) const {
  for (const auto& c : clauses_)
    if (c.name == name) return &c;
  return nullptr;
}

const ClauseResult* Report::first_failure() const {
  for (const auto& c : clauses_)
    if (c.status == Status::fail) return &c;
  return nullptr;
}

static std::string qualified(const std::string& prefix, const std::string& name) {
  return prefix.empty() ? name : prefix + "." + name;
}

void append_clauses(ClauseList& dst, ClauseList src, const std::string& prefix) {
  for (auto& c : src) {
    c.name = qualified(prefix, c.name);
    dst.push_back(std::move(c));
  }
}

Report run_clauses(const ClauseList& clauses, const std::string& prefix) {
  Report r;
  for (const auto& c : clauses) {
    const auto name = qualified(prefix, c.name);
    if (c.skipped) {
      r.skip(name, *c.skipped);
      continue;
    }
    if (auto w = c.check(nullptr))
      r.fail(name, std::move(*w));
    else
      r.pass(name);
  }
  return r;
}

ClauseResult replay_clause(const ClauseList& clauses, const std::string& name, const Point& point,
                           const std::string& prefix) {
  for (const auto& c : clauses) {
    const auto full = qualified(prefix, c.name);
    if (full != name) continue;
    if (c.skipped) return {full, Status::skipped, std::nullopt, *c.skipped};
    if (auto w = c.check(&point)) return {full, Status::fail, std::move(w), {}};
    return {full, Status::pass, std::nullopt, {}};
  }
  fail(ErrorCode::invalid_argument, "no clause named '" + name + "' to replay");
}

unsigned worker_count() {
  if (const char* env = std::getenv("QDOUBLE_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min(v, 256L));
  }
  return 1;
}

namespace {

// Scans points whose first coordinate is in `firsts`, in lexicographic order.
std::optional<Witness> scan_range(const std::vector<long long>& extents, const std::vector<long long>& firsts,
                                  const PointCheck& check) {
  const std::size_t k = extents.size();
  Point p(k, 0);
  for (long long f : firsts) {
    std::fill(p.begin(), p.end(), 0);
    p[0] = f;
    while (true) {
      if (auto d = check(p)) return Witness{p, std::move(*d)};
      bool done = true;
      for (std::size_t i = k; i-- > 1;) {
        if (++p[i] < extents[i]) {
          done = false;
          break;
        }
        p[i] = 0;
      }
      if (done) break;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> scan_points(const std::vector<long long>& extents, const Point* only,
                                   const PointCheck& check) {
  if (only) {
    require(only->size() == extents.size(), ErrorCode::invalid_argument,
            "witness point has wrong arity: " + point_to_string(*only));
    for (std::size_t i = 0; i < extents.size(); ++i)
      require((*only)[i] >= 0 && (*only)[i] < extents[i], ErrorCode::invalid_argument,
              "witness point out of range: " + point_to_string(*only));
    if (auto d = check(*only)) return Witness{*only, std::move(*d)};
    return std::nullopt;
  }
  if (extents.empty()) {
    if (auto d = check({})) return Witness{{}, std::move(*d)};
    return std::nullopt;
  }
  for (long long e : extents)
    if (e <= 0) return std::nullopt;

  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(extents[0]));
  if (workers <= 1) {
    std::vector<long long> firsts(static_cast<std::size_t>(extents[0]));
    for (long long i = 0; i < extents[0]; ++i) firsts[static_cast<std::size_t>(i)] = i;
    return scan_range(extents, firsts, check);
  }

  std::vector<std::optional<Witness>> found(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        std::vector<long long> firsts;
        for (long long i = w; i < extents[0]; i += workers) firsts.push_back(i);
        found[w] = scan_range(extents, firsts, check);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::optional<Witness> best;
  for (auto& f : found)
    if (f && (!best || f->point < best->point)) best = std::move(f);
  return best;
}

std::string point_to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

std::string report_to_json(const Report& r, int indent) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& c : r.clauses()) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = status_name(c.status);
    if (c.witness) e["witness"] = {{"point", c.witness->point}, {"detail", c.witness->detail}};
    if (!c.note.empty()) e["note"] = c.note;
    j.push_back(std::move(e));
  }
  return j.dump(indent);
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.clauses()) {
    os << "[" << status_name(c.status) << "] " << c.name;
    if (c.witness) os << "  witness " << point_to_string(c.witness->point) << ": " << c.witness->detail;
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << '\n';
  }
  return os.str();
}

}  // namespace qdouble
