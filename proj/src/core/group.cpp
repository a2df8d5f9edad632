#include "qdouble/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qdouble/error.hpp"

namespace qdouble {

namespace {

constexpr int kCatalogBound = 24;

void check_index(const FiniteGroup& g, GroupElement a) {
  require(a.index >= 0 && a.index < g.size(), ErrorCode::invalid_argument,
          "group element index " + std::to_string(a.index) + " out of range for " + g.label());
}

// Builds a group from an element list and a multiplication on elements. The
// identity must be elems[0].
template <class T, class Mul>
GroupPtr from_elements(std::string label, const std::vector<T>& elems, Mul mul) {
  const int n = static_cast<int>(elems.size());
  std::map<T, int> index;
  for (int i = 0; i < n; ++i) index.emplace(elems[static_cast<std::size_t>(i)], i);
  std::vector<int> table(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a * n + b)] = index.at(mul(elems[static_cast<std::size_t>(a)],
                                                                 elems[static_cast<std::size_t>(b)]));
  return std::make_shared<const FiniteGroup>(std::move(label), n, std::move(table));
}

}  // namespace

FiniteGroup::FiniteGroup(std::string label, int size, std::vector<int> mul_table)
    : label_(std::move(label)), size_(size), table_(std::move(mul_table)) {
  require(size_ >= 1, ErrorCode::invalid_argument, "group size must be positive");
  require(table_.size() == static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_),
          ErrorCode::invalid_argument, "multiplication table has wrong shape");
  for (int v : table_)
    require(v >= 0 && v < size_, ErrorCode::invalid_argument, "multiplication table entry out of range");
  for (int a = 0; a < size_; ++a)
    require(mul(0, a) == a && mul(a, 0) == a, ErrorCode::invalid_argument,
            "element 0 is not a two-sided identity in " + label_);
  inv_.assign(static_cast<std::size_t>(size_), -1);
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    require(inv_[static_cast<std::size_t>(a)] >= 0, ErrorCode::invalid_argument,
            "element " + std::to_string(a) + " has no two-sided inverse in " + label_);
  }
}

GroupElement FiniteGroup::mul(GroupElement a, GroupElement b) const {
  check_index(*this, a);
  check_index(*this, b);
  return {mul(a.index, b.index)};
}

GroupElement FiniteGroup::inv(GroupElement a) const {
  check_index(*this, a);
  return {inv(a.index)};
}

GroupElement FiniteGroup::conj(GroupElement x, GroupElement s) const {
  check_index(*this, x);
  check_index(*this, s);
  return {conj(x.index, s.index)};
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int p = a; p != 0; p = mul(p, a)) ++k;
  return k;
}

GroupPtr cyclic_group(int n) {
  require(n >= 1, ErrorCode::invalid_argument, "cyclic group order must be positive");
  require(n <= kCatalogBound, ErrorCode::invalid_argument, "group order exceeds catalog bound 24");
  std::vector<int> elems(static_cast<std::size_t>(n));
  std::iota(elems.begin(), elems.end(), 0);
  return from_elements("zn:" + std::to_string(n), elems, [n](int a, int b) { return (a + b) % n; });
}

GroupPtr dihedral_group(int n) {
  require(n >= 1, ErrorCode::invalid_argument, "dihedral parameter must be positive");
  require(2 * n <= kCatalogBound, ErrorCode::invalid_argument, "group order exceeds catalog bound 24");
  // (k, m) encodes r^k s^m; s r s = r^{-1}.
  std::vector<std::pair<int, int>> elems;
  for (int m = 0; m < 2; ++m)
    for (int k = 0; k < n; ++k) elems.emplace_back(k, m);
  return from_elements("d:" + std::to_string(n), elems, [n](auto a, auto b) {
    const int k = ((a.second ? a.first - b.first : a.first + b.first) % n + n) % n;
    return std::pair<int, int>(k, (a.second + b.second) % 2);
  });
}

GroupPtr symmetric_group(int n) {
  require(n >= 1, ErrorCode::invalid_argument, "symmetric group degree must be positive");
  require(n <= 4, ErrorCode::invalid_argument, "symmetric groups above S4 exceed the catalog bound");
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems;
  auto p = id;
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  // (a*b)(i) = a(b(i))
  return from_elements("s:" + std::to_string(n), elems, [](const auto& a, const auto& b) {
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
    return r;
  });
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.size() * b.size();
  require(n <= kCatalogBound, ErrorCode::invalid_argument, "group order exceeds catalog bound 24");
  std::vector<int> table(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i * n + j)] =
          a.mul(i / b.size(), j / b.size()) * b.size() + b.mul(i % b.size(), j % b.size());
  return std::make_shared<const FiniteGroup>("prod(" + a.label() + "," + b.label() + ")", n, std::move(table));
}

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const std::string& whole) {
  require(!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }),
          ErrorCode::parse_error, "bad integer in group descriptor '" + whole + "'");
  require(s.size() < 9, ErrorCode::invalid_argument, "group parameter too large in '" + whole + "'");
  return std::stoi(s);
}

}  // namespace

GroupPtr make_group(const std::string& descriptor) {
  const std::string d = strip(descriptor);
  if (d == "trivial") return cyclic_group(1);
  if (d.rfind("prod(", 0) == 0) {
    require(d.back() == ')', ErrorCode::parse_error, "unbalanced descriptor '" + d + "'");
    const std::string inner = d.substr(5, d.size() - 6);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        auto a = make_group(inner.substr(0, i));
        auto b = make_group(inner.substr(i + 1));
        return direct_product(*a, *b);
      }
    }
    fail(ErrorCode::parse_error, "product descriptor needs two factors: '" + d + "'");
  }
  const auto colon = d.find(':');
  require(colon != std::string::npos, ErrorCode::parse_error, "unknown group descriptor '" + d + "'");
  const std::string kind = d.substr(0, colon);
  const int n = parse_int(d.substr(colon + 1), d);
  if (kind == "zn") return cyclic_group(n);
  if (kind == "s") return symmetric_group(n);
  if (kind == "d") return dihedral_group(n);
  fail(ErrorCode::parse_error, "unknown group family '" + kind + "'");
}

ClauseList group_clauses(int n, std::vector<int> table) {
  auto t = std::make_shared<const std::vector<int>>(std::move(table));
  const long long N = n;
  ClauseList cl;
  if (n < 1 || t->size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n) ||
      std::any_of(t->begin(), t->end(), [n](int v) { return v < 0 || v >= n; })) {
    cl.push_back({"group.shape", [](const Point*) {
                    return std::optional<Witness>(Witness{{}, "table is not an n x n array of indices in [0, n)"});
                  }});
    return cl;
  }
  auto m = [t, N](long long a, long long b) { return (*t)[static_cast<std::size_t>(a * N + b)]; };
  cl.push_back({"group.associativity", [=](const Point* only) {
                  return scan_points({N, N, N}, only, [&](const Point& p) -> std::optional<std::string> {
                    if (m(m(p[0], p[1]), p[2]) == m(p[0], m(p[1], p[2]))) return std::nullopt;
                    return "(ab)c != a(bc)";
                  });
                }});
  cl.push_back({"group.identity", [=](const Point* only) {
                  return scan_points({N}, only, [&](const Point& p) -> std::optional<std::string> {
                    if (m(0, p[0]) == p[0] && m(p[0], 0) == p[0]) return std::nullopt;
                    return "element 0 is not a two-sided identity here";
                  });
                }});
  cl.push_back({"group.inverses", [=](const Point* only) {
                  return scan_points({N}, only, [&](const Point& p) -> std::optional<std::string> {
                    for (long long b = 0; b < N; ++b)
                      if (m(p[0], b) == 0 && m(b, p[0]) == 0) return std::nullopt;
                    return "no two-sided inverse";
                  });
                }});
  cl.push_back({"group.latin_square", [=](const Point* only) {
                  // point = (axis, line): axis 0 checks a row, axis 1 a column
                  return scan_points({2, N}, only, [&](const Point& p) -> std::optional<std::string> {
                    std::vector<char> seen(static_cast<std::size_t>(N), 0);
                    for (long long k = 0; k < N; ++k) {
                      const int v = p[0] == 0 ? m(p[1], k) : m(k, p[1]);
                      if (seen[static_cast<std::size_t>(v)]++) return "repeated entry " + std::to_string(v);
                    }
                    return std::nullopt;
                  });
                }});
  return cl;
}

Report verify_group_table(int n, const std::vector<int>& table) { return run_clauses(group_clauses(n, table)); }

Report verify_group(const FiniteGroup& g) { return verify_group_table(g.size(), g.table()); }

}  // namespace qdouble
