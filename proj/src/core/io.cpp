#include "qdouble/io.hpp"

#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "qdouble/error.hpp"

namespace qdouble {

namespace {

Json integer_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<unsigned long long>()));
    return BigInt(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    BigInt z;
    if (z.set_str(j.get<std::string>(), 10) != 0) fail(ErrorCode::parse_error, "bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  fail(ErrorCode::parse_error, "expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0) fail(ErrorCode::parse_error, "bad rational '" + j.get<std::string>() + "'");
    require(q.get_den() != 0, ErrorCode::parse_error, "zero denominator in '" + j.get<std::string>() + "'");
    q.canonicalize();
    return q;
  }
  fail(ErrorCode::parse_error, "expected a rational, got " + j.dump());
}

unsigned order_from_json(const Json& j) {
  require(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() > 0), ErrorCode::parse_error,
          "order must be a positive integer, got " + j.dump());
  const auto v = j.get<long long>();
  require(v >= 1 && v <= 1'000'000, ErrorCode::parse_error, "order out of range: " + j.dump());
  return static_cast<unsigned>(v);
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorCode::parse_error, std::string("missing field '") + key + "'");
  return j.at(key);
}

int index_from_json(const Json& j, int bound, const char* what) {
  require(j.is_number_integer(), ErrorCode::parse_error, std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  require(v >= 0 && v < bound, ErrorCode::parse_error,
          std::string(what) + " " + std::to_string(v) + " out of range [0," + std::to_string(bound) + ")");
  return static_cast<int>(v);
}

bool same_cocycle(const Cochain3& a, const Cochain3& b) {
  if (a.group().table() != b.group().table()) return false;
  const unsigned m = lcm_order(a.order(), b.order());
  return a.embedded(m).values() == b.embedded(m).values();
}

}  // namespace

Json scalar_to_json(const CycScalar& c) {
  if (c.is_zero()) return 0;
  Json num = Json::array(), den = Json::array();
  for (const auto& q : c.coeffs()) {
    num.push_back(integer_to_json(q.get_num()));
    den.push_back(integer_to_json(q.get_den()));
  }
  return Json{{"order", c.order()}, {"num", std::move(num)}, {"den", std::move(den)}};
}

unsigned scalar_json_order(const Json& j) {
  if (j.is_object()) {
    if (j.contains("root")) {
      const auto& r = j.at("root");
      require(r.is_array() && r.size() == 2, ErrorCode::parse_error, "root must be [N, k]");
      return order_from_json(r[0]);
    }
    return order_from_json(field(j, "order"));
  }
  return 1;
}

CycScalar scalar_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return CycScalar::rational(1, rational_from_json(j));
  require(j.is_object(), ErrorCode::parse_error, "bad scalar " + j.dump());
  if (j.contains("root")) {
    const auto& r = j.at("root");
    require(r.is_array() && r.size() == 2 && r[1].is_number_integer(), ErrorCode::parse_error, "root must be [N, k]");
    return CycScalar::root_of_unity(order_from_json(r[0]), r[1].get<long long>());
  }
  const unsigned order = order_from_json(field(j, "order"));
  const auto& num = field(j, "num");
  require(num.is_array(), ErrorCode::parse_error, "num must be an array");
  const Json den = j.contains("den") ? j.at("den") : Json::array();
  require(den.is_array() && (den.empty() || den.size() == num.size()), ErrorCode::parse_error,
          "den must be empty or parallel to num");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < num.size(); ++i) {
    Rational q(integer_from_json(num[i]));
    if (!den.empty()) {
      const BigInt d = integer_from_json(den[i]);
      require(d != 0, ErrorCode::parse_error, "zero denominator in scalar");
      q /= Rational(d);
    }
    coeffs.push_back(q);
  }
  return CycScalar::from_coeffs(order, std::move(coeffs));
}

CycScalar scalar_from_json(const Json& j, unsigned order) {
  const auto c = scalar_from_json(j);
  require(order % c.order() == 0, ErrorCode::invalid_argument,
          "scalar of order " + std::to_string(c.order()) + " does not embed into order " + std::to_string(order));
  return c.order() == order ? c : c.embed(order);
}

Json tensor_to_json(const TensorElement& t) {
  Json out = Json::array();
  for (const auto& [k, c] : t.terms()) out.push_back({{"idx", t.decode(k)}, {"val", scalar_to_json(c)}});
  return out;
}

TensorElement tensor_from_json(const Json& j, int arity, int dim, unsigned order) {
  require(j.is_array(), ErrorCode::parse_error, "tensor must be a list of {idx, val}");
  TensorElement t(arity, dim, order);
  for (const auto& e : j) {
    const auto& idx = field(e, "idx");
    require(idx.is_array() && static_cast<int>(idx.size()) == arity, ErrorCode::parse_error,
            "tensor index " + idx.dump() + " should have " + std::to_string(arity) + " entries");
    std::vector<int> ix;
    for (const auto& i : idx) ix.push_back(index_from_json(i, dim, "tensor index"));
    t.add(ix, scalar_from_json(field(e, "val"), order));
  }
  return t;
}

Json group_to_json(const FiniteGroup& g) {
  Json mul = Json::array();
  for (int a = 0; a < g.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.size(); ++b) row.push_back(g.mul(a, b));
    mul.push_back(std::move(row));
  }
  return Json{{"label", g.label()}, {"size", g.size()}, {"mul", std::move(mul)}};
}

RawGroupTable raw_group_from_json(const Json& j) {
  if (j.is_string()) {
    const auto g = make_group(j.get<std::string>());
    return {g->label(), g->size(), g->table()};
  }
  RawGroupTable raw;
  raw.label = j.is_object() && j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "inline";
  const auto& size = field(j, "size");
  require(size.is_number_integer() && size.get<long long>() >= 1 && size.get<long long>() <= 4096, ErrorCode::parse_error,
          "group size must be in [1, 4096]");
  raw.size = size.get<int>();
  const auto& mul = field(j, "mul");
  require(mul.is_array() && static_cast<int>(mul.size()) == raw.size, ErrorCode::parse_error, "mul must have size rows");
  for (const auto& row : mul) {
    require(row.is_array() && static_cast<int>(row.size()) == raw.size, ErrorCode::parse_error, "mul rows must have size entries");
    for (const auto& v : row) raw.table.push_back(index_from_json(v, raw.size, "group element"));
  }
  return raw;
}

GroupPtr group_from_json(const Json& j) {
  if (j.is_string()) return make_group(j.get<std::string>());
  auto raw = raw_group_from_json(j);
  return std::make_shared<const FiniteGroup>(raw.label, raw.size, std::move(raw.table));
}

Json cocycle_to_json(const Cochain3& phi) {
  const int n = phi.group().size();
  Json values = Json::array();
  for (int x = 0; x < n; ++x) {
    Json plane = Json::array();
    for (int y = 0; y < n; ++y) {
      Json row = Json::array();
      for (int z = 0; z < n; ++z) row.push_back(scalar_to_json(phi(x, y, z)));
      plane.push_back(std::move(row));
    }
    values.push_back(std::move(plane));
  }
  return Json{{"group", group_to_json(phi.group())}, {"label", phi.label}, {"order", phi.order()}, {"values", std::move(values)}};
}

Cochain3 cocycle_from_json(const Json& j, GroupPtr group) {
  if (j.is_string()) return resolve_cocycle(j.get<std::string>(), std::move(group));
  GroupPtr g = j.contains("group") ? group_from_json(j.at("group")) : group;
  require(g != nullptr, ErrorCode::parse_error, "cocycle needs a group");
  if (group) require(group->table() == g->table(), ErrorCode::invalid_argument, "cocycle file is over a different group table");
  const int n = g->size();
  const auto& values = field(j, "values");
  auto shape_ok = [n](const Json& a) { return a.is_array() && static_cast<int>(a.size()) == n; };
  require(shape_ok(values), ErrorCode::parse_error, "values must be an n x n x n array");
  unsigned order = j.contains("order") ? order_from_json(j.at("order")) : 1;
  for (const auto& plane : values) {
    require(shape_ok(plane), ErrorCode::parse_error, "values must be an n x n x n array");
    for (const auto& row : plane) {
      require(shape_ok(row), ErrorCode::parse_error, "values must be an n x n x n array");
      for (const auto& v : row) order = lcm_order(order, scalar_json_order(v));
    }
  }
  std::vector<CycScalar> vals;
  vals.reserve(static_cast<std::size_t>(n) * n * n);
  for (const auto& plane : values)
    for (const auto& row : plane)
      for (const auto& v : row) vals.push_back(scalar_from_json(v, order));
  Cochain3 phi(g, order, std::move(vals));
  phi.label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "file";
  return phi;
}

Cochain3 resolve_cocycle(const std::string& descriptor, GroupPtr group) {
  if (descriptor == "trivial") {
    require(group != nullptr, ErrorCode::invalid_argument, "trivial cocycle needs --group");
    return trivial_cocycle(group);
  }
  if (descriptor.rfind("std:", 0) == 0) {
    // std:zn:N:p=k
    const auto rest = descriptor.substr(4);
    const auto pos = rest.find(":p=");
    require(rest.rfind("zn:", 0) == 0 && pos != std::string::npos, ErrorCode::parse_error,
            "cocycle descriptor must look like std:zn:N:p=k, got '" + descriptor + "'");
    long long n = 0, p = 0;
    try {
      std::size_t used = 0;
      n = std::stoll(rest.substr(3, pos - 3), &used);
      require(used == pos - 3, ErrorCode::parse_error, "bad N in '" + descriptor + "'");
      const auto ptext = rest.substr(pos + 3);
      p = std::stoll(ptext, &used);
      require(used == ptext.size(), ErrorCode::parse_error, "bad p in '" + descriptor + "'");
    } catch (const std::logic_error&) {
      fail(ErrorCode::parse_error, "bad cocycle descriptor '" + descriptor + "'");
    }
    require(n >= 1 && n <= 64, ErrorCode::parse_error, "std cocycle needs 1 <= N <= 64");
    auto phi = standard_cocycle_cyclic(static_cast<int>(n), p);
    if (group)
      require(group->table() == phi.group().table(), ErrorCode::invalid_argument,
              "cocycle '" + descriptor + "' is not over group " + group->label());
    return phi;
  }
  const auto trimmed = descriptor.find_first_not_of(" \t\n");
  if (trimmed != std::string::npos && descriptor[trimmed] == '{') return cocycle_from_json(parse_json(descriptor), group);
  return cocycle_from_json(read_json_file(descriptor), group);
}

Json qhopf_to_json(const QuasiHopfData& H, const Json& provenance) {
  const int d = H.dim();
  Json j;
  j["provenance"] = provenance;
  j["label"] = H.label;
  j["dim"] = d;
  j["order"] = H.order();
  Json mul = Json::array();
  for (int a = 0; a < d; ++a) {
    Json plane = Json::array();
    for (int b = 0; b < d; ++b) {
      std::vector<Json> row(static_cast<std::size_t>(d), Json(0));
      for (const auto& [k, c] : H.algebra.product(a, b)) row[static_cast<std::size_t>(k)] = scalar_to_json(c);
      plane.push_back(std::move(row));
    }
    mul.push_back(std::move(plane));
  }
  j["mul"] = std::move(mul);
  j["unit"] = tensor_to_json(H.algebra.unit);
  Json cop = Json::array();
  for (const auto& t : H.coproduct) cop.push_back(tensor_to_json(t));
  j["coproduct"] = std::move(cop);
  Json eps = Json::array();
  for (const auto& c : H.counit) eps.push_back(scalar_to_json(c));
  j["counit"] = std::move(eps);
  j["associator"] = tensor_to_json(H.associator);
  if (H.antipode) {
    Json s = Json::array();
    for (const auto& t : *H.antipode) s.push_back(tensor_to_json(t));
    j["antipode"] = std::move(s);
  }
  if (H.alpha) j["alpha"] = tensor_to_json(*H.alpha);
  if (H.beta) j["beta"] = tensor_to_json(*H.beta);
  if (H.rmatrix) j["rmatrix"] = tensor_to_json(*H.rmatrix);
  return j;
}

QuasiHopfData qhopf_from_json(const Json& j) {
  QuasiHopfData H;
  const auto& dj = field(j, "dim");
  require(dj.is_number_integer() && dj.get<long long>() >= 1 && dj.get<long long>() <= 4096, ErrorCode::parse_error,
          "dim must be in [1, 4096]");
  const int d = dj.get<int>();
  const unsigned N = order_from_json(field(j, "order"));
  H.label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "file";
  H.algebra.dim = d;
  H.algebra.order = N;
  H.algebra.mul.assign(static_cast<std::size_t>(d) * d, {});
  const auto& mul = field(j, "mul");
  auto sized = [d](const Json& a) { return a.is_array() && static_cast<int>(a.size()) == d; };
  require(sized(mul), ErrorCode::parse_error, "mul must be dim x dim x dim");
  for (int a = 0; a < d; ++a) {
    require(sized(mul[static_cast<std::size_t>(a)]), ErrorCode::parse_error, "mul must be dim x dim x dim");
    for (int b = 0; b < d; ++b) {
      const auto& row = mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      require(sized(row), ErrorCode::parse_error, "mul must be dim x dim x dim");
      for (int k = 0; k < d; ++k) {
        auto c = scalar_from_json(row[static_cast<std::size_t>(k)], N);
        if (!c.is_zero()) H.algebra.mul[static_cast<std::size_t>(a * d + b)].push_back({k, std::move(c)});
      }
    }
  }
  H.algebra.unit = tensor_from_json(field(j, "unit"), 1, d, N);
  const auto& cop = field(j, "coproduct");
  require(sized(cop), ErrorCode::parse_error, "coproduct must have dim entries");
  for (const auto& t : cop) H.coproduct.push_back(tensor_from_json(t, 2, d, N));
  const auto& eps = field(j, "counit");
  require(sized(eps), ErrorCode::parse_error, "counit must have dim entries");
  for (const auto& c : eps) H.counit.push_back(scalar_from_json(c, N));
  H.associator = tensor_from_json(field(j, "associator"), 3, d, N);
  if (j.contains("antipode")) {
    const auto& s = j.at("antipode");
    require(sized(s), ErrorCode::parse_error, "antipode must have dim entries");
    std::vector<TensorElement> ant;
    for (const auto& t : s) ant.push_back(tensor_from_json(t, 1, d, N));
    H.antipode = std::move(ant);
  }
  if (j.contains("alpha")) H.alpha = tensor_from_json(j.at("alpha"), 1, d, N);
  if (j.contains("beta")) H.beta = tensor_from_json(j.at("beta"), 1, d, N);
  if (j.contains("rmatrix")) H.rmatrix = tensor_from_json(j.at("rmatrix"), 2, d, N);
  return H;
}

Json object_to_json(const CrossedGModule& V) {
  Json action = Json::array();
  for (int v = 0; v < V.dim; ++v) {
    Json row = Json::array();
    for (int x = 0; x < V.group->size(); ++x) {
      Json vec = Json::array();
      for (const auto& [u, c] : V.act(v, x)) vec.push_back({{"idx", Json::array({u})}, {"val", scalar_to_json(c)}});
      row.push_back(std::move(vec));
    }
    action.push_back(std::move(row));
  }
  return Json{{"group", group_to_json(*V.group)}, {"cocycle", cocycle_to_json(*V.phi)}, {"label", V.label},
              {"grading", V.grading}, {"action", std::move(action)}};
}

CrossedGModule object_from_json(const Json& j, std::shared_ptr<const Cochain3> phi) {
  GroupPtr g = j.contains("group") ? group_from_json(j.at("group")) : (phi ? phi->group_ptr() : nullptr);
  require(g != nullptr, ErrorCode::parse_error, "object needs a group");
  std::shared_ptr<const Cochain3> own;
  if (j.contains("cocycle")) own = std::make_shared<const Cochain3>(cocycle_from_json(j.at("cocycle"), g));
  if (phi && own)
    require(same_cocycle(*phi, *own), ErrorCode::invalid_argument, "object's cocycle differs from the requested one");
  if (!own) own = phi;
  require(own != nullptr, ErrorCode::parse_error, "object needs a cocycle");
  require(own->group().table() == g->table(), ErrorCode::invalid_argument, "object's cocycle is over a different group");

  CrossedGModule V;
  V.group = own->group_ptr();
  V.phi = own;
  V.label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "file";
  const int n = g->size();
  const auto& grading = field(j, "grading");
  require(grading.is_array() && !grading.empty(), ErrorCode::parse_error, "grading must be a non-empty array");
  V.dim = static_cast<int>(grading.size());
  for (const auto& s : grading) V.grading.push_back(index_from_json(s, n, "degree"));
  const auto& action = field(j, "action");
  require(action.is_array() && static_cast<int>(action.size()) == V.dim, ErrorCode::parse_error,
          "action must have one row per basis vector");
  for (const auto& row : action) {
    require(row.is_array() && static_cast<int>(row.size()) == n, ErrorCode::parse_error,
            "each action row must have one vector per group element");
    for (const auto& vec : row) {
      const auto t = tensor_from_json(vec, 1, V.dim, own->order());
      SparseVec sv;
      for (const auto& [k, c] : t.terms()) sv.push_back({static_cast<int>(k), c});
      V.action.push_back(std::move(sv));
    }
  }
  return V;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::io_error, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  require(out.good(), ErrorCode::io_error, "cannot write '" + path + "'");
  out << text;
  require(out.good(), ErrorCode::io_error, "write to '" + path + "' failed");
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace qdouble
