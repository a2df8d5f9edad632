#include "qdouble/qdouble.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "qdouble/catalog.hpp"
#include "qdouble/crossedmod.hpp"
#include "qdouble/dpr.hpp"
#include "qdouble/error.hpp"
#include "qdouble/io.hpp"
#include "qdouble/qhopf.hpp"
#include "qdouble/reconstruct.hpp"

using namespace qdouble;

struct qd_group {
  GroupPtr g;
};

struct qd_cocycle {
  std::shared_ptr<const Cochain3> phi;
};

struct qd_double {
  QuasiHopfPtr H;
  /// null for algebras loaded from JSON
  std::shared_ptr<const DPRInstance> D;
  Json provenance;
};

struct qd_object {
  std::shared_ptr<const CrossedGModule> V;
};

struct qd_checks {
  ClauseList clauses;
};

struct qd_report {
  Report r;
};

namespace {

thread_local std::string last_error;

qd_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_argument: return QD_INVALID_ARGUMENT;
    case ErrorCode::parse_error: return QD_PARSE_ERROR;
    case ErrorCode::division_by_zero: return QD_DIVISION_BY_ZERO;
    case ErrorCode::not_invertible: return QD_NOT_INVERTIBLE;
    case ErrorCode::budget_exceeded: return QD_BUDGET_EXCEEDED;
    case ErrorCode::io_error: return QD_IO_ERROR;
    case ErrorCode::internal: return QD_INTERNAL;
  }
  return QD_INTERNAL;
}

template <class F>
qd_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return QD_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return QD_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QD_BUDGET_EXCEEDED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QD_INTERNAL;
  }
}

#define QD_NONNULL(p)                               \
  do {                                              \
    if (!(p)) {                                     \
      last_error = std::string(#p) + " is NULL";    \
      return QD_NULL_POINTER;                       \
    }                                               \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

bool looks_like_json(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (s[p] == '{' || s[p] == '[');
}

Json load_json(const std::string& path_or_json) {
  return looks_like_json(path_or_json) ? parse_json(path_or_json) : read_json_file(path_or_json);
}

const DPRInstance& require_built(const qd_double* d) {
  require(d->D != nullptr, ErrorCode::invalid_argument, "this operation needs a double built from a cocycle, not a loaded algebra");
  return *d->D;
}

}  // namespace

extern "C" {

const char* qd_version(void) { return "0.1.0"; }

const char* qd_status_name(qd_status s) {
  switch (s) {
    case QD_OK: return "ok";
    case QD_INVALID_ARGUMENT: return "invalid_argument";
    case QD_PARSE_ERROR: return "parse_error";
    case QD_DIVISION_BY_ZERO: return "division_by_zero";
    case QD_NOT_INVERTIBLE: return "not_invertible";
    case QD_BUDGET_EXCEEDED: return "budget_exceeded";
    case QD_IO_ERROR: return "io_error";
    case QD_INTERNAL: return "internal";
    case QD_NULL_POINTER: return "null_pointer";
  }
  return "unknown";
}

const char* qd_last_error(void) { return last_error.c_str(); }

void qd_string_free(char* s) { std::free(s); }

qd_status qd_group_create(const char* descriptor, qd_group** out) {
  QD_NONNULL(descriptor);
  QD_NONNULL(out);
  return guarded([&] {
    const std::string d = descriptor;
    GroupPtr g = looks_like_json(d) ? group_from_json(parse_json(d)) : make_group(d);
    *out = new qd_group{std::move(g)};
  });
}

void qd_group_free(qd_group* g) { delete g; }

int qd_group_size(const qd_group* g) { return g ? g->g->size() : 0; }

qd_status qd_group_to_json(const qd_group* g, char** out) {
  QD_NONNULL(g);
  QD_NONNULL(out);
  return guarded([&] { *out = dup_string(group_to_json(*g->g).dump(2)); });
}

qd_status qd_group_checks(const qd_group* g, qd_checks** out) {
  QD_NONNULL(g);
  QD_NONNULL(out);
  return guarded([&] { *out = new qd_checks{group_clauses(g->g->size(), g->g->table())}; });
}

qd_status qd_group_table_checks(const char* json_text, qd_checks** out) {
  QD_NONNULL(json_text);
  QD_NONNULL(out);
  return guarded([&] {
    auto raw = raw_group_from_json(parse_json(json_text));
    *out = new qd_checks{group_clauses(raw.size, std::move(raw.table))};
  });
}

qd_status qd_cocycle_create(const qd_group* g, const char* descriptor, qd_cocycle** out) {
  QD_NONNULL(descriptor);
  QD_NONNULL(out);
  return guarded([&] { *out = new qd_cocycle{std::make_shared<const Cochain3>(resolve_cocycle(descriptor, g ? g->g : nullptr))}; });
}

void qd_cocycle_free(qd_cocycle* c) { delete c; }

unsigned qd_cocycle_order(const qd_cocycle* c) { return c ? c->phi->order() : 0; }

qd_status qd_cocycle_to_json(const qd_cocycle* c, char** out) {
  QD_NONNULL(c);
  QD_NONNULL(out);
  return guarded([&] { *out = dup_string(cocycle_to_json(*c->phi).dump(2)); });
}

qd_status qd_cocycle_checks(const qd_cocycle* c, qd_checks** out) {
  QD_NONNULL(c);
  QD_NONNULL(out);
  return guarded([&] {
    ClauseList cl;
    append_clauses(cl, cocycle_clauses(*c->phi), "");
    auto phi = c->phi;
    cl.push_back({"cocycle.full_normalization", [phi](const Point*) -> std::optional<Witness> {
                    const Report r = verify_full_normalization(*phi);
                    if (const auto* f = r.first_failure()) return f->witness;
                    return std::nullopt;
                  }, {}});
    append_clauses(cl, chi_clauses(chi_from_phi(*c->phi)), "");
    *out = new qd_checks{std::move(cl)};
  });
}

qd_status qd_cocycle_compare(const qd_cocycle* a, const qd_cocycle* b, unsigned root_order, int* cohomologous,
                             char** witness) {
  QD_NONNULL(a);
  QD_NONNULL(b);
  QD_NONNULL(cohomologous);
  return guarded([&] {
    const auto res = are_cohomologous_bruteforce(*a->phi, *b->phi, root_order);
    *cohomologous = res.cohomologous ? 1 : 0;
    if (witness) {
      Json w = nullptr;
      if (res.witness) {
        const int n = res.witness->group().size();
        w = Json::array();
        for (int x = 0; x < n; ++x) {
          Json row = Json::array();
          for (int y = 0; y < n; ++y) row.push_back(scalar_to_json((*res.witness)(x, y)));
          w.push_back(std::move(row));
        }
      }
      *witness = dup_string(w.dump());
    }
  });
}

qd_status qd_double_build(const qd_cocycle* c, const char* mutation, qd_double** out) {
  QD_NONNULL(c);
  QD_NONNULL(out);
  return guarded([&] {
    const DprMutation m = mutation ? parse_mutation(mutation) : DprMutation::none;
    auto D = std::make_shared<const DPRInstance>(attach_antipode(build_dpr(*c->phi, m)));
    Json prov{{"group", D->group->label()},
              {"cocycle", c->phi->label},
              {"order", c->phi->order()},
              {"mutation", mutation_name(m)},
              {"antipode", D->antipode_absent ? "absent" : "present"}};
    *out = new qd_double{D->qhopf, D, std::move(prov)};
  });
}

qd_status qd_double_load(const char* path_or_json, qd_double** out) {
  QD_NONNULL(path_or_json);
  QD_NONNULL(out);
  return guarded([&] {
    const Json j = load_json(path_or_json);
    auto H = std::make_shared<const QuasiHopfData>(qhopf_from_json(j));
    *out = new qd_double{std::move(H), nullptr, j.contains("provenance") ? j.at("provenance") : Json::object()};
  });
}

void qd_double_free(qd_double* d) { delete d; }

int qd_double_dim(const qd_double* d) { return d ? d->H->dim() : 0; }

qd_status qd_double_to_json(const qd_double* d, char** out) {
  QD_NONNULL(d);
  QD_NONNULL(out);
  return guarded([&] { *out = dup_string(qhopf_to_json(*d->H, d->provenance).dump()); });
}

qd_status qd_double_antipode(const qd_double* d, int* present, char** diagnostic) {
  QD_NONNULL(d);
  QD_NONNULL(present);
  return guarded([&] {
    *present = d->H->antipode ? 1 : 0;
    if (diagnostic) *diagnostic = dup_string(d->D ? d->D->antipode_diagnostic : std::string());
  });
}

qd_status qd_double_checks(const qd_double* d, const char* suite, qd_checks** out) {
  QD_NONNULL(d);
  QD_NONNULL(out);
  return guarded([&] {
    const std::string s = suite ? suite : "all";
    ClauseList cl;
    if (s == "bialgebra") {
      append_clauses(cl, quasibialgebra_clauses(d->H), "quasibialgebra");
    } else if (s == "antipode") {
      append_clauses(cl, antipode_clauses(d->H), "");
    } else if (s == "quasitriangular") {
      append_clauses(cl, quasitriangular_clauses(d->H), "quasitriangular");
    } else if (s == "dpr") {
      cl = dpr_clauses(require_built(d));
    } else if (s == "degeneration") {
      cl = dpr_degeneration_clauses(require_built(d));
    } else if (s == "all") {
      if (d->D) {
        cl = dpr_clauses(*d->D);
      } else {
        append_clauses(cl, quasibialgebra_clauses(d->H), "quasibialgebra");
        append_clauses(cl, quasitriangular_clauses(d->H), "quasitriangular");
        append_clauses(cl, antipode_clauses(d->H), "");
      }
    } else {
      fail(ErrorCode::invalid_argument, "unknown suite '" + s + "'");
    }
    *out = new qd_checks{std::move(cl)};
  });
}

qd_status qd_object_regular(const qd_double* d, qd_object** out) {
  QD_NONNULL(d);
  QD_NONNULL(out);
  return guarded([&] { *out = new qd_object{std::make_shared<const CrossedGModule>(regular_object(require_built(d).phi))}; });
}

qd_status qd_object_ideal(const qd_double* d, int s, qd_object** out) {
  QD_NONNULL(d);
  QD_NONNULL(out);
  return guarded([&] {
    const auto& D = require_built(d);
    require(s >= 0 && s < D.n(), ErrorCode::invalid_argument, "degree out of range");
    *out = new qd_object{std::make_shared<const CrossedGModule>(ideal_object(D.phi, s))};
  });
}

qd_status qd_object_load(const qd_double* d, const char* path_or_json, qd_object** out) {
  QD_NONNULL(path_or_json);
  QD_NONNULL(out);
  return guarded([&] {
    std::shared_ptr<const Cochain3> phi;
    if (d) phi = std::make_shared<const Cochain3>(require_built(d).phi);
    *out = new qd_object{std::make_shared<const CrossedGModule>(object_from_json(load_json(path_or_json), phi))};
  });
}

void qd_object_free(qd_object* v) { delete v; }

int qd_object_dim(const qd_object* v) { return v ? v->V->dim : 0; }

qd_status qd_object_to_json(const qd_object* v, char** out) {
  QD_NONNULL(v);
  QD_NONNULL(out);
  return guarded([&] { *out = dup_string(object_to_json(*v->V).dump()); });
}

qd_status qd_crossed_checks(const qd_double* d, const qd_object* v, const char* command, const char* variant,
                            qd_checks** out) {
  QD_NONNULL(d);
  QD_NONNULL(v);
  QD_NONNULL(out);
  return guarded([&] {
    const auto& D = require_built(d);
    const auto V = v->V;
    require(V->group->table() == D.group->table(), ErrorCode::invalid_argument, "object is over a different group");
    const std::string cmd = command ? command : "all";
    const BraidingVariant var = variant ? parse_braiding_variant(variant) : BraidingVariant::standard;
    ClauseList cl;
    const bool all = cmd == "all";
    bool known = all;
    if (all || cmd == "verify") {
      known = true;
      cl = object_clauses(V);
    }
    if (all || cmd == "tensor") {
      known = true;
      append_clauses(cl, object_clauses(std::make_shared<const CrossedGModule>(tensor_objects(*V, *V))), "tensor");
    }
    if (cmd == "braid") {
      known = true;
      for (auto& c : hexagon_clauses(V, V, V, var))
        if (c.name.rfind("braid", 0) == 0) cl.push_back(std::move(c));
    }
    if (all || cmd == "hexagon") {
      known = true;
      append_clauses(cl, hexagon_clauses(V, V, V, var), "");
    }
    if (all || cmd == "transport") {
      known = true;
      append_clauses(cl, transport_clauses(d->D, V, V, V), "");
    }
    require(known, ErrorCode::invalid_argument, "unknown crossed command '" + cmd + "'");
    *out = new qd_checks{std::move(cl)};
  });
}

qd_status qd_reconstruct_checks(const qd_double* d, const char* relations, qd_checks** out) {
  QD_NONNULL(d);
  QD_NONNULL(out);
  return guarded([&] {
    const auto all = reconstruct_clauses(require_built(d));
    const std::string rel = relations ? relations : "all";
    if (rel == "all") {
      *out = new qd_checks{all};
      return;
    }
    ClauseList cl;
    for (const auto& r : split_list(rel)) {
      static const char* known[] = {"doufh", "doufg", "doudelta", "douR", "douphi", "douact"};
      bool ok = false;
      for (const char* k : known) ok = ok || r == k;
      require(ok, ErrorCode::invalid_argument, "unknown relation '" + r + "'");
      for (const auto& c : all)
        if (c.name == r || c.name.rfind(r + ".", 0) == 0) cl.push_back(c);
    }
    *out = new qd_checks{std::move(cl)};
  });
}

qd_status qd_suite_checks(const char* catalog, const char* sections, qd_checks** out) {
  QD_NONNULL(out);
  return guarded([&] {
    std::set<std::string> secs;
    if (sections)
      for (const auto& s : split_list(sections)) secs.insert(s);
    *out = new qd_checks{suite_clauses(load_catalog(catalog ? catalog : "default"), secs)};
  });
}

void qd_checks_free(qd_checks* c) { delete c; }

size_t qd_checks_count(const qd_checks* c) { return c ? c->clauses.size() : 0; }

const char* qd_checks_name(const qd_checks* c, size_t i) {
  if (!c || i >= c->clauses.size()) return nullptr;
  return c->clauses[i].name.c_str();
}

qd_status qd_checks_run(const qd_checks* c, qd_report** out) {
  QD_NONNULL(c);
  QD_NONNULL(out);
  return guarded([&] { *out = new qd_report{run_clauses(c->clauses)}; });
}

qd_status qd_checks_replay(const qd_checks* c, const char* name, const int64_t* point, size_t len, qd_report** out) {
  QD_NONNULL(c);
  QD_NONNULL(name);
  QD_NONNULL(out);
  if (len > 0) QD_NONNULL(point);
  return guarded([&] {
    Point p(point, point + len);
    Report r;
    auto res = replay_clause(c->clauses, name, p);
    switch (res.status) {
      case Status::pass: r.pass(res.name, "replayed at " + point_to_string(p)); break;
      case Status::skipped: r.skip(res.name, res.note); break;
      case Status::fail: r.fail(res.name, std::move(*res.witness)); break;
    }
    *out = new qd_report{std::move(r)};
  });
}

void qd_report_free(qd_report* r) { delete r; }

int qd_report_passed(const qd_report* r) { return r && r->r.passed() ? 1 : 0; }

size_t qd_report_size(const qd_report* r) { return r ? r->r.clauses().size() : 0; }

size_t qd_report_failures(const qd_report* r) { return r ? r->r.failures() : 0; }

qd_status qd_report_to_json(const qd_report* r, char** out) {
  QD_NONNULL(r);
  QD_NONNULL(out);
  return guarded([&] { *out = dup_string(report_to_json(r->r, -1)); });
}

qd_status qd_report_to_text(const qd_report* r, char** out) {
  QD_NONNULL(r);
  QD_NONNULL(out);
  return guarded([&] { *out = dup_string(report_to_text(r->r)); });
}

}  // extern "C"
