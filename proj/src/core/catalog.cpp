#include "qdouble/catalog.hpp"

#include "qdouble/crossedmod.hpp"
#include "qdouble/dpr.hpp"
#include "qdouble/error.hpp"
#include "qdouble/io.hpp"
#include "qdouble/reconstruct.hpp"

namespace qdouble {

std::vector<CatalogEntry> default_catalog() {
  return {
      {"z2_trivial", "zn:2", "trivial"},
      {"z2_p1", "zn:2", "std:zn:2:p=1"},
      {"z3_p1", "zn:3", "std:zn:3:p=1"},
      {"z4_p1", "zn:4", "std:zn:4:p=1"},
      {"z4_p2", "zn:4", "std:zn:4:p=2"},
      {"z2xz2_trivial", "prod(zn:2,zn:2)", "trivial"},
      {"s3_trivial", "s:3", "trivial"},
      {"d4_trivial", "d:4", "trivial"},
  };
}

std::vector<CatalogEntry> load_catalog(const std::string& spec) {
  if (spec == "default") return default_catalog();
  const Json j = read_json_file(spec);
  require(j.is_object() && j.contains("entries") && j.at("entries").is_array(), ErrorCode::parse_error,
          "catalog file needs an \"entries\" array");
  std::vector<CatalogEntry> out;
  for (const auto& e : j.at("entries")) {
    require(e.is_object() && e.contains("name") && e.contains("group") && e.contains("cocycle"), ErrorCode::parse_error,
            "catalog entries need name, group and cocycle");
    auto text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    out.push_back({text(e.at("name")), text(e.at("group")), text(e.at("cocycle"))});
  }
  return out;
}

GroupPtr entry_group(const CatalogEntry& e) {
  const auto p = e.group.find_first_not_of(" \t\n");
  if (p != std::string::npos && e.group[p] == '{') return group_from_json(parse_json(e.group));
  return make_group(e.group);
}

Cochain3 entry_cocycle(const CatalogEntry& e) { return resolve_cocycle(e.cocycle, entry_group(e)); }

const std::vector<std::string>& suite_sections() {
  static const std::vector<std::string> s{"group", "cocycle", "chi", "dpr", "degeneration", "crossed", "reconstruct"};
  return s;
}

namespace {

bool is_trivial(const Cochain3& phi) {
  for (const auto& v : phi.values())
    if (!v.is_one()) return false;
  return true;
}

}  // namespace

ClauseList entry_clauses(const CatalogEntry& e, const std::set<std::string>& sections) {
  for (const auto& s : sections) {
    bool known = false;
    for (const auto& k : suite_sections()) known = known || k == s;
    require(known, ErrorCode::invalid_argument, "unknown suite section '" + s + "'");
  }
  auto want = [&](const char* s) { return sections.empty() || sections.count(s) > 0; };
  const auto phi = std::make_shared<const Cochain3>(entry_cocycle(e));
  const GroupPtr g = phi->group_ptr();
  ClauseList cl;
  if (want("group")) append_clauses(cl, group_clauses(g->size(), g->table()), "");
  if (want("cocycle")) append_clauses(cl, cocycle_clauses(*phi), "");
  if (want("chi")) append_clauses(cl, chi_clauses(chi_from_phi(*phi)), "");
  if (!(want("dpr") || want("degeneration") || want("crossed") || want("reconstruct"))) return cl;

  const auto D = std::make_shared<const DPRInstance>(attach_antipode(build_dpr(*phi)));
  if (want("dpr")) append_clauses(cl, dpr_clauses(*D), "dpr");
  if (want("degeneration") && is_trivial(*phi)) append_clauses(cl, dpr_degeneration_clauses(*D), "degeneration");
  if (want("crossed")) {
    const auto V = std::make_shared<const CrossedGModule>(regular_object(*phi));
    ClauseList c;
    append_clauses(c, object_clauses(V), "regular");
    append_clauses(c, hexagon_clauses(V, V, V), "regular");
    append_clauses(c, transport_clauses(D, V, V, V), "regular");
    const auto f = std::make_shared<const SparseMap>(regular_right_multiplication(*D, D->index(g->size() - 1, 0)));
    const auto h = std::make_shared<const SparseMap>(regular_right_multiplication(*D, D->index(0, g->size() - 1)));
    append_clauses(c, naturality_clauses(V, V, f, V, V, h), "regular");
    std::vector<std::shared_ptr<const CrossedGModule>> ideals;
    for (int s : {0, g->size() - 1, 0, g->size() > 2 ? 1 : 0})
      ideals.push_back(std::make_shared<const CrossedGModule>(ideal_object(*phi, s)));
    append_clauses(c, object_clauses(ideals[1]), "ideal");
    append_clauses(c, pentagon_clauses(ideals), "ideal");
    append_clauses(cl, std::move(c), "crossed");
  }
  if (want("reconstruct")) append_clauses(cl, reconstruct_clauses(*D), "reconstruct");
  return cl;
}

ClauseList suite_clauses(const std::vector<CatalogEntry>& entries, const std::set<std::string>& sections) {
  ClauseList cl;
  for (const auto& e : entries) append_clauses(cl, entry_clauses(e, sections), e.name);
  return cl;
}

}  // namespace qdouble
