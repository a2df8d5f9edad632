#pragma once

// The catalog of (G, phi) pairs and the consolidated suite run over it.

#include <set>
#include <string>
#include <vector>

#include "qdouble/cochain.hpp"
#include "qdouble/report.hpp"

namespace qdouble {

struct CatalogEntry {
  std::string name;
  /// group descriptor or inline JSON text
  std::string group;
  /// "trivial", "std:zn:N:p=k", a file path or inline JSON text
  std::string cocycle;
};

/// (zn:2, trivial), (zn:2, p=1), (zn:3, p=1), (zn:4, p=1), (zn:4, p=2),
/// (zn:2 x zn:2, trivial), (s:3, trivial), (d:4, trivial).
std::vector<CatalogEntry> default_catalog();

/// "default", or a JSON file {"entries": [{"name", "group", "cocycle"}, ...]}.
std::vector<CatalogEntry> load_catalog(const std::string& spec);

GroupPtr entry_group(const CatalogEntry& e);
Cochain3 entry_cocycle(const CatalogEntry& e);

/// group, cocycle, chi, dpr, degeneration, crossed, reconstruct.
const std::vector<std::string>& suite_sections();

/// Clause list for one entry, named <section>.<clause>. `sections` empty means
/// all. The degeneration section only applies to trivial cocycles.
ClauseList entry_clauses(const CatalogEntry& e, const std::set<std::string>& sections = {});

/// All entries, named <entry>.<section>.<clause>.
ClauseList suite_clauses(const std::vector<CatalogEntry>& entries, const std::set<std::string>& sections = {});

}  // namespace qdouble
