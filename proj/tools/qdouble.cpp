// qdouble: command-line front end over the C API.
//
// Exit status: 0 every clause passed, 1 some clause failed, 2 bad input.

#include <chrono>
#include <fstream>
#include <numeric>
#include <sstream>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qdouble/qdouble.h"

namespace {

using Json = nlohmann::ordered_json;

struct InputError {
  std::string what;
};

void check(qd_status s) {
  if (s != QD_OK) throw InputError{std::string(qd_status_name(s)) + ": " + qd_last_error()};
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using Group = Handle<qd_group, qd_group_free>;
using Cocycle = Handle<qd_cocycle, qd_cocycle_free>;
using Double = Handle<qd_double, qd_double_free>;
using Object = Handle<qd_object, qd_object_free>;
using Checks = Handle<qd_checks, qd_checks_free>;
using ReportH = Handle<qd_report, qd_report_free>;

std::string take(char* s) {
  std::string out = s ? s : "";
  qd_string_free(s);
  return out;
}

struct Common {
  bool json = false;
  std::string replay;
};

void add_common(CLI::App* app, Common& c) {
  app->add_flag("--json", c.json, "Machine-readable report on stdout");
  app->add_option("--replay", c.replay, "Re-check one clause at one point: NAME@i,j,k");
}

// NAME@1,2,3 -> (NAME, [1,2,3]); "NAME@" or "NAME" means the empty point.
std::pair<std::string, std::vector<int64_t>> parse_replay(const std::string& spec) {
  const auto at = spec.rfind('@');
  std::string name = spec.substr(0, at);
  std::vector<int64_t> point;
  if (at != std::string::npos) {
    std::string rest = spec.substr(at + 1);
    if (!rest.empty() && rest.front() == '(') rest = rest.substr(1);
    if (!rest.empty() && rest.back() == ')') rest.pop_back();
    std::size_t pos = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      try {
        std::size_t used = 0;
        const std::string item = rest.substr(pos, comma - pos);
        point.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw InputError{"bad replay point in '" + spec + "'"};
      }
      pos = comma + 1;
    }
  }
  if (name.empty()) throw InputError{"replay needs a clause name"};
  return {name, point};
}

int emit(const std::string& command, const Json& inputs, qd_checks* checks, const Common& c) {
  const auto t0 = std::chrono::steady_clock::now();
  ReportH rep;
  if (c.replay.empty()) {
    check(qd_checks_run(checks, rep.out()));
  } else {
    const auto [name, point] = parse_replay(c.replay);
    check(qd_checks_replay(checks, name.c_str(), point.data(), point.size(), rep.out()));
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char* buf = nullptr;
  const bool passed = qd_report_passed(rep.get());
  if (c.json) {
    check(qd_report_to_json(rep.get(), &buf));
    Json out{{"command", command},
             {"inputs", inputs},
             {"passed", passed},
             {"clauses", Json::parse(take(buf))},
             {"wall_time", wall}};
    std::cout << out.dump(2) << '\n';
  } else {
    check(qd_report_to_text(rep.get(), &buf));
    std::cout << take(buf);
    std::cout << command << ": " << qd_report_size(rep.get()) - qd_report_failures(rep.get()) << "/"
              << qd_report_size(rep.get()) << " clauses passed"
              << (qd_report_failures(rep.get()) ? ", FAILED" : "") << " (" << wall << " s)\n";
  }
  return passed ? 0 : 1;
}

struct Source {
  std::string group;
  std::string cocycle = "trivial";
  std::string mutation = "none";
};

void add_source(CLI::App* app, Source& s, bool with_mutation) {
  app->add_option("--group", s.group, "Group descriptor (zn:4, s:3, d:4, prod(zn:2,zn:2)) or JSON");
  app->add_option("--cocycle", s.cocycle, "trivial | std:zn:N:p=k | file.json")->capture_default_str();
  if (with_mutation)
    app->add_option("--mutation", s.mutation,
                    "none | drop_chi | flip_chi_sign | invert_coproduct_ratio | drop_coproduct_ratio | "
                    "drop_rmatrix_term | swap_rmatrix_legs | literal_rmatrix")
        ->capture_default_str();
}

// Loads group and cocycle; the group may come from the cocycle file alone.
void load_source(const Source& s, Group& g, Cocycle& c) {
  if (!s.group.empty()) check(qd_group_create(s.group.c_str(), g.out()));
  check(qd_cocycle_create(g.get(), s.cocycle.c_str(), c.out()));
}

Json source_inputs(const Source& s, const Cocycle& c) {
  Json in{{"group", s.group}, {"cocycle", s.cocycle}, {"order", qd_cocycle_order(c.get())}};
  if (s.mutation != "none") in["mutation"] = s.mutation;
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted quantum doubles D^phi(G): construction and exact verification"};
  app.require_subcommand(1);
  Common common;

  auto* group_cmd = app.add_subcommand("group", "Build a group and check the group axioms");
  std::string group_spec, group_input;
  group_cmd->add_option("--spec", group_spec, "Group descriptor");
  group_cmd->add_option("--input", group_input, "Group table JSON file (checked even if it is not a group)");
  bool group_dump = false;
  group_cmd->add_flag("--dump", group_dump, "Print the multiplication table as JSON and exit");
  add_common(group_cmd, common);

  auto* cocycle_cmd = app.add_subcommand("cocycle", "Check a 3-cocycle and its chi");
  Source cocycle_src;
  add_source(cocycle_cmd, cocycle_src, false);
  std::string compare_with;
  unsigned root_order = 0;
  cocycle_cmd->add_option("--compare", compare_with, "Second cocycle: decide cohomology by brute force");
  cocycle_cmd->add_option("--root-order", root_order, "Values of the 2-cochains searched (default: lcm of orders)");
  bool cocycle_dump = false;
  cocycle_cmd->add_flag("--dump", cocycle_dump, "Print the cocycle table as JSON and exit");
  add_common(cocycle_cmd, common);

  auto* build_cmd = app.add_subcommand("build", "Construct D^phi(G)");
  Source build_src;
  add_source(build_cmd, build_src, true);
  std::string build_out, build_verify;
  build_cmd->add_option("--out", build_out, "Write the algebra as JSON");
  build_cmd->add_option("--verify", build_verify, "bialgebra | antipode | quasitriangular | dpr | degeneration | all");
  add_common(build_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "Verify the axioms of a double");
  Source verify_src;
  add_source(verify_cmd, verify_src, true);
  std::string verify_input, verify_suite = "all";
  verify_cmd->add_option("--input", verify_input, "Algebra JSON written by build --out");
  verify_cmd->add_option("--suite", verify_suite, "bialgebra | antipode | quasitriangular | dpr | degeneration | all")
      ->capture_default_str();
  add_common(verify_cmd, common);

  auto* crossed_cmd = app.add_subcommand("crossed", "Cocycle crossed G-modules");
  std::string crossed_action = "all";
  crossed_cmd->add_option("action", crossed_action, "verify | tensor | braid | hexagon | transport | all")
      ->capture_default_str();
  Source crossed_src;
  add_source(crossed_cmd, crossed_src, false);
  std::string object_spec = "regular", variant = "standard", object_out;
  crossed_cmd->add_option("--object", object_spec, "regular | ideal:S | file.json")->capture_default_str();
  crossed_cmd->add_option("--variant", variant, "standard | inverted_degree | flip_left_degree")->capture_default_str();
  crossed_cmd->add_option("--out", object_out, "Write the object as JSON");
  add_common(crossed_cmd, common);

  auto* recon_cmd = app.add_subcommand("reconstruct", "The double relations of the reconstruction");
  Source recon_src;
  add_source(recon_cmd, recon_src, true);
  std::string relations = "all";
  recon_cmd->add_option("--relations", relations, "doufh,doufg,doudelta,douR,douphi,douact | all")->capture_default_str();
  add_common(recon_cmd, common);

  auto* suite_cmd = app.add_subcommand("suite", "Run the catalog acceptance matrix");
  std::string catalog = "default", sections;
  suite_cmd->add_option("--catalog", catalog, "default | catalog.json")->capture_default_str();
  suite_cmd->add_option("--sections", sections, "group,cocycle,chi,dpr,degeneration,crossed,reconstruct");
  bool list_only = false;
  suite_cmd->add_flag("--list", list_only, "List clause names without running them");
  add_common(suite_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*group_cmd) {
      if (group_spec.empty() == group_input.empty()) throw InputError{"give exactly one of --spec and --input"};
      Checks checks;
      Json inputs;
      if (!group_input.empty()) {
        std::ifstream in(group_input);
        if (!in) throw InputError{"cannot open '" + group_input + "'"};
        std::stringstream ss;
        ss << in.rdbuf();
        check(qd_group_table_checks(ss.str().c_str(), checks.out()));
        inputs = {{"input", group_input}};
      } else {
        Group g;
        check(qd_group_create(group_spec.c_str(), g.out()));
        if (group_dump) {
          char* buf = nullptr;
          check(qd_group_to_json(g.get(), &buf));
          std::cout << take(buf) << '\n';
          return 0;
        }
        check(qd_group_checks(g.get(), checks.out()));
        inputs = {{"group", group_spec}, {"size", qd_group_size(g.get())}};
      }
      return emit("group", inputs, checks.get(), common);
    }

    if (*cocycle_cmd) {
      Group g;
      Cocycle c;
      load_source(cocycle_src, g, c);
      if (cocycle_dump) {
        char* buf = nullptr;
        check(qd_cocycle_to_json(c.get(), &buf));
        std::cout << take(buf) << '\n';
        return 0;
      }
      if (!compare_with.empty()) {
        Cocycle c2;
        check(qd_cocycle_create(g.get(), compare_with.c_str(), c2.out()));
        unsigned n = root_order;
        if (n == 0) n = std::lcm(qd_cocycle_order(c.get()), qd_cocycle_order(c2.get()));
        int same = 0;
        char* w = nullptr;
        check(qd_cocycle_compare(c.get(), c2.get(), n, &same, &w));
        Json out{{"command", "cocycle --compare"},
                 {"inputs", {{"group", cocycle_src.group}, {"cocycle", cocycle_src.cocycle}, {"other", compare_with}, {"root_order", n}}},
                 {"cohomologous", same != 0},
                 {"witness", Json::parse(take(w))}};
        if (common.json)
          std::cout << out.dump(2) << '\n';
        else
          std::cout << (same ? "cohomologous" : "not cohomologous") << " (mu_" << n << "-valued 2-cochains)\n";
        return 0;
      }
      Checks checks;
      check(qd_cocycle_checks(c.get(), checks.out()));
      return emit("cocycle", source_inputs(cocycle_src, c), checks.get(), common);
    }

    if (*build_cmd) {
      Group g;
      Cocycle c;
      load_source(build_src, g, c);
      Double d;
      check(qd_double_build(c.get(), build_src.mutation.c_str(), d.out()));
      if (!build_out.empty()) {
        char* buf = nullptr;
        check(qd_double_to_json(d.get(), &buf));
        std::ofstream out(build_out);
        out << take(buf) << '\n';
        if (!out) throw InputError{"cannot write '" + build_out + "'"};
      }
      int present = 0;
      char* diag = nullptr;
      check(qd_double_antipode(d.get(), &present, &diag));
      const std::string diagnostic = take(diag);
      if (build_verify.empty()) {
        if (!common.json) {
          std::cout << "built D^phi(" << build_src.group << ") [" << build_src.cocycle << "], dim " << qd_double_dim(d.get())
                    << ", antipode " << (present ? "present" : "absent: " + diagnostic) << '\n';
        } else {
          Json out{{"command", "build"}, {"inputs", source_inputs(build_src, c)}, {"dim", qd_double_dim(d.get())},
                   {"antipode", present ? "present" : "absent"}};
          if (!build_out.empty()) out["out"] = build_out;
          std::cout << out.dump(2) << '\n';
        }
        return 0;
      }
      Checks checks;
      check(qd_double_checks(d.get(), build_verify.c_str(), checks.out()));
      return emit("build", source_inputs(build_src, c), checks.get(), common);
    }

    if (*verify_cmd) {
      Double d;
      Json inputs;
      if (!verify_input.empty()) {
        check(qd_double_load(verify_input.c_str(), d.out()));
        inputs = {{"input", verify_input}};
      } else {
        Group g;
        Cocycle c;
        load_source(verify_src, g, c);
        check(qd_double_build(c.get(), verify_src.mutation.c_str(), d.out()));
        inputs = source_inputs(verify_src, c);
      }
      inputs["suite"] = verify_suite;
      Checks checks;
      check(qd_double_checks(d.get(), verify_suite.c_str(), checks.out()));
      return emit("verify", inputs, checks.get(), common);
    }

    if (*crossed_cmd) {
      Group g;
      Cocycle c;
      load_source(crossed_src, g, c);
      Double d;
      check(qd_double_build(c.get(), nullptr, d.out()));
      Object v;
      if (object_spec == "regular") {
        check(qd_object_regular(d.get(), v.out()));
      } else if (object_spec.rfind("ideal:", 0) == 0) {
        int s = 0;
        try {
          s = std::stoi(object_spec.substr(6));
        } catch (const std::logic_error&) {
          throw InputError{"bad object '" + object_spec + "'"};
        }
        check(qd_object_ideal(d.get(), s, v.out()));
      } else {
        check(qd_object_load(d.get(), object_spec.c_str(), v.out()));
      }
      if (!object_out.empty()) {
        char* buf = nullptr;
        check(qd_object_to_json(v.get(), &buf));
        std::ofstream out(object_out);
        out << take(buf) << '\n';
        if (!out) throw InputError{"cannot write '" + object_out + "'"};
      }
      Checks checks;
      check(qd_crossed_checks(d.get(), v.get(), crossed_action.c_str(), variant.c_str(), checks.out()));
      Json inputs = source_inputs(crossed_src, c);
      inputs["object"] = object_spec;
      inputs["variant"] = variant;
      return emit("crossed " + crossed_action, inputs, checks.get(), common);
    }

    if (*recon_cmd) {
      Group g;
      Cocycle c;
      load_source(recon_src, g, c);
      Double d;
      check(qd_double_build(c.get(), recon_src.mutation.c_str(), d.out()));
      Checks checks;
      check(qd_reconstruct_checks(d.get(), relations.c_str(), checks.out()));
      Json inputs = source_inputs(recon_src, c);
      inputs["relations"] = relations;
      return emit("reconstruct", inputs, checks.get(), common);
    }

    if (*suite_cmd) {
      Checks checks;
      check(qd_suite_checks(catalog.c_str(), sections.empty() ? nullptr : sections.c_str(), checks.out()));
      if (list_only) {
        for (std::size_t i = 0; i < qd_checks_count(checks.get()); ++i) std::cout << qd_checks_name(checks.get(), i) << '\n';
        return 0;
      }
      Json inputs{{"catalog", catalog}};
      if (!sections.empty()) inputs["sections"] = sections;
      return emit("suite", inputs, checks.get(), common);
    }
  } catch (const InputError& e) {
    std::cerr << "qdouble: " << e.what << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qdouble: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
