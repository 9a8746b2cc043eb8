#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "naples/catalan_objects.hpp"
#include "naples/enumeration.hpp"
#include "naples/errors.hpp"
#include "naples/parking.hpp"
#include "naples/paths.hpp"
#include "naples/render.hpp"
#include "naples/theorems.hpp"
#include "naples/trees.hpp"

namespace naples::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kTables = {"I", "U", "strict", "total", "fine", "catalan-fine", "catalan"};

// ---- convert ---------------------------------------------------------------

void require_fits(const KDyckPath& path, int k) {
  if (!path.fits(k)) {
    throw DomainError("path " + path.str() + " goes below -" + std::to_string(k) + " (not a " + std::to_string(k) +
                      "-Dyck path)");
  }
}

void require_strict(const KDyckPath& path, int k) {
  if (k < 1 || path.bound() != k) {
    throw DomainError("strict representations need a strictly " + std::to_string(k) + "-Naples preference (k >= 1)");
  }
}

KDyckPath to_hub(const std::string& rep, const std::string& text, int k) {
  if (rep == "pref-desc") return path_from_descending_pref(parse_preference(text));
  if (rep == "pref-asc") return path_from_ascending_pref(parse_preference(text));
  if (rep == "kdyck") return parse_k_dyck_path(text);
  if (rep == "dyck") return unembed(parse_dyck_path(text), k);
  if (rep == "full-tree") return unembed(dyck_from_full_tree(FullBinaryTree(parse_tree(text))), k);
  if (rep == "tree") return unembed(dyck_from_tree(parse_tree(text)), k);
  if (rep == "strict-dyck") return unembed(reflect_after_first_return(parse_dyck_path(text), k), k);
  if (rep == "strict-tree") return path_from_descending_pref(descending_from_strict_tree(parse_tree(text), k));
  if (rep == "dissection") {
    const Dissection d = parse_dissection(text);
    const BinaryTree t = strict_from_dissection(d, d.s - k - 1, k);
    return path_from_descending_pref(descending_from_strict_tree(t, k));
  }
  if (rep == "ncp") {
    const RootedNcp p = parse_rooted_ncp(text);
    const BinaryTree t = strict_from_ncp(p, p.m - k - 1, k);
    return path_from_descending_pref(descending_from_strict_tree(t, k));
  }
  throw ParseError("unknown representation '" + rep + "'");
}

std::string from_hub(const std::string& rep, const KDyckPath& path, int k) {
  require_fits(path, k);
  const int n = static_cast<int>(path.length());
  if (rep == "pref-desc") return to_string(descending_pref_from_path(path));
  if (rep == "pref-asc") return to_string(ascending_pref_from_path(path));
  if (rep == "kdyck") return path.str();
  if (rep == "dyck") return embed(path, k).str();
  if (rep == "full-tree") return to_string(full_tree_from_dyck(embed(path, k)).tree());
  if (rep == "tree") return to_string(tree_from_dyck(embed(path, k)));
  require_strict(path, k);
  if (rep == "strict-dyck") return reflect_after_first_return(embed(path, k), k).str();
  const BinaryTree t = strict_tree_from_descending(descending_pref_from_path(path), k);
  if (rep == "strict-tree") return to_string(t);
  if (rep == "dissection") return to_string(dissection_from_strict(t, n, k));
  if (rep == "ncp") return to_string(ncp_from_strict(t, n, k));
  throw ParseError("unknown representation '" + rep + "'");
}

// Canonical spelling of an input literal, to detect inputs outside the image
// of the hub map (for example a dissection labelled off the canonical form).
std::string normalized(const std::string& rep, const std::string& text) {
  if (rep == "pref-desc" || rep == "pref-asc") return to_string(parse_preference(text));
  if (rep == "kdyck" || rep == "dyck" || rep == "strict-dyck") return parse_step_word(text).str();
  if (rep == "full-tree" || rep == "tree" || rep == "strict-tree") return to_string(parse_tree(text));
  if (rep == "dissection") return to_string(parse_dissection(text));
  if (rep == "ncp") return to_string(parse_rooted_ncp(text));
  throw ParseError("unknown representation '" + rep + "'");
}

std::string trimmed(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

int run_convert(const CommandPlan& plan, std::istream& in, std::ostream& out) {
  std::string value = plan.value;
  if (value == "-") {
    std::getline(in, value);
  }
  value = trimmed(value);
  const KDyckPath hub = to_hub(plan.from, value, plan.k);
  if (from_hub(plan.from, hub, plan.k) != normalized(plan.from, value)) {
    throw DomainError("'" + value + "' is not a canonical " + plan.from + " for k = " + std::to_string(plan.k));
  }
  const std::string result = from_hub(plan.to, hub, plan.k);
  if (plan.json) {
    out << json{{"from", plan.from},  {"to", plan.to},   {"k", plan.k},
                {"n", hub.length()}, {"input", value}, {"output", result}}
               .dump()
        << '\n';
  } else {
    out << result << '\n';
  }
  return kOk;
}

// ---- count -----------------------------------------------------------------

bool has_k_column(const std::string& table) {
  return table == "I" || table == "U" || table == "strict" || table == "total";
}

int first_row(const std::string& table) { return (table == "strict" || table == "total") ? 1 : 0; }

BigInt count_value(CountTable& t, const std::string& table, int n, int k) {
  if (table == "I") return t.ascending(n, k);
  if (table == "U") return t.ascending_starts_one(n, k);
  if (table == "strict") return count_descending_strict(n, k);
  if (table == "total") return count_descending_total(n, k);
  if (table == "fine") return fine(n);
  if (table == "catalan-fine") return catalan_fine_convolution(n);
  return catalan(n);
}

int run_count(const CommandPlan& plan, std::ostream& out) {
  if (plan.n < 0 || plan.k < 0) throw DomainError("--n and --k must be nonnegative");
  CountTable table;
  const std::string& name = plan.table;
  const int from = first_row(name);
  if (plan.sequence || !has_k_column(name)) {
    if (!plan.json && !plan.sequence) out << "n,value\n";
    json rows = json::array();
    for (int n = from; n <= plan.n; ++n) {
      const BigInt v = count_value(table, name, n, plan.k);
      if (plan.json) {
        rows.push_back({{"n", n}, {"value", v.str()}});
      } else {
        out << n << (plan.sequence ? " " : ",") << v << '\n';
      }
    }
    if (plan.json) {
      json doc{{"table", name}, {"n_max", plan.n}, {"sequence", rows}};
      if (has_k_column(name)) doc["k"] = plan.k;
      out << doc.dump() << '\n';
    }
    return kOk;
  }
  json rows = json::array();
  if (!plan.json) {
    out << "n";
    for (int k = 0; k <= plan.k; ++k) out << ",k=" << k;
    out << '\n';
  }
  for (int n = from; n <= plan.n; ++n) {
    json values = json::array();
    if (!plan.json) out << n;
    for (int k = 0; k <= plan.k; ++k) {
      const BigInt v = count_value(table, name, n, k);
      if (plan.json) {
        values.push_back(v.str());
      } else {
        out << ',' << v;
      }
    }
    if (plan.json) {
      rows.push_back({{"n", n}, {"values", values}});
    } else {
      out << '\n';
    }
  }
  if (plan.json) out << json{{"table", name}, {"n_max", plan.n}, {"k_max", plan.k}, {"rows", rows}}.dump() << '\n';
  return kOk;
}

// ---- the rest ----------------------------------------------------------------

int run_park(const CommandPlan& plan, std::ostream& out) {
  out << to_string(park(parse_preference(plan.pref), plan.k)) << '\n';
  return kOk;
}

int run_check(const CommandPlan& plan, std::ostream& out) {
  const Preference p = parse_preference(plan.pref);
  const bool naples = is_k_naples(p, plan.k);
  const bool strict = is_strictly_k_naples(p, plan.k);
  const bool closed = rearrangements_all_k_naples(p, plan.k);
  if (plan.json) {
    json doc{{"preference", to_string(p)}, {"k", plan.k}, {"k_naples", naples}, {"strictly_k_naples", strict},
             {"rearrangement_closed", closed}};
    doc["minimal_k"] = p.empty() ? json(nullptr) : json(minimal_k(p));
    out << doc.dump() << '\n';
    return kOk;
  }
  auto yes_no = [](bool b) { return b ? "true" : "false"; };
  out << "k-naples: " << yes_no(naples) << '\n'
      << "strictly-k-naples: " << yes_no(strict) << '\n'
      << "rearrangement-closed: " << yes_no(closed) << '\n';
  return kOk;
}

int run_render(const CommandPlan& plan, std::ostream& out) {
  if (!plan.path.empty()) {
    const StepWord word = parse_step_word(plan.path);
    out << (plan.svg ? render_path_svg(word) : render_path_ascii(word));
    return kOk;
  }
  const BinaryTree tree = parse_tree(plan.tree);
  if (plan.svg) {
    out << render_tree_svg(tree);
  } else if (plan.dot) {
    out << render_tree_dot(tree);
  } else {
    out << render_tree_ascii(tree);
  }
  return kOk;
}

int run_verify(const CommandPlan& plan, std::ostream& out) {
  if (plan.list) {
    for (const auto& t : registered_theorems()) {
      out << t.id << " (n<=" << t.default_n << ", k<=" << t.default_k << "): " << t.summary << '\n';
    }
    return kOk;
  }
  std::vector<TheoremInfo> selected;
  for (const auto& t : registered_theorems()) {
    if (plan.theorem == "all" || plan.theorem == t.id) selected.push_back(t);
  }
  if (selected.empty()) throw DomainError("unknown theorem id '" + plan.theorem + "' (see verify --list)");
  int failed = 0;
  for (const auto& t : selected) {
    const TheoremReport r = check_theorem(t.id, plan.n_max.value_or(t.default_n), plan.k_max.value_or(t.default_k));
    failed += !r.ok();
    if (plan.machine) {
      out << r.id << '\t' << (r.ok() ? "pass" : "fail") << '\t' << r.n_max << '\t' << r.k_max << '\t' << r.cases << '\t'
          << r.failures << '\n';
      for (const auto& c : r.counterexamples) out << r.id << "\tcounterexample\t" << c << '\n';
    } else {
      out << (r.ok() ? "PASS " : "FAIL ") << r.id << " n<=" << r.n_max << " k<=" << r.k_max << " cases=" << r.cases;
      if (!r.ok()) out << " failures=" << r.failures;
      out << '\n';
      for (const auto& c : r.counterexamples) out << "  counterexample: " << c << '\n';
    }
  }
  if (!plan.machine) {
    out << (failed == 0 ? "all " + std::to_string(selected.size()) + " checks passed"
                        : std::to_string(failed) + " of " + std::to_string(selected.size()) + " checks failed")
        << '\n';
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace

const std::vector<std::string>& representations() {
  static const std::vector<std::string> reps = {"pref-desc", "pref-asc",    "kdyck",       "dyck",       "full-tree",
                                                "tree",      "strict-dyck", "strict-tree", "dissection", "ncp"};
  return reps;
}

ParseResult parse(const std::vector<std::string>& args) {
  CommandPlan plan;
  CLI::App app{"k-Naples parking functions: simulation, bijections, counting and verification", "naples"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  auto k_option = [&](CLI::App* sub, const std::string& help) {
    return sub->add_option("--k", plan.k, help)->check(CLI::NonNegativeNumber);
  };

  auto* park = app.add_subcommand("park", "Run the k-Naples parking process");
  park->add_option("--pref", plan.pref, "Preference, e.g. 6,6,6,5,5,2,1")->required();
  k_option(park, "Backup bound")->required();

  auto* check = app.add_subcommand("check", "k-Naples, strictly k-Naples and rearrangement-closed tests");
  check->add_option("--pref", plan.pref, "Preference")->required();
  k_option(check, "Backup bound")->required();
  check->add_flag("--json", plan.json, "JSON output");

  auto* convert = app.add_subcommand("convert", "Convert between representations");
  convert->add_option("--from", plan.from, "Input representation")->required()->check(CLI::IsMember(representations()));
  convert->add_option("--to", plan.to, "Output representation")->required()->check(CLI::IsMember(representations()));
  k_option(convert, "Backup bound")->required();
  convert->add_option("value", plan.value, "Literal to convert ('-' reads stdin)")->required();
  convert->add_flag("--json", plan.json, "JSON output");

  auto* count = app.add_subcommand("count", "Exact counts as CSV or b-file");
  count->add_option("--table", plan.table, "Table to print")->check(CLI::IsMember(kTables))->capture_default_str();
  count->add_option("--n", plan.n, "Largest n")->check(CLI::NonNegativeNumber)->capture_default_str();
  plan.k = 4;  // park/check/convert require --k, so this default only reaches count
  k_option(count, "Largest k (CSV) or the k column (--sequence)")->capture_default_str();
  auto* csv_flag = count->add_flag("--csv", "CSV table (default)");
  auto* seq_flag = count->add_flag("--sequence", plan.sequence, "One column in b-file format: 'n value' per line");
  auto* json_flag = count->add_flag("--json", plan.json, "JSON output");
  csv_flag->excludes(seq_flag)->excludes(json_flag);

  auto* render = app.add_subcommand("render", "Draw a path or a tree");
  auto* path_opt = render->add_option("--path", plan.path, "Step word");
  auto* tree_opt = render->add_option("--tree", plan.tree, "Tree literal");
  path_opt->excludes(tree_opt);
  render->add_flag("--svg", plan.svg, "SVG output");
  auto* dot_flag = render->add_flag("--dot", plan.dot, "DOT edge list (trees only)");
  dot_flag->excludes(path_opt);
  dot_flag->excludes("--svg");

  auto* verify = app.add_subcommand("verify", "Run the brute-force theorem checks");
  verify->add_option("theorem", plan.theorem, "Check id or 'all'")->capture_default_str();
  verify->add_option("--n", plan.n_max, "Override the size bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--k", plan.k_max, "Override the k bound")->check(CLI::NonNegativeNumber);
  verify->add_flag("--machine", plan.machine, "Tab-separated output");
  verify->add_flag("--list", plan.list, "List check ids");

  app.add_option("-o,--output", plan.output_file, "Write output to a file instead of stdout");

  std::vector<std::string> storage{"naples"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  ParseResult result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kOk : kUsage;
    return result;
  }
  plan.command = app.get_subcommands().front()->get_name();
  if (plan.command == "render" && plan.path.empty() && plan.tree.empty()) {
    result.exit_code = kUsage;
    result.err = "render: one of --path or --tree is required\n";
    return result;
  }
  result.plan = std::move(plan);
  return result;
}

int execute(const CommandPlan& plan, std::istream& in, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* target = &out;
  if (!plan.output_file.empty()) {
    file.open(plan.output_file);
    if (!file) {
      err << "error: cannot open " << plan.output_file << '\n';
      return kUsage;
    }
    target = &file;
  }
  try {
    if (plan.command == "park") return run_park(plan, *target);
    if (plan.command == "check") return run_check(plan, *target);
    if (plan.command == "convert") return run_convert(plan, in, *target);
    if (plan.command == "count") return run_count(plan, *target);
    if (plan.command == "render") return run_render(plan, *target);
    if (plan.command == "verify") return run_verify(plan, *target);
    err << "error: unknown command " << plan.command << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  ParseResult parsed = parse(args);
  out << parsed.out;
  err << parsed.err;
  if (!parsed.plan) return parsed.exit_code;
  return execute(*parsed.plan, in, out, err);
}

}  // namespace naples::cli
