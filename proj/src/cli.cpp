#include "exchange/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "exchange/constructions.hpp"
#include "exchange/errors.hpp"
#include "exchange/extraction.hpp"
#include "exchange/family_io.hpp"
#include "exchange/search.hpp"
#include "exchange/verifiers.hpp"

namespace exchange::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Members beyond this need --force before a family is enumerated.
constexpr std::uint64_t kMaxEnumeratedMembers = 10'000'000;
// |F|^2 beyond this needs --force before a pair scan.
constexpr double kMaxPairScan = 1e10;

struct FamilyArgs {
  std::string family;
  std::string in;
  std::optional<int> s;
  std::optional<int> t;
  std::optional<int> k;
  std::optional<int> n;
};

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
  cmd->add_option("--family", args.family, "construction: aak, tight, thm3, powerset")
      ->check(CLI::IsMember({"aak", "tight", "thm3", "powerset"}));
  cmd->add_option("--in", args.in, "family file");
  cmd->add_option("--s", args.s, "aak part size");
  cmd->add_option("--t", args.t, "aak number of parts");
  cmd->add_option("--k", args.k, "thm3 part size");
  cmd->add_option("--n", args.n, "ground set size");
}

struct LoadedFamily {
  Family family;
  /// Set when aak parameters were chosen for a requested n.
  std::optional<int> padded_from;
};

int need(const std::optional<int>& value, const char* flag, const std::string& family) {
  if (!value) throw UsageError(family + " needs " + flag);
  return *value;
}

LoadedFamily load_family(const FamilyArgs& a) {
  if (!a.in.empty() && !a.family.empty()) throw UsageError("give either --family or --in, not both");
  if (!a.in.empty()) return {read_family_file(a.in), std::nullopt};
  if (a.family.empty()) throw UsageError("missing --family or --in");
  if (a.family == "aak") {
    if (!a.s && !a.t && a.n) {
      const AakParams p = choose_aak_params(*a.n);
      return {aak_family(p.s, p.t), p.n() != *a.n ? std::optional<int>(*a.n) : std::nullopt};
    }
    return {aak_family(need(a.s, "--s", a.family), need(a.t, "--t", a.family)), std::nullopt};
  }
  if (a.family == "tight") return {tight_rank_family(need(a.n, "--n", a.family)), std::nullopt};
  if (a.family == "thm3") {
    return {thm3_family(need(a.n, "--n", a.family), need(a.k, "--k", a.family)), std::nullopt};
  }
  return {powerset_family(need(a.n, "--n", a.family)), std::nullopt};
}

void guard_enumeration(const Family& f, bool force) {
  if (force || f.is_explicit()) return;
  if (const auto& size = f.size_formula(); size && *size > kMaxEnumeratedMembers) {
    throw ScaleError("family has " + size->str() + " members; pass --force to enumerate");
  }
  if (!f.size_formula() && f.ground_size() > kScanLimit) {
    throw ScaleError("family size unknown above n=24; pass --force to enumerate");
  }
}

Json set_json(SubsetMask m) { return Json(m.elements()); }

// Emits a BigInt as a JSON number when it fits, otherwise as a decimal string.
Json big_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return Json(x.convert_to<std::uint64_t>());
  return Json(x.str());
}

Json family_json(const Family& f) {
  Json members = Json::array();
  for (SubsetMask m : f.members()) members.push_back(set_json(m));
  return Json{{"n", f.ground_size()}, {"members", std::move(members)}};
}

struct Globals {
  bool json = false;
  bool force = false;
  unsigned threads = 1;
};

int cmd_construct(const FamilyArgs& fa, const std::string& out_path, const Globals& g, std::ostream& out) {
  const LoadedFamily loaded = load_family(fa);
  guard_enumeration(loaded.family, g.force);
  const Family family = loaded.family.materialize();
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + out_path);
    write_family(file, family);
    if (g.json) {
      Json j{{"family", family.name()}, {"n", family.ground_size()}, {"members", family.count()}};
      if (loaded.padded_from) j["padded_from"] = *loaded.padded_from;
      j["out"] = out_path;
      out << j.dump() << '\n';
    } else {
      out << "constructed " << family.name() << " n=" << family.ground_size() << " members=" << family.count();
      if (loaded.padded_from) out << " padded_from=" << *loaded.padded_from;
      out << " out=" << out_path << '\n';
    }
    return kSuccess;
  }
  if (g.json) {
    Json j{{"family", family.name()}};
    if (loaded.padded_from) j["padded_from"] = *loaded.padded_from;
    j.update(family_json(family));
    out << j.dump() << '\n';
  } else {
    if (loaded.padded_from) {
      out << "# " << family.name() << " on a ground set padded from n=" << *loaded.padded_from << '\n';
    }
    write_family(out, family);
  }
  return kSuccess;
}

int cmd_verify(const FamilyArgs& fa, const std::string& condition_name_arg, const std::string& reading,
               const Globals& g, std::ostream& out) {
  const auto condition = parse_condition(condition_name_arg);
  if (!condition) throw UsageError("unknown condition " + condition_name_arg);
  const LoadedFamily loaded = load_family(fa);
  guard_enumeration(loaded.family, g.force);
  const Family family = loaded.family.materialize();
  const double members = static_cast<double>(family.count());
  if (!g.force && members * members > kMaxPairScan) {
    throw ScaleError("pair scan over " + std::to_string(family.count()) + " members; pass --force");
  }
  VerifyOptions options;
  options.threads = g.threads;
  options.matroid_reading = reading == "any-of-b" ? MatroidReading::kAnyOfB : MatroidReading::kOutsideA;
  const auto witness = verify(*condition, family, options);
  if (g.json) {
    Json j{{"condition", condition_name(*condition)}, {"family", family.name()}, {"members", family.count()}};
    if (witness) {
      j["result"] = "violation";
      j["A"] = set_json(witness->a);
      j["B"] = set_json(witness->b);
      j["detail"] = witness->detail;
    } else {
      j["result"] = "pass";
    }
    out << j.dump() << '\n';
  } else if (witness) {
    out << format_witness(*witness) << '\n';
  } else {
    out << "PASS " << condition_name(*condition) << ' ' << family.name() << " members=" << family.count() << '\n';
  }
  return witness ? kViolation : kSuccess;
}

int cmd_count(const FamilyArgs& fa, const Globals& g, std::ostream& out) {
  const LoadedFamily loaded = load_family(fa);
  guard_enumeration(loaded.family, g.force);
  const std::uint64_t enumerated = loaded.family.count();
  const auto& formula = loaded.family.size_formula();
  const bool mismatch = formula && *formula != enumerated;
  if (g.json) {
    Json j{{"enumerated", enumerated}};
    if (formula) j["formula"] = big_json(*formula);
    out << j.dump() << '\n';
  } else {
    out << "enumerated=" << enumerated;
    if (formula) out << " formula=" << formula->str();
    out << '\n';
  }
  return mismatch ? kViolation : kSuccess;
}

int cmd_rank(const FamilyArgs& fa, const Globals& g, std::ostream& out) {
  const LoadedFamily loaded = load_family(fa);
  guard_enumeration(loaded.family, g.force);
  const int enumerated = rank(loaded.family);
  const auto& formula = loaded.family.rank_formula();
  if (g.json) {
    Json j{{"rank", enumerated}};
    if (formula) j["formula"] = *formula;
    out << j.dump() << '\n';
  } else {
    out << "rank=" << enumerated;
    if (formula) out << " formula=" << *formula;
    out << '\n';
  }
  return formula && *formula != enumerated ? kViolation : kSuccess;
}

int cmd_search(int n, const std::string& condition_arg, const std::string& closed, const std::string& objective,
               std::uint64_t budget, const Globals& g, std::ostream& out) {
  if (objective == "rank") {
    const RankSearchResult r = min_rank(n, budget);
    if (g.json) {
      Json j{{"objective", "rank"}, {"n", n}, {"condition", "weak"}, {"minimum", r.minimum}};
      j["nodes"] = r.nodes_explored;
      j["witness"] = family_json(r.witness);
      out << j.dump() << '\n';
    } else {
      out << "minimum_rank=" << r.minimum << "\nnodes=" << r.nodes_explored << '\n';
      write_family(out, r.witness);
    }
    return kSuccess;
  }
  const auto condition = parse_condition(condition_arg);
  if (!condition) throw UsageError("unknown condition " + condition_arg);
  SearchQuery q{n, *condition, closed == "yes", budget};
  const SearchResult r = min_family_size(q);
  if (g.json) {
    Json j{{"objective", "size"},
           {"n", n},
           {"condition", condition_name(*condition)},
           {"downward_closed", q.downward_closed},
           {"minimum", big_json(r.minimum)},
           {"nodes", r.nodes_explored}};
    j["witness"] = family_json(r.witness);
    out << j.dump() << '\n';
  } else {
    out << "minimum=" << r.minimum.str() << "\nnodes=" << r.nodes_explored << '\n';
    write_family(out, r.witness);
  }
  return kSuccess;
}

int cmd_extract(const FamilyArgs& fa, std::optional<int> s, std::optional<int> t, const Globals& g,
                std::ostream& out) {
  const LoadedFamily loaded = load_family(fa);
  std::vector<std::string> warnings;
  if (!s || !t) {
    if (s || t) throw UsageError("give both --tree-s and --tree-t, or neither");
    const TreeParams p = thm2_default_params(loaded.family.ground_size());
    s = p.s;
    t = p.t;
    warnings = p.warnings;
    if (!p.feasible) warnings.push_back("n < t^2/2 + t*s: level-set choice is not guaranteed");
  }
  const auto result = extract_tree(loaded.family, *s, *t);
  if (const auto* tree = std::get_if<ExtractionTree>(&result)) {
    if (g.json) {
      Json vertices = Json::array();
      for (const TreeVertex& v : tree->vertices) {
        Json jv{{"level", v.level}, {"path", v.path_labels}, {"member", set_json(v.member)}};
        jv["level_set"] = v.level_set ? set_json(*v.level_set) : Json(nullptr);
        vertices.push_back(std::move(jv));
      }
      out << Json{{"result", "tree"},   {"s", *s},           {"t", *t}, {"members", tree->vertices.size()},
                  {"warnings", warnings}, {"vertices", vertices}}
                 .dump()
          << '\n';
    } else {
      for (const auto& w : warnings) out << "# warning: " << w << '\n';
      out << "members=" << tree->vertices.size() << " s=" << *s << " t=" << *t << '\n';
      write_tree(out, *tree);
    }
    return kSuccess;
  }
  const auto& failure = std::get<ExtractionFailure>(result);
  if (g.json) {
    out << Json{{"result", "failure"},
                {"s", *s},
                {"t", *t},
                {"warnings", warnings},
                {"path", failure.path_labels},
                {"member", set_json(failure.member)},
                {"excluded", set_json(failure.excluded)},
                {"blocked", set_json(failure.blocked)},
                {"available", failure.available},
                {"needed", failure.needed}}
               .dump()
        << '\n';
  } else {
    for (const auto& w : warnings) out << "# warning: " << w << '\n';
    std::string path;
    for (int x : failure.path_labels) path += (path.empty() ? "" : ",") + std::to_string(x);
    out << "FAILURE path=" << (path.empty() ? "-" : path) << " F(v)=" << failure.member.to_string()
        << " excluded=" << failure.excluded.to_string() << " Y=" << failure.blocked.to_string()
        << " available=" << failure.available << " needed=" << failure.needed << '\n';
  }
  return kViolation;
}

int cmd_bounds(long long n, const Globals& g, std::ostream& out) {
  const auto report = bound_report(n);
  if (g.json) {
    Json j = Json::object();
    for (const BoundEntry& e : report) {
      j[e.name] = e.heuristic ? Json{{"value", e.value}, {"heuristic", "o(1) dropped"}} : Json(e.value);
    }
    out << j.dump() << '\n';
  } else {
    write_bound_report(out, report);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exchange-property set systems: constructions, verifiers, extraction, search", "exchange"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--force", g.force, "lift enumeration and pair-scan guards");
  app.add_option("--threads", g.threads, "worker cap for pair scans")->check(CLI::Range(1U, 256U));
  app.fallthrough();

  FamilyArgs construct_args;
  std::string out_path;
  auto* construct = app.add_subcommand("construct", "build a family and write it in the family file format");
  add_family_options(construct, construct_args);
  construct->add_option("--out", out_path, "output file (stdout when omitted)");

  FamilyArgs verify_args;
  std::string condition;
  std::string reading = "outside-a";
  auto* verify_cmd = app.add_subcommand("verify", "check an exchange condition, printing a violation witness");
  add_family_options(verify_cmd, verify_args);
  verify_cmd->add_option("--condition", condition, "weak|cond3|ordered|strong|both|matroid")->required();
  verify_cmd->add_option("--matroid-reading", reading, "b range when A and B overlap")
      ->check(CLI::IsMember({"outside-a", "any-of-b"}));

  FamilyArgs count_args;
  auto* count = app.add_subcommand("count", "enumerated size, with the closed form when one exists");
  add_family_options(count, count_args);

  FamilyArgs rank_args;
  auto* rank_cmd = app.add_subcommand("rank", "largest member size");
  add_family_options(rank_cmd, rank_args);

  int search_n = 0;
  std::string search_condition = "cond3";
  std::string closed = "yes";
  std::string objective = "size";
  std::uint64_t budget = kDefaultNodeBudget;
  auto* search = app.add_subcommand("search", "exact minimum family size or rank for small n");
  search->add_option("--n", search_n, "ground set size")->required();
  search->add_option("--condition", search_condition, "weak|cond3|ordered|strong|both|matroid");
  search->add_option("--downward-closed", closed, "restrict to downward-closed families")
      ->check(CLI::IsMember({"yes", "no"}));
  search->add_option("--objective", objective, "size or rank")->check(CLI::IsMember({"size", "rank"}));
  search->add_option("--budget", budget, "node budget");

  FamilyArgs extract_args;
  std::optional<int> tree_s;
  std::optional<int> tree_t;
  auto* extract = app.add_subcommand("extract", "grow the s-ary extraction tree of distinct members");
  add_family_options(extract, extract_args);
  extract->add_option("--tree-s", tree_s, "branching factor");
  extract->add_option("--tree-t", tree_t, "depth");

  long long bounds_n = 0;
  auto* bounds = app.add_subcommand("bounds", "evaluate the size and rank bounds at n");
  bounds->add_option("--n", bounds_n, "ground set size")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*construct) return cmd_construct(construct_args, out_path, g, out);
    if (*verify_cmd) return cmd_verify(verify_args, condition, reading, g, out);
    if (*count) return cmd_count(count_args, g, out);
    if (*rank_cmd) return cmd_rank(rank_args, g, out);
    if (*search) return cmd_search(search_n, search_condition, closed, objective, budget, g, out);
    if (*extract) return cmd_extract(extract_args, tree_s, tree_t, g, out);
    if (*bounds) return cmd_bounds(bounds_n, g, out);
  } catch (const FormatError& e) {
    err << "error: line " << e.line() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace exchange::cli
