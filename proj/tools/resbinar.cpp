// Command-line front end: law checks on algebra files, residual and frame
// inspection, constraint search over the enumerated models, the subvariety
// poset, the bundled models, and the one-shot verification suite.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "resbinar/io.hpp"
#include "resbinar/verify.hpp"

using namespace resbinar;

namespace {

std::string status_name(LawStatus s) {
  switch (s) {
    case LawStatus::Holds: return "Holds";
    case LawStatus::Fails: return "Fails";
    default: return "NotApplicable";
  }
}

std::string witness_text(const CheckResult& r, const Lattice& lat) {
  std::string out = "witness";
  for (const auto& [var, val] : r.witness) out += " " + var + "=" + lat.name(val);
  out += " (lhs=" + lat.name(r.lhs_value) + ", rhs=" + lat.name(r.rhs_value) +
         ")";
  return out;
}

std::set<Law> parse_law_list(const std::vector<std::string>& specs) {
  std::set<Law> out;
  for (const std::string& spec : specs) {
    std::size_t start = 0;
    while (start <= spec.size()) {
      const std::size_t comma = spec.find(',', start);
      const std::string tag =
          spec.substr(start, comma == std::string::npos ? comma
                                                        : comma - start);
      if (!tag.empty()) {
        const auto l = law_from_tag(tag);
        if (!l) throw ConfigError("unknown law tag: " + tag);
        out.insert(*l);
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

int run_check(const std::string& file, const std::vector<std::string>& tags) {
  const NamedAlgebra na = read_algebra_file(file);
  std::vector<Law> laws;
  if (tags.empty()) {
    for (const LawInfo& info : law_catalog()) laws.push_back(info.law);
  } else {
    for (Law l : parse_law_list(tags)) laws.push_back(l);
  }
  int rc = 0;
  for (Law l : laws) {
    const LawStatus st = check_law(l, na.algebra);
    std::cout << law_info(l).tag << ": " << status_name(st) << "\n";
    if (st == LawStatus::Fails) {
      rc = 1;
      std::cout << "  " << witness_text(law_witness(l, na.algebra),
                                        na.algebra.lattice())
                << "\n";
    }
  }
  return rc;
}

int run_laws(const std::string& file, bool list) {
  if (list) {
    for (const LawInfo& info : law_catalog())
      std::cout << info.tag << " " << info.display << "  " << info.statement
                << "  ["
                << (info.always_valid  ? "always holds"
                    : info.needs_unit ? "needs a unit"
                                      : "can fail")
                << "]\n";
    return 0;
  }
  if (file.empty())
    throw ConfigError("give an algebra file or --list");
  const NamedAlgebra na = read_algebra_file(file);
  const auto statuses = full_profile(na.algebra);
  for (int i = 0; i < kLawCount; ++i) {
    const LawInfo& info = law_catalog()[static_cast<std::size_t>(i)];
    std::cout << info.tag << " " << info.display << ": "
              << status_name(statuses[static_cast<std::size_t>(i)]) << "\n";
  }
  std::cout << "profile: " << mask_tags(nontrivial_profile(na.algebra))
            << "\n";
  return 0;
}

template <typename Cell>
void print_table(const char* title, const Lattice& lat, Cell&& cell) {
  const int n = lat.size();
  std::size_t w = 0;
  for (int i = 0; i < n; ++i) w = std::max(w, lat.name(i).size());
  const auto pad = [&](const std::string& s) {
    std::cout << s << std::string(w + 2 - s.size(), ' ');
  };
  std::cout << title << ":\n  ";
  pad("");
  for (int y = 0; y < n; ++y) pad(lat.name(y));
  std::cout << "\n";
  for (int x = 0; x < n; ++x) {
    std::cout << "  ";
    pad(lat.name(x));
    for (int y = 0; y < n; ++y) pad(lat.name(cell(x, y)));
    std::cout << "\n";
  }
}

int run_residuals(const std::string& file) {
  const NamedAlgebra na = read_algebra_file(file);
  const ResiduatedBinar& a = na.algebra;
  print_table("mult x*y", a.lattice(), [&](int x, int y) { return a.mult(x, y); });
  print_table("ldiv x\\y", a.lattice(), [&](int x, int y) { return a.ldiv(x, y); });
  print_table("rdiv x/y", a.lattice(), [&](int x, int y) { return a.rdiv(x, y); });
  return 0;
}

int run_frame(const std::string& file, const std::string& variant_str) {
  const NamedAlgebra na = read_algebra_file(file);
  FrameVariant v = FrameVariant::Superset;
  if (!variant_str.empty()) {
    const auto parsed = variant_from_name(variant_str);
    if (!parsed) throw ConfigError("unknown frame variant: " + variant_str);
    v = *parsed;
  }
  const Frame fr = build_frame(na.algebra, v);
  std::cout << "variant: " << variant_name(v) << "\n";
  std::cout << "points: " << fr.n_points << "\n";
  for (int i = 0; i < fr.n_points; ++i)
    std::cout << "  " << point_label(fr, na.algebra.lattice(), i) << "\n";
  std::size_t triples = 0;
  for (char c : fr.rel) triples += c != 0;
  std::cout << "relation triples: " << triples << "\n";
  int rc = 0;
  const CorrespondenceReport rep = correspondence_check(na.algebra, v);
  for (const CorrespondenceEntry& e : rep.entries) {
    std::cout << law_info(e.law).tag << ": algebra "
              << (e.algebra_holds ? "Holds" : "Fails") << ", frame condition "
              << (e.frame_holds ? "holds" : "fails")
              << (e.agree ? "" : "  MISMATCH") << "\n";
    if (!e.agree) rc = 1;
  }
  return rc;
}

struct SearchFlags {
  int size = 4;
  bool distributive = false, complemented = false, boolean = false;
  bool associative = false, commutative = false, unital = false;
  bool integral = false;
  std::vector<std::string> satisfies, fails;
  std::uint64_t limit = 0;
  double budget = -1;
  std::string out_dir;
};

int run_search(const SearchFlags& f) {
  SearchConfig cfg;
  cfg.max_size = f.size;
  cfg.distributive = f.distributive;
  cfg.complemented = f.complemented;
  cfg.boolean = f.boolean;
  cfg.associative = f.associative;
  cfg.commutative = f.commutative;
  cfg.unital = f.unital;
  cfg.integral = f.integral;
  cfg.satisfies = parse_law_list(f.satisfies);
  cfg.fails = parse_law_list(f.fails);
  cfg.limit = f.limit;
  cfg.time_budget = f.budget;

  const SearchResult res = search(cfg);
  std::cout << "status: "
            << (res.status == SearchStatus::Found          ? "found"
                : res.status == SearchStatus::ExhaustedNone ? "exhausted"
                                                            : "budget-exceeded")
            << "\n";
  if (!res.sizes_certified.empty()) {
    std::cout << "models per size";
    for (int s : res.sizes_certified)
      std::cout << " " << s << ":"
                << res.models_per_size[static_cast<std::size_t>(s)];
    std::cout << "\n";
  }
  std::cout << "matches: " << res.models.size() << "\n";
  for (std::size_t i = 0; i < res.models.size(); ++i)
    std::cout << "  size " << res.models[i].size() << " key " << res.keys[i]
              << "\n";
  if (!f.out_dir.empty() && !res.models.empty()) {
    std::filesystem::create_directories(f.out_dir);
    for (std::size_t i = 0; i < res.models.size(); ++i) {
      char tag[16];
      std::snprintf(tag, sizeof tag, "match_%03zu", i);
      const auto path = std::filesystem::path(f.out_dir) /
                        (std::string(tag) + ".alg");
      write_algebra_file(path, NamedAlgebra{tag, res.models[i]});
      std::cout << "written: " << path.string() << "\n";
    }
  }
  return res.status == SearchStatus::BudgetExceeded ? 2 : 0;
}

int run_poset(bool commutative, const std::string& dot_path) {
  const PosetDiagram d = build_poset(commutative);
  std::cout << "closed sets: " << d.nodes.size() << "\n";
  std::cout << "top: "
            << closed_set_label(d.nodes[static_cast<std::size_t>(d.top)])
            << "\n";
  std::cout << "bottom: "
            << closed_set_label(d.nodes[static_cast<std::size_t>(d.bottom)])
            << "\n";
  std::cout << "atoms: " << d.atoms.size() << "\n";
  for (int a : d.atoms)
    std::cout << "  " << closed_set_label(d.nodes[static_cast<std::size_t>(a)])
              << "\n";
  std::cout << "coatoms: " << d.coatoms.size() << "\n";
  for (int c : d.coatoms)
    std::cout << "  " << closed_set_label(d.nodes[static_cast<std::size_t>(c)])
              << "\n";
  std::cout << "covering edges: " << d.edges.size() << "\n";
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw ConfigError("cannot write " + dot_path);
    out << export_dot(d);
    std::cout << "dot written: " << dot_path << "\n";
  }
  return 0;
}

int run_verify(int max_size, double budget) {
  const VerifyReport rep = verify_paper(max_size, budget);
  std::cout << format_report(rep);
  if (rep.all_passed()) return 0;
  return rep.budget_hit() ? 2 : 1;
}

int run_bundle_export(const std::string& dir) {
  for (const auto& path : export_bundle(dir))
    std::cout << "written: " << path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite residuated binars: laws, residuals, frames, search,"
               " subvariety poset, verification"};
  app.require_subcommand(1);
  int rc = 0;

  auto* check = app.add_subcommand("check", "check laws on an algebra file");
  std::string check_file;
  std::vector<std::string> check_laws;
  check->add_option("file", check_file, "algebra file")->required();
  check->add_option("--law", check_laws,
                    "law tag, repeatable or comma-separated; default: all");
  check->callback([&] { rc = run_check(check_file, check_laws); });

  auto* laws = app.add_subcommand("laws", "show the catalog or a profile");
  std::string laws_file;
  bool laws_list = false;
  laws->add_option("file", laws_file, "algebra file");
  laws->add_flag("--list", laws_list, "list the law catalog");
  laws->callback([&] { rc = run_laws(laws_file, laws_list); });

  auto* residuals =
      app.add_subcommand("residuals", "print mult and residual tables");
  std::string residuals_file;
  residuals->add_option("file", residuals_file, "algebra file")->required();
  residuals->callback([&] { rc = run_residuals(residuals_file); });

  auto* frame = app.add_subcommand(
      "frame", "prime-filter frame and correspondence for one algebra");
  std::string frame_file, frame_variant;
  frame->add_option("file", frame_file, "algebra file")->required();
  frame->add_option("--variant", frame_variant,
                    "literal, upset or superset (default: superset)");
  frame->callback([&] { rc = run_frame(frame_file, frame_variant); });

  auto* search_cmd =
      app.add_subcommand("search", "hunt for models under constraints");
  SearchFlags sf;
  search_cmd->add_option("--size", sf.size, "largest size to sweep (1..8)");
  search_cmd->add_flag("--distributive", sf.distributive,
                       "distributive lattice reduct");
  search_cmd->add_flag("--complemented", sf.complemented,
                       "complemented lattice reduct");
  search_cmd->add_flag("--boolean", sf.boolean, "boolean lattice reduct");
  search_cmd->add_flag("--associative", sf.associative,
                       "associative multiplication");
  search_cmd->add_flag("--commutative", sf.commutative,
                       "commutative multiplication");
  search_cmd->add_flag("--unital", sf.unital, "multiplication has a unit");
  search_cmd->add_flag("--integral", sf.integral, "unit on top");
  search_cmd->add_option("--satisfies", sf.satisfies,
                         "laws that must hold (comma-separated tags)");
  search_cmd->add_option("--fails", sf.fails,
                         "laws that must fail (comma-separated tags)");
  search_cmd->add_option("--limit", sf.limit, "matches to keep (0: all)");
  search_cmd->add_option("--budget", sf.budget,
                         "wall-clock budget in seconds (negative: none)");
  search_cmd->add_option("--out", sf.out_dir,
                         "write matches as .alg files into this directory");
  search_cmd->callback([&] { rc = run_search(sf); });

  auto* poset = app.add_subcommand("poset", "the law-axiomatized subvariety"
                                            " poset");
  bool poset_comm = false;
  std::string poset_dot;
  poset->add_flag("--commutative", poset_comm, "commutative quotient");
  poset->add_option("--dot", poset_dot, "write DOT text to this file");
  poset->callback([&] { rc = run_poset(poset_comm, poset_dot); });

  auto* verify = app.add_subcommand(
      "verify-paper", "run the full reproduction suite");
  int verify_size = 4;
  double verify_budget = -1;
  verify->add_option("--max-size", verify_size,
                     "largest model size to sweep (default 4)");
  verify->add_option("--budget", verify_budget,
                     "per-rule search budget in seconds (negative: none)");
  verify->callback([&] { rc = run_verify(verify_size, verify_budget); });

  auto* bundle = app.add_subcommand("bundle", "bundled model operations");
  bundle->require_subcommand(1);
  auto* bundle_export =
      bundle->add_subcommand("export", "write the bundled models to a dir");
  std::string bundle_dir;
  bundle_export->add_option("--dir", bundle_dir, "output directory")
      ->required();
  bundle_export->callback([&] { rc = run_bundle_export(bundle_dir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
