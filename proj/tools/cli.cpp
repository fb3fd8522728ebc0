#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilclean/classify.hpp"
#include "nilclean/decompose.hpp"
#include "nilclean/ideals.hpp"
#include "nilclean/serialize.hpp"
#include "nilclean/theorems.hpp"

namespace nilclean::cli {

namespace {

struct Options {
  std::string format = "table";
  Index order_cap = kDefaultOrderCap;
  std::size_t ideal_cap = kDefaultIdealCap;

  bool json() const { return format == "json"; }
  BuildOptions build() const {
    BuildOptions b;
    b.order_cap = order_cap;
    return b;
  }
};

std::string name_of(const FiniteRing& ring, Index x) {
  const auto text = ring.render(x);
  return text == std::to_string(x) ? text : std::to_string(x) + "=" + text;
}

std::string set_text(const FiniteRing& ring, const std::vector<Index>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += name_of(ring, xs[i]);
  }
  return out + "}";
}

RingPtr load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadParameter, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadParameter, path + ": " + e.what());
  }
  auto ring = table_ring_from_json(j);
  if (ring->order() > AxiomMode::kExhaustiveLimit) {
    throw Error(ErrorKind::ExhaustiveTooLarge,
                "imported tables are verified exhaustively, which needs order <= " +
                    std::to_string(AxiomMode::kExhaustiveLimit));
  }
  const auto report = verify_axioms(*ring, AxiomMode::full());
  if (!report.ok()) throw Error(ErrorKind::AxiomViolation, report.describe(*ring));
  return ring;
}

int print_info(const RingPtr& ring, const Options& opt, std::ostream& out) {
  const FiniteRing& r = *ring;
  const auto jac = jacobson_radical(ring);
  const bool nc = is_nil_clean_ring(ring);
  if (opt.json()) {
    Json j;
    j["ring"] = r.spec();
    j["order"] = r.order();
    j["commutative"] = is_commutative(r);
    j["units"] = units(r).members();
    j["idempotents"] = idempotents(r).members();
    j["nilpotents"] = nilpotents(r).members();
    j["center"] = center(r).members();
    j["jacobson"] = jac.elements();
    j["nil_clean_ring"] = nc;
    out << dump(j);
    return kOk;
  }
  auto row = [&](const char* key, const std::string& value) {
    out << std::left << std::setw(14) << key << value << "\n";
  };
  auto sized = [&](const ElementSet& s) {
    return std::to_string(s.size()) + "  " + set_text(r, s.members());
  };
  row("ring", r.spec());
  row("order", std::to_string(r.order()));
  row("commutative", is_commutative(r) ? "yes" : "no");
  row("units", sized(units(r)));
  row("idempotents", sized(idempotents(r)));
  row("nilpotents", sized(nilpotents(r)));
  row("center", sized(center(r)));
  row("J(R)", set_text(r, jac.elements()));
  row("nil-clean", nc ? "true" : "false");
  return kOk;
}

void print_decompositions(const FiniteRing& r, const std::vector<Decomposition>& list,
                          std::ostream& out) {
  if (list.empty()) {
    out << "  (none)\n";
    return;
  }
  for (const auto& d : list) {
    out << "  e=" << name_of(r, d.idempotent) << "  "
        << (d.kind == DecompositionKind::Clean ? "u=" : "n=") << name_of(r, d.second);
    if (d.nil_index) out << "  index " << *d.nil_index;
    out << (d.commutes ? "  commuting" : "") << "\n";
  }
}

std::vector<Decomposition> decompositions_for(const FiniteRing& r, Index x, IdealProperty p) {
  const bool clean = p == IdealProperty::Clean || p == IdealProperty::StronglyClean ||
                     p == IdealProperty::UniquelyStronglyClean;
  const bool strong = p == IdealProperty::StronglyClean || p == IdealProperty::StronglyNilClean ||
                      p == IdealProperty::UniquelyStronglyNilClean ||
                      p == IdealProperty::UniquelyStronglyClean;
  auto list = clean ? clean_decompositions(r, x) : nil_clean_decompositions(r, x);
  return strong ? strongly_filter(std::move(list)) : list;
}

int cmd_ideal(const std::string& spec, const std::vector<Index>& gens, const std::string& property,
              const Options& opt, std::ostream& out) {
  const auto p = ideal_property_from_string(property);
  if (!p) throw Error(ErrorKind::BadParameter, "unknown property '" + property + "'");
  const auto ring = build_ring(spec, opt.build());
  for (Index g : gens) {
    if (g >= ring->order()) throw Error(ErrorKind::BadParameter, "generator out of range");
  }
  const auto ideal = ideal_generated(ring, gens);
  const auto verdict = check_ideal(ideal, *p);
  std::vector<Decomposition> attempts;
  if (verdict.witness && *p != IdealProperty::Nil) {
    attempts = decompositions_for(*ring, *verdict.witness, *p);
  }
  if (opt.json()) {
    Json j;
    j["ideal"] = to_json(ideal);
    j["property"] = property;
    j["holds"] = verdict.holds;
    j["witness"] = verdict.witness ? Json(*verdict.witness) : Json(nullptr);
    Json list = Json::array();
    for (const auto& d : attempts) list.push_back(to_json(d));
    j["witness_decompositions"] = std::move(list);
    out << dump(j);
  } else {
    out << "ideal " << set_text(*ring, ideal.elements()) << " of " << ring->spec() << "\n";
    out << property << ": " << (verdict.holds ? "true" : "false") << "\n";
    if (verdict.witness) {
      out << "witness " << name_of(*ring, *verdict.witness);
      if (*p == IdealProperty::Nil) {
        out << " is not nilpotent\n";
      } else {
        out << " has " << attempts.size() << " matching decomposition(s):\n";
        print_decompositions(*ring, attempts, out);
      }
    }
  }
  return verdict.holds ? kOk : kFalse;
}

int cmd_decompose(const std::string& spec, Index element, const std::string& kind, bool strong,
                  const Options& opt, std::ostream& out) {
  if (kind != "clean" && kind != "nil-clean") {
    throw Error(ErrorKind::BadParameter, "kind must be clean or nil-clean");
  }
  const auto ring = build_ring(spec, opt.build());
  if (element >= ring->order()) throw Error(ErrorKind::BadParameter, "element out of range");
  auto list = kind == "clean" ? clean_decompositions(*ring, element)
                              : nil_clean_decompositions(*ring, element);
  if (strong) list = strongly_filter(std::move(list));
  if (opt.json()) {
    Json j;
    j["ring"] = ring->spec();
    j["element"] = element;
    j["kind"] = kind;
    j["strong"] = strong;
    Json arr = Json::array();
    for (const auto& d : list) arr.push_back(to_json(d));
    j["decompositions"] = std::move(arr);
    out << dump(j);
  } else {
    out << (strong ? "strongly " : "") << kind << " decompositions of " << name_of(*ring, element)
        << " in " << ring->spec() << ":\n";
    print_decompositions(*ring, list, out);
  }
  return list.empty() ? kFalse : kOk;
}

int report_exit(const std::vector<TheoremReport>& reports, bool gating) {
  int code = kOk;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Error) {
      const bool cap = !r.notes.empty() && (r.notes.front().starts_with("error: CapExceeded") ||
                                            r.notes.front().starts_with("error: OrderCapExceeded"));
      code = std::max(code, cap ? int{kCap} : int{kCounterexample});
    }
    if (gating && r.verdict == Verdict::Counterexample) code = std::max(code, int{kCounterexample});
  }
  return code;
}

int cmd_theorems(const std::vector<std::string>& ids, const std::vector<std::string>& family,
                 const std::vector<std::string>& tables, bool explore, bool timing,
                 const Options& opt, std::ostream& out) {
  auto cfg = CheckConfig::defaults();
  if (!family.empty()) cfg.family = family;
  for (const auto& path : tables) cfg.extra_rings.push_back(load_table(path));
  cfg.order_cap = opt.order_cap;
  cfg.ideal_cap = opt.ideal_cap;
  cfg.timing = timing;
  const auto reports = explore ? explore_noncommutative(cfg) : run_checks(ids, cfg);

  if (opt.json()) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    Json j;
    j["exploratory"] = explore;
    j["reports"] = std::move(arr);
    out << dump(j);
  } else {
    out << std::left << std::setw(20) << "id" << std::setw(16) << "verdict" << std::right
        << std::setw(10) << "tested" << std::setw(10) << "met";
    if (timing) out << std::setw(12) << "ms";
    out << "\n";
    for (const auto& r : reports) {
      out << std::left << std::setw(20) << r.id << std::setw(16) << to_string(r.verdict)
          << std::right << std::setw(10) << r.instances_tested << std::setw(10) << r.hypotheses_met;
      if (timing && r.millis) out << std::setw(12) << std::fixed << std::setprecision(2) << *r.millis;
      out << "\n";
      if (r.witness) {
        out << "    witness in " << r.witness->ring << ": " << r.witness->reason;
        if (r.witness->element) out << " (element " << *r.witness->element << ")";
        out << "\n";
      }
      for (const auto& n : r.notes) out << "    " << n << "\n";
    }
  }
  return report_exit(reports, !explore);
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderCapExceeded:
    case ErrorKind::CapExceeded:
    case ErrorKind::ExhaustiveTooLarge:
      return kCap;
    case ErrorKind::AxiomViolation:
      return kAxiom;
    default:
      return kUsage;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ring classifier and nil clean ideal checker", "nilclean"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app.add_option("--order-cap", opt.order_cap, "Largest ring order to construct")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--ideal-cap", opt.ideal_cap, "Largest number of ideals to enumerate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string spec, property = "nil-clean", kind = "nil-clean", path;
  std::vector<Index> gens;
  Index element = 0;
  bool strong = false, explore = false, timing = false;
  std::vector<std::string> ids, family, tables;

  auto* info = app.add_subcommand("info", "Classify the elements of a ring");
  info->add_option("spec", spec, "Ring spec, e.g. Z6, Z4xZ3, T2(Z4)")->required();

  auto* ideal = app.add_subcommand("ideal", "Check a property of a generated ideal");
  ideal->add_option("spec", spec, "Ring spec")->required();
  ideal->add_option("--gens", gens, "Generator indices")->delimiter(',');
  ideal->add_option("--property", property,
                    "clean, nil-clean, strongly-clean, strongly-nil-clean, uniquely-nil-clean, "
                    "uniquely-strongly-nil-clean, uniquely-strongly-clean or nil")
      ->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "List decompositions of one element");
  decompose->add_option("spec", spec, "Ring spec")->required();
  decompose->add_option("element", element, "Element index")->required();
  decompose->add_option("--kind", kind, "clean or nil-clean")->capture_default_str();
  decompose->add_flag("--strong", strong, "Keep only commuting decompositions");

  auto* theorems = app.add_subcommand("theorems", "Run the theorem checks");
  theorems->add_option("ids", ids, "Check ids (default: all)");
  theorems->add_option("--family", family, "Ring spec to check over; repeat for several")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  theorems->add_option("--table", tables, "Imported table ring to add to the family; repeatable")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  theorems->add_flag("--explore", explore,
                     "Drop the commutativity filter on triangular rings (reported, not gating)");
  theorems->add_flag("--timing", timing, "Record per-check wall time");
  theorems->add_flag("--list", [&](std::int64_t) {
    for (const auto& c : registered_checks()) out << c.id << "  " << c.statement << "\n";
    throw CLI::Success();
  }, "List registered checks");

  auto* import = app.add_subcommand("import", "Verify and classify a ring given by Cayley tables");
  import->add_option("path", path, "JSON file {order, zero, one, add, mul}")->required();

  auto* exporter = app.add_subcommand("export", "Print the Cayley tables of a ring as JSON");
  exporter->add_option("spec", spec, "Ring spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return print_info(build_ring(spec, opt.build()), opt, out);
    if (*ideal) return cmd_ideal(spec, gens, property, opt, out);
    if (*decompose) return cmd_decompose(spec, element, kind, strong, opt, out);
    if (*theorems) return cmd_theorems(ids, family, tables, explore, timing, opt, out);
    if (*import) return print_info(load_table(path), opt, out);
    if (*exporter) {
      out << dump(table_to_json(*build_ring(spec, opt.build())));
      return kOk;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_for(e.kind());
  }
  return kUsage;
}

}  // namespace nilclean::cli
