#include "hurwitz/cli.hpp"

#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "hurwitz/abelian.hpp"
#include "hurwitz/braid.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/invariants.hpp"
#include "hurwitz/psl2_traces.hpp"
#include "hurwitz/spherical.hpp"
#include "hurwitz/verify.hpp"
#include "json.hpp"

namespace hurwitz::cli {

namespace {

using nlohmann::ordered_json;

ordered_json rational_json(const Rational& r) { return ordered_json::array({r.numerator(), r.denominator()}); }

std::string cell(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::vector<std::string> keys_of(const ordered_json& rec) {
  std::vector<std::string> keys;
  for (auto it = rec.begin(); it != rec.end(); ++it) keys.push_back(it.key());
  return keys;
}

// json-lines records are written whole as they arrive; csv and table views
// are rendered at the end, one block per run of records sharing their keys.
class Emitter {
 public:
  Emitter(std::string format, std::ostream& out) : format_(std::move(format)), out_(out) {}

  void emit(ordered_json rec) {
    ordered_json full;
    full["version"] = 1;
    for (auto it = rec.begin(); it != rec.end(); ++it) full[it.key()] = it.value();
    if (format_ == "json-lines") {
      out_ << full.dump() << '\n' << std::flush;
    } else {
      rows_.push_back(std::move(full));
    }
  }

  void finish() {
    std::size_t start = 0;
    while (start < rows_.size()) {
      const auto keys = keys_of(rows_[start]);
      std::size_t end = start + 1;
      while (end < rows_.size() && keys_of(rows_[end]) == keys) ++end;
      std::vector<std::vector<std::string>> grid{keys};
      for (std::size_t k = start; k < end; ++k) {
        std::vector<std::string> line;
        for (const auto& key : keys) line.push_back(cell(rows_[k][key]));
        grid.push_back(std::move(line));
      }
      format_ == "csv" ? write_csv(grid) : write_table(grid);
      start = end;
    }
    rows_.clear();
  }

 private:
  void write_csv(const std::vector<std::vector<std::string>>& grid) {
    for (const auto& line : grid) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        const auto& s = line[i];
        if (i) out_ << ',';
        if (s.find_first_of(",\"\n") == std::string::npos) {
          out_ << s;
        } else {
          out_ << '"';
          for (char ch : s) out_ << (ch == '"' ? "\"\"" : std::string(1, ch));
          out_ << '"';
        }
      }
      out_ << '\n';
    }
  }

  void write_table(const std::vector<std::vector<std::string>>& grid) {
    std::vector<std::size_t> width(grid.front().size(), 0);
    for (const auto& line : grid) {
      for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    }
    for (const auto& line : grid) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        out_ << line[i];
        if (i + 1 < line.size()) out_ << std::string(width[i] - line[i].size() + 2, ' ');
      }
      out_ << '\n';
    }
    out_ << '\n';
  }

  std::string format_;
  std::ostream& out_;
  std::vector<ordered_json> rows_;
};

struct Globals {
  std::string format = "json-lines";
  unsigned threads = 1;
  std::uint64_t budget = 100'000'000;
  std::uint64_t seed = 0;
  bool strict = false;
  std::uint64_t max_order = 0;
  bool verbose = false;
};

struct Args {
  std::string group;
  std::string type, type1, type2, sizes;
  std::string mode = "exhaustive";
  std::uint64_t trials = 1'000'000;
  std::string candidates = "all";
  bool aut = false;
  bool verify = false;
  bool brute_force = false;
  std::int64_t p = 0, n = 0, r = 0, r1 = 0, r2 = 0, order = 0;
  std::string factors;
  std::string suite = "all";
};

GroupHandle open_group(const std::string& text) {
  return make_group(GroupSpec::parse(text), {.allow_unenumerated = true});
}

ordered_json system_json(const SphericalSystem& s) {
  auto elems = ordered_json::array();
  for (const auto& e : s.elements()) elems.push_back(e.str());
  return elems;
}

ordered_json structure_json(const RamificationStructure& s) {
  return {{"type1", s.first.type().str()},
          {"type2", s.second.type().str()},
          {"first", system_json(s.first)},
          {"second", system_json(s.second)}};
}

ordered_json report_json(const OrbitReport& r, const std::string& kind) {
  ordered_json rec;
  rec["record"] = kind;
  const auto body = ordered_json::parse(r.json());
  for (auto it = body.begin(); it != body.end(); ++it) rec[it.key()] = it.value();
  return rec;
}

std::vector<std::int64_t> int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size()) throw Error(ErrorKind::usage, "malformed integer list '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorKind::usage, "empty integer list");
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::usage, what);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unmixed ramification structures, Hurwitz counts and their verification"};
  app.name("hurwitz");
  app.require_subcommand(1);
  Globals gl;
  Args a;
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--format", gl.format, "json-lines | csv | table")
        ->check(CLI::IsMember({"json-lines", "csv", "table"}));
    sub->add_option("--threads", gl.threads, "worker count")->check(CLI::Range(1u, 256u));
    sub->add_option("--budget", gl.budget, "enumeration budget (states)");
    sub->add_option("--seed", gl.seed, "random seed");
    sub->add_flag("--strict", gl.strict, "exit 1 on budget-exceeded or non-realizable outcomes");
    sub->add_option("--max-order", gl.max_order, "order or entry cap");
    sub->add_flag("-v,--verbose", gl.verbose, "progress on standard error");
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    add_globals(sub);
    return sub;
  };

  auto* group = app.add_subcommand("group", "group queries")->require_subcommand(1);
  auto* group_info = leaf(group, "info", "order, classes and automorphisms");
  group_info->add_option("--group", a.group, "group spec")->required();

  auto* structures = app.add_subcommand("structures", "ramification structures")->require_subcommand(1);
  auto* exists = leaf(structures, "exists", "search for an unmixed structure");
  exists->add_option("--group", a.group)->required();
  auto* t1 = exists->add_option("--type1", a.type1);
  exists->add_option("--type2", a.type2)->needs(t1);
  exists->add_option("--sizes", a.sizes, "r1,r2")->excludes(t1);
  exists->add_option("--mode", a.mode)->check(CLI::IsMember({"exhaustive", "randomized"}));
  exists->add_option("--trials", a.trials);

  auto* orbits = app.add_subcommand("orbits", "Hurwitz orbit counts")->require_subcommand(1);
  auto* count_d_cmd = leaf(orbits, "count-d", "d(G; tau)");
  count_d_cmd->add_option("--group", a.group)->required();
  count_d_cmd->add_option("--type", a.type)->required();
  count_d_cmd->add_flag("--aut", a.aut, "orbits of Aut(G) instead of G");
  count_d_cmd->add_flag("--verify", a.verify, "cross-check by braid moves");
  auto* count_h_cmd = leaf(orbits, "count-h", "h(G; tau1, tau2)");
  count_h_cmd->add_option("--group", a.group)->required();
  count_h_cmd->add_option("--type1", a.type1)->required();
  count_h_cmd->add_option("--type2", a.type2)->required();
  auto* lower = leaf(orbits, "lower-bound", "class-tuple lower bound for h");
  lower->add_option("--group", a.group)->required();
  lower->add_option("--type1", a.type1)->required();
  lower->add_option("--type2", a.type2)->required();
  lower->add_option("--candidates", a.candidates)->check(CLI::IsMember({"all", "almost-homogeneous"}));
  lower->add_option("--trials", a.trials, "random trials per class tuple");

  auto* psl2 = app.add_subcommand("psl2", "PSL(2,p) trace counts")->require_subcommand(1);
  auto* table = leaf(psl2, "table", "d' over admissible triples");
  table->add_option("--p", a.p)->required();
  table->add_flag("--brute-force", a.brute_force, "add brute-force orbit counts");

  auto* abelian = app.add_subcommand("abelian", "abelian groups")->require_subcommand(1);
  auto* admits = leaf(abelian, "admits", "classification theorem");
  admits->add_option("--factors", a.factors)->required();
  admits->add_option("--r1", a.r1)->required();
  admits->add_option("--r2", a.r2)->required();
  auto* bounds = leaf(abelian, "bounds", "bounds on h((Z/n)^2; (n,n,n), (n,n,n))");
  bounds->add_option("--n", a.n)->required();
  auto* construct = leaf(abelian, "construct", "structure on (Z/p)^r");
  construct->add_option("--p", a.p)->required();
  construct->add_option("--r", a.r)->required();
  auto* zpzr = leaf(abelian, "zpzr-bounds", "bounds on h((Z/p)^r)");
  zpzr->add_option("--p", a.p)->required();
  zpzr->add_option("--r", a.r)->required();

  auto* invariants = app.add_subcommand("invariants", "surface invariants")->require_subcommand(1);
  auto* compute = leaf(invariants, "compute", "chi, K^2, e, genera");
  auto* order_opt = compute->add_option("--order", a.order);
  compute->add_option("--group", a.group)->excludes(order_opt);
  compute->add_option("--type1", a.type1)->required();
  compute->add_option("--type2", a.type2)->required();

  auto* verify_cmd = app.add_subcommand("verify", "invariant suites")->require_subcommand(1);
  auto* verify_all = leaf(verify_cmd, "all", "run every suite");
  verify_all->add_option("--suite", a.suite)
      ->check(CLI::IsMember(
          {"all", "group", "spherical", "braid", "invariants", "psl2", "abelian", "nonexistence", "growth"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage-error: " << e.what() << '\n';
    return 2;
  }

  Emitter em(gl.format, out);
  int status = 0;
  try {
    // Parse every spec and type up front so malformed input is a usage error.
    std::optional<GroupSpec> spec;
    std::optional<TypeVector> type, type1, type2;
    try {
      if (!a.group.empty()) spec = GroupSpec::parse(a.group);
      if (!a.type.empty()) type = TypeVector::parse(a.type);
      if (!a.type1.empty()) type1 = TypeVector::parse(a.type1);
      if (!a.type2.empty()) type2 = TypeVector::parse(a.type2);
    } catch (const Error& e) {
      throw Error(ErrorKind::usage, e.what());
    }

    if (group_info->parsed()) {
      const auto g = open_group(a.group);
      ordered_json rec{{"record", "group"}, {"group", g.spec().str()}, {"order", g.order()}};
      rec["enumerated"] = g.enumerated();
      if (g.enumerated()) {
        auto classes = ordered_json::array();
        for (const auto& c : g.conjugacy_classes()) {
          classes.push_back({{"representative", g.element(c.representative).str()}, {"size", c.size}, {"order", c.order}});
        }
        rec["classes"] = classes;
        rec["center"] = g.center_order();
      }
      if (g.aut_available()) {
        rec["aut"] = g.aut_order();
        rec["inn"] = g.inn_order();
        rec["out"] = g.out_order();
      } else {
        rec["aut"] = nullptr;
        rec["aut_unavailable"] = g.aut_unavailable_reason();
      }
      em.emit(rec);
    } else if (exists->parsed()) {
      require(type1.has_value() != !a.sizes.empty(), "give either --type1/--type2 or --sizes");
      require(!type1 || type2, "--type2 is required with --type1");
      const auto g = open_group(a.group);
      SearchOptions so;
      so.mode = a.mode == "exhaustive" ? SearchMode::exhaustive : SearchMode::randomized;
      so.trials = a.trials;
      so.seed = gl.seed;
      so.state_budget = gl.budget;
      SearchResult res;
      ordered_json rec{{"record", "structure-search"}, {"group", g.spec().str()}};
      if (type1) {
        rec["type1"] = type1->str();
        rec["type2"] = type2->str();
        res = exists_unmixed_structure(g, *type1, *type2, so);
      } else {
        const auto sizes = int_list(a.sizes);
        require(sizes.size() == 2 && sizes[0] >= 3 && sizes[1] >= 3, "--sizes expects r1,r2 with both >= 3");
        rec["sizes"] = sizes;
        res = exists_unmixed_structure_sizes(g, static_cast<std::size_t>(sizes[0]), static_cast<std::size_t>(sizes[1]), so);
      }
      rec["mode"] = a.mode;
      rec["outcome"] = std::string(to_string(res.outcome));
      rec["work"] = res.work;
      rec["structure"] = res.structure ? structure_json(*res.structure) : ordered_json(nullptr);
      em.emit(rec);
      if (gl.strict && res.outcome == SearchResult::Outcome::inconclusive) status = 1;
    } else if (count_d_cmd->parsed()) {
      const auto g = open_group(a.group);
      CountOptions co{.verify = a.verify, .threads = gl.threads, .budget = gl.budget};
      em.emit(report_json(a.aut ? count_d_aut(g, *type, co) : count_d(g, *type, co), a.aut ? "count-d-aut" : "count-d"));
    } else if (count_h_cmd->parsed()) {
      const auto g = open_group(a.group);
      em.emit(report_json(count_h(g, *type1, *type2, {.threads = gl.threads, .budget = gl.budget}), "count-h"));
    } else if (lower->parsed()) {
      const auto g = open_group(a.group);
      LowerBoundOptions lo;
      lo.candidates = a.candidates == "all" ? ClassCandidates::all : ClassCandidates::almost_homogeneous;
      if (lower->count("--trials")) lo.trials_per_tuple = a.trials;
      lo.seed = gl.seed;
      lo.budget = gl.budget;
      const auto res = class_tuple_lower_bound(g, *type1, *type2, lo);
      auto witnesses = ordered_json::array();
      for (const auto& [c1, c2] : res.witnesses) witnesses.push_back({c1, c2});
      em.emit({{"record", "lower-bound"},
               {"group", g.spec().str()},
               {"tau1", type1->str()},
               {"tau2", type2->str()},
               {"count", res.count},
               {"candidate_pairs", res.candidate_pairs},
               {"method", res.method},
               {"witnesses", witnesses}});
    } else if (table->parsed()) {
      const auto cap = gl.max_order ? gl.max_order : static_cast<std::uint64_t>(a.p);
      const auto triples = psl2::admissible_triples(a.p, static_cast<std::uint32_t>(cap));
      std::optional<GroupHandle> g;
      if (a.brute_force) g = make_group(psl2_spec(static_cast<int>(a.p)));
      for (const auto& t : triples) {
        const auto dp = psl2::d_prime(a.p, t);
        const auto closed = psl2::d_prime_closed(a.p, t);
        ordered_json rec{{"record", "d-prime"},
                         {"p", a.p},
                         {"triple", {t[0], t[1], t[2]}},
                         {"d_prime", dp},
                         {"d", 2 * dp},
                         {"method", "trace-count"},
                         {"d_prime_even_sign", psl2::d_prime_even_sign(a.p, t)},
                         {"closed_form", closed.value},
                         {"case", closed.case_label},
                         {"bound_only", closed.bound_only}};
        if (g) {
          const TypeVector tau({t[0], t[1], t[2]});
          rec["pgl_orbits"] = count_d_aut(*g, tau, {.threads = gl.threads}).count;
          rec["d_exact"] = count_d(*g, tau, {.threads = gl.threads}).count;
        }
        em.emit(rec);
      }
    } else if (admits->parsed()) {
      const auto factors = int_list(a.factors);
      require(a.r1 >= 3 && a.r2 >= 3, "--r1 and --r2 must be at least 3");
      const abelian::AbelianProfile profile(factors);
      const auto adm = abelian::admits_structure(profile, static_cast<std::size_t>(a.r1), static_cast<std::size_t>(a.r2));
      em.emit({{"record", "abelian-admits"},
               {"factors", profile.factors},
               {"r1", a.r1},
               {"r2", a.r2},
               {"admits", adm.admits},
               {"reason", adm.reason}});
    } else if (bounds->parsed()) {
      const auto b = abelian::hurwitz_bounds_rank2(a.n);
      em.emit({{"record", "abelian-bounds"},
               {"n", a.n},
               {"N", b.N},
               {"lower", rational_json(b.lower)},
               {"upper", rational_json(b.upper)}});
    } else if (construct->parsed()) {
      const auto s = abelian::construct_structure_zpzr(a.p, static_cast<int>(a.r));
      ordered_json rec{{"record", "abelian-construct"}, {"p", a.p}, {"r", a.r}, {"group", s.first.group().spec().str()}};
      const auto body = structure_json(s);
      for (auto it = body.begin(); it != body.end(); ++it) rec[it.key()] = it.value();
      em.emit(rec);
    } else if (zpzr->parsed()) {
      const auto b = abelian::count_h_zpzr_bounds(a.p, static_cast<int>(a.r));
      em.emit({{"record", "zpzr-bounds"},
               {"p", a.p},
               {"r", a.r},
               {"orbit_lower", b.orbit_lower},
               {"orbit_upper", b.orbit_upper},
               {"h_lower", rational_json(b.h_lower)},
               {"h_upper", rational_json(b.h_upper)}});
    } else if (compute->parsed()) {
      require(a.order > 0 || spec, "give --order or --group");
      const auto order = spec ? make_group(*spec, {.allow_unenumerated = true}).order()
                              : static_cast<std::uint64_t>(a.order);
      const auto inv = surface_invariants(order, *type1, *type2);
      const auto cb = chi_bounds(order, type1->size(), type2->size());
      ordered_json rec{{"record", "invariants"},
                       {"order", order},
                       {"tau1", type1->str()},
                       {"tau2", type2->str()},
                       {"chi", inv.chi},
                       {"k2", inv.k2},
                       {"e", inv.euler},
                       {"pg", inv.pg},
                       {"g1", inv.genus1},
                       {"g2", inv.genus2},
                       {"identities", identities_hold(inv, order)},
                       {"chi_lower", rational_json(cb.lower)},
                       {"chi_upper", rational_json(cb.upper)}};
      if (type1->size() == 3 && type2->size() == 3) {
        rec["mu1"] = rational_json(mu(*type1));
        rec["mu2"] = rational_json(mu(*type2));
      }
      em.emit(rec);
    } else if (verify_all->parsed()) {
      verify::VerifyOptions vo;
      if (gl.max_order) vo.max_order = gl.max_order;
      vo.threads = gl.threads;
      vo.seed = gl.seed;
      std::map<std::string, std::uint64_t> tally{{"pass", 0}, {"fail", 0}, {"refuted", 0}};
      const verify::Sink sink = [&](const verify::Check& c) {
        ++tally[std::string(verify::to_string(c.status))];
        if (gl.verbose) err << verify::to_string(c.status) << ' ' << c.suite << ": " << c.name << std::endl;
        ordered_json rec{{"record", "check"}, {"suite", c.suite}, {"check", c.name}};
        rec["status"] = std::string(verify::to_string(c.status));
        rec["detail"] = c.detail;
        em.emit(rec);
      };
      const std::map<std::string, void (*)(const verify::VerifyOptions&, const verify::Sink&)> suites{
          {"all", verify::run_all},
          {"group", verify::group_suite},
          {"spherical", verify::spherical_suite},
          {"braid", verify::braid_suite},
          {"invariants", verify::invariants_suite},
          {"psl2", verify::psl2_suite},
          {"abelian", verify::abelian_suite},
          {"nonexistence", verify::nonexistence_suite},
          {"growth", verify::growth_suite}};
      suites.at(a.suite)(vo, sink);
      em.emit({{"record", "summary"},
               {"max_order", vo.max_order},
               {"pass", tally["pass"]},
               {"fail", tally["fail"]},
               {"refuted", tally["refuted"]}});
      if (tally["fail"] > 0) status = 1;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::usage) {
      em.finish();
      err << e.what() << '\n';
      return 2;
    }
    em.emit({{"record", "error"}, {"kind", std::string(to_string(e.kind()))}, {"message", e.what()}});
    const bool outcome =
        e.kind() == ErrorKind::budget_exceeded || e.kind() == ErrorKind::non_realizable;
    status = outcome && !gl.strict ? 0 : 1;
  }
  em.finish();
  return status;
}

}  // namespace hurwitz::cli
