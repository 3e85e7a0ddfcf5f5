#include "supersplit/cli.hpp"

#include "supersplit/arith.hpp"
#include "supersplit/factor_cache.hpp"
#include "supersplit/family.hpp"
#include "supersplit/groups.hpp"
#include "supersplit/io.hpp"
#include "supersplit/split.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace supersplit::cli {

namespace {

using Int = std::int64_t;
using io::Json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json big_json(const BigInt& v) { return fits_int64(v) ? Json(to_int64(v)) : Json(v.get_str()); }

void require_table_or_json(const RunConfig& cfg, const char* what) {
  if (cfg.output_format == OutputFormat::csv)
    throw UsageError(fmt::format("{} has no CSV form; use --format table or json", what));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

// ---------------------------------------------------------------- genus

struct GenusArgs {
  std::optional<Int> n, d, r, s, lambda, m;
  bool family_x = false;
};

int cmd_genus(const GenusArgs& a, const RunConfig& cfg, std::ostream& out) {
  require_table_or_json(cfg, "genus");
  BigInt g;
  if (a.family_x) {
    g = family::genus_X(need(a.r, "--r"), need(a.s, "--s"));
  } else if (a.lambda) {
    g = family::genus_C(need(a.r, "--r"), *a.lambda, need(a.m, "--m"));
  } else if (a.n || a.d) {
    g = curves::genus_superelliptic(need(a.n, "--n"), need(a.d, "--d"));
  } else {
    throw UsageError("genus needs --n/--d, --r/--lambda/--m or --family-X with --r/--s");
  }
  if (cfg.output_format == OutputFormat::json)
    emit(out, Json{{"g", big_json(g)}});
  else
    out << "g = " << g.get_str() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- curve

struct CurveArgs {
  std::optional<Int> n, delta;
  Int m = 1;
  std::optional<std::string> coeffs;
  bool twisted = false;
  bool quotients = false;
};

std::vector<Rational> parse_coeff_list(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(io::parse_rational(item));
  return out;
}

int cmd_curve(const CurveArgs& a, const RunConfig& cfg, std::ostream& out) {
  require_table_or_json(cfg, "curve");
  std::optional<std::vector<Rational>> coeffs;
  if (a.coeffs) coeffs = parse_coeff_list(*a.coeffs);
  auto c = curves::make_curve(need(a.n, "--n"), a.m, need(a.delta, "--delta"), coeffs, a.twisted);
  const auto g = curves::curve_genus(c);
  std::optional<curves::QuotientPair> q;
  if (a.quotients) q = curves::quotient_equations(c);

  if (cfg.output_format == OutputFormat::json) {
    Json j = io::to_json(c);
    if (q) j["quotients"] = Json::array({io::to_json(q->x1), io::to_json(q->x2)});
    emit(out, j);
    return kExitOk;
  }
  out << c.equation() << "\n";
  out << "genus = " << g.genus << "\n";
  if (g.formula_extended) out << "note: degree <= n, closed form applied outside its stated range\n";
  if (g.twisted_convention) out << "note: twisted curve, genus taken for degree delta*m + 1\n";
  if (q) {
    out << "X1: " << q->x1.equation() << "  (genus " << q->g1 << ")\n";
    out << "X2: " << q->x2.equation() << "  (genus " << q->g2 << ")\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- split

struct SplitArgs {
  std::optional<Int> n, m, delta;
  bool enumerate = false;
  Int n_max = 12, m_max = 12, delta_max = 60;
};

int cmd_split(const SplitArgs& a, const RunConfig& cfg, std::ostream& out) {
  if (a.enumerate) {
    if (a.n_max < 2 || a.m_max < 2 || a.delta_max < 1)
      throw UsageError("--n-max and --m-max must be >= 2, --delta-max >= 1");
    auto certs = split::enumerate_splits(a.n_max, a.m_max, a.delta_max);
    switch (cfg.output_format) {
      case OutputFormat::json: {
        Json arr = Json::array();
        for (const auto& c : certs) arr.push_back(io::to_json(c));
        emit(out, arr);
        break;
      }
      case OutputFormat::csv:
        out << "n,m,delta,lhs,rhs,splits,g,g1,g2\n";
        for (const auto& c : certs)
          out << fmt::format("{},{},{},{},{},{},{},{},{}\n", c.n, c.m, c.delta, c.lhs, c.rhs, c.splits, c.g, c.g1,
                             c.g2);
        break;
      case OutputFormat::table:
        out << "n | m | delta | g | g1 | g2\n";
        for (const auto& c : certs)
          out << fmt::format("{} | {} | {} | {} | {} | {}\n", c.n, c.m, c.delta, c.g, c.g1, c.g2);
        break;
    }
    return kExitOk;
  }

  require_table_or_json(cfg, "split without --enumerate");
  auto c = split::eqm_certificate(need(a.n, "--n"), need(a.m, "--m"), need(a.delta, "--delta"));
  std::optional<split::PrimeCase> pc;
  if (arith::is_probable_prime(BigInt(c.n))) pc = split::classify_prime_case(c.n, c.m, c.delta);
  if (cfg.output_format == OutputFormat::json) {
    Json j = io::to_json(c);
    j["prime_case"] = pc ? Json(split::to_string(*pc)) : Json(nullptr);
    emit(out, j);
    return kExitOk;
  }
  out << fmt::format("n = {}, m = {}, delta = {}\n", c.n, c.m, c.delta);
  out << fmt::format("lhs = {}, rhs = {}\n", c.lhs, c.rhs);
  out << fmt::format("splits={}\n", c.splits);
  out << fmt::format("g = {}, g1 = {}, g2 = {}\n", c.g, c.g1, c.g2);
  if (pc) out << "prime case = " << split::to_string(*pc) << "\n";
  if (c.formula_extended) out << "note: delta*m <= n, closed form applied outside its stated range\n";
  return kExitOk;
}

// ---------------------------------------------------------------- family

struct FamilyArgs {
  Int s = 0;
  Int s_max = 50;
  Int bound = 500;
  Int r = 0, m = 0;
};

std::unique_ptr<arith::FactorCache> open_cache(const RunConfig& cfg) {
  if (!cfg.cache_path) return nullptr;
  return std::make_unique<arith::FactorCache>(*cfg.cache_path);
}

family::SolveOptions solve_options(const RunConfig& cfg, arith::FactorCache* cache) {
  family::SolveOptions o;
  o.budget.wall = std::chrono::milliseconds(cfg.factor_budget_ms);
  o.allow_large = cfg.allow_large;
  o.cache = cache;
  return o;
}

int emit_rows(const std::vector<family::FamilySolution>& rows, const RunConfig& cfg, std::ostream& out) {
  switch (cfg.output_format) {
    case OutputFormat::table: out << io::render_table(rows); break;
    case OutputFormat::json: emit(out, io::rows_to_json(rows)); break;
    case OutputFormat::csv: out << io::rows_to_csv(rows); break;
  }
  const bool unresolved = std::any_of(rows.begin(), rows.end(), [](const auto& r) {
    return r.status == family::SolutionStatus::unresolved_factoring;
  });
  return unresolved ? kExitUnresolved : kExitOk;
}

int cmd_family_solve(const FamilyArgs& a, const RunConfig& cfg, std::ostream& out) {
  if (a.s < 1) throw UsageError("--s must be at least 1");
  auto cache = open_cache(cfg);
  auto report = family::solve_family(a.s, solve_options(cfg, cache.get()));
  return emit_rows(io::table_rows({report}), cfg, out);
}

int cmd_family_table(const FamilyArgs& a, const RunConfig& cfg, std::ostream& out) {
  if (a.s_max < 1) throw UsageError("--s-max must be at least 1");
  auto cache = open_cache(cfg);
  auto reports = family::solve_many(family::admissible_s(a.s_max + 1), solve_options(cfg, cache.get()));
  return emit_rows(io::table_rows(reports), cfg, out);
}

void emit_int_list(const std::vector<Int>& values, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output_format == OutputFormat::json)
    emit(out, Json(values));
  else
    out << fmt::format("{}\n", fmt::join(values, " "));
}

int cmd_family_admissible(const FamilyArgs& a, const RunConfig& cfg, std::ostream& out) {
  require_table_or_json(cfg, "family admissible");
  if (a.bound < 1) throw UsageError("--bound must be at least 1");
  emit_int_list(family::admissible_s(a.bound), cfg, out);
  return kExitOk;
}

int cmd_family_check(const FamilyArgs& a, const RunConfig& cfg, std::ostream& out) {
  require_table_or_json(cfg, "family check");
  if (a.r < 1 || a.m < 1 || a.s < 1) throw UsageError("family check needs --r, --m, --s >= 1");
  const bool cond = family::family_condition(a.r, a.m, a.s);
  std::optional<BigInt> gx, sum;
  if (a.r >= 2) gx = family::genus_X(a.r, a.s);
  if (a.r >= 2 && a.m >= 2) {
    try {
      sum = family::sum_components(a.r, a.m, a.s);
    } catch (const std::domain_error&) {
    }
  }
  if (cfg.output_format == OutputFormat::json) {
    emit(out, Json{{"r", a.r},
                   {"m", a.m},
                   {"s", a.s},
                   {"family_condition", cond},
                   {"genus_X", gx ? big_json(*gx) : Json(nullptr)},
                   {"sum_components", sum ? big_json(*sum) : Json(nullptr)}});
    return kExitOk;
  }
  out << fmt::format("family_condition = {}\n", cond);
  out << "genus_X = " << (gx ? gx->get_str() : "n/a (r < 2)") << "\n";
  out << "sum_components = " << (sum ? sum->get_str() : "n/a (not an integer)") << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- seq

struct SeqArgs {
  std::string kind;
  Int bound = 250;
};

int cmd_seq(const SeqArgs& a, const RunConfig& cfg, std::ostream& out) {
  require_table_or_json(cfg, "seq");
  if (a.bound < 1) throw UsageError("--bound must be at least 1");
  emit_int_list(family::sequence(family::sequence_kind_from_string(a.kind), a.bound), cfg, out);
  return kExitOk;
}

// ---------------------------------------------------------------- group

struct GroupArgs {
  Int n = 0, m = 0, r = 0, lambda = 1;
  std::optional<Int> l;
  std::string reduced = "Cm";
  std::string tag;
  Int cap = 10000;
  bool gap = false;
};

std::string presentation_line(const groups::GroupPresentation& p) {
  std::vector<std::string> rels;
  for (const auto& r : p.relations) rels.push_back(r.text);
  return fmt::format("{}: <{} | {}>  order {}", p.name(), fmt::join(p.generators, ", "), fmt::join(rels, ", "),
                     p.expected_order.get_str());
}

int cmd_group_candidates(const GroupArgs& a, const RunConfig& cfg, std::ostream& out) {
  require_table_or_json(cfg, "group candidates");
  auto list = groups::full_group_candidates(a.n, a.m, groups::reduced_tag_from_string(a.reduced));
  if (cfg.output_format == OutputFormat::json) {
    Json arr = Json::array();
    for (const auto& p : list) arr.push_back(io::to_json(p));
    emit(out, arr);
    return kExitOk;
  }
  for (const auto& p : list) {
    out << presentation_line(p) << "\n";
    if (a.gap) out << groups::to_gap(p);
  }
  return kExitOk;
}

int cmd_group_verify(const GroupArgs& a, const RunConfig& cfg, std::ostream& out) {
  require_table_or_json(cfg, "group verify");
  auto p = groups::make_presentation(groups::group_tag_from_string(a.tag), a.n, a.m, a.l);
  auto rep = groups::verify_presentation(p, a.cap);
  if (cfg.output_format == OutputFormat::json) {
    Json j = io::to_json(p);
    j["outcome"] = groups::to_string(rep.outcome);
    j["actual_order"] = rep.actual ? Json(rep.actual->get_str()) : Json(nullptr);
    j["relators_hold"] = rep.relators_hold;
    j["axioms_hold"] = rep.axioms_hold;
    emit(out, j);
    return kExitOk;
  }
  out << presentation_line(p) << "\n";
  out << "outcome = " << groups::to_string(rep.outcome) << "\n";
  if (rep.actual) {
    out << "actual order = " << rep.actual->get_str() << "\n";
    out << fmt::format("axioms hold = {}\nrelators hold = {}\n", rep.axioms_hold, rep.relators_hold);
  }
  if (a.gap) out << groups::to_gap(p);
  return kExitOk;
}

int cmd_group_reduced(const GroupArgs& a, const RunConfig& cfg, std::ostream& out) {
  require_table_or_json(cfg, "group reduced");
  auto g = groups::reduced_group(a.r, a.lambda, a.m);
  if (cfg.output_format == OutputFormat::json)
    emit(out, Json{{"reduced", groups::to_string(g.tag)}, {"m", g.m}, {"generic", g.generic}});
  else
    out << groups::to_string(g.tag) << " (m = " << g.m << ")\n";
  return kExitOk;
}

// ---------------------------------------------------------------- accola / kani-rosen

struct FileArgs {
  std::string input;
  std::optional<Int> n, m, delta;
};

int cmd_accola(const FileArgs& a, const RunConfig& cfg, std::ostream& out) {
  require_table_or_json(cfg, "accola");
  auto p = io::partition_from_json(read_json_file(a.input));
  const bool ie = !p.intersections.empty();
  const Int residual = ie ? split::accola_ie_check(p) : split::accola_check(p);
  const char* relation = ie ? "inclusion-exclusion" : "partition";
  if (cfg.output_format == OutputFormat::json) {
    emit(out, Json{{"relation", relation}, {"residual", residual}, {"holds", residual == 0}});
  } else {
    out << "relation = " << relation << "\n";
    out << "residual = " << residual << "\n";
    out << fmt::format("holds = {}\n", residual == 0);
  }
  return kExitOk;
}

int cmd_kani_rosen(const FileArgs& a, const RunConfig& cfg, std::ostream& out) {
  require_table_or_json(cfg, "kani-rosen");
  split::KaniRosenInput in;
  if (!a.input.empty())
    in = io::kani_rosen_from_json(read_json_file(a.input));
  else
    in = split::superelliptic_configuration(need(a.n, "--n"), need(a.m, "--m"), need(a.delta, "--delta"));
  auto v = split::kani_rosen_check(in.gij, in.nvec);
  if (cfg.output_format == OutputFormat::json) {
    emit(out, io::to_json(v));
    return kExitOk;
  }
  out << fmt::format("holds = {}\nquadratic = {}\nlinear = {}\n", v.holds, v.quadratic, fmt::join(v.linear, " "));
  if (v.statement) out << *v.statement << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- factor

struct FactorArgs {
  std::string value;
};

int cmd_factor(const FactorArgs& a, const RunConfig& cfg, std::ostream& out) {
  require_table_or_json(cfg, "factor");
  const BigInt n = parse_bigint(a.value);
  if (n <= 0) throw UsageError("factor needs a positive integer");
  auto cache = open_cache(cfg);
  arith::FactorBudget budget;
  budget.wall = std::chrono::milliseconds(cfg.factor_budget_ms);
  auto f = arith::factorize(n, budget, cache.get());
  if (cfg.output_format == OutputFormat::json)
    emit(out, io::to_json(f));
  else
    out << arith::format_cache_line(f) << (f.complete ? "" : "  (unresolved: factoring timeout)") << "\n";
  return f.complete ? kExitOk : kExitUnresolved;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacobian splitting of superelliptic curves: genus, split criteria, family solver, groups"};
  app.name("supersplit");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "table";
  std::string cache;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--budget-ms", cfg.factor_budget_ms, "Wall-clock budget per composite for Pollard-rho")
      ->check(CLI::PositiveNumber);
  app.add_flag("--allow-large", cfg.allow_large, "Factor family numerators for s >= 126");
  app.add_option("--cache", cache, "Factor cache file (default: $SUPERSPLIT_FACTOR_CACHE)");

  std::function<int()> action;
  auto bind = [&](CLI::App* sub, auto fn) { sub->callback([&action, fn] { action = fn; }); };

  GenusArgs genus;
  auto* g = app.add_subcommand("genus", "Genus of y^n = f(x), of X_{r,s} or of C_{r,lambda,m}");
  g->add_option("--n", genus.n, "Level n");
  g->add_option("--d", genus.d, "Degree of f");
  g->add_option("--r", genus.r, "Family exponent r");
  g->add_option("--s", genus.s, "Family parameter s");
  g->add_option("--lambda", genus.lambda, "Component index lambda");
  g->add_option("--m", genus.m, "Component exponent m");
  g->add_flag("--family-X", genus.family_x, "Genus of X_{r,s}");
  bind(g, [&] { return cmd_genus(genus, cfg, out); });

  CurveArgs curve;
  auto* c = app.add_subcommand("curve", "Render y^n = f(x^m) and its quotient curves");
  c->add_option("--n", curve.n, "Level n")->required();
  c->add_option("--m", curve.m, "Exponent m (default 1)");
  c->add_option("--delta", curve.delta, "Degree of f")->required();
  c->add_option("--coeffs", curve.coeffs, "a_1,...,a_{delta-1} of the monic f with constant term 1");
  c->add_flag("--twisted", curve.twisted, "Use y^n = x f(x^m)");
  c->add_flag("--quotients", curve.quotients, "Also print the two quotient curves");
  bind(c, [&] { return cmd_curve(curve, cfg, out); });

  SplitArgs split_args;
  auto* sp = app.add_subcommand("split", "Split criterion for y^n = f(x^m)");
  sp->add_option("--n", split_args.n, "Level n");
  sp->add_option("--m", split_args.m, "Exponent m");
  sp->add_option("--delta", split_args.delta, "Degree delta of f");
  sp->add_flag("--enumerate", split_args.enumerate, "List every splitting triple in a box");
  sp->add_option("--n-max", split_args.n_max, "Enumeration bound on n")->capture_default_str();
  sp->add_option("--m-max", split_args.m_max, "Enumeration bound on m")->capture_default_str();
  sp->add_option("--delta-max", split_args.delta_max, "Enumeration bound on delta")->capture_default_str();
  bind(sp, [&] { return cmd_split(split_args, cfg, out); });

  FamilyArgs fam;
  auto* f = app.add_subcommand("family", "The family X_{r,s}");
  f->require_subcommand(1);
  auto* fs = f->add_subcommand("solve", "All (m, r) for one s");
  fs->add_option("--s", fam.s, "s")->required();
  bind(fs, [&] { return cmd_family_solve(fam, cfg, out); });
  auto* ft = f->add_subcommand("table", "Solutions for every admissible s <= s-max");
  ft->add_option("--s-max", fam.s_max, "Largest s")->capture_default_str();
  bind(ft, [&] { return cmd_family_table(fam, cfg, out); });
  auto* fa = f->add_subcommand("admissible", "Admissible s below a bound");
  fa->add_option("--bound", fam.bound, "Exclusive bound")->capture_default_str();
  bind(fa, [&] { return cmd_family_admissible(fam, cfg, out); });
  auto* fc = f->add_subcommand("check", "Decomposition condition and genera for (r, m, s)");
  fc->add_option("--r", fam.r, "r")->required();
  fc->add_option("--m", fam.m, "m")->required();
  fc->add_option("--s", fam.s, "s")->required();
  bind(fc, [&] { return cmd_family_check(fam, cfg, out); });

  SeqArgs seq;
  auto* sq = app.add_subcommand("seq", "Odd t with 4^t = 1 or 16^t = 1 (mod t)");
  sq->add_option("kind", seq.kind, "A014945 or A014957")->required();
  sq->add_option("--bound", seq.bound, "Exclusive bound")->capture_default_str();
  bind(sq, [&] { return cmd_seq(seq, cfg, out); });

  GroupArgs grp;
  auto* gr = app.add_subcommand("group", "Automorphism group candidates");
  gr->require_subcommand(1);
  auto* gc = gr->add_subcommand("candidates", "Extensions of a reduced group");
  gc->add_option("--n", grp.n, "Level n")->required();
  gc->add_option("--m", grp.m, "m")->required();
  gc->add_option("--reduced", grp.reduced, "Cm or D2m")->capture_default_str();
  gc->add_flag("--gap", grp.gap, "Also print GAP presentations");
  bind(gc, [&] { return cmd_group_candidates(grp, cfg, out); });
  auto* gv = gr->add_subcommand("verify", "Realize a presentation and check its order");
  gv->add_option("--tag", grp.tag, "Cmn, Metacyclic, D2mxCn, D2mn, Gspecial, G1..G4")->required();
  gv->add_option("--n", grp.n, "Level n")->required();
  gv->add_option("--m", grp.m, "m")->required();
  gv->add_option("--l", grp.l, "Metacyclic exponent l");
  gv->add_option("--cap", grp.cap, "Largest order to realize (<= 10000)")->capture_default_str();
  gv->add_flag("--gap", grp.gap, "Also print the GAP presentation");
  bind(gv, [&] { return cmd_group_verify(grp, cfg, out); });
  auto* gd = gr->add_subcommand("reduced", "Reduced group of a generic C_{r,lambda,m}");
  gd->add_option("--r", grp.r, "r")->required();
  gd->add_option("--lambda", grp.lambda, "lambda")->capture_default_str();
  gd->add_option("--m", grp.m, "m")->required();
  bind(gd, [&] { return cmd_group_reduced(grp, cfg, out); });

  FileArgs accola;
  auto* ac = app.add_subcommand("accola", "Accola genus relation for a group with subgroups");
  ac->add_option("--input", accola.input, "JSON file with order, g, g0, subgroups, intersections")->required();
  bind(ac, [&] { return cmd_accola(accola, cfg, out); });

  FileArgs kr;
  auto* k = app.add_subcommand("kani-rosen", "Kani-Rosen decomposition conditions");
  k->add_option("--input", kr.input, "JSON file with matrix g and vector n");
  k->add_option("--n", kr.n, "Level n of y^n = f(x^m)");
  k->add_option("--m", kr.m, "m");
  k->add_option("--delta", kr.delta, "delta");
  bind(k, [&] { return cmd_kani_rosen(kr, cfg, out); });

  FactorArgs fac;
  auto* fa2 = app.add_subcommand("factor", "Factor a positive integer");
  fa2->add_option("value", fac.value, "Decimal integer")->required();
  bind(fa2, [&] { return cmd_factor(fac, cfg, out); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  cfg.output_format = format == "json" ? OutputFormat::json : format == "csv" ? OutputFormat::csv : OutputFormat::table;
  if (!cache.empty())
    cfg.cache_path = cache;
  else
    cfg.cache_path = arith::FactorCache::path_from_env();

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace supersplit::cli
