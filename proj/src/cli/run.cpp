#include "weakmaps/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "weakmaps/awfs/awfs.hpp"
#include "weakmaps/bar/io.hpp"
#include "weakmaps/fincat/io.hpp"
#include "weakmaps/spans/spans.hpp"

namespace wm::cli {

namespace {

using fincat::FinSetCategory;
using fincat::Set;
using nlohmann::json;

const FinSetCategory C;

/// "identity" or "coreader:S=<n>".
fincat::ComonadData<FinSetCategory> comonad_from_flag(const std::string& flag) {
  if (flag == "identity") return fincat::identity_comonad(C);
  const std::string prefix = "coreader:S=";
  if (flag.rfind(prefix, 0) == 0) {
    const std::string n = flag.substr(prefix.size());
    if (!n.empty() && std::all_of(n.begin(), n.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) &&
        n.size() < 3)
      return fincat::coreader_comonad(C, Set::range(std::stoul(n)));
  }
  throw ParseError("--comonad: expected 'identity' or 'coreader:S=<n>', got '" + flag + "'");
}

std::string objects_str(const std::vector<Set>& objs) {
  std::string s;
  for (const auto& o : objs) s += (s.empty() ? "" : " ") + o.str();
  return s;
}

// Subcommands.  Each builds a complete report before anything is printed.

Report cmd_validate(const RunConfig& cfg, const std::string& as, const std::string& category_file) {
  Report r;
  const std::size_t n = cfg.finset_max ? cfg.finset_max : 2;
  for (const auto& path : cfg.inputs) {
    const json j = fincat::read_json_file(path);
    std::string kind = as;
    if (kind.empty()) {
      const std::string k = j.is_object() && j.contains("kind") && j.at("kind").is_string()
                                ? j.at("kind").get<std::string>()
                                : (j.is_object() && j.contains("builtin") && j.at("builtin").is_object() &&
                                           j.at("builtin").contains("kind") && j.at("builtin").at("kind").is_string()
                                       ? j.at("builtin").at("kind").get<std::string>()
                                       : "");
      if (j.is_object() && j.contains("objects")) kind = "category";
      else if (j.is_object() && (j.contains("action") || j.contains("algebra"))) kind = "module";
      else if (j.is_object() && (j.contains("counit") || k == "coreader")) kind = "comonad";
      else if (j.is_object() && j.contains("functor")) kind = "monad";
      else if (k == "exception") kind = "monad";
      else if (j.is_object() && j.contains("complex")) kind = "algebra";
      else if (k == "rationals" || k == "dual_numbers" || k == "exterior") kind = "algebra";
      else throw ParseError(path + ": cannot tell what the file describes; pass --as");
    }
    r.header("input " + std::to_string(&path - cfg.inputs.data()), path + " (" + kind + ")");
    if (kind == "category") {
      const auto c = fincat::category_from_json(j);
      r.merge(fincat::validate_category(c, c.objects()));
      r.merge(c.validate_limits());
    } else if (kind == "comonad" || kind == "monad") {
      if (fincat::is_builtin(j)) {
        const auto objs = fincat::sets_up_to(n);
        r.header("fragment " + std::to_string(&path - cfg.inputs.data()), objects_str(objs));
        if (kind == "comonad") r.merge(fincat::validate_comonad(C, fincat::finset_comonad_from_json(j, C), objs));
        else r.merge(fincat::validate_monad(C, fincat::finset_monad_from_json(j, C), objs));
      } else {
        if (category_file.empty()) throw ParseError(path + ": a table " + kind + " needs --category");
        const auto c = fincat::category_from_json(fincat::read_json_file(category_file));
        if (kind == "comonad") r.merge(fincat::validate_comonad(c, fincat::table_comonad_from_json(j, c), c.objects()));
        else r.merge(fincat::validate_monad(c, fincat::table_monad_from_json(j, c), c.objects()));
      }
    } else if (kind == "algebra") {
      r.merge(bar::validate_algebra(*bar::algebra_from_json(j)));
    } else if (kind == "module") {
      const auto M = bar::module_from_json(j);
      r.merge(bar::validate_algebra(*M->alg));
      r.merge(bar::validate_module(*M));
    } else {
      throw ParseError("--as: unknown kind '" + kind + "'");
    }
  }
  return r;
}

Report cmd_awfs_check(const RunConfig& cfg, const std::string& builtin, std::string comonad, std::size_t square_max) {
  Report r;
  const std::size_t n = cfg.finset_max ? cfg.finset_max : 2;
  std::optional<awfs::FinAwfs> A;
  if (builtin == "splitepi" || builtin == "split-epi") {
    A = awfs::split_epi_awfs(C, fincat::identity_comonad(C));
    comonad = "identity";
  } else if (builtin == "psplit" || builtin == "p-split-epi") {
    if (comonad.empty()) comonad = "coreader:S=2";
    A = awfs::p_split_epi_awfs(C, comonad_from_flag(comonad));
  } else {
    throw ParseError("--builtin: expected 'splitepi' or 'psplit', got '" + builtin + "'");
  }
  const auto objs = fincat::sets_up_to(n);
  r.header("awfs", A->name);
  r.header("comonad", comonad);
  r.header("finset_max", std::to_string(n));
  r.header("square_max", std::to_string(square_max));
  const auto frag = fincat::all_functions(C, objs);
  r.merge(awfs::validate_awfs(C, *A, frag, [square_max](const fincat::Function& f) {
    return f.dom.size() <= square_max && f.cod.size() <= square_max;
  }));
  const auto Q = awfs::cofibrant_replacement(C, *A);
  const auto& P = *A->split_comonad;
  r.merge(fincat::validate_comonad(C, Q, objs));
  r.merge(awfs::validate_comonad_iso(C, Q, P, awfs::initial_coproduct_iso(C, P), objs));
  return r;
}

Report cmd_compare(const RunConfig& cfg, const std::string& comonad, std::optional<std::size_t> a,
                   std::optional<std::size_t> b) {
  Report r;
  const auto P = comonad_from_flag(comonad);
  const auto A = comonad == "identity" ? awfs::split_epi_awfs(C, P) : awfs::p_split_epi_awfs(C, P);
  const auto W = spans::weak_maps_kleisli(C, A);
  const std::size_t n = cfg.finset_max ? cfg.finset_max : 2;
  std::vector<std::size_t> as, bs;
  for (std::size_t k = 0; k <= n; ++k) as.push_back(k), bs.push_back(k);
  if (a) as = {*a};
  if (b) bs = {*b};
  r.header("comonad", comonad);
  r.header("bound", cfg.bound ? std::to_string(cfg.bound) : "|QA|+2");
  r.header("zigzag", std::to_string(cfg.zigzag));
  for (auto x : as)
    for (auto y : bs) r.merge(spans::compare_hom(W, Set::range(x), Set::range(y), {cfg.bound, cfg.zigzag}));
  return r;
}

struct DgInput {
  bar::AlgebraPtr alg;
  bar::ModulePtr M;
};

DgInput dg_input(const std::string& builtin, int gen_degree, const std::string& algebra_file,
                 const std::string& module_file) {
  DgInput in;
  if (!module_file.empty()) {
    in.M = bar::module_from_json(fincat::read_json_file(module_file));
    in.alg = in.M->alg;
    return in;
  }
  in.alg = algebra_file.empty() ? bar::builtin_algebra(builtin, gen_degree)
                                : bar::algebra_from_json(fincat::read_json_file(algebra_file));
  if (!in.alg->augmentation()) throw ParseError("the algebra needs an augmentation for the default module Q");
  in.M = bar::trivial_module(in.alg, dg::unit_complex(), "Q");
  return in;
}

std::string ranks_str(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Report cmd_bar_resolve(const RunConfig& cfg, const DgInput& in) {
  Report r;
  const std::size_t L = cfg.trunc ? cfg.trunc : 5;
  r.header("algebra", in.alg->name());
  r.header("module", in.M->name + " dim " + std::to_string(in.M->M->dim()));
  r.header("trunc", std::to_string(L));
  r.merge(bar::validate_algebra(*in.alg));
  r.merge(bar::validate_module(*in.M));
  const auto T = bar::codescent(in.M, L);
  r.merge(T->bar().validate());
  r.merge(T->validate());
  r.merge(bar::check_bar_lali(*T));
  const std::size_t a = in.alg->complex()->dim(), abar = in.alg->reduced()->dim(), m = in.M->M->dim();
  std::size_t expected = a * m;
  for (std::size_t n = 0; n <= L; ++n, expected *= abar) {
    const std::size_t got = T->normalized(n)->dim();
    const std::size_t by_rank = bar::normalized_dim_by_rank(T->bar(), static_cast<int>(n));
    const std::string at = "level " + std::to_string(n);
    r.check("bar.normalized_dim", at, got == expected && by_rank == expected, [&] {
      return std::pair{std::to_string(got) + " (by rank " + std::to_string(by_rank) + ")", std::to_string(expected)};
    });
    r.row("level", {{"n", std::to_string(n)},
                    {"normalized_dim", std::to_string(got)},
                    {"expected", std::to_string(expected)}});
  }
  // Degrees within L of the bottom of M are unaffected by the truncation.
  const auto supp = in.M->M->support();
  const int lo = supp.empty() ? 0 : supp.front();
  const int hi = lo + static_cast<int>(L) - 1;
  std::vector<std::size_t> ranks;
  for (const auto& [deg, rank] : dg::homology_ranks(*T->total(), lo, hi)) {
    ranks.push_back(rank);
    r.row("homology", {{"degree", std::to_string(deg)}, {"rank", std::to_string(rank)}});
  }
  r.header("homology", "degrees " + std::to_string(lo) + ".." + std::to_string(hi) + " " + ranks_str(ranks));
  return r;
}

Report cmd_dg_check(const RunConfig& cfg, const std::string& builtin, int gen_degree, std::size_t trials,
                    std::size_t max_dim) {
  Report r;
  const std::size_t L = cfg.trunc ? cfg.trunc : 4;
  std::vector<bar::AlgebraPtr> algs;
  if (builtin == "all") algs = {bar::rationals(), bar::dual_numbers(), bar::exterior(1)};
  else algs = {bar::builtin_algebra(builtin, gen_degree)};
  r.header("trunc", std::to_string(L));
  r.header("trials", std::to_string(trials) + " per algebra");
  r.header("max_dim", std::to_string(max_dim));
  dg::Rng rng(cfg.seed);
  for (const auto& A : algs) r.merge(bar::weak_law_suite(rng, A, trials, max_dim, L));
  return r;
}

bar::ULali ulali_input(const RunConfig& cfg, const std::string& ulali_file, const DgInput& in) {
  if (!ulali_file.empty()) return bar::ulali_from_json(fincat::read_json_file(ulali_file));
  dg::Rng rng(cfg.seed);
  return bar::acyclic_fibration_ulali(rng, in.M);
}

Report cmd_lift(const RunConfig& cfg, const bar::ULali& u) {
  const std::size_t L = cfg.trunc ? cfg.trunc : 4;
  Report r;
  r.header("algebra", u.A->alg().name());
  r.header("trunc", std::to_string(L));
  r.header("dims", "B " + std::to_string(u.B->module()->M->dim()) + ", A " + std::to_string(u.A->module()->M->dim()));
  const Report input = bar::validate_ulali(u);
  r.merge(input);
  if (!input.ok()) return r;
  r.merge(bar::lift_ulali(u, L).report);
  return r;
}

Report cmd_factor(const RunConfig& cfg, const bar::ULali& u) {
  const std::size_t L = cfg.trunc ? cfg.trunc : 4;
  Report r;
  r.header("algebra", u.A->alg().name());
  r.header("trunc", std::to_string(L));
  const Report input = bar::validate_ulali(u);
  r.merge(input);
  if (!input.ok()) return r;
  const auto T = bar::codescent(u.A->module(), L);
  r.merge(bar::free_ulali_factor(u, *T).report);
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak maps workbench: exact checks for weak factorisation systems and bar resolutions", "weakmaps"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub, bool finset, bool trunc) {
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", cfg.seed, "seed for the random suites");
    if (finset) sub->add_option("--finset-max", cfg.finset_max, "largest finite set in the fragment")->check(CLI::PositiveNumber);
    if (trunc) sub->add_option("--trunc", cfg.trunc, "truncation level L")->check(CLI::PositiveNumber);
  };

  std::string as, category_file;
  auto* validate = app.add_subcommand("validate", "check the laws of category, comonad, monad, algebra or module files");
  validate->add_option("files", cfg.inputs, "JSON instance files")->required();
  validate->add_option("--as", as, "category, comonad, monad, algebra or module")
      ->check(CLI::IsMember({"category", "comonad", "monad", "algebra", "module"}));
  validate->add_option("--category", category_file, "category for table comonads and monads");
  common(validate, true, false);

  auto* awfs_cmd = app.add_subcommand("awfs", "algebraic weak factorisation systems");
  awfs_cmd->require_subcommand(1);
  auto* awfs_check = awfs_cmd->add_subcommand("check", "every AWFS law over the finite sets up to --finset-max");
  std::string awfs_builtin = "splitepi", comonad;
  std::size_t square_max = 2;
  awfs_check->add_option("--builtin", awfs_builtin, "splitepi or psplit");
  awfs_check->add_option("--comonad", comonad, "identity or coreader:S=<n> (psplit only)");
  awfs_check->add_option("--square-max", square_max, "largest set in the composable squares checked for functoriality");
  common(awfs_check, true, false);

  auto* wm_cmd = app.add_subcommand("weakmaps", "the category of weak maps");
  wm_cmd->require_subcommand(1);
  auto* compare = wm_cmd->add_subcommand("compare", "Kleisli homs against bounded span classes");
  std::string cmp_comonad = "identity";
  std::optional<std::size_t> size_a, size_b;
  compare->add_option("--comonad", cmp_comonad, "identity or coreader:S=<n>");
  compare->add_option("--A", size_a, "size of the domain");
  compare->add_option("--B", size_b, "size of the codomain");
  compare->add_option("--bound", cfg.bound, "largest span apex")->check(CLI::PositiveNumber);
  compare->add_option("--zigzag", cfg.zigzag, "longest zigzag")->check(CLI::PositiveNumber);
  common(compare, true, false);

  std::string builtin = "dual_numbers", algebra_file, module_file, ulali_file;
  int gen_degree = 1;
  auto dg_opts = [&](CLI::App* sub, bool files) {
    sub->add_option("--builtin", builtin, "rationals, dual_numbers or exterior");
    sub->add_option("--gen-degree", gen_degree, "degree of the exterior generator");
    if (files) {
      sub->add_option("--algebra", algebra_file, "algebra file");
      sub->add_option("--module", module_file, "module file (default: Q through the augmentation)");
    }
  };

  auto* bar_cmd = app.add_subcommand("bar", "bar resolutions");
  bar_cmd->require_subcommand(1);
  auto* resolve = bar_cmd->add_subcommand("resolve", "codescent dimensions, homology and the bar lali");
  dg_opts(resolve, true);
  common(resolve, false, true);

  auto* dg_cmd = app.add_subcommand("dg", "weak maps of dg-modules");
  dg_cmd->require_subcommand(1);
  auto* dg_check = dg_cmd->add_subcommand("check", "dg-category laws on seeded random weak maps");
  std::size_t trials = 20, max_dim = 3;
  dg_opts(dg_check, false);
  dg_check->add_option("--trials", trials, "instances per algebra")->check(CLI::PositiveNumber);
  dg_check->add_option("--max-dim", max_dim, "largest module dimension")->check(CLI::PositiveNumber);
  common(dg_check, false, true);

  auto* lift_cmd = app.add_subcommand("lift", "lifting lalis along J");
  lift_cmd->require_subcommand(1);
  auto* lift = lift_cmd->add_subcommand("lali", "lift a U-lali to a lali of weak maps");
  auto* factor_cmd = app.add_subcommand("factor", "factorisation through the free U-lali");
  factor_cmd->require_subcommand(1);
  auto* factor = factor_cmd->add_subcommand("ulali", "the mediating map out of QA");
  for (auto* sub : {lift, factor}) {
    dg_opts(sub, true);
    sub->add_option("--ulali", ulali_file, "U-lali file (default: a seeded acyclic fibration onto the module)");
    common(sub, false, true);
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Report report;
  try {
    if (validate->parsed()) {
      cfg.command = "validate";
      report = cmd_validate(cfg, as, category_file);
    } else if (awfs_check->parsed()) {
      cfg.command = "awfs check";
      report = cmd_awfs_check(cfg, awfs_builtin, comonad, square_max);
    } else if (compare->parsed()) {
      cfg.command = "weakmaps compare";
      report = cmd_compare(cfg, cmp_comonad, size_a, size_b);
    } else if (resolve->parsed()) {
      cfg.command = "bar resolve";
      report = cmd_bar_resolve(cfg, dg_input(builtin, gen_degree, algebra_file, module_file));
    } else if (dg_check->parsed()) {
      cfg.command = "dg check";
      report = cmd_dg_check(cfg, builtin == "dual_numbers" && !dg_check->count("--builtin") ? "all" : builtin,
                            gen_degree, trials, max_dim);
    } else if (lift->parsed() || factor->parsed()) {
      cfg.command = lift->parsed() ? "lift lali" : "factor ulali";
      const bar::ULali u =
          ulali_input(cfg, ulali_file, ulali_file.empty() ? dg_input(builtin, gen_degree, algebra_file, module_file)
                                                          : DgInput{});
      report = lift->parsed() ? cmd_lift(cfg, u) : cmd_factor(cfg, u);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Report full;
  full.header("command", cfg.command);
  full.header("seed", std::to_string(cfg.seed));
  full.merge(report);
  if (cfg.format == "json") out << full.json().dump(2) << '\n';
  else out << full.text();
  return full.ok() ? 0 : 1;
}

}  // namespace wm::cli
