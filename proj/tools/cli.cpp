#include "cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "p1/audit.hpp"
#include "p1/bundle_expr.hpp"
#include "p1/constructions.hpp"
#include "p1/error.hpp"
#include "p1/forms.hpp"
#include "p1/report.hpp"

namespace p1::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::uint64_t seed = 0;
  std::int64_t height = kDefaultHeight;
  std::string format = "text";
};

json number(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
  return json(p1::to_string(q));
}

json number(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(p1::to_string(z));
}

int cmd_eval(const Config& cfg, const std::string& text, const std::vector<std::string>& binds, std::ostream& out,
             std::ostream& err) {
  try {
    expr::Environment env;
    for (const auto& b : binds) {
      const auto eq = b.find('=');
      if (eq == std::string::npos || eq == 0) {
        err << "error: binding '" << b << "' is not of the form name=expr\n";
        return kUsage;
      }
      env.bind(b.substr(0, eq), expr::eval(std::string_view(b).substr(eq + 1), env));
    }
    const SheafSummary s = expr::eval(text, env);
    if (cfg.format == "json") {
      json j{{"sheaf", expr::format(s)},     {"rank", s.rank()},  {"deg", number(s.degree())},
             {"h0", number(h0(s))}, {"h1", number(h1(s))}, {"chi", number(chi(s))}};
      out << j.dump() << "\n";
    } else {
      out << expr::format(s) << "  rank=" << s.rank() << " deg=" << s.degree() << " h0=" << h0(s)
          << " h1=" << h1(s) << "\n";
      out << "chi=" << chi(s) << "\n";
    }
    return kOk;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int cmd_audit(const Config& cfg, const std::string& selection, std::ostream& out, std::ostream& err) {
  const auto sel = audit::parse_selection(selection);
  if (!sel) {
    err << "error: unknown audit selection '" << selection << "'\n";
    return kUsage;
  }
  const audit::AuditReport r = audit::run(*sel, cfg.seed);
  out << (cfg.format == "json" ? audit::to_json(r) : audit::to_text(r));
  switch (r.verdict) {
    case audit::Verdict::fail: return kFail;
    case audit::Verdict::inconclusive: return kInconclusive;
    default: return kOk;
  }
}

int cmd_sigma2(const Config& cfg, const std::string& stratum, std::ostream& out, std::ostream& err) {
  Sampled<GradedMap> s{GradedMap({}, {}), 0};
  try {
    s = stratum == "sharp" ? sigma2_sharp(cfg.seed, cfg.height) : sigma2_flat(cfg.seed, cfg.height);
  } catch (const GenericityError& e) {
    err << "error: " << e.what() << "\n";
    return kInconclusive;
  }
  const GradedMap& m = s.value;
  std::vector<std::size_t> ranks;
  for (const auto& p : kTauPoints) ranks.push_back(rank_at_point(m, p));
  const SheafSummary coker = cokernel_sheaf(m);

  if (cfg.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) {
        json c = json::array();
        for (const auto& q : m.coeffs(i, j)) c.push_back(number(q));
        row.push_back(std::move(c));
      }
      rows.push_back(std::move(row));
    }
    json j{{"stratum", stratum},
           {"seed_used", s.seed_used},
           {"source", expr::format(m.source())},
           {"target", expr::format(m.target())},
           {"entries", std::move(rows)},
           {"rank_tau", ranks},
           {"cokernel", expr::format(coker)}};
    out << j.dump() << "\n";
    return kOk;
  }
  out << "sigma2 (" << stratum << "), seed used " << s.seed_used << "\n";
  out << "source: " << expr::format(m.source()) << "\n";
  out << "target: " << expr::format(m.target()) << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "row " << i << ":";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << "  ";
      if (m.has_entry(i, j))
        out << m.entry(i, j);
      else
        out << "-";
    }
    out << "\n";
  }
  out << "rank at 0, 1, oo: " << ranks[0] << "," << ranks[1] << "," << ranks[2] << "\n";
  out << "cokernel: " << expr::format(coker) << "\n";
  return kOk;
}

struct FormsArgs {
  std::size_t trials = 8;
  std::uint64_t alpha_seed = 0, beta_seed = 0;
  std::vector<std::size_t> bidegree{2, 2};
  std::size_t count = 8;
};

int cmd_forms(const Config& cfg, const std::string& what, const FormsArgs& a, std::ostream& out, std::ostream& err) {
  try {
    if (what == "disc") {
      const DiscriminantFit fit = quartic_discriminant_identity(a.trials, cfg.seed);
      out << "u = " << p1::to_string(fit.u) << ", verified over " << fit.samples << " samples\n";
    } else if (what == "roots") {
      Rng ra(a.alpha_seed), rb(a.beta_seed);
      const BinaryForm alpha = random_form(3, ra, cfg.height);
      const BinaryForm beta = random_form(4, rb, cfg.height);
      const BinaryForm f = critical_value_form(alpha, beta);
      if (f.is_zero()) {
        err << "error: 256 beta^3 - 27 alpha^4 vanishes identically\n";
        return kInputError;
      }
      out << "distinct critical values: " << distinct_root_count(f) << "\n";
    } else {
      if (a.bidegree.size() != 2) {
        err << "error: --bidegree expects d1,d2\n";
        return kUsage;
      }
      Rng rng(cfg.seed);
      const auto pts = random_point_pairs(a.count, rng, 50);
      const std::size_t r = point_condition_rank(a.bidegree[0], a.bidegree[1], pts);
      const std::size_t dim = (a.bidegree[0] + 1) * (a.bidegree[1] + 1);
      out << "rank " << r << ", solution dim " << dim - r << "\n";
    }
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Splitting-type calculator and dimension-count auditor for bundles on P^1", "p1audit"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--seed", cfg.seed, "Seed for every general choice")->capture_default_str();
  app.add_option("--height", cfg.height, "Coefficient bound for random entries")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string expr_text;
  std::vector<std::string> binds;
  auto* eval = app.add_subcommand("eval", "Evaluate a bundle expression");
  eval->add_option("expr", expr_text, "Expression, e.g. \"Sym2(O(2)+O(2)+O(3))\"")->required();
  eval->add_option("-b,--bind", binds, "Binding name=expr (repeatable)");

  std::string selection = "all";
  bool all = false;
  auto* aud = app.add_subcommand("audit", "Run the dimension-count ledger");
  auto* all_flag = aud->add_flag("--all", all, "Run every group");
  aud->add_option("--select", selection, "all | ranks | sharp | flat | sp | m0")
      ->check(CLI::IsMember({"all", "ranks", "sharp", "flat", "sp", "m0"}))
      ->excludes(all_flag);

  std::string stratum = "sharp";
  auto* sig = app.add_subcommand("sigma2", "Build and inspect a seeded sigma2");
  sig->add_option("--stratum", stratum, "sharp | flat")->check(CLI::IsMember({"sharp", "flat"}))->capture_default_str();

  FormsArgs fa;
  auto* forms = app.add_subcommand("forms", "Binary-form computations");
  forms->require_subcommand(1);
  auto* disc = forms->add_subcommand("disc", "Fit disc(x^4 + a x + b) = u (256 b^3 - 27 a^4)");
  disc->add_option("--trials", fa.trials, "Number of samples (>= 6)")->capture_default_str();
  auto* roots = forms->add_subcommand("roots", "Distinct roots of 256 beta^3 - 27 alpha^4");
  roots->add_option("--alpha-seed", fa.alpha_seed)->capture_default_str();
  roots->add_option("--beta-seed", fa.beta_seed)->capture_default_str();
  auto* points = forms->add_subcommand("points", "Rank of point conditions on bihomogeneous forms");
  points->add_option("--bidegree", fa.bidegree, "d1,d2")->delimiter(',')->expected(2);
  points->add_option("--count", fa.count)->capture_default_str();
  for (auto* sub : {disc, roots, points}) sub->fallthrough();

  std::vector<char*> argv;
  std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"p1audit"} : args;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  if (*eval) return cmd_eval(cfg, expr_text, binds, out, err);
  if (*aud) return cmd_audit(cfg, all ? "all" : selection, out, err);
  if (*sig) return cmd_sigma2(cfg, stratum, out, err);
  if (*disc) return cmd_forms(cfg, "disc", fa, out, err);
  if (*roots) return cmd_forms(cfg, "roots", fa, out, err);
  return cmd_forms(cfg, "points", fa, out, err);
}

}  // namespace p1::cli
