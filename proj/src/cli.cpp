#include "rtorsion/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <optional>
#include <sstream>

#include "rtorsion/analytic_circle.hpp"
#include "rtorsion/io.hpp"
#include "rtorsion/spaces.hpp"
#include "rtorsion/torsion.hpp"

namespace rtorsion {

namespace {

struct GlobalOptions {
  double tol = kDefaultTolerance;
  std::string format = "json";
};

std::vector<std::string> homology_strings(const IntegerComplex& c) {
  std::vector<std::string> out;
  for (const auto& h : integral_homology(c)) out.push_back(h.to_string());
  return out;
}

double relative_difference(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

// --- complex ---------------------------------------------------------------

struct ComplexArgs {
  std::string file;
  std::string rep;
  std::string method = "all";
  bool diagnostics = false;
};

Json cmd_complex(const ComplexArgs& args, const GlobalOptions& g) {
  const AnyComplex any = complex_from_json(read_json_file(args.file));
  std::optional<Representation> rep;
  if (!args.rep.empty()) rep = Representation::parse(args.rep);

  Json out;
  std::optional<ComplexChainComplex> cc;
  Ambiguity ambiguity = Ambiguity::sign_only();
  if (const auto* gr = std::get_if<GroupRingComplex>(&any)) {
    if (!rep) throw std::invalid_argument("--rep is required for group ring complexes");
    require_valid(*gr);
    cc = specialize(*gr, *rep);
    if (gr->modulus() >= 1) ambiguity = Ambiguity::mod_sign_and_powers(gr->modulus(), rep->value());
    out["representation"] = to_json(*rep);
    out["integral_homology"] = homology_strings(specialize_to_integers(*gr));
  } else {
    if (rep) throw std::invalid_argument("--rep applies to group ring complexes only");
    if (const auto* ic = std::get_if<IntegerComplex>(&any)) {
      require_valid(*ic);
      cc = to_complex(*ic);
      out["integral_homology"] = homology_strings(*ic);
    } else {
      cc = std::get<ComplexChainComplex>(any);
    }
  }
  require_valid(*cc);
  const ComplexChainComplex& c = *cc;
  out["ranks"] = c.ranks();
  const auto hranks = homology_ranks(c);
  out["homology_ranks"] = hranks;
  out["acyclic"] = std::all_of(hranks.begin(), hranks.end(), [](std::size_t h) { return h == 0; });

  const bool all = args.method == "all";
  Json torsions;
  std::optional<TorsionClass> milnor, contraction;
  std::optional<double> alternating, laplacian;
  if (all || args.method == "milnor") {
    std::vector<MilnorDegree> degrees;
    milnor = torsion_milnor(c, std::nullopt, {}, &degrees);
    torsions["milnor"] = to_json(milnor->coarsen(ambiguity), "milnor");
    if (args.diagnostics) {
      Json diag = Json::array();
      for (const auto& d : degrees)
        diag.push_back({{"degree", d.degree},
                        {"determinant", {{"re", d.determinant.real()}, {"im", d.determinant.imag()}}},
                        {"exponent", d.exponent}});
      out["diagnostics"]["milnor_degrees"] = diag;
    }
  }
  if (all || args.method == "contraction") {
    contraction = torsion_contraction(c);
    torsions["contraction"] = to_json(contraction->coarsen(ambiguity), "contraction");
  }
  if (all || args.method == "alternating") {
    alternating = torsion_alternating(c);
    torsions["alternating"] = real_torsion_json(*alternating, "alternating");
  }
  if (all || args.method == "laplacian") {
    const LaplacianTorsion lt = laplacian_torsion(c);
    laplacian = lt.value;
    torsions["laplacian"] = real_torsion_json(lt.value, "laplacian");
    std::vector<long long> dims;
    for (const auto& h : lt.harmonic.vectors) dims.push_back(h.cols());
    torsions["laplacian"]["harmonic_dimensions"] = dims;
  }
  if (args.diagnostics) {
    Json spectra = Json::array();
    for (const auto& d : hodge(c).degrees) {
      std::vector<double> eig(d.eigenvalues.data(), d.eigenvalues.data() + d.eigenvalues.size());
      spectra.push_back(eig);
    }
    out["diagnostics"]["laplacian_spectra"] = spectra;
  }
  out["torsions"] = torsions;

  if (all) {
    const double m = std::abs(milnor->value());
    double worst = 0.0;
    for (double v : {std::abs(contraction->value()), *alternating, *laplacian})
      worst = std::max(worst, relative_difference(m, v));
    const bool classes = class_equal(*milnor, *contraction, g.tol);
    out["agreement"] = {{"max_relative_difference", worst}, {"classes_equal", classes}, {"tolerance", g.tol}};
    if (worst > g.tol || !classes) {
      std::ostringstream os;
      os << "torsion algorithms disagree: max relative difference " << worst << ", milnor/contraction classes "
         << (classes ? "equal" : "differ");
      throw CrossCheckError(os.str());
    }
  }
  return out;
}

// --- lens ------------------------------------------------------------------

struct LensArgs {
  std::int64_t p = 0;
  std::vector<std::int64_t> q;
  std::optional<std::int64_t> eta;
  bool all_eta = false;
  bool profile = false;
};

Json lens_entry(const LensSpace& lens, std::int64_t k, double tol) {
  const Representation eta = Representation::root_of_unity(lens.p(), k);
  const TorsionClass closed = lens_torsion(lens, eta);
  const TorsionClass chain = torsion_milnor(specialize(lens_chain_complex(lens), eta)).coarsen(closed.ambiguity());
  if (!class_equal(closed, chain, tol))
    throw CrossCheckError("closed-form and chain-complex torsion of " + lens.to_string() + " differ at eta index " +
                          std::to_string(k));
  Json out = to_json(closed, "closed_form");
  out["k"] = k;
  return out;
}

Json cmd_lens(const LensArgs& args, const GlobalOptions& g) {
  const LensSpace lens(args.p, args.q);
  Json out;
  out["lens"] = to_json(lens);
  out["integral_homology"] = homology_strings(specialize_to_integers(lens_chain_complex(lens)));
  if (args.profile) {
    out["profile"] = torsion_profile(lens);
  } else if (args.eta) {
    out["torsion"] = lens_entry(lens, *args.eta, g.tol);
  } else {
    Json list = Json::array();
    for (std::int64_t k = 1; k < lens.p(); ++k) list.push_back(lens_entry(lens, k, g.tol));
    out["torsions"] = list;
  }
  return out;
}

// --- classify --------------------------------------------------------------

struct ClassifyArgs {
  std::int64_t p = 0;
  std::vector<std::int64_t> q1, q2;
  bool marked = false;
};

Json cmd_classify(const ClassifyArgs& args, const GlobalOptions& g) {
  const LensSpace a(args.p, args.q1);
  const LensSpace b(args.p, args.q2);
  const HomotopyVerdict h = homotopy_equivalent(a, b, args.marked);
  const SimpleHomotopyVerdict s = simple_homotopy_equivalent(a, b, args.marked);
  Json out{{"first", to_json(a)}, {"second", to_json(b)}, {"marked", args.marked}};
  out["homotopy"] = h.equivalent;
  out["witness_m"] = h.m ? Json(*h.m) : Json(nullptr);
  out["simple_homotopy"] = s.equivalent;
  if (s.witness)
    out["simple_witness"] = {{"m", s.witness->m}, {"permutation", s.witness->permutation}, {"signs", s.witness->signs}};
  else
    out["simple_witness"] = nullptr;
  if (a.n() == 2) {
    // L(p; q_1, q_2) = L(p; 1, q_2 / q_1) as a three-manifold.
    const std::int64_t qa = mod(a.q()[1] * inverse_mod(a.q()[0], a.p()), a.p());
    const std::int64_t qb = mod(b.q()[1] * inverse_mod(b.q()[0], b.p()), b.p());
    out["homeomorphic_3d"] = homeomorphic_3d(a.p(), qa, qb);
  } else {
    out["homeomorphic_3d"] = nullptr;
  }
  if (args.marked)
    out["profile_equal"] = profiles_equal(marked_torsion_profile(a), marked_torsion_profile(b), g.tol);
  else
    out["profile_equal"] = profiles_equal(torsion_profile(a), torsion_profile(b), g.tol);
  return out;
}

// --- circle ----------------------------------------------------------------

struct CircleArgs {
  double psi = 0.0;
  int cells = 1;
  bool compare = false;
};

Json cmd_circle(const CircleArgs& args, const GlobalOptions& g) {
  if (args.cells < 1) throw std::invalid_argument("--cells must be >= 1");
  const CircleBundle bundle(args.psi);
  const TorsionClass tau = torsion_milnor(circle_complex(args.cells, Representation::angle(bundle.psi())));
  Json out{{"psi", bundle.psi()}, {"cells", args.cells}};
  out["torsion"] = to_json(tau, "milnor");
  out["cellular"] = 1.0 / tau.modulus_squared();
  if (args.compare) {
    const CheegerMullerReport r = cheeger_muller_check(bundle, args.cells);
    out["det_laplacian"] = circle_det_laplacian(bundle);
    out["rs_torsion"] = r.analytic;
    out["rel_error"] = r.rel_error;
    if (r.rel_error > g.tol) {
      std::ostringstream os;
      os << "cellular and analytic torsion differ: relative error " << r.rel_error;
      throw CrossCheckError(os.str());
    }
  }
  return out;
}

// --- franz -----------------------------------------------------------------

Json cmd_franz(std::int64_t p, int bound) {
  return {{"p", p}, {"bound", bound}, {"residues", franz_residues(p)}, {"solutions", franz_search(p, bound)}};
}

// --- output ----------------------------------------------------------------

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_object(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

void emit(const Json& result, const GlobalOptions& g, std::ostream& out) {
  if (g.format == "json") {
    out << result.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(result, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [key, value] : rows) out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reidemeister torsion of based chain complexes, lens spaces and twisted circles"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--tol", g.tol, "relative tolerance for cross-checks")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "table"}));

  ComplexArgs complex_args;
  auto* complex_cmd = app.add_subcommand("complex", "torsion of a chain complex read from JSON");
  complex_cmd->add_option("--file", complex_args.file, "complex JSON file")->required();
  complex_cmd->add_option("--rep", complex_args.rep, "eta:P:K | angle:PSI | complex:RE,IM");
  complex_cmd->add_option("--method", complex_args.method)
      ->check(CLI::IsMember({"milnor", "contraction", "alternating", "laplacian", "all"}));
  complex_cmd->add_flag("--diagnostics", complex_args.diagnostics, "per-degree determinants and spectra");

  LensArgs lens_args;
  auto* lens_cmd = app.add_subcommand("lens", "torsion of L(p; q_1, ..., q_n)");
  lens_cmd->add_option("--p", lens_args.p)->required();
  lens_cmd->add_option("--q", lens_args.q)->required()->delimiter(',');
  auto* eta_opt = lens_cmd->add_option("--eta", lens_args.eta, "eta = exp(2 pi i K / p)");
  auto* all_opt = lens_cmd->add_flag("--all-eta", lens_args.all_eta);
  auto* profile_opt = lens_cmd->add_flag("--profile", lens_args.profile);
  eta_opt->excludes(all_opt)->excludes(profile_opt);
  all_opt->excludes(profile_opt);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "compare two lens spaces");
  classify_cmd->add_option("--p", classify_args.p)->required();
  classify_cmd->add_option("--q1", classify_args.q1)->required()->delimiter(',');
  classify_cmd->add_option("--q2", classify_args.q2)->required()->delimiter(',');
  classify_cmd->add_flag("--marked", classify_args.marked);

  CircleArgs circle_args;
  auto* circle_cmd = app.add_subcommand("circle", "torsion of the circle with holonomy angle psi");
  circle_cmd->add_option("--psi", circle_args.psi)->required();
  circle_cmd->add_option("--cells", circle_args.cells);
  circle_cmd->add_flag("--compare-analytic", circle_args.compare);

  std::int64_t franz_p = 0;
  int franz_bound = 0;
  auto* franz_cmd = app.add_subcommand("franz", "search for exponent vectors against Franz's lemma");
  franz_cmd->add_option("--p", franz_p)->required();
  franz_cmd->add_option("--bound", franz_bound)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Json result;
    if (*complex_cmd)
      result = cmd_complex(complex_args, g);
    else if (*lens_cmd)
      result = cmd_lens(lens_args, g);
    else if (*classify_cmd)
      result = cmd_classify(classify_args, g);
    else if (*circle_cmd)
      result = cmd_circle(circle_args, g);
    else
      result = cmd_franz(franz_p, franz_bound);
    emit(result, g, out);
    return kExitOk;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const CrossCheckError& e) {
    err << "cross-check failed: " << e.what() << '\n';
    return kExitCrossCheck;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace rtorsion
