#include "cli.hpp"

#include "json_io.hpp"
#include "sampling.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

namespace ccomp::cli {

namespace {

struct Options {
  std::string input;
  std::optional<double> epsilon;
  std::optional<double> tol_rank;
  std::optional<double> tol_angle;
  std::string format = "json";
  std::string emit;
  std::uint64_t seed = 0;
  bool zero_form = false;
  bool antisymmetric = false;
  bool contraction = false;
  std::string name;
  long long level = 1;
  std::string window = "symmetric";
  long long ambient = 3;
  long long dim_m = -1;
  long long dim_n = -1;
};

TolerancePolicy base_policy() {
  const char* env = std::getenv(kProfileEnv);
  if (env == nullptr || *env == '\0') return TolerancePolicy{};
  return tolerance_profile(env);
}

void apply_flags(TolerancePolicy& tol, const Options& o) {
  if (o.tol_rank) tol.rank_rel = *o.tol_rank;
  if (o.tol_angle) tol.angle_tol = *o.tol_angle;
  tol.validate();
}

PairInput load(const Options& o) {
  TolerancePolicy base = base_policy();
  apply_flags(base, o);
  PairInput in = load_pair_input(o.input, base);
  // flags win over the document
  apply_flags(in.tol, o);
  if (o.epsilon) in.epsilon = o.epsilon;
  return in;
}

void write_report(const Json& report, const Options& o, std::ostream& out) {
  out << (o.format == "text" ? dump_text(report) : dump_json(report));
}

void write_file(const std::string& path, const Json& doc) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::Input, "cannot write certificate file '" + path + "'");
  f << dump_json(doc);
  if (!f) fail(ErrorKind::Input, "failed writing certificate file '" + path + "'");
}

Json header(const char* command, const PairInput& in) {
  Json j = Json::object();
  j["command"] = command;
  j["ambient_dim"] = in.ambient_dim;
  j["dim_M"] = in.at("M").dim();
  j["dim_N"] = in.at("N").dim();
  return j;
}

Json corners_json(const PairDecomposition& d) {
  Json c = Json::object();
  c["M_cap_N"] = d.dim_MN;
  c["M_cap_Nperp"] = d.dim_M_Nperp;
  c["Mperp_cap_N"] = d.dim_Mperp_N;
  c["Mperp_cap_Nperp"] = d.dim_Mperp_Nperp;
  return c;
}

Json certificate_json(const ComplementCertificate& c) {
  Json j = Json::object();
  j["dim_K"] = c.K.dim();
  j["min_basis_sv_M"] = c.min_basis_sv_M;
  j["min_basis_sv_N"] = c.min_basis_sv_N;
  j["inverse_residual"] = c.inverse_residual;
  j["K"] = subspace_to_json(c.K);
  j["P_M_along_K"] = matrix_to_json(c.P_M_along_K);
  j["P_N_along_K"] = matrix_to_json(c.P_N_along_K);
  return j;
}

// Self-contained document accepted by `certify`.
Json certificate_document(const PairInput& in, const ComplementCertificate& c,
                          const std::optional<Matrix>& s) {
  Json doc = Json::object();
  doc["ambient_dim"] = in.ambient_dim;
  Json subs = Json::object();
  subs["M"] = subspace_to_json(in.at("M"));
  subs["N"] = subspace_to_json(in.at("N"));
  subs["K"] = subspace_to_json(c.K);
  doc["subspaces"] = std::move(subs);
  if (s) doc["S"] = matrix_to_json(*s);
  doc["tolerances"] = tolerances_to_json(in.tol);
  Json summary = Json::object();
  summary["min_basis_sv_M"] = c.min_basis_sv_M;
  summary["min_basis_sv_N"] = c.min_basis_sv_N;
  summary["inverse_residual"] = c.inverse_residual;
  doc["certificate"] = std::move(summary);
  return doc;
}

Json graph_form_json(const GraphForm& f) {
  Json j = Json::object();
  j["dim_X1"] = f.dim_X1;
  j["dim_X2"] = f.dim_X2;
  j["cond_U"] = f.cond_U;
  j["T"] = matrix_to_json(f.T);
  j["S"] = matrix_to_json(f.S);
  j["U"] = matrix_to_json(f.U);
  return j;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const PairInput in = load(o);
  const PositionReport r = classify(in.at("M"), in.at("N"), in.tol);
  Json j = header("classify", in);
  j["corners"] = corners_json(r.decomposition);
  j["generic_multiplicity"] = r.decomposition.generic_mult;
  j["angles"] = vector_to_json(r.decomposition.angles);
  j["gram_spectrum"] = vector_to_json(r.decomposition.gram_spectrum);
  j["generic_position"] = r.generic_position;
  j["generalized_generic_position"] = r.generalized_generic;
  j["position_p_prime"] = r.position_p_prime;
  j["equivalently_positioned"] = r.equivalently_positioned;
  j["dims_equal"] = r.dims_equal;
  j["reduced_dims_equal"] = r.reduced_dims_equal;
  j["tolerances"] = tolerances_to_json(in.tol);
  write_report(j, o, out);
  return kExitOk;
}

int cmd_angles(const Options& o, std::ostream& out) {
  const PairInput in = load(o);
  const Subspace& m = in.at("M");
  const Subspace& n = in.at("N");
  Json j = header("angles", in);
  j["principal_angles"] = vector_to_json(principal_angles(m, n));
  j["angles_padded_M"] = vector_to_json(principal_angles_padded(m, n));
  j["angles_padded_N"] = vector_to_json(principal_angles_padded(n, m));
  j["sines_padded_M"] = vector_to_json(principal_sines_padded(m, n));
  j["sines_padded_N"] = vector_to_json(principal_sines_padded(n, m));
  j["subspace_distance"] = subspace_distance(m, n);
  j["margin"] = sum_closedness_margin(m, n, in.tol);
  write_report(j, o, out);
  return kExitOk;
}

int cmd_decide(const Options& o, std::ostream& out) {
  const PairInput in = load(o);
  const Subspace& m = in.at("M");
  const Subspace& n = in.at("N");
  const ComplementDecision d =
      in.epsilon ? has_common_complement(m, n, *in.epsilon, in.tol)
                 : has_common_complement(m, n, in.tol);
  const double eps = d.cross_checks.epsilon;
  const SpectralCountResult lt = lauzon_treil_check(m, n, eps, in.tol);
  const ConeReport cone = cone_report(m, n, eps, in.tol);

  Json j = header("decide", in);
  j["decision"] = d.decision;
  j["epsilon"] = eps;
  j["epsilon_source"] = in.epsilon ? "explicit" : "default";
  Json cc = Json::object();
  cc["dims_equal"] = d.cross_checks.dims_equal;
  cc["equivalently_positioned"] = d.cross_checks.equivalently_positioned;
  cc["spectral_count"] = d.cross_checks.spectral_count;
  cc["cone_codimension"] = d.cross_checks.cone_codimension;
  cc["reduced_dims_equal"] = d.cross_checks.reduced_dims_equal;
  j["cross_checks"] = std::move(cc);
  Json sc = Json::object();
  sc["left_count"] = lt.left_count;
  sc["right_count"] = lt.right_count;
  sc["spectral_count"] = lt.spectral_count;
  j["spectral_counts"] = std::move(sc);
  Json cj = Json::object();
  cj["max_subspace_dim_M"] = cone.max_subspace_dim_M;
  cj["max_subspace_dim_N"] = cone.max_subspace_dim_N;
  cj["ulc_M"] = cone.ulc_M;
  cj["ulc_N"] = cone.ulc_N;
  j["cone"] = std::move(cj);
  write_report(j, o, out);
  return d.decision ? kExitOk : kExitDecisionFalse;
}

int cmd_complement(const Options& o, std::ostream& out) {
  const PairInput in = load(o);
  const Subspace& m = in.at("M");
  const Subspace& n = in.at("N");
  Json j = header("complement", in);
  if (m.dim() != n.dim()) {
    j["decision"] = false;
    write_report(j, o, out);
    return kExitDecisionFalse;
  }
  ComplementCertificate c;
  if (in.U_map) {
    if (!in.C) fail(ErrorKind::Input, "U_map given without the bound \"C\"");
    c = projection_from_isomorphism(m, n, *in.U_map, *in.C, in.tol);
    j["method"] = "isomorphism";
  } else {
    c = common_complement(m, n, in.tol);
    j["method"] = "symmetry-axis";
  }
  j["decision"] = true;
  j["certificate"] = certificate_json(c);
  if (!o.emit.empty()) write_file(o.emit, certificate_document(in, c, std::nullopt));
  write_report(j, o, out);
  return kExitOk;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const PairInput in = load(o);
  const ComplementCertificate c =
      verify_common_complement(in.at("M"), in.at("N"), in.at("K"), in.tol);
  Json j = header("certify", in);
  j["valid"] = true;
  j["dim_K"] = c.K.dim();
  j["min_basis_sv_M"] = c.min_basis_sv_M;
  j["min_basis_sv_N"] = c.min_basis_sv_N;
  j["inverse_residual"] = c.inverse_residual;
  write_report(j, o, out);
  return kExitOk;
}

int cmd_graph_form(const Options& o, std::ostream& out) {
  if (int(o.zero_form) + int(o.antisymmetric) + int(o.contraction) > 1) {
    fail(ErrorKind::Input, "graph-form: choose at most one of --zero-form, --antisymmetric, "
                           "--contraction");
  }
  const PairInput in = load(o);
  const Subspace& m = in.at("M");
  const Subspace& n = in.at("N");
  const Subspace* k = in.find("K");
  Json j = header("graph-form", in);
  GraphForm f;
  if (o.contraction) {
    const ContractionForm cf = contraction_graph_form(m, n, in.tol);
    f = cf.form;
    j["variant"] = "contraction";
    j["injectivity_margin"] = cf.injectivity_margin;
    j["position_p_prime"] = cf.position_p_prime;
  } else if (o.zero_form) {
    f = k ? zero_graph_form(m, n, *k, in.tol) : zero_graph_form(m, n, in.tol);
    j["variant"] = "zero";
  } else if (o.antisymmetric) {
    f = k ? antisymmetric_graph_form(m, n, *k, in.tol) : antisymmetric_graph_form(m, n, in.tol);
    j["variant"] = "antisymmetric";
  } else {
    f = k ? graph_pair_form(m, n, *k, in.tol)
          : graph_pair_form(m, n, common_complement(m, n, in.tol).K, in.tol);
    j["variant"] = "general";
  }
  if (!o.contraction) j["K_source"] = k ? "input" : "constructed";
  const GraphResiduals r = graph_form_residuals(m, n, f, in.tol);
  j["form"] = graph_form_json(f);
  j["distance_M"] = r.distance_M;
  j["distance_N"] = r.distance_N;
  write_report(j, o, out);
  return kExitOk;
}

Json involution_json(const InvolutionCertificate& c) {
  Json j = Json::object();
  if (c.C > 0.0) j["C"] = c.C;  // only known when the form was constructed here
  j["involution_residual"] = c.involution_residual;
  j["exchange_residual"] = c.exchange_residual;
  j["lower_bound_attained"] = c.lower_bound_attained;
  j["projection_residual"] = c.projection_residual;
  j["dim_K_plus"] = c.K_plus.dim();
  j["dim_K_minus"] = c.K_minus.dim();
  j["S"] = matrix_to_json(c.S);
  return j;
}

int cmd_involution(const Options& o, std::ostream& out) {
  const PairInput in = load(o);
  const Subspace& m = in.at("M");
  const Subspace& n = in.at("N");
  const Subspace* k = in.find("K");
  const InvolutionCertificate c =
      k ? involution_for_pair(m, n, *k, in.tol) : involution_for_pair(m, n, in.tol);
  Json j = header("involution", in);
  j["K_source"] = k ? "input" : "constructed";
  j["involution"] = involution_json(c);
  if (!o.emit.empty()) {
    const ComplementCertificate cc = complement_from_involution(m, n, c.S, in.tol);
    write_file(o.emit, certificate_document(in, cc, c.S));
  }
  write_report(j, o, out);
  return kExitOk;
}

int cmd_from_involution(const Options& o, std::ostream& out) {
  const PairInput in = load(o);
  if (!in.S) fail(ErrorKind::Input, "from-involution: input needs a matrix \"S\"");
  const Subspace& m = in.at("M");
  const Subspace& n = in.at("N");
  const ComplementCertificate c = complement_from_involution(m, n, *in.S, in.tol);
  const InvolutionCertificate ic = inspect_involution(m, n, *in.S, in.tol);
  Json j = header("from-involution", in);
  j["involution"] = involution_json(ic);
  j["certificate"] = certificate_json(c);
  if (!o.emit.empty()) write_file(o.emit, certificate_document(in, c, in.S));
  write_report(j, o, out);
  return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const PairInput in = load(o);
  const Subspace& m = in.at("M");
  const Subspace& n = in.at("N");
  const ReducedPair r = reduce_pair(m, n, in.tol);
  Json j = header("reduce", in);
  j["dim_M1"] = r.M1.dim();
  j["dim_N1"] = r.N1.dim();
  j["dim_L"] = r.L.dim();
  j["decision"] = has_common_complement(m, n, in.tol).decision;
  j["reduced_decision"] = has_common_complement(r.M1, r.N1, in.tol).decision;
  j["M1"] = subspace_to_json(r.M1);
  j["N1"] = subspace_to_json(r.N1);
  j["L"] = subspace_to_json(r.L);
  write_report(j, o, out);
  return kExitOk;
}

int cmd_ortho(const Options& o, std::ostream& out) {
  const PairInput in = load(o);
  const OrthocomplementCheck r = orthocomplement_common_complement(in.at("M"), in.at("N"), in.tol);
  Json j = header("ortho-complement-check", in);
  j["holds"] = r.holds;
  j["surjectivity_margin"] = r.surjectivity_margin;
  if (r.contraction) j["contraction"] = matrix_to_json(*r.contraction);
  if (r.form) j["form"] = graph_form_json(*r.form);
  write_report(j, o, out);
  return r.holds ? kExitOk : kExitDecisionFalse;
}

int cmd_closed_companion(const Options& o, std::ostream& out) {
  const PairInput in = load(o);
  const ClosedCompanion c =
      closed_companion(in.at("M"), in.at("N"), in.at("K"), in.at("M1"), in.tol);
  Json j = header("closed-companion", in);
  j["dim_M1"] = in.at("M1").dim();
  j["dim_N1"] = c.N1.dim();
  if (c.C > 0.0) j["C"] = c.C;  // only known when the form was constructed here
  j["inverse_norm"] = c.inverse_norm;
  j["C_prime"] = c.C_prime;
  j["attained"] = c.attained;
  j["inequality_holds"] = c.attained >= c.C_prime * (1.0 - kCertificateTol);
  j["N1"] = subspace_to_json(c.N1);
  write_report(j, o, out);
  return kExitOk;
}

int cmd_example(const Options& o, std::ostream& out) {
  if (o.window != "symmetric" && o.window != "asymmetric") {
    fail(ErrorKind::Input, "--window must be 'symmetric' or 'asymmetric'");
  }
  if (o.level < 1) fail(ErrorKind::Input, "--level must be at least 1");
  TolerancePolicy tol = base_policy();
  apply_flags(tol, o);
  const ShiftWindow w = o.window == "symmetric" ? ShiftWindow::Symmetric : ShiftWindow::Asymmetric;
  const TruncatedExample ex = make_example(o.name, static_cast<Index>(o.level), w, tol);

  Json j = Json::object();
  j["command"] = "example";
  j["name"] = ex.name;
  j["level"] = ex.level;
  j["ambient_dim"] = ex.ambient_dim;
  if (ex.name == "shift-triple") j["window"] = o.window;
  Json dims = Json::object();
  for (const auto& [key, s] : ex.subspaces) dims[key] = s.dim();
  j["dims"] = std::move(dims);
  if (!ex.diagnostics.empty()) j["margin"] = ex.diagnostics.front().margin;
  Json pairs = Json::array();
  for (const PairDiagnostics& d : ex.diagnostics) {
    Json p = Json::object();
    p["pair"] = d.first + "," + d.second;
    p["dim_first"] = d.dim_first;
    p["dim_second"] = d.dim_second;
    p["decision"] = d.decision;
    p["margin"] = d.margin;
    Json c = Json::object();
    c["M_cap_N"] = d.dim_MN;
    c["M_cap_Nperp"] = d.dim_M_Nperp;
    c["Mperp_cap_N"] = d.dim_Mperp_N;
    c["Mperp_cap_Nperp"] = d.dim_Mperp_Nperp;
    p["corners"] = std::move(c);
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);
  Json notes = Json::array();
  for (const auto& s : ex.notes) notes.push_back(s);
  j["notes"] = std::move(notes);
  write_report(j, o, out);
  return kExitOk;
}

int cmd_sample_pair(const Options& o, std::ostream& out) {
  if (o.ambient < 0) fail(ErrorKind::Input, "--ambient-dim must be nonnegative");
  const Index n = static_cast<Index>(o.ambient);
  if (o.dim_m > o.ambient || o.dim_n > o.ambient) {
    fail(ErrorKind::Input, "--dim-m/--dim-n exceed the ambient dimension");
  }
  Sampler s(o.seed);
  const Index dm = o.dim_m >= 0 ? static_cast<Index>(o.dim_m) : s.uniform(0, n);
  const Index dn = o.dim_n >= 0 ? static_cast<Index>(o.dim_n) : s.uniform(0, n);
  Json doc = Json::object();
  doc["ambient_dim"] = n;
  Json subs = Json::object();
  subs["M"] = matrix_to_json(s.gaussian(n, dm).transpose());
  subs["N"] = matrix_to_json(s.gaussian(n, dn).transpose());
  doc["subspaces"] = std::move(subs);
  write_report(doc, o, out);
  return kExitOk;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input:
    case ErrorKind::Precondition:
      return kExitInput;
    case ErrorKind::NumericalFailure:
      return kExitNumerical;
    case ErrorKind::NoComplement:
      return kExitDecisionFalse;
    case ErrorKind::InvalidCertificate:
    case ErrorKind::InvalidInvolution:
      return kExitInvalidCertificate;
  }
  return kExitNumerical;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Common complements of subspace pairs", "ccomp"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", o.input, "pair JSON document")->required();
    sub->add_option("--epsilon", o.epsilon, "spectral cut-off in (0,1)");
    sub->add_option("--tol-rank", o.tol_rank, "relative rank tolerance");
    sub->add_option("--tol-angle", o.tol_angle, "angle tolerance (radians)");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const Options&, std::ostream&);
  };
  const Entry entries[] = {
      {"classify", "corner dimensions, angles and position flags", cmd_classify},
      {"angles", "principal angles", cmd_angles},
      {"decide", "does a common complement exist", cmd_decide},
      {"complement", "construct a common complement", cmd_complement},
      {"certify", "verify that K is a common complement", cmd_certify},
      {"graph-form", "graph-pair normal form", cmd_graph_form},
      {"involution", "involution exchanging M and N", cmd_involution},
      {"from-involution", "common complement from an involution S", cmd_from_involution},
      {"reduce", "split off M ∩ N", cmd_reduce},
      {"ortho-complement-check", "is M⊥ a common complement", cmd_ortho},
      {"closed-companion", "companion N1 with closed sum", cmd_closed_companion},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> subs;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, true);
    subs.emplace_back(sub, e.fn);
  }
  CLI::App* graph = subs[5].first;
  graph->add_flag("--zero-form", o.zero_form, "form with T = 0");
  graph->add_flag("--antisymmetric", o.antisymmetric, "form with S = -T");
  graph->add_flag("--contraction", o.contraction, "orthogonal U with a contraction T");
  for (std::size_t i : {3u, 6u, 7u}) {
    subs[i].first->add_option("--emit-certificate", o.emit, "write a certificate to PATH");
  }

  CLI::App* example = app.add_subcommand("example", "finite truncations of classical pairs");
  add_common(example, false);
  example->add_option("--name", o.name, "nonclosed-sum | shift-triple | hexagonal")->required();
  example->add_option("--level", o.level, "truncation level");
  example->add_option("--window", o.window, "shift-triple window: symmetric | asymmetric");
  subs.emplace_back(example, cmd_example);

  CLI::App* sample = app.add_subcommand("sample-pair", "seeded random pair (test support)");
  sample->add_option("--seed", o.seed)->required();
  sample->add_option("--ambient-dim", o.ambient);
  sample->add_option("--dim-m", o.dim_m);
  sample->add_option("--dim-n", o.dim_n);
  sample->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  subs.emplace_back(sample, cmd_sample_pair);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    for (const auto& [sub, fn] : subs) {
      if (sub->parsed()) return fn(o, out);
    }
    err << "error: no subcommand\n";
    return kExitInput;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "input-error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "numerical-failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace ccomp::cli
