#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "checks.hpp"
#include "hypercris/deligne_illusie.hpp"
#include "hypercris/kedlaya.hpp"
#include "hypercris/wach.hpp"

namespace hypercris::cli {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kCommands = {"validate", "zeta", "frobenius", "di", "phigamma", "selfcheck", "bench"};

json element(const ZqElement& e) {
  const int n = e.ring().degree();
  if (n == 1) return std::to_string(e.coord(0));
  json a = json::array();
  for (int k = 0; k < n; ++k) a.push_back(std::to_string(e.coord(k)));
  return a;
}

json matrix(const ZqMatrix& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(element(M(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json series(const TruncatedSeries& s) {
  json a = json::array();
  for (int k = 0; k < s.precision(); ++k) a.push_back(element(s[k]));
  return a;
}

json series_matrix(const SeriesMatrix& G) {
  json rows = json::array();
  for (int i = 0; i < G.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < G.cols(); ++j) row.push_back(series(G(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json curve_json(const HyperellipticCurve& X, const JobSpec& job) {
  json c;
  c["p"] = X.p;
  c["n"] = X.n;
  c["q"] = X.q();
  c["degree"] = X.d;
  c["genus"] = X.g;
  json co = json::array();
  for (const auto& v : job.coeffs) co.push_back(v.size() == 1 ? json(v[0]) : json(v));
  c["coeffs"] = co;
  json m = json::array();
  for (auto v : X.field.defining_polynomial()) m.push_back(v);
  c["field_modulus"] = m;
  return c;
}

int exit_for(const Error& e) {
  switch (error_class(e.kind())) {
    case ErrorClass::Validation:
      return kValidation;
    case ErrorClass::Precision:
      return kPrecision;
    case ErrorClass::Invariant:
      return kInvariant;
  }
  return kInvariant;
}

template <class F>
double median_seconds(int repeats, F body) {
  std::vector<double> t;
  for (int k = 0; k < std::max(1, repeats); ++k) {
    auto a = std::chrono::steady_clock::now();
    body();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - a).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

json gamma_document(const GammaMatrix& G, const SStructure& S, const std::vector<int>& r) {
  json d;
  d["G"] = series_matrix(G.G);
  json s;
  s["p"] = S.p;
  s["n"] = S.base.degree();
  s["precision"] = S.base.precision();
  s["t_precision"] = S.t_precision;
  s["chi"] = element(S.chi);
  s["gamma"] = series(S.gamma);
  s["phi"] = series(S.phi);
  s["alpha"] = series(S.alpha);
  d["s_structure"] = s;
  d["r"] = r;
  const bool divides = std::find(r.begin(), r.end(), 1) != r.end();
  d["precision"] = {{"i", G.p_precision},
                    {"j", G.t_precision},
                    {"i_work", G.working},
                    {"losses", divides ? G.t_precision - 1 : 0}};
  d["level_valuations"] = G.level_valuations;
  d["residual"] = {{"trivial_mod_T", G.report.trivial_mod_T},
                   {"commutes", G.report.commutes},
                   {"t_valuation", G.report.residual_t_valuation}};
  return d;
}

json command_result(const JobSpec& job, const HyperellipticCurve& X, std::ostream& err, int& code) {
  json res;
  const int i = job.prec_p, j = job.prec_T;
  if (job.command == "validate") {
    res["valid"] = true;
  } else if (job.command == "zeta") {
    ZetaResult z = zeta_function(X);
    res["L"] = z.L;
    res["q"] = z.q;
    res["precision"] = z.precision;
    json counts = json::array();
    for (int m = 1; m <= X.g; ++m) counts.push_back(count_from_lpolynomial(z.L, z.q, m));
    res["counts"] = counts;
  } else if (job.command == "frobenius") {
    if (job.method == "deligne-illusie") {
      if (i != 1) err << "note: the Deligne-Illusie method gives A mod p only; using i = 1\n";
      res["method"] = job.method;
      res["A"] = matrix(di_matrix(X));
      res["precision"] = {{"i", 1}};
    } else {
      KedlayaMatrix km;
      FilteredFrobeniusData ff = filtered_frobenius(X, i, &km);
      res["method"] = job.method;
      res["r"] = ff.r;
      res["labels"] = ff.labels;
      res["A"] = matrix(ff.A.reduce(X.ring(i)));
      res["M_ad"] = matrix(ff.M_ad.reduce(X.ring(i + 1)));
      res["M_ked_scaled"] = matrix(km.scaled.reduce(X.ring(km.plan.scale + km.plan.target)));
      res["precision"] = {{"i", i},
                          {"target", km.plan.target},
                          {"terms", km.plan.terms},
                          {"rule_terms", km.plan.rule_terms},
                          {"scale", km.plan.scale},
                          {"pole_loss", km.plan.e_pole},
                          {"degree_loss", km.plan.e_deg},
                          {"working", km.plan.working},
                          {"retries", km.retries}};
    }
  } else if (job.command == "di") {
    DeligneIllusieData D = deligne_illusie(X);
    res["A"] = matrix(D.A);
    res["u"] = json::array();
    for (int k = 0; k <= D.lift_U.u.degree(); ++k) res["u"].push_back(element(D.lift_U.u.coeff(k)));
    if (X.n == 1) res["hasse_witt"] = matrix(hasse_witt_classical(X));
  } else if (job.command == "phigamma") {
    const int iw = gamma_working_precision(i, j);
    SStructure S = build_s_structure(X.p, X.n, iw, std::max(j, 2));
    if (job.identity_override) {
      std::vector<int> r(2 * X.g, 0);
      GammaMatrix G = compute_gamma_matrix(ZqMatrix::identity(S.base, 2 * X.g), r, S, i, j);
      res = gamma_document(G, S, r);
      res["override"] = "A = I, r = 0";
    } else {
      FilteredFrobeniusData ff = filtered_frobenius(X, iw);
      res = gamma_document(compute_gamma_matrix(ff.A, ff.r, S, i, j), S, ff.r);
    }
  } else if (job.command == "selfcheck") {
    json list = json::array();
    bool ok = true;
    for (const auto& c : checks::all_invariants(X, i, j, job.seed)) {
      list.push_back({{"name", c.name}, {"pass", c.pass}, {"skipped", c.skipped}, {"detail", c.detail}});
      ok = ok && c.pass;
      if (!c.pass) err << "selfcheck: " << c.name << " failed: " << c.detail << "\n";
    }
    res["checks"] = list;
    res["pass"] = ok;
    if (!ok) code = kInvariant;
  }
  return res;
}

json bench(const JobSpec& job) {
  json rows = json::array();
  const int i = job.prec_p, j = job.prec_T;
  for (int g : job.genera) {
    HyperellipticCurve X = curve_family_member(job.p, g);
    json row;
    row["genus"] = g;
    row["coeffs"] = json::array();
    for (int k = 0; k <= X.P_bar.degree(); ++k) row["coeffs"].push_back(X.P_bar.coeff(k).coord(0));
    row["frobenius_s"] = median_seconds(job.repeats, [&] { filtered_frobenius(X, i); });
    row["di_s"] = median_seconds(job.repeats, [&] { di_matrix(X); });
    row["phigamma_s"] = median_seconds(job.repeats, [&] {
      compute_gamma_matrix(filtered_frobenius(X, gamma_working_precision(i, j)), i, j);
    });
    rows.push_back(row);
  }
  return {{"p", job.p}, {"i", i}, {"j", j}, {"repeats", job.repeats}, {"rows", rows}};
}

void check_job(const JobSpec& job) {
  if (std::find(kCommands.begin(), kCommands.end(), job.command) == kCommands.end())
    raise(ErrorKind::InvalidArgument, "unknown command '" + job.command + "'");
  if (job.prec_p < 1 || job.prec_T < 1) raise(ErrorKind::InvalidArgument, "prec_p and prec_T must be >= 1");
  if (job.method != "kedlaya" && job.method != "deligne-illusie")
    raise(ErrorKind::InvalidArgument, "method must be kedlaya or deligne-illusie");
  if (job.p == 0) raise(ErrorKind::InvalidArgument, "p is required");
  if (job.command != "bench" && job.coeffs.empty()) raise(ErrorKind::InvalidArgument, "coefficients are required");
}

}  // namespace

std::vector<std::vector<int64_t>> parse_poly(const std::string& s) {
  std::vector<std::vector<int64_t>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::vector<int64_t> c;
    std::stringstream is(item);
    std::string part;
    while (std::getline(is, part, ':')) {
      try {
        size_t used = 0;
        c.push_back(std::stoll(part, &used));
        if (used != part.size() && part.find_first_not_of(" \t", used) != std::string::npos)
          raise(ErrorKind::InvalidArgument, "bad coefficient '" + item + "'");
      } catch (const std::logic_error&) {
        raise(ErrorKind::InvalidArgument, "bad coefficient '" + item + "'");
      }
    }
    if (c.empty()) raise(ErrorKind::InvalidArgument, "empty coefficient in '" + s + "'");
    out.push_back(c);
  }
  return out;
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  json doc;
  doc["command"] = job.command;
  int code = kOk;
  try {
    check_job(job);
    if (job.command == "bench") {
      doc["result"] = bench(job);
    } else {
      HyperellipticCurve X = validate_curve(job.p, job.n, job.coeffs);
      doc["curve"] = curve_json(X, job);
      doc["result"] = command_result(job, X, err, code);
    }
  } catch (const Error& e) {
    code = exit_for(e);
    doc["error"] = {{"kind", error_name(e.kind())}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    code = kInvariant;
    doc["error"] = {{"kind", "Internal"}, {"message", e.what()}};
    err << "internal error: " << e.what() << "\n";
  }
  out << doc.dump(2) << "\n";
  return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hyperelliptic crystalline cohomology toolkit"};
  JobSpec flags;
  std::string poly, config, genera;
  app.add_option("command", flags.command, "validate | zeta | frobenius | di | phigamma | selfcheck | bench");
  auto* o_p = app.add_option("--p", flags.p, "residue characteristic");
  auto* o_n = app.add_option("--n", flags.n, "degree of F_q over F_p");
  auto* o_poly = app.add_option("--poly", poly, "coefficients c0,c1,... of P; 'a0:a1' for elements of F_q");
  auto* o_i = app.add_option("--prec-p", flags.prec_p, "p-adic precision i");
  auto* o_j = app.add_option("--prec-T", flags.prec_T, "T-adic precision j");
  auto* o_m = app.add_option("--method", flags.method, "kedlaya | deligne-illusie");
  auto* o_seed = app.add_option("--seed", flags.seed, "seed for randomized checks");
  auto* o_gen = app.add_option("--genera", genera, "bench: comma separated genera");
  auto* o_rep = app.add_option("--repeats", flags.repeats, "bench: runs per timing");
  app.add_flag("--identity-A", flags.identity_override, "phigamma test hook: replace A by I with r = 0");
  app.add_option("--config", config, "JSON job file with the same keys; flags win");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int c = app.exit(e, out, err);
    return c == 0 ? kOk : kValidation;
  }

  JobSpec job;
  try {
    if (!config.empty()) {
      std::ifstream in(config);
      if (!in) raise(ErrorKind::InvalidArgument, "cannot open config " + config);
      json c = json::parse(in);
      if (c.contains("command")) job.command = c["command"].get<std::string>();
      if (c.contains("p")) job.p = c["p"].get<uint64_t>();
      if (c.contains("n")) job.n = c["n"].get<int>();
      if (c.contains("coeffs"))
        for (const auto& v : c["coeffs"])
          job.coeffs.push_back(v.is_array() ? v.get<std::vector<int64_t>>() : std::vector<int64_t>{v.get<int64_t>()});
      if (c.contains("prec_p")) job.prec_p = c["prec_p"].get<int>();
      if (c.contains("prec_T")) job.prec_T = c["prec_T"].get<int>();
      if (c.contains("method")) job.method = c["method"].get<std::string>();
    }
    if (!flags.command.empty()) job.command = flags.command;
    if (o_p->count()) job.p = flags.p;
    if (o_n->count()) job.n = flags.n;
    if (o_poly->count()) job.coeffs = parse_poly(poly);
    if (o_i->count()) job.prec_p = flags.prec_p;
    if (o_j->count()) job.prec_T = flags.prec_T;
    if (o_m->count()) job.method = flags.method;
    if (o_seed->count()) job.seed = flags.seed;
    if (o_rep->count()) job.repeats = flags.repeats;
    if (o_gen->count()) {
      job.genera.clear();
      for (const auto& v : parse_poly(genera)) job.genera.push_back(static_cast<int>(v.at(0)));
    }
    job.identity_override = flags.identity_override;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad config: " << e.what() << "\n";
    return kValidation;
  }
  return run(job, out, err);
}

}  // namespace hypercris::cli
