#include "lvr/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lvr/borel.hpp"
#include "lvr/corner_calculus.hpp"
#include "lvr/errors.hpp"
#include "lvr/fuss_catalan.hpp"
#include "lvr/mc.hpp"
#include "lvr/ribbon_series.hpp"
#include "lvr/weingarten.hpp"
#include "lvr/wick.hpp"

namespace lvr {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

Json coeff_strings(const PolyZ& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  if (arr.empty()) arr.push_back("0");
  return arr;
}

Json rational_function_json(const RationalFunctionOfN& f) {
  return Json{{"num", coeff_strings(f.num())}, {"den", coeff_strings(f.den())}};
}

Json series_json(const LambdaSeries& s) {
  Json rows = Json::array();
  for (int m = 0; m <= s.order(); ++m)
    rows.push_back(Json{{"m", m}, {"rational_function_of_N", rational_function_json(s.coeff(m))}});
  return rows;
}

Json convention_flags() {
  return Json{{"vertex_symmetry", "v_factorial"},
              {"cilia_convention", "K_source_pairs"},
              {"sigma_scaling", "lambda_over_N_pow_p_minus_1"},
              {"pattern_convention", "one_term_per_theta_phi"}};
}

Json open_question_flags() {
  Json arr = Json::array();
  arr.push_back("wg_1_1_sign_adjudicated_by_unitarity");
  arr.push_back("v_factorial_adjudicated_by_wick_oracle");
  arr.push_back("analyticity_domain_taken_as_configured_pacman");
  return arr;
}

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open output file: " + tmp);
    f << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("cannot rename temp artifact onto " + path);
}

void emit(const std::string& path, Json artifact, const std::string& summary) {
  write_atomic(path, artifact.dump(2) + "\n");
  std::cout << summary << " -> " << path << "\n";
}

Json envelope(const std::string& command, Json config, Json data) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"config_echo", std::move(config)},
              {"convention_flags", convention_flags()},
              {"open_question_flags", open_question_flags()},
              {"data", std::move(data)}};
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::string csv_from_series(const LambdaSeries& s) {
  std::ostringstream os;
  os << "m,numerator_coeffs,denominator_coeffs\n";
  for (int m = 0; m <= s.order(); ++m) {
    os << m << ",\"";
    const auto& num = s.coeff(m).num().coeffs();
    const auto& den = s.coeff(m).den().coeffs();
    for (std::size_t i = 0; i < num.size(); ++i) os << (i ? ";" : "") << num[i].str();
    if (num.empty()) os << "0";
    os << "\",\"";
    for (std::size_t i = 0; i < den.size(); ++i) os << (i ? ";" : "") << den[i].str();
    os << "\"\n";
  }
  return os.str();
}

}  // namespace

int cli_run(const std::vector<std::string>& args) {
  CLI::App app{"Exact Weingarten calculus, matrix-model cumulant series, and"
               " Borel-LeRoy tools with Wick and Monte Carlo oracles"};
  app.require_subcommand(1);

  // ---- wg-table ----
  auto* wg_table = app.add_subcommand("wg-table", "Weingarten functions of order k as rational functions of N");
  int wg_k = 2;
  bool wg_symbolic = false;
  std::vector<int> wg_at;
  std::string wg_out = "wg_table.json";
  wg_table->add_option("--k", wg_k, "order")->required();
  wg_table->add_flag("--symbolic", wg_symbolic, "symbolic only (no evaluations)");
  wg_table->add_option("--at", wg_at, "evaluate at these integer N");
  wg_table->add_option("--out", wg_out, "output path");

  // ---- wg-moment ----
  auto* wg_moment = app.add_subcommand("wg-moment", "exact Haar-unitary moment");
  std::string wm_a, wm_b, wm_c, wm_d;
  int wm_n = 3;
  std::string wm_out = "wg_moment.json";
  wg_moment->add_option("--a", wm_a, "row indices of U factors, comma separated")->required();
  wg_moment->add_option("--b", wm_b, "column indices of U factors")->required();
  wg_moment->add_option("--c", wm_c, "row indices of U* factors")->required();
  wg_moment->add_option("--d", wm_d, "column indices of U* factors")->required();
  wg_moment->add_option("--N", wm_n, "matrix size")->required();
  wg_moment->add_option("--out", wm_out, "output path");

  // ---- fc ----
  auto* fc = app.add_subcommand("fc", "Fuss-Catalan numbers C_n^(p)");
  int fc_p = 2, fc_n = 5;
  std::string fc_out = "fuss_catalan.json";
  fc->add_option("--p", fc_p, "order of the algebraic equation")->required()->check(CLI::Range(2, 1000));
  fc->add_option("--n", fc_n, "highest index")->required();
  fc->add_option("--out", fc_out, "output path");

  // ---- tp ----
  auto* tp = app.add_subcommand("tp", "evaluate the generating function T_p");
  int tp_p = 2, tp_terms = 60;
  double tp_re = 0.0, tp_im = 0.0;
  bool tp_use_cardano = false;
  std::string tp_out = "tp_eval.json";
  tp->add_option("--p", tp_p)->required()->check(CLI::Range(2, 1000));
  tp->add_option("--z-re", tp_re)->required();
  tp->add_option("--z-im", tp_im);
  tp->add_option("--terms", tp_terms, "series terms");
  tp->add_flag("--cardano", tp_use_cardano, "use the p=3 radical formula");
  tp->add_option("--out", tp_out, "output path");

  // ---- logz-series ----
  auto* lz = app.add_subcommand("logz-series", "free energy series by ribbon-graph enumeration");
  int lz_p = 2, lz_order = 2;
  std::string lz_conv = "vfact";
  std::string lz_out = "logz_series.json";
  std::string lz_csv;
  lz->add_option("--p", lz_p)->required()->check(CLI::Range(2, 1000));
  lz->add_option("--order", lz_order)->required();
  lz->add_option("--convention", lz_conv, "vfact | vlin vertex normalization");
  lz->add_option("--out", lz_out, "output path");
  lz->add_option("--csv", lz_csv, "also write a CSV copy here");

  // ---- cumulant-series ----
  auto* cs = app.add_subcommand("cumulant-series", "invariant or scalar cumulant series");
  int cs_p = 2, cs_order = 1, cs_K = 1;
  std::string cs_partition = "1";
  std::string cs_kind = "invariant";
  std::string cs_out = "cumulant_series.json";
  std::string cs_csv;
  cs->add_option("--p", cs_p)->required()->check(CLI::Range(2, 1000));
  cs->add_option("--partition", cs_partition, "comma separated parts")->required();
  cs->add_option("--order", cs_order)->required();
  cs->add_option("--kind", cs_kind, "invariant | scalar");
  cs->add_option("--K", cs_K, "cumulant order (scalar kind)");
  cs->add_option("--out", cs_out, "output path");
  cs->add_option("--csv", cs_csv, "also write a CSV copy here");

  // ---- corner-words ----
  auto* cw = app.add_subcommand("corner-words", "Faa di Bruno corner words of a resolvent trace");
  int cw_q = 1, cw_qbar = 0;
  std::string cw_out = "corner_words.json";
  cw->add_option("--q", cw_q, "M derivatives")->required();
  cw->add_option("--qbar", cw_qbar, "Mdag derivatives")->required();
  cw->add_option("--out", cw_out, "output path");

  // ---- tree-bounds ----
  auto* tb = app.add_subcommand("tree-bounds", "explicit LVR bound formulas");
  std::string tb_kind = "tree";
  int tb_e = 1, tb_v = 2, tb_K = 1, tb_pi = 1, tb_p = 2, tb_n = 1;
  double tb_lre = 0.1, tb_lim = 0.0, tb_kconst = 1.0, tb_kappa = 1.0;
  std::string tb_coord = "1";
  std::string tb_out = "tree_bounds.json";
  tb->add_option("--kind", tb_kind, "tree | mainamp");
  tb->add_option("--e", tb_e, "tree edges e_T");
  tb->add_option("--v", tb_v, "tree vertices v_T");
  tb->add_option("--K", tb_K, "cumulant order");
  tb->add_option("--pi-size", tb_pi, "|pi|");
  tb->add_option("--p", tb_p);
  tb->add_option("--lambda-re", tb_lre);
  tb->add_option("--lambda-im", tb_lim);
  tb->add_option("--n", tb_n, "vertices (mainamp)");
  tb->add_option("--coordinations", tb_coord, "comma separated r_i (mainamp)");
  tb->add_option("--K-const", tb_kconst, "constant K (mainamp)");
  tb->add_option("--kappa-p", tb_kappa, "exponent kappa_p (mainamp)");
  tb->add_option("--out", tb_out, "output path");

  // ---- oracle-wick ----
  auto* ow = app.add_subcommand("oracle-wick", "exact Wick-contraction series");
  int ow_p = 2, ow_order = 0, ow_cap = caps().wick_pairs;
  std::string ow_partition = "1";
  bool ow_connected = false;
  std::string ow_out = "oracle_wick.json";
  ow->add_option("--p", ow_p)->required()->check(CLI::Range(2, 1000));
  ow->add_option("--partition", ow_partition, "trace powers, comma separated")->required();
  ow->add_option("--order", ow_order);
  ow->add_flag("--connected", ow_connected, "cumulant over the factors");
  ow->add_option("--cap", ow_cap, "pairing cap override");
  ow->add_option("--out", ow_out, "output path");

  // ---- oracle-mc ----
  auto* om = app.add_subcommand("oracle-mc", "Metropolis sampling of the interacting model");
  McModelParams om_params;
  std::string om_out = "oracle_mc.json";
  std::string om_trace;
  om->add_option("--p", om_params.p)->check(CLI::Range(2, 1000));
  om->add_option("--lambda", om_params.lambda);
  om->add_option("--N", om_params.N)->required();
  om->add_option("--k-max", om_params.k_max);
  om->add_option("--sweeps", om_params.sweeps);
  om->add_option("--burn-in", om_params.burn_in);
  om->add_option("--seed", om_params.seed)->required();
  om->add_option("--chains", om_params.chains);
  om->add_option("--out", om_out, "output path");
  om->add_option("--trace", om_trace, "CSV trace path {sweep, invariant_name, value}");

  // ---- haar-mc ----
  auto* hm = app.add_subcommand("haar-mc", "Haar-unitary moment sampling");
  int hm_n = 3;
  std::uint64_t hm_samples = 100000, hm_seed = 1;
  std::vector<std::string> hm_moments;
  std::string hm_out = "haar_mc.json";
  hm->add_option("--N", hm_n)->required();
  hm->add_option("--samples", hm_samples);
  hm->add_option("--seed", hm_seed)->required();
  hm->add_option("--moment", hm_moments,
                 "moment spec 'i,j;k,l|m,n;...' with U entries before | and U* after");
  hm->add_option("--out", hm_out, "output path");

  // ---- borel ----
  auto* bo = app.add_subcommand("borel", "Borel-LeRoy domain check and kernel quadrature");
  int bo_q = 1;
  double bo_R = 1.0, bo_zre = 0.5, bo_zim = 0.0;
  std::string bo_remainders;
  std::string bo_out = "borel.json";
  bo->add_option("--q", bo_q)->required();
  bo->add_option("--R", bo_R);
  bo->add_option("--z-re", bo_zre)->required();
  bo->add_option("--z-im", bo_zim);
  bo->add_option("--remainders", bo_remainders, "n:|R_n| pairs, comma separated");
  bo->add_option("--out", bo_out, "output path");

  std::vector<const char*> argv;
  argv.push_back("lvr");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help() << std::flush;
      return 0;
    }
    std::cerr << e.what() << "\n" << app.help() << std::flush;
    return 2;
  }

  try {
    if (*wg_table) {
      Json rows = Json::array();
      const auto& table = weingarten_table(wg_k);
      for (std::size_t i = 0; i < table.basis.size(); ++i) {
        Json row{{"cycle_type", table.basis[i].parts()},
                 {"numerator_coeffs", coeff_strings(table.values[i].num())},
                 {"denominator_coeffs", coeff_strings(table.values[i].den())}};
        if (!wg_symbolic) {
          Json at = Json::object();
          for (int N : wg_at)
            at[std::to_string(N)] =
                to_string(weingarten_eval(table.basis[i], N));
          row["value_at"] = at;
        }
        rows.push_back(row);
      }
      emit(wg_out,
           envelope("wg-table", Json{{"k", wg_k}, {"symbolic", wg_symbolic}, {"at", wg_at}}, rows),
           "wg-table k=" + std::to_string(wg_k) + " (" + std::to_string(rows.size()) + " classes)");
      return 0;
    }

    if (*wg_moment) {
      auto a = parse_int_list(wm_a), b = parse_int_list(wm_b);
      auto c = parse_int_list(wm_c), d = parse_int_list(wm_d);
      BigRat value = haar_moment(a, b, c, d, wm_n);
      Json config{{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"N", wm_n}};
      emit(wm_out, envelope("wg-moment", config, Json{{"value", to_string(value)}}),
           "wg-moment = " + to_string(value));
      return 0;
    }

    if (*fc) {
      FussCatalanSeries s = fuss_catalan_numbers(fc_p, fc_n);
      Json rows = Json::array();
      for (std::size_t n = 0; n < s.coefficients.size(); ++n)
        rows.push_back(Json{{"p", fc_p}, {"n", n}, {"coefficient", s.coefficients[n].str()}});
      emit(fc_out, envelope("fc", Json{{"p", fc_p}, {"n", fc_n}}, rows),
           "fc p=" + std::to_string(fc_p) + " up to n=" + std::to_string(fc_n));
      return 0;
    }

    if (*tp) {
      std::complex<double> z(tp_re, tp_im);
      Json data;
      if (tp_use_cardano) {
        if (tp_p != 3) throw DomainError("tp --cardano: radical formula is p = 3 only");
        std::complex<double> t = tp_cardano(z);
        std::complex<double> res = z * t * t * t - t + 1.0;
        data = Json{{"p", 3}, {"z_re", tp_re}, {"z_im", tp_im},
                    {"t_re", t.real()}, {"t_im", t.imag()}, {"residual", std::abs(res)},
                    {"method", "cardano"}};
      } else {
        TpValue t = tp_series_eval(tp_p, z, tp_terms);
        data = Json{{"p", tp_p}, {"z_re", tp_re}, {"z_im", tp_im},
                    {"t_re", t.value.real()}, {"t_im", t.value.imag()},
                    {"residual", t.residual}, {"method", "series"}};
      }
      emit(tp_out, envelope("tp", Json{{"p", tp_p}, {"z_re", tp_re}, {"z_im", tp_im},
                                       {"terms", tp_terms}, {"cardano", tp_use_cardano}},
                            data),
           "tp p=" + std::to_string(tp_p));
      return 0;
    }

    if (*lz) {
      VertexSymmetry sym =
          (lz_conv == "vlin") ? VertexSymmetry::Linear : VertexSymmetry::Factorial;
      LambdaSeries s = logz_series(lz_p, lz_order, sym);
      Json data{{"model", Json{{"p", lz_p}, {"normalization", "thooft-v1"}}},
                {"quantity", "logZ_over_N2"},
                {"partition", Json::array()},
                {"order", lz_order},
                {"coefficients", series_json(s)}};
      if (!lz_csv.empty()) write_atomic(lz_csv, csv_from_series(s));
      emit(lz_out, envelope("logz-series",
                            Json{{"p", lz_p}, {"order", lz_order}, {"convention", lz_conv}}, data),
           "logz-series p=" + std::to_string(lz_p) + " order=" + std::to_string(lz_order));
      return 0;
    }

    if (*cs) {
      IntegerPartition pi(parse_int_list(cs_partition));
      Json data;
      LambdaSeries series;
      if (cs_kind == "scalar") {
        ScalarCumulant sc = scalar_cumulant_series(cs_p, cs_K, pi, cs_order);
        series = sc.series;
        data = Json{{"model", Json{{"p", cs_p}, {"normalization", "thooft-v1"}}},
                    {"quantity", "scalar_cumulant"},
                    {"K", cs_K},
                    {"partition", pi.parts()},
                    {"order", cs_order},
                    {"coefficients", series_json(series)},
                    {"index_structure",
                     Json{{"tau_pi", sc.structure.tau_pi.images()},
                          {"xi_pi", sc.structure.xi_pi.images()},
                          {"pattern_note", sc.structure.pattern_note}}}};
      } else if (cs_kind == "invariant") {
        series = invariant_cumulant_series(cs_p, pi, cs_order);
        data = Json{{"model", Json{{"p", cs_p}, {"normalization", "thooft-v1"}}},
                    {"quantity", "invariant_cumulant"},
                    {"partition", pi.parts()},
                    {"order", cs_order},
                    {"coefficients", series_json(series)}};
      } else {
        throw DomainError("cumulant-series: --kind must be invariant or scalar");
      }
      if (!cs_csv.empty()) write_atomic(cs_csv, csv_from_series(series));
      emit(cs_out, envelope("cumulant-series",
                            Json{{"p", cs_p}, {"partition", pi.parts()}, {"order", cs_order},
                                 {"kind", cs_kind}, {"K", cs_K}},
                            data),
           "cumulant-series kind=" + cs_kind);
      return 0;
    }

    if (*cw) {
      auto words = differentiate_trace(cw_q, cw_qbar);
      Json rows = Json::array();
      for (const auto& w : words)
        rows.push_back(Json{{"word", w.grammar()},
                            {"r", w.cups()},
                            {"r_pi", w.bare_resolvents()},
                            {"r_m", w.m_factors()},
                            {"r_mdag", w.mdag_factors()},
                            {"i_pi", w.identity_corners()}});
      emit(cw_out, envelope("corner-words", Json{{"q", cw_q}, {"qbar", cw_qbar}}, rows),
           "corner-words (" + std::to_string(words.size()) + " terms)");
      return 0;
    }

    if (*tb) {
      std::complex<double> lambda(tb_lre, tb_lim);
      Json data;
      if (tb_kind == "tree") {
        TreeCumulantBound bound = tree_cumulant_bound(tb_e, tb_v, tb_K, tb_pi, lambda, tb_p);
        data = Json{{"kind", "tree"},
                    {"scalar_factor", bound.scalar_factor},
                    {"n_power", bound.n_power}};
      } else if (tb_kind == "mainamp") {
        double bound = mainamp_bound(tb_n, parse_int_list(tb_coord), lambda, tb_kconst, tb_kappa);
        data = Json{{"kind", "mainamp"}, {"bound", bound}};
      } else {
        throw DomainError("tree-bounds: --kind must be tree or mainamp");
      }
      emit(tb_out, envelope("tree-bounds",
                            Json{{"kind", tb_kind}, {"e", tb_e}, {"v", tb_v}, {"K", tb_K},
                                 {"pi_size", tb_pi}, {"p", tb_p}, {"lambda_re", tb_lre},
                                 {"lambda_im", tb_lim}, {"n", tb_n}, {"coordinations", tb_coord},
                                 {"K_const", tb_kconst}, {"kappa_p", tb_kappa}},
                            data),
           "tree-bounds kind=" + tb_kind);
      return 0;
    }

    if (*ow) {
      WickQuery query;
      query.p = ow_p;
      query.lambda_order = ow_order;
      query.connected = ow_connected;
      query.cap = ow_cap;
      for (int k : parse_int_list(ow_partition)) query.factors.push_back(trace_power_factor(k));
      LambdaSeries s = wick_exact(query);
      Json data{{"quantity", ow_connected ? "connected_moment" : "moment"},
                {"partition", parse_int_list(ow_partition)},
                {"order", ow_order},
                {"coefficients", series_json(s)}};
      emit(ow_out, envelope("oracle-wick",
                            Json{{"p", ow_p}, {"partition", ow_partition}, {"order", ow_order},
                                 {"connected", ow_connected}, {"cap", ow_cap}},
                            data),
           "oracle-wick order=" + std::to_string(ow_order));
      return 0;
    }

    if (*om) {
      McModelResult result = mc_model(om_params, !om_trace.empty());
      Json rows = Json::array();
      for (std::size_t k = 0; k < result.invariants.size(); ++k) {
        const auto& e = result.invariants[k];
        rows.push_back(Json{{"invariant", "tr_power_" + std::to_string(k + 1)},
                            {"estimate", e.mean},
                            {"stderr", e.standard_error},
                            {"samples", e.sample_count},
                            {"seed", e.seed},
                            {"acceptance", e.acceptance_rate}});
      }
      Json connected = Json::array();
      for (const auto& pair : result.connected)
        connected.push_back(Json{{"invariants", "tr_power_" + std::to_string(pair.k1) +
                                                    ",tr_power_" + std::to_string(pair.k2)},
                                 {"estimate", pair.estimate.mean},
                                 {"stderr", pair.estimate.standard_error},
                                 {"samples", pair.estimate.sample_count},
                                 {"seed", pair.estimate.seed},
                                 {"acceptance", pair.estimate.acceptance_rate}});
      Json data{{"estimates", rows}, {"connected", connected}, {"adapted", result.adapted}};
      if (!om_trace.empty()) {
        std::ostringstream csv;
        csv << "sweep,invariant_name,value\n";
        for (const auto& [sweep, values] : result.trace)
          for (std::size_t k = 0; k < values.size(); ++k)
            csv << sweep << ",tr_power_" << (k + 1) << "," << values[k] << "\n";
        write_atomic(om_trace, csv.str());
      }
      emit(om_out, envelope("oracle-mc",
                            Json{{"p", om_params.p}, {"lambda", om_params.lambda},
                                 {"N", om_params.N}, {"k_max", om_params.k_max},
                                 {"sweeps", om_params.sweeps}, {"burn_in", om_params.burn_in},
                                 {"seed", om_params.seed}, {"chains", om_params.chains}},
                            data),
           "oracle-mc N=" + std::to_string(om_params.N));
      return 0;
    }

    if (*hm) {
      std::vector<HaarMomentSpec> specs;
      auto parse_entries = [](const std::string& s) {
        std::vector<std::pair<int, int>> out;
        std::stringstream ss(s);
        std::string entry;
        while (std::getline(ss, entry, ';')) {
          auto comma = entry.find(',');
          if (comma == std::string::npos) throw DomainError("haar-mc: bad moment entry " + entry);
          out.emplace_back(std::stoi(entry.substr(0, comma)), std::stoi(entry.substr(comma + 1)));
        }
        return out;
      };
      if (hm_moments.empty()) hm_moments = {"0,0|0,0"};
      for (const auto& m : hm_moments) {
        auto bar = m.find('|');
        if (bar == std::string::npos) throw DomainError("haar-mc: moment spec needs '|'");
        HaarMomentSpec spec;
        spec.u = parse_entries(m.substr(0, bar));
        spec.ustar = parse_entries(m.substr(bar + 1));
        specs.push_back(std::move(spec));
      }
      auto estimates = mc_haar(hm_n, specs, hm_samples, hm_seed);
      Json rows = Json::array();
      for (std::size_t i = 0; i < estimates.size(); ++i)
        rows.push_back(Json{{"moment", hm_moments[i]},
                            {"estimate_re", estimates[i].real_part.mean},
                            {"stderr_re", estimates[i].real_part.standard_error},
                            {"estimate_im", estimates[i].imag_part.mean},
                            {"stderr_im", estimates[i].imag_part.standard_error},
                            {"samples", estimates[i].real_part.sample_count},
                            {"seed", hm_seed}});
      emit(hm_out, envelope("haar-mc",
                            Json{{"N", hm_n}, {"samples", hm_samples}, {"seed", hm_seed},
                                 {"moments", hm_moments}},
                            rows),
           "haar-mc N=" + std::to_string(hm_n));
      return 0;
    }

    if (*bo) {
      std::complex<double> z(bo_zre, bo_zim);
      DomainSpec spec = DomainSpec::dr(bo_q, bo_R);
      bool inside = in_domain(z, spec);
      Json data{{"q", bo_q}, {"R", bo_R}, {"z_re", bo_zre}, {"z_im", bo_zim},
                {"in_domain", inside}};
      if (inside) {
        QuadratureResult r = inverse_borel_quadrature(
            [](std::complex<double>) { return std::complex<double>(1.0, 0.0); }, z, bo_q);
        data["value_re"] = r.value.real();
        data["value_im"] = r.value.imag();
        data["error_estimate"] = r.error_estimate;
      }
      if (!bo_remainders.empty()) {
        std::vector<std::pair<int, double>> pts;
        std::stringstream ss(bo_remainders);
        std::string item;
        while (std::getline(ss, item, ',')) {
          auto colon = item.find(':');
          if (colon == std::string::npos) throw DomainError("borel: bad remainder " + item);
          pts.emplace_back(std::stoi(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
        }
        data["sigma_hat"] = fit_sigma(pts, bo_q, z);
      }
      emit(bo_out, envelope("borel",
                            Json{{"q", bo_q}, {"R", bo_R}, {"z_re", bo_zre}, {"z_im", bo_zim},
                                 {"remainders", bo_remainders}},
                            data),
           "borel q=" + std::to_string(bo_q));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace lvr
