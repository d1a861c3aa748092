#include "modforms/cli.hpp"

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "modforms/arith.hpp"
#include "modforms/bounds.hpp"
#include "modforms/errors.hpp"
#include "modforms/extremal.hpp"
#include "modforms/forms.hpp"
#include "modforms/hecke.hpp"
#include "modforms/json_io.hpp"

namespace mf::cli {

namespace {

std::atomic<bool> g_stop{false};

extern "C" void on_sigint(int) { g_stop.store(true); }


// ---- rendering --------------------------------------------------------------

void render_table(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_table(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_table(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_array()) {
    out << prefix << "\t";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out << " ";
      out << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
    }
    out << "\n";
  } else {
    out << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const json& j, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "table") {
    render_table(j, "", out);
  } else {
    out << j.dump(2) << "\n";
  }
}

void write_series_csv(const std::string& path, const json& series) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << "n,coefficient\n";
  long n = series.at("valuation").get<long>();
  for (const auto& c : series.at("coeffs")) f << n++ << "," << c.get<std::string>() << "\n";
}

void write_scan_csv(const std::string& path, const json& records) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << "k,ell,window_end,status,negative_count,first_negative\n";
  for (const auto& r : records) {
    const auto& neg = r.at("negative_indices");
    f << r.at("k").get<long>() << "," << r.at("ell").get<long>() << "," << r.at("window_end").get<long>() << ","
      << r.at("status").get<std::string>() << "," << neg.size() << ","
      << (neg.empty() ? std::string() : std::to_string(neg.front().get<long>())) << "\n";
  }
}

// ---- helpers ----------------------------------------------------------------

std::vector<mpq_class> parse_coeffs(const std::vector<std::string>& raw) {
  std::vector<mpq_class> out;
  for (const auto& s : raw) out.push_back(parse_rational(s));
  return out;
}

QLaurent cusp_form_from(long k, const std::vector<mpq_class>& a, std::optional<long> row, long prec) {
  const long ell = dim_cusp(k);
  if (ell == 0) throw InvalidArgument("S_k is zero for k = " + std::to_string(k));
  const MillerBasis basis = miller_basis(k, std::max(prec, ell + 2));
  if (row) {
    if (*row < 1 || *row > ell) throw InvalidArgument("--row must lie in 1..ell");
    return basis.rows[static_cast<std::size_t>(*row)];
  }
  if (static_cast<long>(a.size()) != ell) {
    throw InvalidArgument("--coeffs needs exactly ell = " + std::to_string(ell) + " values a(1..ell)");
  }
  QLaurent g(basis.prec);
  for (long m = 1; m <= ell; ++m) g += basis.rows[static_cast<std::size_t>(m)] * a[static_cast<std::size_t>(m - 1)];
  return g;
}

std::vector<ApproxReal> head_coeffs(const QLaurent& g, long ell, long bits) {
  std::vector<ApproxReal> out;
  for (long m = 1; m <= ell; ++m) out.emplace_back(g.coeff(m), bits);
  return out;
}

json tolerance_json(long bits) {
  const Tolerance tol(bits);
  return json{{"relative", to_json(tol.relative)}, {"absolute", to_json(tol.absolute)}};
}

long env_long(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const long x = std::strtol(v, &end, 10);
  if (*end != '\0') throw InvalidArgument(std::string(name) + " is not an integer: " + v);
  return x;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.mantissa_bits = env_long("FORMS_MANTISSA", 256);
    cfg.threads = static_cast<int>(env_long("FORMS_THREADS", 1));
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArgs;
  }

  CLI::App app{"Level-one modular forms: exact q-expansions, coefficient bounds and extremal scans", "modforms"};
  app.set_version_flag("--version", std::string(MODFORMS_VERSION));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--mantissa", cfg.mantissa_bits, "mantissa bits for approximate reals (env FORMS_MANTISSA)")
      ->check(CLI::Range(64L, 1L << 20));
  app.add_option("--threads", cfg.threads, "worker threads (env FORMS_THREADS)")->check(CLI::Range(1, 4096));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--emit-csv", cfg.emit_csv, "also write coefficients or scan records as CSV");
  app.add_option("--seed", cfg.seed, "reserved; nothing is randomized");

  // forms
  std::string forms_kind = "eisenstein";
  long forms_k = 4, forms_prec = 10, forms_max_m = 1;
  auto* forms = app.add_subcommand("forms", "Eisenstein series, Delta, j, the E8 theta series, kernel check");
  forms->add_option("--kind", forms_kind, "series to build")
      ->check(CLI::IsMember({"eisenstein", "delta", "delta-eisenstein", "j", "theta-e8", "profile", "kernel-check"}));
  forms->add_option("--weight,-k", forms_k, "weight");
  forms->add_option("--prec", forms_prec, "truncation order (exclusive)");
  forms->add_option("--max-m", forms_max_m, "kernel check: highest m");

  // basis
  long basis_k = 12, basis_prec = 10;
  auto* basis = app.add_subcommand("basis", "Miller basis F_{k,0..ell}");
  basis->add_option("--weight,-k", basis_k, "weight")->required();
  basis->add_option("--prec", basis_prec, "truncation order (exclusive)");

  // extremal
  long ext_k = 12, ext_prec = 10;
  bool ext_mos = false;
  auto* extremal = app.add_subcommand("extremal", "extremal form F_{k,0} = 1 + O(q^{ell+1})");
  extremal->add_option("--weight,-k", ext_k, "weight, a multiple of 4")->required();
  extremal->add_option("--prec", ext_prec, "truncation order (exclusive)");
  extremal->add_flag("--mos", ext_mos, "add the Burmann coefficients and a(ell+1), a(ell+2)");

  // eigen
  long eig_k = 24, eig_qprec = 0, eig_deligne = 0, eig_mult = 0;
  std::optional<long> eig_row;
  std::vector<std::string> eig_coeffs;
  auto* eigen = app.add_subcommand("eigen", "Hecke eigenforms, checks and decomposition");
  eigen->add_option("--weight,-k", eig_k, "weight")->required();
  eigen->add_option("--qprec", eig_qprec, "coefficients per eigenform (default 2 ell + 2)");
  eigen->add_option("--deligne", eig_deligne, "check Deligne bounds through this n");
  eigen->add_option("--multiplicativity", eig_mult, "check a(mn) = a(m)a(n) for mn up to this");
  eigen->add_option("--row", eig_row, "decompose the Miller form F_{k,row}");
  eigen->add_option("--coeffs", eig_coeffs, "decompose sum a(m) F_{k,m}; a(1..ell) as rationals")->delimiter(',');

  // bound
  auto* bound = app.add_subcommand("bound", "coefficient bound B, the A_k(m,n) envelope, kernel constants, Petersson bounds");
  bound->require_subcommand(1);
  bound->fallthrough();
  long b_k = 12, b_m = 1, b_n = 1, b_tail = 0;
  std::optional<long> b_row;
  std::vector<std::string> b_coeffs;
  std::string b_y(constants::kY), b_v(constants::kV);
  auto* th1 = bound->add_subcommand("theorem1", "B with |a(n)| <= B d(n) n^{(k-1)/2}");
  th1->add_option("--weight,-k", b_k, "weight")->required();
  th1->add_option("--coeffs", b_coeffs, "a(1..ell) as rationals")->delimiter(',');
  th1->add_option("--row", b_row, "use the Miller form F_{k,row}");
  th1->add_option("--n", b_n, "also evaluate the bound at this n");
  auto* env = bound->add_subcommand("envelope", "2003.34 7.358^ell e^{-2 pi 1.16 m} e^{2 pi 0.865 n}");
  env->add_option("--weight,-k", b_k, "weight")->required();
  env->add_option("--m", b_m, "row index")->required();
  env->add_option("--n", b_n, "coefficient index")->required();
  auto* kc = bound->add_subcommand("kernel-constants", "recompute the Delta, Eisenstein and j-tail bounds");
  kc->add_option("--y", b_y, "Im z");
  kc->add_option("--v", b_v, "Im tau");
  auto* pet = bound->add_subcommand("petersson", "upper and lower Petersson-norm bounds");
  pet->add_option("--weight,-k", b_k, "weight")->required();
  pet->add_option("--coeffs", b_coeffs, "a(1..ell) as rationals")->delimiter(',');
  pet->add_option("--row", b_row, "use the Miller form F_{k,row}");
  pet->add_option("--n-tail", b_tail, "exact terms through this n (default ell)");
  auto* thr = bound->add_subcommand("threshold", "positivity threshold N(k) and the C(h) envelope");
  thr->add_option("--weight,-k", b_k, "weight, a multiple of 4")->required();

  // certify-grid
  double grid_step = 1.0 / 2048;
  auto* grid = app.add_subcommand("certify-grid", "certify |j(tau) - j(z)| main terms G >= 30");
  grid->add_option("--step", grid_step, "grid spacing");

  // scan
  ScanOptions sopt;
  sopt.kmin = 12;
  sopt.kmax = 480;
  double guard_gb = 4.0;
  auto* scan = app.add_subcommand("scan", "checkpointed negative-coefficient scan of F_{k,0}");
  scan->add_option("--kmin", sopt.kmin, "smallest weight");
  scan->add_option("--kmax", sopt.kmax, "largest weight");
  scan->add_option("--mod12", sopt.mod12, "residue of k mod 12")->check(CLI::IsMember({0, 4, 8}));
  scan->add_option("--checkpoint", cfg.checkpoint, "JSON-lines checkpoint file");
  scan->add_option("--threads", cfg.threads, "worker threads (env FORMS_THREADS)")->check(CLI::Range(1, 4096));
  scan->add_option("--margin", sopt.margin, "coefficients checked past the window");
  scan->add_flag("--full-scale", cfg.full_scale, "window max(N(k), 10000), Burmann fast path, kmax caps");
  scan->add_flag("--repair", sopt.repair, "cut a corrupt checkpoint back to its last valid line");
  scan->add_flag("--record-wall-time", sopt.record_wall_time, "store wall time (output no longer reproducible)");
  scan->add_option("--size-guard-gb", guard_gb, "working-set estimate above which a weight is left partial");

  // verify
  long ver_kmax = 100;
  auto* verify = app.add_subcommand("verify", "fast self-consistency checks of the exact constructions");
  verify->add_option("--kmax", ver_kmax, "largest weight for the Miller and Burmann checks");

  std::vector<std::string> argv_store{"modforms"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidArgs;
  }

  const long bits = cfg.mantissa_bits;
  try {
    json result;
    if (forms->parsed()) {
      result = {{"kind", forms_kind}, {"mantissa_bits", bits}};
      QLaurent series;
      if (forms_kind == "eisenstein") {
        result["k"] = forms_k;
        series = eisenstein(forms_k, forms_prec);
      } else if (forms_kind == "delta") {
        series = delta(forms_prec);
      } else if (forms_kind == "delta-eisenstein") {
        series = delta_from_eisenstein(forms_prec);
      } else if (forms_kind == "j") {
        series = jfun(forms_prec);
      } else if (forms_kind == "theta-e8") {
        series = theta_e8(forms_prec);
        result["matches_e4"] = series == eisenstein(4, forms_prec);
      } else if (forms_kind == "profile") {
        result["profile"] = to_json(weight_profile(forms_k));
      } else {
        const KernelCheckReport r = generating_kernel_check(forms_k, forms_max_m, forms_prec);
        result["report"] = to_json(r);
        if (!r.all_match) {
          emit(result, cfg, out);
          return kVerificationFailed;
        }
      }
      if (forms_kind != "profile" && forms_kind != "kernel-check") {
        result["series"] = to_json(series);
        if (!cfg.emit_csv.empty()) write_series_csv(cfg.emit_csv, result["series"]);
      }
    } else if (basis->parsed()) {
      const MillerBasis b = miller_basis(basis_k, basis_prec);
      result = to_json(b);
      result["kind"] = "basis";
      result["mantissa_bits"] = bits;
      if (!cfg.emit_csv.empty()) {
        std::ofstream f(cfg.emit_csv);
        f << "m,n,coefficient\n";
        for (long m = 0; m <= b.profile.ell; ++m) {
          for (long n = 0; n < b.prec; ++n) f << m << "," << n << "," << to_string(b.rows[static_cast<std::size_t>(m)].coeff(n)) << "\n";
        }
      }
    } else if (extremal->parsed()) {
      const QLaurent f = extremal_form(ext_k, ext_prec);
      result = {{"kind", "extremal"}, {"k", ext_k}, {"ell", dim_cusp(ext_k)}, {"mantissa_bits", bits}};
      result["series"] = to_json(f);
      if (ext_k >= 8) result["window_end"] = theorem2_threshold(ext_k, bits).N;
      if (ext_mos) result["mos"] = to_json(burmann_mos(ext_k));
      if (!cfg.emit_csv.empty()) write_series_csv(cfg.emit_csv, result["series"]);
    } else if (eigen->parsed()) {
      const long ell = dim_cusp(eig_k);
      if (ell == 0) throw InvalidArgument("S_k is zero for k = " + std::to_string(eig_k));
      const long qprec = std::max({eig_qprec, 2 * ell + 2, eig_deligne + 1, eig_mult + 1});
      const MillerBasis b = miller_basis(eig_k, std::max(qprec, 3 * (ell + 1) + 1));
      const std::vector<Eigenform> gs = eigenforms(b, bits);
      result = {{"kind", "eigen"}, {"k", eig_k}, {"ell", ell}, {"mantissa_bits", bits}, {"q_prec", b.prec}};
      result["tolerance"] = tolerance_json(bits);
      json chi = json::array();
      for (const auto& c : characteristic_polynomial(hecke_matrix(b, gs.front().hecke_prime))) chi.push_back(to_string(c));
      result["hecke_prime"] = gs.front().hecke_prime;
      result["characteristic_polynomial"] = chi;
      json forms_json = json::array();
      bool checks_ok = true;
      for (const auto& g : gs) {
        json gj = to_json(g);
        if (eig_deligne > 0) {
          const DeligneReport d = deligne_check(g, eig_deligne);
          gj["deligne"] = to_json(d);
          checks_ok = checks_ok && d.prime_bound_ok && d.general_bound_ok;
        }
        if (eig_mult > 0) {
          const MultiplicativityReport m = multiplicativity_check(g, eig_mult);
          gj["multiplicativity"] = to_json(m);
          checks_ok = checks_ok && m.failures == 0;
        }
        forms_json.push_back(std::move(gj));
      }
      result["eigenforms"] = std::move(forms_json);
      if (eig_row || !eig_coeffs.empty()) {
        const QLaurent g = cusp_form_from(eig_k, parse_coeffs(eig_coeffs), eig_row, ell + 2);
        const EigenDecomposition dec = decompose(g, gs, bits);
        json dj = to_json(dec);
        dj.erase("eigenforms");
        const BoundReport br = theorem1_B(eig_k, head_coeffs(g, ell, bits), bits);
        dj["theorem1_B"] = to_json(br.B);
        dj["C_le_B"] = dec.total <= br.B;
        result["decomposition"] = std::move(dj);
        checks_ok = checks_ok && dec.ok;
      }
      if (!cfg.emit_csv.empty()) {
        std::ofstream f(cfg.emit_csv);
        f << "form,n,coefficient\n";
        for (std::size_t i = 0; i < gs.size(); ++i) {
          for (std::size_t n = 1; n < gs[i].coeffs.size(); ++n) f << i << "," << n << "," << gs[i].coeffs[n].to_string() << "\n";
        }
      }
      if (!checks_ok) {
        emit(result, cfg, out);
        return kVerificationFailed;
      }
    } else if (bound->parsed()) {
      if (th1->parsed()) {
        const long ell = dim_cusp(b_k);
        std::vector<ApproxReal> a;
        if (b_row) {
          a = head_coeffs(cusp_form_from(b_k, {}, b_row, ell + 2), ell, bits);
        } else {
          for (const auto& q : parse_coeffs(b_coeffs)) a.emplace_back(q, bits);
        }
        const BoundReport r = theorem1_B(b_k, a, bits);
        result = to_json(r);
        if (b_n > 1 || th1->count("--n") > 0) {
          result["n"] = b_n;
          result["bound_at_n"] = to_json(theorem1_bound(r, b_n));
        }
      } else if (env->parsed()) {
        result = {{"kind", "envelope"}, {"k", b_k}, {"ell", dim_cusp(b_k)}, {"m", b_m}, {"n", b_n},
                  {"mantissa_bits", bits}, {"envelope", to_json(akmn_envelope(b_k, b_m, b_n, bits))}};
      } else if (kc->parsed()) {
        const KernelConstantsReport r = kernel_constants_verify(b_y, b_v, bits);
        result = to_json(r);
        if (!r.all_ok) {
          emit(result, cfg, out);
          for (const auto& c : r.checks) {
            if (!c.ok) err << "check failed: " << c.name << " recomputed " << c.recomputed.to_string(10) << " > printed " << c.printed.to_string(10) << "\n";
          }
          return kVerificationFailed;
        }
      } else if (pet->parsed()) {
        const long ell = dim_cusp(b_k);
        const long n_tail = b_tail > 0 ? b_tail : ell;
        const QLaurent g = cusp_form_from(b_k, parse_coeffs(b_coeffs), b_row, std::max(n_tail + 1, ell + 2));
        const ApproxReal upper = petersson_upper_ff(g, b_k, n_tail, bits);
        const EigenDecomposition dec = decompose(g, b_k, bits);
        const ApproxReal lower = petersson_lower(dec);
        result = {{"kind", "petersson"}, {"k", b_k}, {"ell", ell}, {"mantissa_bits", bits}, {"n_tail", n_tail},
                  {"upper", to_json(upper)}, {"lower", to_json(lower)}, {"C", to_json(dec.total)},
                  {"symsq_lower", to_json(symsq_lower(b_k, bits))}, {"sandwich_ok", lower <= upper}};
        if (!(lower <= upper)) {
          emit(result, cfg, out);
          return kVerificationFailed;
        }
      } else if (thr->parsed()) {
        const Theorem2Threshold t = theorem2_threshold(b_k, bits);
        result = to_json(t);
        result["kind"] = "threshold";
        result["mantissa_bits"] = bits;
        if (!t.trivial) {
          result["ch_envelope"] = to_json(ch_envelope(b_k, bits));
          result["positivity_onset"] = positivity_onset(b_k, bits);
        }
      }
    } else if (grid->parsed()) {
      const GridCertificate c = grid_min_G(grid_step, bits, cfg.threads);
      result = to_json(c);
      if (!c.certified) {
        emit(result, cfg, out);
        err << "certification failed: " << c.diagnostic << "\n";
        return kVerificationFailed;
      }
    } else if (scan->parsed()) {
      sopt.checkpoint = cfg.checkpoint;
      sopt.threads = cfg.threads;
      sopt.full_scale = cfg.full_scale;
      sopt.size_guard_bytes = guard_gb * 1024.0 * 1024.0 * 1024.0;
      g_stop.store(false);
      sopt.stop = &g_stop;
      auto previous = std::signal(SIGINT, on_sigint);
      ScanSummary s;
      try {
        s = largest_nonneg_search(sopt);
      } catch (...) {
        std::signal(SIGINT, previous);
        throw;
      }
      std::signal(SIGINT, previous);
      json records = json::array();
      bool theorem2_ok = true;
      for (const auto& r : s.records) {
        records.push_back(to_json(r));
        theorem2_ok = theorem2_ok && r.tail_negative_indices.empty();
      }
      result = {{"kind", "scan"},
                {"mantissa_bits", bits},
                {"mode", cfg.full_scale ? "full" : "desk"},
                {"kmin", sopt.kmin},
                {"kmax", sopt.kmax},
                {"effective_kmax", s.effective_kmax},
                {"mod12", sopt.mod12},
                {"margin", sopt.margin}};
      result["largest_clean_k"] = s.largest_clean_k ? json(*s.largest_clean_k) : json(nullptr);
      result["interrupted"] = s.interrupted;
      result["records"] = records;
      if (!cfg.emit_csv.empty()) write_scan_csv(cfg.emit_csv, records);
      err << "scanned " << s.computed << " weights, " << s.resumed << " from checkpoint\n";
      if (s.interrupted) {
        emit(result, cfg, out);
        err << "interrupted; rerun the same command to resume\n";
        return kInterrupted;
      }
      if (!theorem2_ok) {
        emit(result, cfg, out);
        err << "negative coefficient past the positivity window\n";
        return kVerificationFailed;
      }
    } else if (verify->parsed()) {
      json checks = json::array();
      bool all_ok = true;
      auto record = [&](const std::string& name, bool ok) {
        checks.push_back({{"name", name}, {"ok", ok}});
        all_ok = all_ok && ok;
      };
      const QLaurent d = delta(50);
      record("delta_routes_agree", d == delta_from_eisenstein(50));
      record("e4_q_coefficient", eisenstein(4, 3).coeff(1) == 240);
      const QLaurent j = jfun(3);
      record("j_expansion", j.coeff(-1) == 1 && j.coeff(0) == 744 && j.coeff(1) == 196884);
      record("theta_e8_equals_e4", theta_e8(8) == eisenstein(4, 8));
      bool miller_ok = true, burmann_ok = true;
      for (long k = 12; k <= ver_kmax; k += 2) {
        const MillerBasis b = miller_basis(k, dim_cusp(k) + 4);
        for (long m = 0; m <= b.profile.ell; ++m) {
          for (long n = 0; n <= b.profile.ell; ++n) {
            miller_ok = miller_ok && b.rows[static_cast<std::size_t>(m)].coeff(n) == (m == n ? 1 : 0);
          }
        }
        if (k % 4 == 0) {
          miller_ok = miller_ok && extremal_form(k, dim_cusp(k) + 4) == b.rows[0];
          const BurmannCoefficient bm = burmann_mos(k);
          burmann_ok = burmann_ok && bm.a1 == b.rows[0].coeff(bm.ell + 1) && bm.a2 == b.rows[0].coeff(bm.ell + 2);
        }
      }
      record("miller_echelon_and_extremal", miller_ok);
      record("burmann_mos_identities", burmann_ok);
      const std::vector<Eigenform> g24 = eigenforms(24, bits, 30);
      record("eigen_k24_multiplicative", multiplicativity_check(g24[0], 29).failures == 0 &&
                                             multiplicativity_check(g24[1], 29).failures == 0);
      result = {{"kind", "verify"}, {"mantissa_bits", bits}, {"kmax", ver_kmax}, {"checks", checks}, {"all_ok", all_ok}};
      if (!all_ok) {
        emit(result, cfg, out);
        return kVerificationFailed;
      }
    }
    emit(result, cfg, out);
    return kOk;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArgs;
  } catch (const InsufficientPrecision& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArgs;
  } catch (const CorruptCheckpoint& e) {
    err << "error: " << e.what() << "\n(rerun with --repair to cut the file back to its last valid line)\n";
    return kInvalidArgs;
  } catch (const DegenerateSpectrum& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

int dispatch(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args, std::cout, std::cerr);
}

}  // namespace mf::cli
