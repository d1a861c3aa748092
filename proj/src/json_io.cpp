#include "modforms/json_io.hpp"

#include <cmath>

#include "modforms/errors.hpp"

namespace mf {

namespace {

json double_json(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
}

json real_list(const std::vector<ApproxReal>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace

json to_json(const QLaurent& f) {
  json coeffs = json::array();
  for (long n = f.valuation(); n < f.prec(); ++n) coeffs.push_back(to_string(f.coeff(n)));
  return json{{"valuation", f.valuation()}, {"prec", f.prec()}, {"coeffs", std::move(coeffs)}};
}

QLaurent qlaurent_from_json(const json& j) {
  try {
    const long valuation = j.at("valuation").get<long>();
    const long prec = j.at("prec").get<long>();
    std::vector<mpq_class> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    if (valuation < prec && static_cast<long>(coeffs.size()) != prec - valuation) {
      throw InvalidArgument("QLaurent JSON: coeffs length must equal prec - valuation");
    }
    return QLaurent(valuation, std::move(coeffs), prec);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("QLaurent JSON: ") + e.what());
  }
}

json to_json(const ApproxReal& x) { return x.to_string(); }

json to_json(const WeightProfile& p) {
  json out{{"k", p.k}, {"ell", p.ell}, {"k_prime", p.k_prime}};
  out["nu"] = p.nu ? json(*p.nu) : json(nullptr);
  return out;
}

json to_json(const MillerBasis& b) {
  json rows = json::array();
  for (const auto& r : b.rows) rows.push_back(to_json(r));
  return json{{"k", b.profile.k}, {"ell", b.profile.ell}, {"prec", b.prec}, {"rows", std::move(rows)}};
}

MillerBasis miller_basis_from_json(const json& j) {
  try {
    MillerBasis b;
    b.profile = weight_profile(j.at("k").get<long>());
    b.prec = j.at("prec").get<long>();
    if (j.at("ell").get<long>() != b.profile.ell) throw InvalidArgument("basis JSON: ell does not match k");
    for (const auto& r : j.at("rows")) b.rows.push_back(qlaurent_from_json(r));
    if (static_cast<long>(b.rows.size()) != b.profile.ell + 1) {
      throw InvalidArgument("basis JSON: expected ell + 1 rows");
    }
    return b;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("basis JSON: ") + e.what());
  }
}

json to_json(const KernelCheckReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"m", e.m}, {"matches", e.matches}, {"compared_through", e.compared_through}});
  }
  return json{{"k", r.k},           {"ell", r.ell},     {"max_m", r.max_m},
              {"q_prec", r.q_prec}, {"entries", entries}, {"all_match", r.all_match}};
}

json to_json(const Eigenform& g) {
  return json{{"k", g.k},
              {"mantissa_bits", g.bits},
              {"q_prec", g.q_prec},
              {"hecke_prime", g.hecke_prime},
              {"eigenvalue", to_json(g.eigenvalue)},
              {"coeffs", real_list(g.coeffs)}};
}

json to_json(const EigenDecomposition& d) {
  json forms = json::array();
  for (const auto& g : d.forms) forms.push_back(to_json(g));
  const Tolerance tol(d.bits);
  return json{{"k", d.k},
              {"mantissa_bits", d.bits},
              {"c", real_list(d.c)},
              {"C", to_json(d.total)},
              {"residual", to_json(d.residual)},
              {"condition", to_json(d.condition)},
              {"ok", d.ok},
              {"tolerance", {{"relative", to_json(tol.relative)}, {"absolute", to_json(tol.absolute)}}},
              {"eigenforms", std::move(forms)}};
}

json to_json(const DeligneReport& r) {
  return json{{"nmax", r.nmax},
              {"prime_bound_ok", r.prime_bound_ok},
              {"general_bound_ok", r.general_bound_ok},
              {"max_prime_ratio", to_json(r.max_prime_ratio)},
              {"max_general_ratio", to_json(r.max_general_ratio)},
              {"worst_n", r.worst_n}};
}

json to_json(const MultiplicativityReport& r) {
  return json{{"checked_pairs", r.checked_pairs},
              {"failures", r.failures},
              {"max_relative_error", to_json(r.max_relative_error)}};
}

json to_json(const BoundReport& r) {
  json constants = json::object();
  for (const auto& [name, value] : r.constants) constants[name] = value;
  return json{{"kind", "theorem1"},
              {"k", r.k},
              {"ell", r.ell},
              {"mantissa_bits", r.bits},
              {"a", real_list(r.a)},
              {"weighted_norm", to_json(r.weighted_norm)},
              {"inner_sum", to_json(r.inner_sum)},
              {"term1", to_json(r.term1)},
              {"term2", to_json(r.term2)},
              {"B", to_json(r.B)},
              {"statement_factor", to_json(r.statement_factor)},
              {"consolidated_factor", to_json(r.consolidated_factor)},
              {"constants", std::move(constants)},
              {"bound", "B * d(n) * n^((k-1)/2)"}};
}

json to_json(const KernelConstantsReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"recomputed", to_json(c.recomputed)},
                      {"printed", to_json(c.printed)},
                      {"ok", c.ok},
                      {"note", c.note}});
  }
  return json{{"kind", "kernel-constants"}, {"mantissa_bits", r.bits}, {"y", r.y},
              {"v", r.v},                   {"checks", std::move(checks)}, {"all_ok", r.all_ok},
              {"rounding_policy", r.rounding_policy}};
}

json to_json(const GridCertificate& c) {
  return json{{"kind", "grid-certificate"},
              {"mantissa_bits", c.bits},
              {"step", double_json(c.step)},
              {"nodes_x", c.nodes_x},
              {"nodes_u", c.nodes_u},
              {"evaluations", c.evaluations},
              {"min_sampled_g2", double_json(c.min_sampled_g2)},
              {"argmin", {double_json(c.argmin_x), double_json(c.argmin_u)}},
              {"sup_g", double_json(c.sup_g)},
              {"second_derivative_bounds",
               {{"xx", double_json(c.bound_xx)}, {"uu", double_json(c.bound_uu)}, {"xu", double_json(c.bound_xu)}}},
              {"rounding_slack", double_json(c.rounding_slack)},
              {"certified_g2_lower", double_json(c.certified_g2_lower)},
              {"certified_g_lower", double_json(c.certified_g_lower)},
              {"symmetry_max_deviation", double_json(c.symmetry_max_deviation)},
              {"tail_z", to_json(c.tail_z)},
              {"tail_tau", to_json(c.tail_tau)},
              {"printed_tail", to_json(c.printed_tail)},
              {"tail_z_ok", c.tail_z_ok},
              {"tail_tau_ok", c.tail_tau_ok},
              {"j_difference_lower", double_json(c.j_difference_lower)},
              {"certified", c.certified},
              {"rounding_policy", c.rounding_policy},
              {"diagnostic", c.diagnostic}};
}

json to_json(const Theorem2Threshold& t) {
  return json{{"k", t.k},
              {"ell", t.ell},
              {"threshold", to_json(t.value)},
              {"N", t.N},
              {"trivial", t.trivial}};
}

json to_json(const BurmannCoefficient& b) {
  return json{{"k", b.k},
              {"ell", b.ell},
              {"nu", b.nu},
              {"A_ell_plus_1", to_string(b.A1)},
              {"A_ell_plus_2", to_string(b.A2)},
              {"a_ell_plus_1", to_string(b.a1)},
              {"a_ell_plus_2", to_string(b.a2)}};
}

json to_json(const ScanRecord& r) {
  json out{{"k", r.k},
           {"ell", r.ell},
           {"mode", r.mode},
           {"window_end", r.window_end},
           {"tail_end", r.tail_end},
           {"negative_indices", r.negative_indices},
           {"tail_negative_indices", r.tail_negative_indices}};
  out["min_value_index"] = r.min_value_index ? json(*r.min_value_index) : json(nullptr);
  out["siegel_positive"] = r.siegel_positive;
  out["status"] = std::string(to_string(r.status));
  out["resume_index"] = r.resume_index ? json(*r.resume_index) : json(nullptr);
  if (r.wall_time) out["wall_time_s"] = *r.wall_time;
  out["tool_version"] = r.tool_version;
  return out;
}

ScanRecord scan_record_from_json(const json& j) {
  try {
    if (!j.is_object()) throw CorruptCheckpoint("scan record is not an object");
    ScanRecord r;
    r.k = j.at("k").get<long>();
    r.ell = j.at("ell").get<long>();
    r.mode = j.at("mode").get<std::string>();
    if (r.mode != "desk" && r.mode != "full") throw CorruptCheckpoint("scan record: bad mode");
    r.window_end = j.at("window_end").get<long>();
    r.tail_end = j.at("tail_end").get<long>();
    r.negative_indices = j.at("negative_indices").get<std::vector<long>>();
    r.tail_negative_indices = j.at("tail_negative_indices").get<std::vector<long>>();
    if (!j.at("min_value_index").is_null()) r.min_value_index = j.at("min_value_index").get<long>();
    r.siegel_positive = j.at("siegel_positive").get<bool>();
    r.status = scan_status_from_string(j.at("status").get<std::string>());
    if (!j.at("resume_index").is_null()) r.resume_index = j.at("resume_index").get<long>();
    if (j.contains("wall_time_s")) r.wall_time = j.at("wall_time_s").get<double>();
    r.tool_version = j.at("tool_version").get<std::string>();
    if (r.status == ScanStatus::Partial && !r.resume_index) {
      throw CorruptCheckpoint("scan record: partial without resume_index");
    }
    for (long n : r.negative_indices) {
      if (n <= r.ell || n > std::max(r.window_end, r.ell + 2)) {
        throw CorruptCheckpoint("scan record: negative index outside the window");
      }
    }
    return r;
  } catch (const json::exception& e) {
    throw CorruptCheckpoint(std::string("scan record: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw CorruptCheckpoint(std::string("scan record: ") + e.what());
  }
}

}  // namespace mf
