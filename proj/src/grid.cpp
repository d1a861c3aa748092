#include "modforms/bounds.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <limits>
#include <thread>

#include "modforms/errors.hpp"
#include "modforms/forms.hpp"

namespace mf {

namespace {

using cplx = std::complex<double>;

struct Term {
  long n;
  double w;  // c(n) e^{-2 pi n h}
};

// One side of G: sum over retained exponents of c(n) e^{2 pi i n (t + i h)}.
struct Side {
  std::vector<Term> terms;
  double sup = 0;      // sum |w|
  double sup_d1 = 0;   // sum 2 pi |n| |w|
  double sup_d2 = 0;   // sum (2 pi n)^2 |w|

  void eval(double t, cplx& value, cplx& deriv) const {
    value = 0;
    deriv = 0;
    const double tp = 2.0 * M_PI;
    for (const auto& term : terms) {
      const double angle = tp * static_cast<double>(term.n) * t;
      const cplx e(std::cos(angle), std::sin(angle));
      value += term.w * e;
      deriv += cplx(0.0, tp * static_cast<double>(term.n) * term.w) * e;
    }
  }
};

Side make_side(const QLaurent& j, std::string_view height, long top, long bits) {
  Side s;
  const ApproxReal tp = ApproxReal(2L, bits) * ApproxReal::pi(bits);
  const ApproxReal h = ApproxReal::from_decimal(height, bits);
  ApproxReal sup(bits), d1(bits), d2(bits);
  auto add = [&](long n, const mpq_class& c) {
    const ApproxReal w = ApproxReal(c, bits) * exp(-(tp * ApproxReal(n, bits) * h));
    s.terms.push_back({n, w.to_double()});
    const ApproxReal aw = abs(w);
    const ApproxReal freq = tp * ApproxReal(std::labs(n), bits);
    sup += aw;
    d1 += freq * aw;
    d2 += freq * freq * aw;
  };
  add(-1, j.coeff(-1));
  for (long n = 1; n <= top; ++n) add(n, j.coeff(n));
  s.sup = to_double(sup, Rounding::Up);
  s.sup_d1 = to_double(d1, Rounding::Up);
  s.sup_d2 = to_double(d2, Rounding::Up);
  return s;
}

struct Partial {
  double min_g2 = std::numeric_limits<double>::infinity();
  double min_cert = std::numeric_limits<double>::infinity();
  long arg_i = 0;
  long arg_j = 0;
};

}  // namespace

GridCertificate grid_min_G(double step, long bits, int threads) {
  if (!(step > 0) || step > 0.5) throw InvalidArgument("grid_min_G: step must lie in (0, 0.5]");
  if (threads < 1) throw InvalidArgument("grid_min_G: threads must be >= 1");
  const QLaurent j = jfun(11);
  const Side pside = make_side(j, constants::kV, 4, bits);
  const Side qside = make_side(j, constants::kY, 9, bits);

  GridCertificate cert;
  cert.bits = bits;
  const long half = static_cast<long>(std::ceil(0.5 / step));
  const long nx = 2 * half;
  const double h = 1.0 / static_cast<double>(nx);
  cert.step = h;
  cert.nodes_x = nx + 1;
  cert.nodes_u = half + 1;
  cert.evaluations = cert.nodes_x * cert.nodes_u;

  const double s0 = pside.sup + qside.sup;
  const double dx = qside.sup_d1, dxx = qside.sup_d2;
  const double du = pside.sup_d1, duu = pside.sup_d2;
  cert.sup_g = s0;
  cert.bound_xx = 2 * dx * dx + 2 * s0 * dxx;
  cert.bound_uu = 2 * du * du + 2 * s0 * duu;
  cert.bound_xu = 2 * dx * du;
  const double r = h / 2;
  cert.rounding_slack = 64 * DBL_EPSILON * s0 * s0 + r * 128 * DBL_EPSILON * s0 * (dx + du);
  const double quad = 0.5 * (cert.bound_xx + 2 * cert.bound_xu + cert.bound_uu) * r * r;

  // G(x,u) = G(-x,-u): u in [0, 1/2] covers the square.
  std::vector<cplx> qv(static_cast<std::size_t>(nx + 1)), qd(qv.size());
  std::vector<cplx> pv(static_cast<std::size_t>(half + 1)), pd(pv.size());
  for (long i = 0; i <= nx; ++i) {
    qside.eval(-0.5 + static_cast<double>(i) * h, qv[static_cast<std::size_t>(i)], qd[static_cast<std::size_t>(i)]);
  }
  for (long jn = 0; jn <= half; ++jn) {
    pside.eval(static_cast<double>(jn) * h, pv[static_cast<std::size_t>(jn)], pd[static_cast<std::size_t>(jn)]);
  }

  auto work = [&](long row_begin, long row_end, Partial& out) {
    for (long i = row_begin; i < row_end; ++i) {
      const cplx q = qv[static_cast<std::size_t>(i)];
      const cplx q1 = qd[static_cast<std::size_t>(i)];
      for (long jn = 0; jn <= half; ++jn) {
        const cplx d = pv[static_cast<std::size_t>(jn)] - q;
        const double g2 = std::norm(d);
        const double gx = 2 * std::real(std::conj(d) * (-q1));
        const double gu = 2 * std::real(std::conj(d) * pd[static_cast<std::size_t>(jn)]);
        const double lower = g2 - (std::fabs(gx) + std::fabs(gu)) * r - quad - cert.rounding_slack;
        if (g2 < out.min_g2) {
          out.min_g2 = g2;
          out.arg_i = i;
          out.arg_j = jn;
        }
        out.min_cert = std::min(out.min_cert, lower);
      }
    }
  };

  const long rows = nx + 1;
  const long nthreads = std::min<long>(threads, rows);
  std::vector<Partial> parts(static_cast<std::size_t>(nthreads));
  std::vector<std::thread> pool;
  for (long t = 0; t < nthreads; ++t) {
    const long b = rows * t / nthreads;
    const long e = rows * (t + 1) / nthreads;
    if (t + 1 == nthreads) {
      work(b, e, parts[static_cast<std::size_t>(t)]);
    } else {
      pool.emplace_back(work, b, e, std::ref(parts[static_cast<std::size_t>(t)]));
    }
  }
  for (auto& th : pool) th.join();

  Partial best;
  for (const auto& p : parts) {
    if (p.min_g2 < best.min_g2) {
      best.min_g2 = p.min_g2;
      best.arg_i = p.arg_i;
      best.arg_j = p.arg_j;
    }
    best.min_cert = std::min(best.min_cert, p.min_cert);
  }
  cert.min_sampled_g2 = best.min_g2;
  cert.argmin_x = -0.5 + static_cast<double>(best.arg_i) * h;
  cert.argmin_u = static_cast<double>(best.arg_j) * h;
  cert.certified_g2_lower = best.min_cert;
  cert.certified_g_lower = best.min_cert > 0 ? std::sqrt(best.min_cert) : 0.0;

  // Spot-check the symmetry on a sparse subgrid.
  const long stride = std::max<long>(1, nx / 64);
  for (long i = 0; i <= nx; i += stride) {
    for (long jn = 0; jn <= half; jn += stride) {
      const double x = -0.5 + static_cast<double>(i) * h;
      const double u = static_cast<double>(jn) * h;
      cplx a, b, c, d, unused;
      pside.eval(u, a, unused);
      qside.eval(x, b, unused);
      pside.eval(-u, c, unused);
      qside.eval(-x, d, unused);
      const double g = std::abs(a - b);
      const double gm = std::abs(c - d);
      cert.symmetry_max_deviation = std::max(cert.symmetry_max_deviation, std::fabs(g - gm) / std::max(g, 1.0));
    }
  }

  cert.tail_z = j_tail_bound(constants::kY, 10, bits);
  cert.tail_tau = j_tail_bound(constants::kV, 5, bits);
  cert.printed_tail = ApproxReal::from_decimal(constants::kJTail, bits, Rounding::Down);
  cert.tail_z_ok = cert.tail_z <= cert.printed_tail;
  cert.tail_tau_ok = cert.tail_tau <= cert.printed_tail;
  cert.j_difference_lower =
      cert.certified_g_lower - to_double(cert.tail_z, Rounding::Up) - to_double(cert.tail_tau, Rounding::Up);

  const double floor_g2 = 900.0;
  cert.certified = cert.certified_g2_lower > floor_g2;
  cert.rounding_policy =
      "samples in IEEE double with slack 64 eps S0^2 (plus gradient slack); derivative bounds from "
      "MPFR sums rounded up";
  if (cert.certified) {
    cert.diagnostic = "G >= " + std::to_string(cert.certified_g_lower) + " on |x|,|u| <= 1/2";
  } else {
    cert.diagnostic = "certified G^2 lower bound " + std::to_string(cert.certified_g2_lower) +
                      " does not clear 900; refine the step";
  }
  return cert;
}

}  // namespace mf
