/*
 * Copyright 2026 The skewtop Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// The `verify` battery: every oracle against the module it checks.

#include <cmath>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "skewtop/duality.hpp"
#include "skewtop/ensemble.hpp"
#include "skewtop/evolution.hpp"
#include "skewtop/harish_chandra.hpp"
#include "skewtop/oracle/oracle.hpp"
#include "skewtop/series_engine.hpp"
#include "skewtop/skew_matrix.hpp"

namespace skewtop::cli {

namespace {

class Battery {
 public:
  explicit Battery(Report& r) : r_(r) {}

  void exact(const std::string& name, oracle::Method method, bool ok, const std::string& detail) {
    add(name, to_string(method), ok ? Verdict::pass : Verdict::fail, detail);
  }

  void add(const std::string& name, const std::string& method, Verdict v, const std::string& detail) {
    r_.add_check(name, v, detail);
    r_.table_rows.push_back({name, method, to_string(v)});
    Json e = {{"name", name}, {"method", method}, {"status", to_string(v)}};
    if (!detail.empty()) e["detail"] = detail;
    r_.results["battery"].push_back(e);
  }

 private:
  Report& r_;
};

std::string mc_detail(const oracle::OracleResult& o, double exact) {
  std::ostringstream os;
  os.precision(6);
  os << "estimate " << o.estimate << " +- " << o.stderr_ << ", exact " << exact;
  return os.str();
}

Verdict mc_verdict(const oracle::OracleResult& o, double exact) {
  if (o.inconclusive) return Verdict::inconclusive;
  return std::fabs(o.estimate - exact) <= 3.0 * o.stderr_ ? Verdict::pass : Verdict::fail;
}

SkewMatrix<Rational> random_skew(std::size_t d, std::mt19937_64& rng) {
  SkewMatrix<Rational> m(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) m.set(i, j, random_small_rational(rng));
  }
  return m;
}

}  // namespace

Report cmd_verify(const RunConfig& cfg) {
  Report r;
  r.command = "verify";
  r.inputs = {{"samples", cfg.samples}, {"seed", cfg.seed}};
  r.results["battery"] = Json::array();
  r.table_header = {"check", "method", "status"};
  r.conventions = {"gamma = 1/2 unless stated",
                   "entry mean = -A_ij/(2 gamma), entry variance = 1/(4 gamma)",
                   "two-point replica limit: ribbon-graph count = -4 x closed two-point form"};
  Battery b(r);
  using oracle::Method;
  const Rational half = make_rational(1, 2);
  std::mt19937_64 rng(cfg.seed);

  // Gaussian moments.
  b.exact("gaussian_moment_1d closed values", Method::exact_quadrature_1d,
          oracle::gaussian_moment_1d(2, half) == half && oracle::gaussian_moment_1d(4, half) == make_rational(3, 4) &&
              oracle::gaussian_moment_1d(6, Rational(1)) == 15,
          "(2,1/2), (4,1/2), (6,1)");

  // Characteristic polynomial averages.
  {
    const Rational lam = make_rational(3, 2), a = make_rational(2, 3);
    const auto zero = oracle::direct_det_expect(2, SourceSpec{}, {lam});
    const auto src = oracle::direct_det_expect(2, SourceSpec{{a}}, {lam});
    b.exact("d = 2 characteristic polynomial", Method::direct_determinant,
            *zero.exact == lam * lam + half && *src.exact == lam * lam + a * a + half,
            "lambda^2 + 1/2 and lambda^2 + a^2 + 1/2");
    bool ok = true;
    for (int t = 0; t < 4; ++t) {
      SourceSpec s{{random_small_rational(rng), random_small_rational(rng)}};
      SourceSpec lams{{random_small_rational(rng)}};
      if (t % 2 == 1) lams.values.push_back(random_small_rational(rng));
      const auto o = oracle::direct_det_expect(4, s, lams.values);
      ok = ok && *o.exact == char_poly_avg_exact(GaussianEnsemble(s, half), lams);
    }
    const auto fixed = oracle::direct_det_expect(4, SourceSpec{{Rational(1), Rational(2)}}, {Rational(0)});
    ok = ok && *fixed.exact == char_poly_avg_exact(GaussianEnsemble(SourceSpec{{Rational(1), Rational(2)}}, half),
                                                   SourceSpec{{Rational(0)}});
    b.exact("d = 4 characteristic polynomial vs Wick expansion", Method::direct_determinant, ok, "5 instances");
  }

  // Trace moments against ribbon graphs.
  {
    bool ok = true;
    const std::vector<std::vector<int>> cases = {{2}, {4}, {2, 2}, {6}, {3, 3}, {4, 2}, {8}};
    for (const auto& powers : cases) {
      for (const Rational& gamma : {half, Rational(1)}) {
        const auto poly = oracle::ribbon_moment(powers, gamma);
        for (std::size_t d = 2; d <= 5; ++d) {
          Rational v(0);
          for (std::size_t t = 0; t < poly.size(); ++t) v += poly[t] * pow(Rational(static_cast<long>(d)), static_cast<int>(t));
          ok = ok && v == trace_moment(GaussianEnsemble(d, gamma), powers);
        }
      }
    }
    b.exact("trace moments vs ribbon graphs", Method::pairing_enumeration, ok, "7 trace products, d = 2..5");
  }

  // Evolution operator.
  {
    const SSeries u = u1_series(SourceSpec{{Rational(0)}}, 10);
    bool ok = true;
    for (int i = 0; i <= 5; ++i) {
      ok = ok && u.coefficient({2 * i}) == pow(make_rational(-1, 4), i) / Rational(factorial(static_cast<unsigned>(i)));
    }
    b.exact("d = 2 evolution operator = exp(-s^2/4)", Method::exact_quadrature_1d, ok, "through s^10");
    const MultiSeries ribbon1 = oracle::replica_correlator_series(1, 10);
    b.exact("replica limit vs ribbon graphs", Method::pairing_enumeration, ribbon1 == u_replica_series(10),
            "through s^10");
    const MultiSeries ribbon2 = oracle::replica_correlator_series(2, 8);
    b.exact("two-point replica limit vs ribbon graphs", Method::pairing_enumeration,
            ribbon2 == u2_closed_form_series(8) * Rational(-4), "through total degree 8");
  }

  // k = 2 partition function.
  b.exact("k = 2 partition function vs direct expansion", Method::exact_quadrature_1d,
          oracle::direct_partition_k2(10) == partition_series(2, 10), "through u-degree 10");

  // Small duality instances.
  {
    DualityOptions opts;
    opts.trials = 5;
    opts.seed = cfg.seed;
    bool ok = true;
    for (std::size_t N = 1; N <= 2; ++N) {
      for (std::size_t k = 1; k <= 2; ++k) ok = ok && verify_duality(N, k, DualityMode::exact, opts).verdict == Verdict::pass;
    }
    b.exact("duality for N, k <= 2", Method::direct_determinant, ok, "5 draws each");
  }

  // Pfaffians and Cauchy determinants.
  {
    bool ok = true;
    for (std::size_t d = 2; d <= 10; d += 2) {
      const auto m = random_skew(d, rng);
      const Rational pf = pfaffian(m);
      ok = ok && pf * pf == determinant(m);
    }
    b.exact("pf^2 = det", Method::direct_determinant, ok, "d = 2, 4, ..., 10");
    bool cauchy = true;
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto [x, y] = random_cauchy_points(n, rng);
      cauchy = cauchy && cauchy_identity_check(x, y);
    }
    b.exact("Cauchy determinant identity", Method::direct_determinant, cauchy, "n = 1..4");
  }

  // Harish-Chandra determinant form.
  {
    double worst = 0.0;
    for (std::size_t N = 1; N <= 5; ++N) {
      for (int t = 0; t < 20; ++t) {
        const HCInput inp = random_hc_input(N, rng);
        const double w = hc_weyl_sum(inp);
        worst = std::max(worst, std::fabs(hc_determinant_form(inp) - w) / std::max(1.0, std::fabs(w)));
      }
    }
    b.add("HC determinant form vs Weyl sum", "direct-sum", worst <= 1e-10 ? Verdict::pass : Verdict::fail,
          "max relative error " + std::to_string(worst));
  }

  // Monte Carlo references.
  {
    const auto tr2 = oracle::mc_reference([](const Eigen::MatrixXd& x) { return (x * x).trace(); },
                                          GaussianEnsemble(4, Rational(1)), cfg.samples, cfg.seed);
    b.add("<tr X^2>, d = 4, gamma = 1", to_string(tr2.method), mc_verdict(tr2, -3.0), mc_detail(tr2, -3.0));
    const auto tr4 = oracle::mc_reference(
        [](const Eigen::MatrixXd& x) {
          const Eigen::MatrixXd x2 = x * x;
          return (x2 * x2).trace();
        },
        GaussianEnsemble(2, half), cfg.samples, cfg.seed + 1);
    b.add("<tr X^4>, d = 2", to_string(tr4.method), mc_verdict(tr4, 1.5), mc_detail(tr4, 1.5));
    // For d = 2, exp(sX) is a rotation by s X_01, so tr exp(sX) / 2 = cos(s X_01).
    const auto u = oracle::mc_reference([](const Eigen::MatrixXd& x) { return std::cos(x(0, 1)); },
                                        GaussianEnsemble(2, half), cfg.samples, cfg.seed + 2);
    const double expected = std::exp(-0.25);
    b.add("U(s = 1), d = 2", to_string(u.method), mc_verdict(u, expected), mc_detail(u, expected));
  }
  return r;
}

}  // namespace skewtop::cli
