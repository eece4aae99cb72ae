#include "bfwave/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "bfwave/acceptance.hpp"
#include "bfwave/depth.hpp"
#include "bfwave/floquet.hpp"
#include "bfwave/io.hpp"
#include "bfwave/kato.hpp"
#include "bfwave/reduction.hpp"
#include "bfwave/spectrum.hpp"
#include "bfwave/stokes.hpp"

namespace bfwave {
namespace {

using Cd = std::complex<double>;

double require(const std::optional<double>& v, const char* flag) {
  if (!v) throw ConfigError(std::string("missing required option ") + flag);
  return *v;
}

std::vector<double> depth_grid(const RunConfig& cfg) {
  if (cfg.h_range) return cfg.h_range->points();
  if (cfg.h) return {*cfg.h};
  throw ConfigError("missing required option --h or --h-range");
}

std::vector<double> amplitude_grid(const RunConfig& cfg) {
  if (cfg.eps_range) return cfg.eps_range->points();
  if (cfg.eps) return {*cfg.eps};
  throw ConfigError("missing required option --eps or --eps-range");
}

// "bfwave <command> key=value ..." in a fixed order so identical
// configurations produce identical files.
class Provenance {
 public:
  explicit Provenance(const std::string& command) : text_("bfwave " + command) {}
  Provenance& add(const char* key, double v) {
    text_ += ' ';
    text_ += key;
    text_ += '=';
    text_ += format_value(v);
    return *this;
  }
  Provenance& add(const char* key, int v) {
    text_ += ' ';
    text_ += key;
    text_ += '=';
    text_ += std::to_string(v);
    return *this;
  }
  Provenance& add(const char* key, const GridSpec& g) {
    text_ += ' ';
    text_ += key;
    text_ += '=';
    text_ += format_value(g.lo) + ":" + format_value(g.hi) + ":" +
             std::to_string(g.count);
    return *this;
  }
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

Table coeffs_table(const RunConfig& cfg) {
  Provenance prov("coeffs");
  if (cfg.h_range)
    prov.add("h-range", *cfg.h_range);
  else
    prov.add("h", require(cfg.h, "--h"));
  Table t;
  t.provenance = prov.str();
  t.columns = {"h",    "c_h",  "gamma_h",   "alpha_h", "beta_h", "delta_h",
               "zeta_h", "b_bold_h", "e_11", "e_12", "e_22", "e_wb",
               "f_11", "tilde_e11", "d_h",  "breve_c_h", "e_h"};
  for (double h : depth_grid(cfg)) {
    const DepthCoefficients dc = depth_coefficients(h);
    const double e_h =
        dc.e_h ? *dc.e_h : std::numeric_limits<double>::quiet_NaN();
    t.rows.push_back({dc.h, dc.c_h, dc.gamma_h, dc.alpha_h, dc.beta_h,
                      dc.delta_h, dc.zeta_h, dc.b_bold_h, dc.e_11, dc.e_12,
                      dc.e_22, dc.e_wb, dc.f_11, dc.tilde_e11, dc.d_h,
                      dc.breve_c_h, e_h});
  }
  return t;
}

Table critical_depth_table(const RunConfig&) {
  Table t;
  t.provenance = Provenance("critical-depth").str();
  t.columns = {"h_wb"};
  t.rows.push_back({critical_depth()});
  return t;
}

Table stokes_table(const RunConfig& cfg) {
  const double h = require(cfg.h, "--h");
  const double eps = require(cfg.eps, "--eps");
  Table t;
  t.provenance =
      Provenance("stokes").add("h", h).add("eps", eps).add("modes", cfg.modes).str();
  t.columns = {"quantity", "value"};
  const StokesExpansion se = stokes_expansion(h);
  const double res = traveling_residual(h, eps, cfg.modes);
  const double res_half = traveling_residual(h, eps / 2.0, cfg.modes);
  t.rows = {
      {std::string("c0"), se.c0},
      {std::string("c2"), se.c2},
      {std::string("eta2_0"), se.eta2_0},
      {std::string("eta2_2"), se.eta2_2},
      {std::string("psi2_2"), se.psi2_2},
      {std::string("residual"), res},
      {std::string("residual_half"), res_half},
      {std::string("residual_ratio"), res / res_half},
  };
  return t;
}

Table spectrum_table(const RunConfig& cfg) {
  const double h = require(cfg.h, "--h");
  const double eps = require(cfg.eps, "--eps");
  const double mu = cfg.mu.value_or(0.0);
  Table t;
  t.provenance = Provenance("spectrum")
                     .add("h", h)
                     .add("eps", eps)
                     .add("mu", mu)
                     .add("modes", cfg.modes)
                     .str();
  t.columns = {"re", "im", "cluster_flag"};
  const Eigen::VectorXcd spec = full_spectrum(assemble_L(h, mu, eps, cfg.modes));
  const SpectrumReport rep = match_spectrum(spec, predict_eigenvalues(h, mu, eps));
  std::vector<int> flag(spec.size(), 0);
  for (const Cd& q : rep.quadruple) {
    int best = -1;
    double dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i < spec.size(); ++i) {
      if (flag[i]) continue;
      const double d = std::abs(spec[i] - q);
      if (d < dist) {
        dist = d;
        best = i;
      }
    }
    if (best >= 0) flag[best] = 1;
  }
  for (int i = 0; i < spec.size(); ++i) {
    t.rows.push_back(
        {spec[i].real(), spec[i].imag(), static_cast<double>(flag[i])});
  }
  return t;
}

Table figure8_table(const RunConfig& cfg) {
  const double h = require(cfg.h, "--h");
  const double eps = require(cfg.eps, "--eps");
  Table t;
  t.provenance = Provenance("figure8")
                     .add("h", h)
                     .add("eps", eps)
                     .add("samples", cfg.samples)
                     .str();
  t.columns = {"mu", "re_plus", "im_plus", "re_minus", "im_minus"};
  for (const Figure8Point& p : figure8(h, eps, cfg.samples)) {
    t.rows.push_back({p.mu, p.re_plus, p.im_plus, p.re_minus, p.im_minus});
  }
  return t;
}

Table band_table(const RunConfig& cfg) {
  const double h = require(cfg.h, "--h");
  const std::vector<double> eps = amplitude_grid(cfg);
  const double tol = cfg.tol.value_or(1e-4);
  Provenance prov("band");
  prov.add("h", h);
  if (cfg.eps_range)
    prov.add("eps-range", *cfg.eps_range);
  else
    prov.add("eps", eps.front());
  prov.add("modes", cfg.modes).add("tol", tol).add("jobs", cfg.jobs);

  // fails fast on the stable side before any numeric work starts
  unstable_band(h, eps.front(), BandMethod::kAnalytic, cfg.modes, tol);

  const int n = static_cast<int>(eps.size());
  std::vector<double> analytic(n, 0.0), numeric(n, 0.0);
  std::vector<std::string> errors(n);
  auto body = [&](int i) {
    try {
      analytic[i] = unstable_band(h, eps[i], BandMethod::kAnalytic, cfg.modes, tol);
      numeric[i] = unstable_band(h, eps[i], BandMethod::kNumeric, cfg.modes, tol);
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  };
  if (cfg.jobs <= 1) {
    for (int i = 0; i < n; ++i) body(i);
  } else {
#pragma omp parallel for schedule(dynamic) num_threads(cfg.jobs)
    for (int i = 0; i < n; ++i) body(i);
  }
  for (const std::string& err : errors) {
    if (!err.empty()) throw std::runtime_error(err);
  }

  Table t;
  t.provenance = prov.str();
  t.columns = {"eps", "mu_bar_analytic", "mu_bar_numeric"};
  for (int i = 0; i < n; ++i) {
    t.rows.push_back({eps[i], analytic[i], numeric[i]});
  }
  return t;
}

void append_matrix(Table& t, const char* stage, const Eigen::MatrixXcd& m) {
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      t.rows.push_back({std::string(stage), static_cast<double>(r),
                        static_cast<double>(c), m(r, c).real(), m(r, c).imag()});
    }
  }
}

Table reduce_table(const RunConfig& cfg) {
  const double h = require(cfg.h, "--h");
  const double eps = require(cfg.eps, "--eps");
  const double mu = require(cfg.mu, "--mu");
  const double tol = cfg.tol.value_or(1e-12);
  Table t;
  t.provenance = Provenance("reduce")
                     .add("h", h)
                     .add("eps", eps)
                     .add("mu", mu)
                     .add("modes", cfg.modes)
                     .add("tol", tol)
                     .add("jobs", cfg.jobs)
                     .str();
  t.columns = {"stage", "row", "col", "re", "im"};

  const ReducedQuadruple q =
      kato_reduction(wave_data(h, eps, cfg.modes), mu, 64, cfg.jobs);
  const ReducedQuadruple q1 = singular_rescaling(q, mu);
  const ReducedQuadruple q2 = decouple_step(q1, solve_homological(q1));
  const DecoupledPair pair = full_decouple(q2, tol);

  append_matrix(t, "b4", q.b4);
  append_matrix(t, "l4", q.l4);
  append_matrix(t, "b4_rescaled", q1.b4);
  append_matrix(t, "l4_rescaled", q1.l4);
  append_matrix(t, "l4_step", q2.l4);
  append_matrix(t, "u_block", pair.u_block);
  append_matrix(t, "s_block", pair.s_block);
  t.rows.push_back({std::string("off_diagonal_residual"), 0.0, 0.0,
                    pair.off_diagonal_residual, 0.0});
  t.rows.push_back({std::string("iterations"), 0.0, 0.0,
                    static_cast<double>(pair.iterations), 0.0});
  return t;
}

}  // namespace

std::vector<double> GridSpec::points() const {
  std::vector<double> v(count);
  if (count == 1) {
    v[0] = lo;
    return v;
  }
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) v[i] = lo + step * i;
  v.back() = hi;
  return v;
}

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  int consumed = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%n", &g.lo, &g.hi, &g.count,
                  &consumed) != 3 ||
      consumed != static_cast<int>(text.size())) {
    throw ConfigError("expected lo:hi:count, got '" + text + "'");
  }
  if (!(g.lo <= g.hi)) throw ConfigError("range lo exceeds hi in '" + text + "'");
  if (g.count < 1) throw ConfigError("range count must be positive in '" + text + "'");
  return g;
}

int run_command(const std::string& command, const RunConfig& cfg,
                std::ostream& sink) {
  if (command == "validate") {
    return run_acceptance(sink) == 0 ? 0 : 1;
  }
  Table t;
  if (command == "coeffs")
    t = coeffs_table(cfg);
  else if (command == "critical-depth")
    t = critical_depth_table(cfg);
  else if (command == "stokes")
    t = stokes_table(cfg);
  else if (command == "spectrum")
    t = spectrum_table(cfg);
  else if (command == "figure8")
    t = figure8_table(cfg);
  else if (command == "band")
    t = band_table(cfg);
  else if (command == "reduce")
    t = reduce_table(cfg);
  else
    throw ConfigError("unknown command: " + command);
  write_table(sink, t, cfg.format);
  return 0;
}

}  // namespace bfwave
