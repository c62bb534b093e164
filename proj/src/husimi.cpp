// Copyright 2026 The gausslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gausslab/husimi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "gausslab/error.hpp"
#include "gausslab/kernels/kernels.hpp"
#include "gausslab/parallel.hpp"

namespace gausslab {

namespace {

constexpr double kPi = std::numbers::pi;

// Thermal weights N0^k / (N0 + 1)^(k + 1), truncated once the remainder is
// below 1e-16.
std::vector<double> thermal_weights(double n0) {
  if (n0 <= 0.0) return {1.0};
  std::vector<double> w;
  const double q = n0 / (n0 + 1.0);
  double wk = 1.0 / (n0 + 1.0);
  double remaining = 1.0;
  while (remaining > 1e-16 && w.size() < 4096) {
    w.push_back(wk);
    remaining -= wk;
    wk *= q;
  }
  return w;
}

// Probability that a Fock-diagonal Q-function mass lies beyond radius r:
// sum_n P(n) * Poisson CDF(n; r^2).
double radial_tail(const std::vector<double>& pop, double r) {
  const double lam = r * r;
  double log_term = -lam;  // log of e^{-lam} lam^k / k!
  double cdf = 0.0;
  double tail = 0.0;
  for (std::size_t n = 0; n < pop.size(); ++n) {
    if (n > 0) log_term += std::log(lam) - std::log(static_cast<double>(n));
    cdf += std::exp(log_term);
    tail += pop[n] * std::min(1.0, cdf);
  }
  return tail;
}

double tail_estimate(const FockOperator& rho, double n0, double r) {
  std::vector<double> pop(static_cast<std::size_t>(rho.space.cutoff));
  for (int n = 0; n < rho.space.cutoff; ++n) pop[static_cast<std::size_t>(n)] = std::max(0.0, rho.matrix(n, n).real());
  double tail = radial_tail(pop, r);
  if (n0 > 0.0) {
    // The reference smears Q by an independent Gaussian shift W with
    // P(|W| > s) = exp(-s^2 / N0); split the radius between the two.
    double best = 1.0;
    for (int i = 1; i < 400; ++i) {
      const double s = r * i / 400.0;
      best = std::min(best, radial_tail(pop, r - s) + std::exp(-s * s / n0));
    }
    tail = best;
  }
  return tail + rho.leakage;
}

int effective_dim(const FockOperator& rho) {
  int top = 1;
  for (int n = 0; n < rho.space.cutoff; ++n) {
    if (std::abs(rho.matrix(n, n)) > 1e-30) top = n + 1;
  }
  return top;
}

}  // namespace

PhaseSpaceGrid PhaseSpaceGrid::make(double radius, double step) {
  if (!(step > 0.0) || !(radius > 0.0)) throw Error(ErrorCode::kParameterOutOfRange, "grid needs R, h > 0");
  if (radius / step > 400.0 + 1e-9) throw Error(ErrorCode::kParameterOutOfRange, "R / h exceeds 400");
  return PhaseSpaceGrid{radius, step};
}

int PhaseSpaceGrid::half() const { return static_cast<int>(std::lround(radius / step)); }

bool PhaseSpaceGrid::inside(int ix, int iy) const {
  const double x = coord(ix), y = coord(iy);
  return x * x + y * y <= radius * radius * (1.0 + 1e-12);
}

ReferenceState ReferenceState::make(double a0) {
  if (!(a0 >= 0.5 - 1e-12)) throw Error(ErrorCode::kParameterOutOfRange, "reference a0 below 1/2");
  return ReferenceState{std::max(a0, 0.5)};
}

double HusimiField::weight() const { return scale * scale * grid.step * grid.step / kPi; }

double HusimiField::integral() const {
  CompensatedSum total;
  const int n = grid.nodes();
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      if (grid.inside(ix, iy)) total.add(at(ix, iy));
    }
  }
  return total.value() * weight();
}

double HusimiField::max_value() const { return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end()); }

HusimiField husimi_density(const FockOperator& rho, ReferenceState ref, PhaseSpaceGrid grid, double scale,
                           double tail_limit, int threads) {
  if (rho.space.modes != 1) throw Error(ErrorCode::kDimensionMismatch, "husimi_density is one-mode");
  const int n = grid.nodes();
  HusimiField field{grid, scale, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0), 0.0};
  field.tail_mass = tail_estimate(rho, ref.photons(), scale * grid.radius);
  if (field.tail_mass > tail_limit) {
    throw Error(ErrorCode::kTailMassTooLarge, "estimated mass beyond the grid is " + std::to_string(field.tail_mass));
  }

  const int d = effective_dim(rho);
  const CMatrix sigma = hermitian_part(rho.matrix.topLeftCorner(d, d));
  const bool pure = d == 1 || std::abs(sigma.squaredNorm() - std::pow(sigma.trace().real(), 2)) < 1e-13;
  CVector psi;
  if (pure && d > 1) {
    // Recover the vector from the column with the largest diagonal entry.
    Eigen::Index j = 0;
    sigma.diagonal().real().maxCoeff(&j);
    psi = sigma.col(j) / std::sqrt(sigma(j, j).real());
  }
  const std::vector<double> w = thermal_weights(ref.photons());
  const auto& kern = kernels::active();
  std::vector<double> sqrt_n(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) sqrt_n[static_cast<std::size_t>(i)] = std::sqrt(static_cast<double>(i));

  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t row) {
    const int iy = static_cast<int>(row);
    double* out = field.values.data() + row * static_cast<std::size_t>(n);
    CVector v(d), next(d), u(d);
    for (int ix = 0; ix < n; ++ix) {
      const cplx z = scale * cplx(grid.coord(ix), grid.coord(iy));
      // v starts as <m|z> and steps through D(z)|k> via
      // v_k = (a^+ - conj(z)) v_{k-1} / sqrt(k), exact on the first d levels.
      cplx a = std::exp(-0.5 * std::norm(z));
      for (int m = 0; m < d; ++m) {
        if (m > 0) a *= z / sqrt_n[static_cast<std::size_t>(m)];
        v(m) = a;
      }
      double acc = 0.0;
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (k > 0) {
          const double inv = 1.0 / std::sqrt(static_cast<double>(k));
          for (int m = 0; m < d; ++m) {
            const cplx raised = m > 0 ? sqrt_n[static_cast<std::size_t>(m)] * v(m - 1) : cplx(0.0);
            next(m) = (raised - std::conj(z) * v(m)) * inv;
          }
          v.swap(next);
        }
        // Entries below 1e-17 of the peak cannot move the result.
        const double cut = v.cwiseAbs().maxCoeff() * 1e-17;
        int lo = 0, hi = d;
        while (lo < hi && std::abs(v(lo)) <= cut) ++lo;
        while (hi > lo && std::abs(v(hi - 1)) <= cut) --hi;
        if (lo == hi) continue;
        const int len = hi - lo;
        double q;
        if (d == 1) {
          q = std::norm(v(0)) * sigma(0, 0).real();
        } else if (pure) {
          double dot[2];
          kern.cdotc(reinterpret_cast<const double*>(v.data() + lo), reinterpret_cast<const double*>(psi.data() + lo),
                     static_cast<std::size_t>(len), dot);
          q = dot[0] * dot[0] + dot[1] * dot[1];
        } else {
          u.head(len).setZero();
          double* ur = reinterpret_cast<double*>(u.data());
          for (int j = lo; j < hi; ++j) {
            kern.caxpy(v(j).real(), v(j).imag(), reinterpret_cast<const double*>(sigma.col(j).data() + lo), ur,
                       static_cast<std::size_t>(len));
          }
          double dot[2];
          kern.cdotc(reinterpret_cast<const double*>(v.data() + lo), ur, static_cast<std::size_t>(len), dot);
          q = dot[0];
        }
        acc += w[k] * q;
      }
      out[ix] = std::max(0.0, acc);
    }
  });
  return field;
}

double classical_functional(const HusimiField& field, const ConcaveFunctional& f) {
  CompensatedSum total;
  const int n = field.grid.nodes();
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      if (field.grid.inside(ix, iy)) total.add(f(field.at(ix, iy)));
    }
  }
  return total.value() * field.weight();
}

HusimiField normal_density(double a, PhaseSpaceGrid grid) {
  if (!(a > 0.0)) throw Error(ErrorCode::kParameterOutOfRange, "normal density needs a > 0");
  const int n = grid.nodes();
  HusimiField field{grid, 1.0, std::vector<double>(static_cast<std::size_t>(n) * n), 0.0};
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const double r2 = grid.coord(ix) * grid.coord(ix) + grid.coord(iy) * grid.coord(iy);
      field.values[static_cast<std::size_t>(iy) * n + ix] = std::exp(-r2 / (2.0 * a)) / (2.0 * a);
    }
  }
  field.tail_mass = std::exp(-grid.radius * grid.radius / (2.0 * a));
  return field;
}

HusimiField convolve_normal(const HusimiField& p, double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::kParameterOutOfRange, "convolution needs a > 0");
  const int n = p.grid.nodes();
  const double h = p.scale * p.grid.step;
  // Taps down to e^-40 of the center.
  const int reach = std::min(n - 1, static_cast<int>(std::ceil(std::sqrt(80.0 * a) / h)));
  std::vector<double> taps(static_cast<std::size_t>(reach) + 1);
  for (int j = 0; j <= reach; ++j) taps[static_cast<std::size_t>(j)] = std::exp(-(j * h) * (j * h) / (2.0 * a));
  const double norm = h * h / (2.0 * a * kPi);
  const auto& kern = kernels::active();

  auto pass = [&](const std::vector<double>& in) {
    std::vector<double> out(in.size(), 0.0);
    for (int r = 0; r < n; ++r) {
      const double* src = in.data() + static_cast<std::size_t>(r) * n;
      double* dst = out.data() + static_cast<std::size_t>(r) * n;
      kern.axpy(taps[0], src, dst, static_cast<std::size_t>(n));
      for (int j = 1; j <= reach; ++j) {
        const double t = taps[static_cast<std::size_t>(j)];
        const std::size_t len = static_cast<std::size_t>(n - j);
        kern.axpy(t, src, dst + j, len);  // dst[i] += t src[i - j]
        kern.axpy(t, src + j, dst, len);  // dst[i] += t src[i + j]
      }
    }
    return out;
  };
  auto transpose = [&](const std::vector<double>& in) {
    std::vector<double> out(in.size());
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) out[static_cast<std::size_t>(c) * n + r] = in[static_cast<std::size_t>(r) * n + c];
    }
    return out;
  };
  HusimiField out = p;
  out.values = transpose(pass(transpose(pass(p.values))));
  for (double& v : out.values) v *= norm;
  return out;
}

GaugeCovariantChannel measure_reprepare_channel(double c, double a0, double a0p) {
  if (!(c > 0.0)) throw Error(ErrorCode::kParameterOutOfRange, "c must be positive");
  if (!(a0 >= 0.5 - 1e-12) || !(a0p >= 0.5 - 1e-12)) {
    throw Error(ErrorCode::kParameterOutOfRange, "reference correlations must be >= 1/2");
  }
  CMatrix K(1, 1), mu(1, 1);
  K(0, 0) = c;
  mu(0, 0) = a0p + c * c * a0;
  return build_channel(K, mu);
}

FockOperator measure_reprepare_output(const FockOperator& rho, double c, double a0, double a0p,
                                      double leakage_target) {
  if (rho.space.modes != 1) throw Error(ErrorCode::kDimensionMismatch, "measure-reprepare is one-mode");
  const GaugeCovariantChannel ch = measure_reprepare_channel(c, a0, a0p);
  const FockChannel fc = FockChannel::from_channel(ch);
  const double kappa = fc.per_mode.front().kappa;
  int d = std::max({rho.space.cutoff, 48, static_cast<int>(std::ceil(8.0 * (kappa * kappa - 1.0))) + 1});
  while (d <= 4096) {
    FockOperator out = apply_channel(fc, embed(rho, d));
    if (out.leakage - rho.leakage <= leakage_target) return out;
    d = static_cast<int>(std::ceil(d * 1.25));
  }
  throw Error(ErrorCode::kTruncationLeakage, "measure-reprepare output needs a cutoff above 4096");
}

HusimiField upper_symbol(const FockOperator& rho, double c, double a0, double a0p, PhaseSpaceGrid grid,
                         int threads) {
  const FockOperator sigma = measure_reprepare_output(rho, c, a0, a0p);
  return husimi_density(sigma, ReferenceState::make(a0p), grid, c, 1e-4, threads);
}

HusimiField lower_symbol(const FockOperator& rho, double c, double a0, PhaseSpaceGrid grid, int threads) {
  HusimiField field = husimi_density(rho, ReferenceState::make(a0), grid, 1.0, 1e-4, threads);
  for (double& v : field.values) v /= c * c;
  field.scale = c;
  return field;
}

SandwichFields sandwich_fields(const FockOperator& rho, double c, double a0, double a0p, PhaseSpaceGrid grid,
                               int threads) {
  HusimiField p = husimi_density(rho, ReferenceState::make(a0), grid, 1.0, 1e-4, threads);
  HusimiField lower = p;
  for (double& v : lower.values) v /= c * c;
  lower.scale = c;
  FockOperator sigma = measure_reprepare_output(rho, c, a0, a0p);
  HusimiField upper = husimi_density(sigma, ReferenceState::make(a0p), grid, c, 1e-4, threads);
  SpectrumVector spec = spectrum(sigma);
  return SandwichFields{c, std::move(p), std::move(lower), std::move(upper), std::move(sigma), std::move(spec)};
}

BerezinLiebReport berezin_lieb_check(const SandwichFields& fields, const ConcaveFunctional& f) {
  if (std::abs(fields.lower.integral() + fields.lower.tail_mass - 1.0) > 1e-3) {
    throw Error(ErrorCode::kQuadratureError, "lower symbol does not integrate to 1");
  }
  BerezinLiebReport r;
  r.lower = classical_functional(fields.lower, f);
  r.middle = trace_functional(fields.output_spectrum, f);
  r.upper = classical_functional(fields.upper, f);
  r.lower_slack = r.middle - r.lower;
  r.upper_slack = r.upper - r.middle;
  r.leakage = fields.sigma.leakage;
  r.output_cutoff = fields.sigma.space.cutoff;
  return r;
}

BerezinLiebReport berezin_lieb_check(const FockOperator& rho, double c, double a0, double a0p,
                                     const ConcaveFunctional& f, PhaseSpaceGrid grid, int threads) {
  return berezin_lieb_check(sandwich_fields(rho, c, a0, a0p, grid, threads), f);
}

double convolution_deviation(const SandwichFields& fields, double a0p) {
  const double c = fields.c;
  const HusimiField smooth = convolve_normal(fields.input, a0p / (c * c));
  const PhaseSpaceGrid& grid = fields.upper.grid;
  const int n = grid.nodes();
  double worst = 0.0;
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      if (!grid.inside(ix, iy)) continue;
      worst = std::max(worst, std::abs(fields.upper.at(ix, iy) - smooth.at(ix, iy) / (c * c)));
    }
  }
  return worst;
}

double convolution_deviation(const FockOperator& rho, double c, double a0, double a0p, PhaseSpaceGrid grid,
                             int threads) {
  return convolution_deviation(sandwich_fields(rho, c, a0, a0p, grid, threads), a0p);
}

OptimalityReport wehrl_optimality_test(double a0, std::size_t n_samples, std::uint64_t seed,
                                       PhaseSpaceGrid grid, const ConcaveFunctional& f, int cutoff, int levels,
                                       double tol, int threads) {
  const FockSpace space = FockSpace::make(1, cutoff);
  const ReferenceState ref = ReferenceState::make(a0);
  auto evaluate = [&](const PureState& psi, double* tail) {
    const HusimiField field = husimi_density(density(psi), ref, grid, 1.0, 1e-4, 1);
    *tail = field.tail_mass;
    return classical_functional(field, f);
  };
  OptimalityReport r;
  r.seed = seed;
  double tail = 0.0;
  r.vacuum_value = evaluate(fock_state(0, space), &tail);
  r.max_leakage = tail;
  const std::string fname = f.describe();

  std::vector<Probe> inputs;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const std::uint64_t s = mix_seed(seed, i);
    inputs.push_back({"haar#" + std::to_string(i), random_pure_state(s, space, levels), s, false});
  }
  inputs.push_back({"fock|1>", fock_state(1, space), 0, false});
  inputs.push_back({"fock|2>", fock_state(2, space), 0, false});
  inputs.push_back({"coherent(0.8+0i)", coherent_state(0.8, space), 0, true});

  std::vector<double> values(inputs.size()), tails(inputs.size());
  parallel_for(inputs.size(), threads, [&](std::size_t i) { values[i] = evaluate(inputs[i].state, &tails[i]); });
  r.best_sampled_value = INFINITY;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const double v = values[i];
    r.records.push_back({inputs[i].seed, inputs[i].descriptor, fname, v, v - r.vacuum_value, tails[i]});
    r.max_leakage = std::max(r.max_leakage, tails[i]);
    if (v < r.vacuum_value - tol) ++r.below_vacuum;
    if (v < r.best_sampled_value) {
      r.best_sampled_value = v;
      r.best_input_descriptor = inputs[i].descriptor;
    }
  }
  r.samples = inputs.size();
  r.gap = r.best_sampled_value - r.vacuum_value;
  return r;
}

void write_field_csv(const HusimiField& field, std::ostream& os) {
  const int n = field.grid.nodes();
  const auto old = os.precision(12);
  os << "x,y,p\n";
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      if (!field.grid.inside(ix, iy)) continue;
      os << field.scale * field.grid.coord(ix) << ',' << field.scale * field.grid.coord(iy) << ','
         << field.at(ix, iy) << '\n';
    }
  }
  os.precision(old);
}

}  // namespace gausslab
