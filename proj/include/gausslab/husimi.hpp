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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gausslab/fock.hpp"
#include "gausslab/majorization.hpp"
#include "gausslab/spectrum.hpp"

namespace gausslab {

/// Square Cartesian grid x, y in {-R, ..., R} with step h. Fields are stored
/// on the whole square; integrals run over the disk |z| <= R with weight
/// h^2 / pi (the measure d^2 z / pi).
struct PhaseSpaceGrid {
  double radius = 6.0;
  double step = 0.05;

  /// Throws ParameterOutOfRange unless h > 0 and R / h <= 400.
  static PhaseSpaceGrid make(double radius, double step);

  int half() const;
  int nodes() const { return 2 * half() + 1; }
  double coord(int i) const { return (i - half()) * step; }
  bool inside(int ix, int iy) const;
};

/// Correlation scalar a0 >= 1/2 of the thermal reference state.
struct ReferenceState {
  double a0 = 0.5;

  static ReferenceState make(double a0);
  double photons() const { return a0 - 0.5; }
};

/// Density against d^2 z / pi sampled at z = scale * (x + i y) for the grid
/// nodes (x, y). The scale stretches the grid without resampling.
struct HusimiField {
  PhaseSpaceGrid grid;
  double scale = 1.0;
  std::vector<double> values;  // row-major, index iy * nodes + ix
  double tail_mass = 0.0;

  double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * grid.nodes() + ix]; }
  double weight() const;
  /// Quadrature over the disk.
  double integral() const;
  double max_value() const;
};

/// p(z) = Tr rho D(z) rho0 D(z)^* for the thermal rho0 with correlation a0.
/// Throws TailMassTooLarge when the estimated mass beyond the grid exceeds
/// `tail_limit`.
HusimiField husimi_density(const FockOperator& rho, ReferenceState ref, PhaseSpaceGrid grid,
                           double scale = 1.0, double tail_limit = 1e-4, int threads = 1);

/// sum over the disk of f(p(z)) * weight.
double classical_functional(const HusimiField& field, const ConcaveFunctional& f);

/// q_a(z) = e^{-|z|^2 / (2a)} / (2a).
HusimiField normal_density(double a, PhaseSpaceGrid grid);

/// (p * q_a)(z) = integral p(w) q_a(z - w) d^2 w / pi on the same nodes,
/// by a separable pass over rows then columns.
HusimiField convolve_normal(const HusimiField& p, double a);

/// K = c, mu = a0p + c^2 a0.
GaugeCovariantChannel measure_reprepare_channel(double c, double a0, double a0p);

/// Phi_c[rho] embedded at the smallest cutoff (grown geometrically from the
/// input cutoff) whose leakage is at most `leakage_target`.
FockOperator measure_reprepare_output(const FockOperator& rho, double c, double a0, double a0p,
                                      double leakage_target = 1e-9);

/// Husimi density of Phi_c[rho] with reference a0p, sampled at c * (x + i y).
HusimiField upper_symbol(const FockOperator& rho, double c, double a0, double a0p, PhaseSpaceGrid grid,
                         int threads = 1);

/// c^-2 p_rho(z / c) sampled at z = c * (x + i y).
HusimiField lower_symbol(const FockOperator& rho, double c, double a0, PhaseSpaceGrid grid, int threads = 1);

struct BerezinLiebReport {
  double lower = 0.0;
  double middle = 0.0;
  double upper = 0.0;
  double lower_slack = 0.0;  // middle - lower
  double upper_slack = 0.0;  // upper - middle
  double leakage = 0.0;
  int output_cutoff = 0;
};

/// Everything the sandwich and convolution checks need for one (rho, c).
struct SandwichFields {
  double c = 1.0;
  HusimiField input;  // p_rho on the unscaled grid
  HusimiField lower;  // c^-2 p_rho(z / c)
  HusimiField upper;  // pbar
  FockOperator sigma;  // Phi_c[rho]
  SpectrumVector output_spectrum;
};

SandwichFields sandwich_fields(const FockOperator& rho, double c, double a0, double a0p, PhaseSpaceGrid grid,
                               int threads = 1);

/// Throws QuadratureError when the lower symbol integrates off 1 by > 1e-3.
BerezinLiebReport berezin_lieb_check(const SandwichFields& fields, const ConcaveFunctional& f);

/// Throws QuadratureError when the lower symbol integrates off 1 by > 1e-3.
BerezinLiebReport berezin_lieb_check(const FockOperator& rho, double c, double a0, double a0p,
                                     const ConcaveFunctional& f, PhaseSpaceGrid grid, int threads = 1);

/// sup over the disk of |pbar(c w) - c^-2 (p_rho * q_{a0p / c^2})(w)|.
double convolution_deviation(const SandwichFields& fields, double a0p);

double convolution_deviation(const FockOperator& rho, double c, double a0, double a0p, PhaseSpaceGrid grid,
                             int threads = 1);

/// Classical functional over Haar samples on `levels` states plus |1>, |2>
/// and a coherent state; below_vacuum counts values under the coherent value
/// minus `tol`.
OptimalityReport wehrl_optimality_test(double a0, std::size_t n_samples, std::uint64_t seed,
                                       PhaseSpaceGrid grid, const ConcaveFunctional& f, int cutoff = 40,
                                       int levels = 6, double tol = 1e-3, int threads = 1);

/// CSV rows x,y,p over the disk, with z = scale * (x + i y).
void write_field_csv(const HusimiField& field, std::ostream& os);

}  // namespace gausslab
