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

#include "gausslab/fock.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "gausslab/dilation.hpp"
#include "gausslab/error.hpp"
#include "gausslab/kernels/kernels.hpp"

namespace gausslab {

namespace {

// Inputs whose marginal population is below this are treated as empty; the
// dropped mass shows up in the leakage.
constexpr double kSupportFloor = 1e-30;

FockSpace one_mode(const FockSpace& space) { return FockSpace{1, space.cutoff}; }

void require_mode(const FockSpace& space, int mode) {
  if (mode < 0 || mode >= space.modes) throw Error(ErrorCode::kDimensionMismatch, "mode index out of range");
}

// Population of each level of `mode`.
std::vector<double> marginal_populations(const FockOperator& rho, int mode) {
  const int d = rho.space.cutoff;
  std::vector<double> pop(static_cast<std::size_t>(d), 0.0);
  for (int i = 0; i < rho.space.dim(); ++i) {
    const int level = rho.space.modes == 1 ? i : (mode == 0 ? i / d : i % d);
    pop[static_cast<std::size_t>(level)] += std::max(0.0, rho.matrix(i, i).real());
  }
  return pop;
}

int effective_support(const FockOperator& rho, int mode) {
  const std::vector<double> pop = marginal_populations(rho, mode);
  int top = 0;
  for (int n = 0; n < static_cast<int>(pop.size()); ++n) {
    if (pop[static_cast<std::size_t>(n)] > kSupportFloor) top = n + 1;
  }
  return top;
}

double leakage_of(const CMatrix& m) { return std::max(0.0, 1.0 - m.trace().real()); }

double* raw(CMatrix& m) { return reinterpret_cast<double*>(m.data()); }
const double* raw(const CMatrix& m) { return reinterpret_cast<const double*>(m.data()); }

}  // namespace

FockSpace FockSpace::make(int modes, int cutoff) {
  if (modes != 1 && modes != 2) throw Error(ErrorCode::kParameterOutOfRange, "Fock space supports 1 or 2 modes");
  if (cutoff < 2) throw Error(ErrorCode::kParameterOutOfRange, "cutoff must be at least 2");
  if (modes == 2 && cutoff > 64) throw Error(ErrorCode::kParameterOutOfRange, "cutoff^modes exceeds 4096");
  if (modes == 1 && cutoff > 4096) throw Error(ErrorCode::kParameterOutOfRange, "cutoff exceeds 4096");
  return FockSpace{modes, cutoff};
}

FockOperator density(const PureState& psi) {
  return FockOperator{psi.space, psi.amplitudes * psi.amplitudes.adjoint(), 0.0};
}

PureState fock_state(int n, FockSpace space) {
  if (space.modes != 1 || n < 0 || n >= space.cutoff) {
    throw Error(ErrorCode::kParameterOutOfRange, "Fock level outside the one-mode space");
  }
  PureState psi{space, CVector::Zero(space.dim())};
  psi.amplitudes(n) = 1.0;
  return psi;
}

PureState product_state(const PureState& a, const PureState& b) {
  if (a.space.modes != 1 || b.space != a.space) {
    throw Error(ErrorCode::kDimensionMismatch, "product needs two one-mode states of equal cutoff");
  }
  const int d = a.space.cutoff;
  PureState out{FockSpace::make(2, d), CVector(d * d)};
  for (int i = 0; i < d; ++i) out.amplitudes.segment(i * d, d) = a.amplitudes(i) * b.amplitudes;
  return out;
}

PureState embed(const PureState& psi, int cutoff) {
  const FockSpace space = FockSpace::make(psi.space.modes, cutoff);
  const int d_in = psi.space.cutoff;
  PureState out{space, CVector::Zero(space.dim())};
  for (int i = 0; i < psi.space.dim(); ++i) {
    const int n0 = psi.space.modes == 1 ? i : i / d_in;
    const int n1 = psi.space.modes == 1 ? 0 : i % d_in;
    if (n0 >= cutoff || n1 >= cutoff) {
      if (psi.amplitudes(i) != 0.0) throw Error(ErrorCode::kDimensionMismatch, "embedding drops amplitude");
      continue;
    }
    out.amplitudes(psi.space.modes == 1 ? n0 : n0 * cutoff + n1) = psi.amplitudes(i);
  }
  return out;
}

FockOperator embed(const FockOperator& rho, int cutoff) {
  if (rho.space.modes != 1) throw Error(ErrorCode::kDimensionMismatch, "operator embedding is one-mode");
  const FockSpace space = FockSpace::make(1, cutoff);
  FockOperator out{space, CMatrix::Zero(cutoff, cutoff), rho.leakage};
  const int keep = std::min(cutoff, rho.space.cutoff);
  if (keep < rho.space.cutoff && support_beyond(rho, keep) != 0.0) {
    throw Error(ErrorCode::kDimensionMismatch, "embedding drops matrix entries");
  }
  out.matrix.topLeftCorner(keep, keep) = rho.matrix.topLeftCorner(keep, keep);
  return out;
}

PureState superposition(const std::vector<cplx>& amplitudes, FockSpace space) {
  if (space.modes != 1 || static_cast<int>(amplitudes.size()) > space.cutoff || amplitudes.empty()) {
    throw Error(ErrorCode::kParameterOutOfRange, "superposition does not fit the space");
  }
  PureState psi{space, CVector::Zero(space.dim())};
  for (std::size_t i = 0; i < amplitudes.size(); ++i) psi.amplitudes(static_cast<Eigen::Index>(i)) = amplitudes[i];
  const double norm = psi.amplitudes.norm();
  if (norm == 0.0) throw Error(ErrorCode::kInvalidState, "zero superposition");
  psi.amplitudes /= norm;
  return psi;
}

PureState coherent_state(cplx zeta, FockSpace space) {
  if (space.modes != 1) throw Error(ErrorCode::kDimensionMismatch, "coherent_state is one-mode");
  if (std::norm(zeta) > space.cutoff / 4.0) throw Error(ErrorCode::kAmplitudeTooLarge, "|zeta|^2 exceeds cutoff/4");
  PureState psi{space, CVector(space.dim())};
  cplx a = std::exp(-0.5 * std::norm(zeta));
  for (int n = 0; n < space.cutoff; ++n) {
    if (n > 0) a *= zeta / std::sqrt(static_cast<double>(n));
    psi.amplitudes(n) = a;
  }
  psi.amplitudes.normalize();
  return psi;
}

FockOperator displacement_matrix(cplx z, FockSpace space) {
  if (space.modes != 1) throw Error(ErrorCode::kDimensionMismatch, "displacement_matrix is one-mode");
  if (std::norm(z) > space.cutoff / 4.0) throw Error(ErrorCode::kAmplitudeTooLarge, "|z|^2 exceeds cutoff/4");
  const int big = 2 * space.cutoff;
  CMatrix gen = CMatrix::Zero(big, big);
  for (int n = 0; n + 1 < big; ++n) {
    const double s = std::sqrt(static_cast<double>(n + 1));
    gen(n + 1, n) = z * s;
    gen(n, n + 1) = -std::conj(z) * s;
  }
  const CMatrix full = gen.exp();
  return FockOperator{space, full.topLeftCorner(space.cutoff, space.cutoff), 0.0};
}

FockOperator gauge_rotation(double phi, FockSpace space) {
  const int d = space.cutoff;
  CVector diag(space.dim());
  for (int i = 0; i < space.dim(); ++i) {
    const int n = space.modes == 1 ? i : i / d + i % d;
    diag(i) = std::polar(1.0, phi * n);
  }
  return FockOperator{space, diag.asDiagonal(), 0.0};
}

FockOperator transpose_state(const FockOperator& rho) {
  return FockOperator{rho.space, rho.matrix.transpose(), rho.leakage};
}

SpectrumVector spectrum(const FockOperator& rho) {
  if (max_abs(rho.matrix - rho.matrix.adjoint()) > 1e-10) {
    throw Error(ErrorCode::kNotHermitian, "density operator is not Hermitian");
  }
  const RVector ev = hermitian_eigenvalues(rho.matrix);
  return SpectrumVector(std::vector<double>(ev.data(), ev.data() + ev.size()), 1e-8);
}

PureState random_pure_state(std::uint64_t seed, FockSpace space, int levels) {
  const int d = space.cutoff;
  const int lv = levels <= 0 ? d : std::min(levels, d);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  PureState psi{space, CVector::Zero(space.dim())};
  for (int i = 0; i < space.dim(); ++i) {
    const bool inside = space.modes == 1 ? i < lv : (i / d < lv && i % d < lv);
    if (!inside) continue;
    const double re = gauss(rng);
    const double im = gauss(rng);
    psi.amplitudes(i) = cplx(re, im);
  }
  psi.amplitudes.normalize();
  return psi;
}

std::vector<double> OneModeChannelKraus::column(int n) const {
  if (n < 0 || n >= cutoff_) throw Error(ErrorCode::kParameterOutOfRange, "input level outside cutoff");
  if (kind_ == Kind::kAttenuator) {
    return *dilation::cached_beamsplitter_column(n, std::acos(parameter_));
  }
  const auto col = dilation::cached_squeezer_column(n, std::acosh(parameter_), cutoff_ - n);
  return std::vector<double>(col->begin(), col->begin() + (cutoff_ - n));
}

std::vector<CMatrix> OneModeChannelKraus::kraus_ops() const {
  const int d = cutoff_;
  std::vector<CMatrix> ops(static_cast<std::size_t>(d), CMatrix::Zero(d, d));
  for (int n = 0; n < d; ++n) {
    const std::vector<double> col = column(n);
    for (int b = 0; b < static_cast<int>(col.size()); ++b) {
      ops[static_cast<std::size_t>(b)](n + shift(b), n) = col[static_cast<std::size_t>(b)];
    }
  }
  return ops;
}

OneModeChannelKraus attenuator_kraus(double k, FockSpace space) {
  if (!(k >= 0.0 && k <= 1.0)) throw Error(ErrorCode::kParameterOutOfRange, "attenuator k outside [0, 1]");
  if (space.modes != 1) throw Error(ErrorCode::kDimensionMismatch, "Kraus sets are one-mode");
  return OneModeChannelKraus(OneModeChannelKraus::Kind::kAttenuator, k, space.cutoff);
}

OneModeChannelKraus amplifier_kraus(double kappa, FockSpace space) {
  if (!(kappa >= 1.0)) throw Error(ErrorCode::kParameterOutOfRange, "amplifier gain below 1");
  if (kappa * kappa - 1.0 > space.cutoff / 8.0) {
    throw Error(ErrorCode::kParameterOutOfRange, "kappa^2 - 1 exceeds cutoff/8");
  }
  if (space.modes != 1) throw Error(ErrorCode::kDimensionMismatch, "Kraus sets are one-mode");
  return OneModeChannelKraus(OneModeChannelKraus::Kind::kAmplifier, kappa, space.cutoff);
}

FockOperator apply_kraus(const OneModeChannelKraus& ch, const FockOperator& rho, int mode) {
  require_mode(rho.space, mode);
  const int d = rho.space.cutoff;
  if (ch.cutoff() != d) throw Error(ErrorCode::kDimensionMismatch, "Kraus cutoff differs from the state");
  const int support = effective_support(rho, mode);
  const int nb = ch.branch_count();

  // coeff[b][n] as interleaved complex, zero where undefined.
  std::vector<std::vector<double>> coeff(static_cast<std::size_t>(nb),
                                         std::vector<double>(2 * static_cast<std::size_t>(d), 0.0));
  for (int n = 0; n < support; ++n) {
    const std::vector<double> col = ch.column(n);
    for (int b = 0; b < static_cast<int>(col.size()); ++b) {
      coeff[static_cast<std::size_t>(b)][2 * static_cast<std::size_t>(n)] = col[static_cast<std::size_t>(b)];
    }
  }

  const auto& k = kernels::active();
  const int dim = rho.space.dim();
  FockOperator out{rho.space, CMatrix::Zero(dim, dim), 0.0};
  const double* src = raw(rho.matrix);
  double* dst = raw(out.matrix);
  const std::size_t ld = 2 * static_cast<std::size_t>(dim);

  for (int b = 0; b < nb; ++b) {
    const int s = ch.shift(b);
    const int lo = std::max(0, -s);
    const int hi = std::min(support, d - s);
    if (lo >= hi) continue;
    const double* c = coeff[static_cast<std::size_t>(b)].data();
    if (rho.space.modes == 1) {
      for (int m = lo; m < hi; ++m) {
        const double cm = c[2 * m];
        if (cm == 0.0) continue;
        k.cmul_conj_axpy(cm, 0.0, c + 2 * lo, src + ld * m + 2 * lo, dst + ld * (m + s) + 2 * (lo + s),
                         static_cast<std::size_t>(hi - lo));
      }
      continue;
    }
    for (int col = 0; col < dim; ++col) {
      const int m0 = col / d, m1 = col % d;
      if (mode == 1) {
        if (m1 < lo || m1 >= hi || c[2 * m1] == 0.0) continue;
        const double cm = c[2 * m1];
        const int out_col = m0 * d + m1 + s;
        for (int n0 = 0; n0 < d; ++n0) {
          k.cmul_conj_axpy(cm, 0.0, c + 2 * lo, src + ld * col + 2 * (n0 * d + lo),
                           dst + ld * out_col + 2 * (n0 * d + lo + s), static_cast<std::size_t>(hi - lo));
        }
      } else {
        if (m0 < lo || m0 >= hi || c[2 * m0] == 0.0) continue;
        const double cm = c[2 * m0];
        const int out_col = (m0 + s) * d + m1;
        for (int n0 = lo; n0 < hi; ++n0) {
          const double a = cm * c[2 * n0];
          if (a == 0.0) continue;
          k.caxpy(a, 0.0, src + ld * col + 2 * (n0 * d), dst + ld * out_col + 2 * ((n0 + s) * d),
                  static_cast<std::size_t>(d));
        }
      }
    }
  }
  out.leakage = leakage_of(out.matrix);
  return out;
}

FockOperator apply_phase(double phi, const FockOperator& rho, int mode) {
  require_mode(rho.space, mode);
  const int d = rho.space.cutoff;
  const int dim = rho.space.dim();
  auto level = [&](int i) { return rho.space.modes == 1 ? i : (mode == 0 ? i / d : i % d); };
  FockOperator out = rho;
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) out.matrix(i, j) *= std::polar(1.0, phi * (level(i) - level(j)));
  }
  return out;
}

FockOperator complementary_output(double kappa, const FockOperator& rho, int system_cap) {
  if (rho.space.modes != 1) throw Error(ErrorCode::kDimensionMismatch, "complementary_output is one-mode");
  if (!(kappa >= 1.0)) throw Error(ErrorCode::kParameterOutOfRange, "amplifier gain below 1");
  const int d = rho.space.cutoff;
  const int cap = system_cap > 0 ? system_cap : 2 * d;
  const int support = effective_support(rho, 0);
  const double r = std::acosh(kappa);
  // cols[n][l] = amplitude of |n + l>|l>, kept while n + l < cap and l < d.
  std::vector<std::vector<double>> cols(static_cast<std::size_t>(support));
  for (int n = 0; n < support; ++n) {
    const int len = std::min(d, cap - n);
    if (len <= 0) continue;
    const auto c = dilation::cached_squeezer_column(n, r, len);
    cols[static_cast<std::size_t>(n)].assign(c->begin(), c->begin() + len);
  }
  auto amp = [&](int n, int l) {
    if (n < 0 || n >= support) return 0.0;
    const auto& c = cols[static_cast<std::size_t>(n)];
    return l < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(l)] : 0.0;
  };
  FockOperator out{rho.space, CMatrix::Zero(d, d), 0.0};
  for (int lp = 0; lp < d; ++lp) {
    for (int l = 0; l < d; ++l) {
      cplx acc = 0.0;
      for (int n = 0; n < support; ++n) {
        const int np = n + l - lp;
        if (np < 0 || np >= support || n + l >= cap) continue;
        const double a = amp(n, l) * amp(np, lp);
        if (a != 0.0) acc += a * rho.matrix(n, np);
      }
      out.matrix(l, lp) = acc;
    }
  }
  out.leakage = leakage_of(out.matrix);
  return out;
}

OneModeRealization realize(const GaugeCovariantChannel& one_mode) {
  if (one_mode.modes() != 1) throw Error(ErrorCode::kDimensionMismatch, "realize expects one mode");
  const Decomposition dec = decompose(one_mode);
  const cplx k1 = dec.attenuator.K()(0, 0);
  OneModeRealization r;
  r.k1 = std::min(1.0, std::abs(k1));
  r.phase = std::abs(k1) > 0.0 ? std::arg(k1) : 0.0;
  r.kappa = std::max(1.0, dec.amplifier.K()(0, 0).real());
  return r;
}

FockChannel FockChannel::from_channel(const GaugeCovariantChannel& ch) {
  FockChannel fc;
  if (ch.modes() == 1) {
    fc.per_mode.push_back(realize(ch));
    return fc;
  }
  if (ch.modes() != 2) throw Error(ErrorCode::kDimensionMismatch, "Fock realization covers 1 or 2 modes");
  if (std::abs(ch.K()(0, 1)) > 1e-12 || std::abs(ch.K()(1, 0)) > 1e-12 || std::abs(ch.mu()(0, 1)) > 1e-12) {
    throw Error(ErrorCode::kNotDiagonal, "two-mode Fock realization needs diagonal K and mu");
  }
  for (int j = 0; j < 2; ++j) {
    CMatrix K(1, 1), mu(1, 1);
    K(0, 0) = ch.K()(j, j);
    mu(0, 0) = ch.mu()(j, j);
    fc.per_mode.push_back(realize(GaugeCovariantChannel::trusted(K, mu)));
  }
  return fc;
}

FockOperator apply_channel(const FockChannel& ch, const FockOperator& rho) {
  if (static_cast<int>(ch.per_mode.size()) != rho.space.modes) {
    throw Error(ErrorCode::kDimensionMismatch, "channel and state mode counts differ");
  }
  const FockSpace single = one_mode(rho.space);
  FockOperator out = rho;
  for (int mode = 0; mode < rho.space.modes; ++mode) {
    const OneModeRealization& r = ch.per_mode[static_cast<std::size_t>(mode)];
    if (r.k1 < 1.0) out = apply_kraus(attenuator_kraus(r.k1, single), out, mode);
    if (r.phase != 0.0) out = apply_phase(r.phase, out, mode);
    if (r.kappa > 1.0) out = apply_kraus(amplifier_kraus(r.kappa, single), out, mode);
  }
  out.leakage = leakage_of(out.matrix);
  return out;
}

double trace_power(const FockOperator& rho, double p) {
  if (p == 2.0) return rho.matrix.squaredNorm();
  double total = 0.0;
  const SpectrumVector spec = spectrum(rho);
  for (double v : spec.values()) total += v > 0.0 ? std::pow(v, p) : 0.0;
  return total;
}

cplx mean_amplitude(const FockOperator& rho, int mode) {
  require_mode(rho.space, mode);
  const int d = rho.space.cutoff;
  const int step = rho.space.modes == 1 || mode == 1 ? 1 : d;
  cplx acc = 0.0;
  for (int i = 0; i < rho.space.dim(); ++i) {
    const int n = rho.space.modes == 1 ? i : (mode == 0 ? i / d : i % d);
    if (n > 0) acc += std::sqrt(static_cast<double>(n)) * rho.matrix(i, i - step);
  }
  return acc;
}

double correlation_scalar(const FockOperator& rho, int mode) {
  const std::vector<double> pop = marginal_populations(rho, mode);
  double mean_n = 0.0;
  for (std::size_t n = 0; n < pop.size(); ++n) mean_n += static_cast<double>(n) * pop[n];
  return mean_n - std::norm(mean_amplitude(rho, mode)) + 0.5;
}

double fidelity(const PureState& psi, const FockOperator& rho) {
  return psi.amplitudes.dot(rho.matrix * psi.amplitudes).real();
}

double support_beyond(const FockOperator& rho, int level) {
  const int d = rho.space.cutoff;
  auto outside = [&](int i) {
    if (rho.space.modes == 1) return i >= level;
    return i / d >= level || i % d >= level;
  };
  double worst = 0.0;
  for (int j = 0; j < rho.space.dim(); ++j) {
    for (int i = 0; i < rho.space.dim(); ++i) {
      if (outside(i) || outside(j)) worst = std::max(worst, std::abs(rho.matrix(i, j)));
    }
  }
  return worst;
}

}  // namespace gausslab
