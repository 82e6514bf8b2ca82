#include "lyap/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <type_traits>

#include "lyap/error.hpp"
#include "lyap/parallel.hpp"

namespace lyap::sim {
namespace {

using cd = std::complex<double>;

constexpr double kSqrtHalf = 0.70710678118654752440;
constexpr int kMaxRenorm = 64;
// |log norm| over one window above which the window is redone at half cadence.
constexpr double kWindowLogLimit = 600.0;
// |log norm| above which later windows use a tighter cadence.
constexpr double kWindowLogWarn = 200.0;

cd complex_normal(Rng& rng) {
  const double re = rng.normal() * kSqrtHalf;
  const double im = rng.normal() * kSqrtHalf;
  return {re, im};
}

Quaternion quaternion_normal(Rng& rng) {
  Quaternion q;
  q.s = 0.5 * rng.normal();
  q.x = 0.5 * rng.normal();
  q.y = 0.5 * rng.normal();
  q.z = 0.5 * rng.normal();
  return q;
}

double conj_mul(double a, double b) { return a * b; }
cd conj_mul(const cd& a, const cd& b) { return std::conj(a) * b; }
double abs_sq(double a) { return a * a; }
double abs_sq(const cd& a) { return std::norm(a); }

// n x m frame, column-major.
template <typename T>
struct Frame {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<T> data;

  T* col(std::size_t c) { return data.data() + c * n; }
  const T* col(std::size_t c) const { return data.data() + c * n; }
};

// W = A Q for a freshly drawn A. Row i of A is scaled by sigma[i] (by
// sigma[i/2] in the phi representation). Draw order matches sample_matrix.
template <typename T>
void apply_random(Beta beta, std::span<const double> sigma, const Frame<T>& q, Frame<T>& w, Rng& rng) {
  std::fill(w.data.begin(), w.data.end(), T{});
  const std::size_t d = sigma.size();
  const std::size_t m = q.m;
  const std::size_t n = q.n;
  if constexpr (std::is_same_v<T, double>) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const double g = rng.normal();
        for (std::size_t c = 0; c < m; ++c) w.data[c * n + i] += g * q.data[c * n + j];
      }
      for (std::size_t c = 0; c < m; ++c) w.data[c * n + i] *= sigma[i];
    }
  } else {
    if (beta == Beta::Complex) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          const cd g = complex_normal(rng);
          for (std::size_t c = 0; c < m; ++c) w.data[c * n + i] += g * q.data[c * n + j];
        }
        for (std::size_t c = 0; c < m; ++c) w.data[c * n + i] *= sigma[i];
      }
    } else {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          const Quaternion g = quaternion_normal(rng);
          const cd a(g.s, g.z), b(-g.y, g.x), c2(g.y, g.x), e(g.s, -g.z);
          for (std::size_t c = 0; c < m; ++c) {
            const cd v0 = q.data[c * n + 2 * j];
            const cd v1 = q.data[c * n + 2 * j + 1];
            w.data[c * n + 2 * i] += a * v0 + b * v1;
            w.data[c * n + 2 * i + 1] += c2 * v0 + e * v1;
          }
        }
        for (std::size_t c = 0; c < m; ++c) {
          w.data[c * n + 2 * i] *= sigma[i];
          w.data[c * n + 2 * i + 1] *= sigma[i];
        }
      }
    }
  }
}

// Modified Gram-Schmidt in place; writes log of the diagonal R factors.
// A second projection pass runs when the first leaves more than 1e-8 of a
// column along the earlier ones.
template <typename T>
void orthonormalize(Frame<T>& f, std::vector<double>& log_r) {
  const std::size_t n = f.n;
  for (std::size_t c = 0; c < f.m; ++c) {
    T* w = f.col(c);
    for (int pass = 0; pass < 2; ++pass) {
      double worst = 0.0;
      for (std::size_t p = 0; p < c; ++p) {
        const T* qp = f.col(p);
        T r{};
        for (std::size_t i = 0; i < n; ++i) r += conj_mul(qp[i], w[i]);
        for (std::size_t i = 0; i < n; ++i) w[i] -= r * qp[i];
        worst = std::max(worst, std::sqrt(abs_sq(r)));
      }
      if (pass == 0) {
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm_sq += abs_sq(w[i]);
        if (!(worst > 1e-8 * std::sqrt(norm_sq))) break;
      }
    }
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm_sq += abs_sq(w[i]);
    const double norm = std::sqrt(norm_sq);
    log_r[c] = std::log(norm);
    if (!(norm > 0.0) || !std::isfinite(norm)) return;
    const double inv = 1.0 / norm;
    for (std::size_t i = 0; i < n; ++i) w[i] *= inv;
  }
}

template <typename T>
std::vector<double> run_replicate(Beta beta, std::span<const double> sigma, std::size_t frame_cols,
                                  const SimConfig& cfg, Rng rng) {
  const std::size_t d = sigma.size();
  Frame<T> q;
  q.n = (beta == Beta::Quaternion) ? 2 * d : d;
  q.m = frame_cols;
  q.data.assign(q.n * q.m, T{});
  for (std::size_t c = 0; c < q.m; ++c) q.data[c * q.n + c] = T{1.0};
  Frame<T> w = q;

  std::vector<double> total(frame_cols, 0.0);
  std::vector<double> log_r(frame_cols, 0.0);
  int cadence = cfg.renorm_every;
  const long burn = cfg.burn_in;
  const long end = burn + cfg.n_steps;

  long step = 0;
  while (step < end) {
    // Windows never straddle the end of burn-in.
    long window = cadence;
    if (step < burn) window = std::min<long>(window, burn - step);
    window = std::min<long>(window, end - step);

    const Rng rng_start = rng;
    const std::vector<T> q_start = q.data;
    for (long s = 0; s < window; ++s) {
      apply_random(beta, sigma, q, w, rng);
      std::swap(q.data, w.data);
    }
    orthonormalize(q, log_r);

    double worst = 0.0;
    bool broken = false;
    for (double v : log_r) {
      if (!std::isfinite(v)) broken = true;
      worst = std::max(worst, std::abs(v));
    }
    if (broken || worst > kWindowLogLimit) {
      if (window == 1) {
        throw SimulationError("mc: frame collapsed or overflowed within a single step (scale factor " +
                              std::to_string(worst) + ")");
      }
      rng = rng_start;
      q.data = q_start;
      cadence = std::max(1, static_cast<int>(window / 2));
      continue;
    }
    if (worst > kWindowLogWarn) cadence = std::max(1, cadence / 2);

    if (step >= burn)
      for (std::size_t c = 0; c < frame_cols; ++c) total[c] += log_r[c];
    step += window;
  }
  for (double& v : total) v /= static_cast<double>(cfg.n_steps);
  return total;
}

std::vector<double> sigma_of(const Spectrum& s) {
  std::vector<double> sigma(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) sigma[i] = std::sqrt(s.sigma_sq()[i]);
  return sigma;
}

std::vector<std::vector<double>> run_all(Beta beta, const Spectrum& s, std::size_t frame_cols,
                                         const SimConfig& cfg) {
  const std::vector<double> sigma = sigma_of(s);
  std::vector<std::vector<double>> out(static_cast<std::size_t>(cfg.n_reps));
  parallel_for(out.size(), [&](std::size_t rep) {
    Rng rng(cfg.seed, rep);
    if (beta == Beta::Real)
      out[rep] = run_replicate<double>(beta, sigma, frame_cols, cfg, rng);
    else
      out[rep] = run_replicate<cd>(beta, sigma, frame_cols, cfg, rng);
  });
  return out;
}

}  // namespace

void SimConfig::validate(std::size_t d) const {
  if (n_steps < 10) throw ValidationError("n_steps must be at least 10");
  if (n_reps < 2) throw ValidationError("n_reps must be at least 2");
  if (renorm_every < 1 || renorm_every > kMaxRenorm) throw ValidationError("renorm_every must lie in [1, 64]");
  if (top_k < 1 || static_cast<std::size_t>(top_k) > d)
    throw ValidationError("top_k must lie in [1, d] (d = " + std::to_string(d) + ")");
  if (burn_in < 0) throw ValidationError("burn_in must be nonnegative");
}

SampledMatrix sample_matrix(Beta beta, const Spectrum& s, Rng& rng) {
  const std::vector<double> sigma = sigma_of(s);
  const auto d = static_cast<Eigen::Index>(s.dim());
  switch (beta) {
    case Beta::Real: {
      Eigen::MatrixXd a(d, d);
      for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) a(i, j) = sigma[static_cast<std::size_t>(i)] * rng.normal();
      return a;
    }
    case Beta::Complex: {
      Eigen::MatrixXcd a(d, d);
      for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) a(i, j) = sigma[static_cast<std::size_t>(i)] * complex_normal(rng);
      return a;
    }
    case Beta::Quaternion: {
      QuaternionMatrix a(s.dim(), s.dim());
      for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
          const Quaternion g = quaternion_normal(rng);
          a(i, j) = {sigma[i] * g.s, sigma[i] * g.x, sigma[i] * g.y, sigma[i] * g.z};
        }
      return a;
    }
  }
  throw ValidationError("unknown beta");
}

ExponentEstimate summarize(std::span<const double> samples) {
  if (samples.size() < 2) throw ValidationError("summarize needs at least two samples");
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : samples) ss += (v - mean) * (v - mean);
  ExponentEstimate e = ExponentEstimate::analytic(mean, Method::MonteCarlo);
  e.std_error = std::sqrt(ss / (n - 1.0) / n);
  return e;
}

ExponentEstimate mc_largest(Beta beta, const Spectrum& s, const SimConfig& cfg) {
  cfg.validate(s.dim());
  const auto reps = run_all(beta, s, 1, cfg);
  std::vector<double> rates(reps.size());
  for (std::size_t r = 0; r < reps.size(); ++r) rates[r] = reps[r][0];
  return summarize(rates);
}

std::vector<std::vector<double>> mc_top_k_replicates(Beta beta, const Spectrum& s, const SimConfig& cfg) {
  cfg.validate(s.dim());
  const auto k = static_cast<std::size_t>(cfg.top_k);
  if (beta != Beta::Quaternion) return run_all(beta, s, k, cfg);
  auto doubled = run_all(beta, s, 2 * k, cfg);
  std::vector<std::vector<double>> out(doubled.size(), std::vector<double>(k));
  for (std::size_t r = 0; r < doubled.size(); ++r)
    for (std::size_t i = 0; i < k; ++i) out[r][i] = doubled[r][2 * i];
  return out;
}

std::vector<ExponentEstimate> mc_top_k(Beta beta, const Spectrum& s, const SimConfig& cfg) {
  const auto reps = mc_top_k_replicates(beta, s, cfg);
  std::vector<ExponentEstimate> out;
  std::vector<double> column(reps.size());
  for (std::size_t i = 0; i < static_cast<std::size_t>(cfg.top_k); ++i) {
    for (std::size_t r = 0; r < reps.size(); ++r) column[r] = reps[r][i];
    out.push_back(summarize(column));
  }
  return out;
}

ExponentEstimate logdet_oracle(Beta beta, const Spectrum& s, int k, long n_samples, Rng& rng) {
  const std::size_t d = s.dim();
  if (k < 1 || static_cast<std::size_t>(k) > d) throw ValidationError("logdet_oracle: k must lie in [1, d]");
  if (n_samples < 2) throw ValidationError("logdet_oracle: need at least two samples");
  const auto sig2 = s.sigma_sq();
  const double comp_scale = 1.0 / std::sqrt(beta_value(beta));
  const int comps = static_cast<int>(beta_value(beta));

  double sum = 0.0;
  double sum_sq = 0.0;
  auto record = [&](double v) {
    sum += v;
    sum_sq += v * v;
  };

  if (k == 1) {
    for (long n = 0; n < n_samples; ++n) {
      double q = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        double g2 = 0.0;
        for (int c = 0; c < comps; ++c) {
          const double g = comp_scale * rng.normal();
          g2 += g * g;
        }
        q += sig2[i] * g2;
      }
      record(0.5 * std::log(q));
    }
  } else if (beta == Beta::Real) {
    const auto kk = static_cast<Eigen::Index>(k);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(d), kk);
    for (long n = 0; n < n_samples; ++n) {
      for (std::size_t i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < kk; ++j) m(static_cast<Eigen::Index>(i), j) = std::sqrt(sig2[i]) * rng.normal();
      const Eigen::MatrixXd gram = m.transpose() * m;
      const Eigen::LLT<Eigen::MatrixXd> llt(gram);
      record(llt.matrixLLT().diagonal().array().log().sum());
    }
  } else {
    // Complex, or quaternion in phi form (2d x 2k, log det halved once more).
    const Eigen::Index rep = beta == Beta::Quaternion ? 2 : 1;
    const auto kk = static_cast<Eigen::Index>(k);
    Eigen::MatrixXcd m(rep * static_cast<Eigen::Index>(d), rep * kk);
    for (long n = 0; n < n_samples; ++n) {
      for (std::size_t i = 0; i < d; ++i) {
        const double sg = std::sqrt(sig2[i]);
        const auto ii = static_cast<Eigen::Index>(i);
        for (Eigen::Index j = 0; j < kk; ++j) {
          if (beta == Beta::Complex) {
            m(ii, j) = sg * complex_normal(rng);
          } else {
            const Quaternion g = quaternion_normal(rng);
            m.block<2, 2>(2 * ii, 2 * j) = sg * quaternion_phi(g);
          }
        }
      }
      const Eigen::MatrixXcd gram = m.adjoint() * m;
      const Eigen::LLT<Eigen::MatrixXcd> llt(gram);
      const double logdet = 2.0 * llt.matrixLLT().diagonal().real().array().log().sum();
      record(0.5 * logdet / static_cast<double>(rep));
    }
  }
  const double nn = static_cast<double>(n_samples);
  const double mean = sum / nn;
  const double var = std::max(0.0, (sum_sq - nn * mean * mean) / (nn - 1.0));
  ExponentEstimate e = ExponentEstimate::analytic(mean, Method::MonteCarlo);
  e.std_error = std::sqrt(var / nn);
  return e;
}

}  // namespace lyap::sim
