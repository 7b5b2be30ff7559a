#include "lvr/mc.hpp"

#include <cmath>

#include "lvr/errors.hpp"

namespace lvr {

namespace {

McEstimate estimate_from_samples(const std::vector<double>& xs, std::uint64_t seed) {
  McEstimate e;
  e.seed = seed;
  e.sample_count = xs.size();
  if (xs.empty()) return e;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  if (xs.size() > 1) var /= static_cast<double>(xs.size() - 1);
  e.mean = mean;
  e.standard_error = std::sqrt(var / static_cast<double>(xs.size()));
  return e;
}

// Batch-means standard error; batches absorb autocorrelation.
McEstimate estimate_batched(const std::vector<double>& xs, std::uint64_t seed, int batches = 64) {
  if (static_cast<int>(xs.size()) < 2 * batches) return estimate_from_samples(xs, seed);
  const std::size_t len = xs.size() / static_cast<std::size_t>(batches);
  std::vector<double> means;
  means.reserve(static_cast<std::size_t>(batches));
  for (int b = 0; b < batches; ++b) {
    double m = 0.0;
    for (std::size_t i = 0; i < len; ++i) m += xs[static_cast<std::size_t>(b) * len + i];
    means.push_back(m / static_cast<double>(len));
  }
  McEstimate e = estimate_from_samples(means, seed);
  double grand = 0.0;
  for (double x : xs) grand += x;
  e.mean = grand / static_cast<double>(xs.size());
  e.sample_count = xs.size();
  return e;
}

}  // namespace

Eigen::MatrixXcd sample_haar_unitary(int N, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd G(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) G(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
  Eigen::MatrixXcd Q = qr.householderQ();
  Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  // divide each column by the phase of the matching R diagonal entry
  for (int j = 0; j < N; ++j) {
    std::complex<double> r = R(j, j);
    std::complex<double> phase = (r == 0.0) ? 1.0 : r / std::abs(r);
    Q.col(j) *= phase;
  }
  return Q;
}

std::vector<ComplexEstimate> mc_haar(int N, const std::vector<HaarMomentSpec>& moments,
                                     std::uint64_t samples, std::uint64_t seed) {
  if (N < 1 || N > 16) throw DomainError("mc_haar: N outside 1..16");
  if (samples == 0 || samples > 10000000ull) throw DomainError("mc_haar: samples outside 1..1e7");
  for (const auto& m : moments)
    for (const auto& lists : {m.u, m.ustar})
      for (auto [i, j] : lists)
        if (i < 0 || i >= N || j < 0 || j >= N) throw DomainError("mc_haar: index out of range");

  std::mt19937_64 rng(seed);
  std::vector<double> sum_re(moments.size(), 0.0), sumsq_re(moments.size(), 0.0);
  std::vector<double> sum_im(moments.size(), 0.0), sumsq_im(moments.size(), 0.0);

  for (std::uint64_t s = 0; s < samples; ++s) {
    Eigen::MatrixXcd U = sample_haar_unitary(N, rng);
    for (std::size_t m = 0; m < moments.size(); ++m) {
      std::complex<double> prod = 1.0;
      for (auto [i, j] : moments[m].u) prod *= U(i, j);
      for (auto [i, j] : moments[m].ustar) prod *= std::conj(U(i, j));
      sum_re[m] += prod.real();
      sumsq_re[m] += prod.real() * prod.real();
      sum_im[m] += prod.imag();
      sumsq_im[m] += prod.imag() * prod.imag();
    }
  }

  auto finish = [&](double sum, double sumsq) {
    McEstimate e;
    e.seed = seed;
    e.sample_count = samples;
    const double n = static_cast<double>(samples);
    e.mean = sum / n;
    double var = (sumsq - sum * sum / n) / (n > 1 ? n - 1 : 1);
    e.standard_error = std::sqrt(std::max(0.0, var) / n);
    return e;
  };

  std::vector<ComplexEstimate> out(moments.size());
  for (std::size_t m = 0; m < moments.size(); ++m) {
    out[m].real_part = finish(sum_re[m], sumsq_re[m]);
    out[m].imag_part = finish(sum_im[m], sumsq_im[m]);
  }
  return out;
}

namespace {

double action_traces(const Eigen::MatrixXcd& M, int p, double lambda, int N) {
  double tr1 = M.squaredNorm();  // Tr M Mdag
  Eigen::MatrixXcd X = M * M.adjoint();
  double trp;
  if (p == 2) {
    trp = X.squaredNorm();  // Tr X^2 for Hermitian X
  } else {
    Eigen::MatrixXcd Xk = X;
    for (int k = 2; k < p; ++k) Xk = Xk * X;
    trp = (Xk * X).trace().real();
  }
  return N * tr1 + lambda * N * trp;
}

struct ChainResult {
  std::vector<std::vector<double>> observables;  // per k, per sweep
  double acceptance = 0.0;
  std::vector<std::pair<std::uint64_t, std::vector<double>>> trace;
};

ChainResult run_chain(const McModelParams& params, std::uint64_t seed, bool keep_trace,
                      std::uint64_t trace_stride) {
  const int N = params.N;
  const int p = params.p;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, N - 1);

  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
  double action = action_traces(M, p, params.lambda, N);
  double step = 0.5 / std::sqrt(static_cast<double>(N));

  std::uint64_t accepted = 0, proposed = 0;
  ChainResult result;
  result.observables.assign(static_cast<std::size_t>(params.k_max), {});

  const std::uint64_t total_sweeps = params.burn_in + params.sweeps;
  std::uint64_t adapt_accepted = 0, adapt_proposed = 0;
  for (std::uint64_t sweep = 0; sweep < total_sweeps; ++sweep) {
    for (int update = 0; update < N * N; ++update) {
      int a = pick(rng), b = pick(rng);
      std::complex<double> old = M(a, b);
      M(a, b) = old + step * std::complex<double>(gauss(rng), gauss(rng));
      double new_action = action_traces(M, p, params.lambda, N);
      double delta = new_action - action;
      bool accept = (delta <= 0.0) || (unif(rng) < std::exp(-delta));
      if (accept) {
        action = new_action;
        if (sweep >= params.burn_in) ++accepted;
        ++adapt_accepted;
      } else {
        M(a, b) = old;
      }
      if (sweep >= params.burn_in) ++proposed;
      ++adapt_proposed;
    }
    if (sweep < params.burn_in && adapt_proposed >= 200) {
      double rate = static_cast<double>(adapt_accepted) / static_cast<double>(adapt_proposed);
      step *= std::exp(0.5 * (rate - 0.3));
      adapt_accepted = adapt_proposed = 0;
    }
    if (sweep >= params.burn_in) {
      std::vector<double> powers;
      Eigen::MatrixXcd X = M * M.adjoint();
      Eigen::MatrixXcd Xk = X;
      powers.push_back(X.real().trace() / N);
      for (int k = 2; k <= params.k_max; ++k) {
        Xk = Xk * X;
        powers.push_back(Xk.real().trace() / N);
      }
      for (int k = 0; k < params.k_max; ++k)
        result.observables[static_cast<std::size_t>(k)].push_back(powers[static_cast<std::size_t>(k)]);
      if (keep_trace && (sweep - params.burn_in) % trace_stride == 0)
        result.trace.emplace_back(sweep - params.burn_in, powers);
    }
  }
  result.acceptance = proposed ? static_cast<double>(accepted) / static_cast<double>(proposed) : 0.0;
  return result;
}

}  // namespace

McModelResult mc_model(const McModelParams& params, bool keep_trace, std::uint64_t trace_stride) {
  if (params.p < 2) throw DomainError("mc_model: p must be >= 2");
  if (params.lambda < 0.0) throw DomainError("mc_model: lambda must be real >= 0");
  if (params.N < 1 || params.N > 8) throw DomainError("mc_model: N outside 1..8");
  if (params.k_max < 1) throw DomainError("mc_model: k_max must be >= 1");
  if (params.chains < 1) throw DomainError("mc_model: chains must be >= 1");

  // per-chain seeds derived from the master seed by counter (splitmix64)
  auto derive = [](std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (counter + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };

  std::vector<ChainResult> chains;
  for (int c = 0; c < params.chains; ++c)
    chains.push_back(run_chain(params, derive(params.seed, static_cast<std::uint64_t>(c)),
                               keep_trace && c == 0, trace_stride));

  McModelResult out;
  out.invariants.resize(static_cast<std::size_t>(params.k_max));
  double acc = 0.0;
  for (int k = 0; k < params.k_max; ++k) {
    // inverse-variance merge of per-chain batched estimates
    double wsum = 0.0, wmean = 0.0;
    std::uint64_t count = 0;
    for (const auto& c : chains) {
      McEstimate e = estimate_batched(c.observables[static_cast<std::size_t>(k)], params.seed);
      double w = 1.0 / (e.standard_error * e.standard_error + 1e-300);
      wsum += w;
      wmean += w * e.mean;
      count += e.sample_count;
    }
    McEstimate merged;
    merged.mean = wmean / wsum;
    merged.standard_error = std::sqrt(1.0 / wsum);
    merged.sample_count = count;
    merged.seed = params.seed;
    out.invariants[static_cast<std::size_t>(k)] = merged;
  }
  // connected pair combinations E[x y] - E[x] E[y], batch means per chain,
  // merged by inverse variance
  for (int k1 = 1; k1 <= params.k_max; ++k1)
    for (int k2 = k1; k2 <= params.k_max; ++k2) {
      double wsum = 0.0, wmean = 0.0;
      std::uint64_t count = 0;
      for (const auto& chain : chains) {
        const auto& xs = chain.observables[static_cast<std::size_t>(k1 - 1)];
        const auto& ys = chain.observables[static_cast<std::size_t>(k2 - 1)];
        const int batches = 64;
        if (static_cast<int>(xs.size()) < 2 * batches) continue;
        const std::size_t len = xs.size() / static_cast<std::size_t>(batches);
        std::vector<double> per_batch;
        for (int b = 0; b < batches; ++b) {
          double mx = 0.0, my = 0.0, mxy = 0.0;
          for (std::size_t i = 0; i < len; ++i) {
            double x = xs[static_cast<std::size_t>(b) * len + i];
            double y = ys[static_cast<std::size_t>(b) * len + i];
            mx += x;
            my += y;
            mxy += x * y;
          }
          mx /= static_cast<double>(len);
          my /= static_cast<double>(len);
          mxy /= static_cast<double>(len);
          per_batch.push_back(mxy - mx * my);
        }
        McEstimate e = estimate_from_samples(per_batch, params.seed);
        double w = 1.0 / (e.standard_error * e.standard_error + 1e-300);
        wsum += w;
        wmean += w * e.mean;
        count += xs.size();
      }
      if (wsum == 0.0) continue;
      ConnectedPairEstimate pair;
      pair.k1 = k1;
      pair.k2 = k2;
      pair.estimate.mean = wmean / wsum;
      pair.estimate.standard_error = std::sqrt(1.0 / wsum);
      pair.estimate.sample_count = count;
      pair.estimate.seed = params.seed;
      out.connected.push_back(pair);
    }

  for (const auto& c : chains) acc += c.acceptance;
  acc /= static_cast<double>(chains.size());
  for (auto& e : out.invariants) e.acceptance_rate = acc;
  for (auto& e : out.connected) e.estimate.acceptance_rate = acc;
  out.adapted = (acc >= 0.2 && acc <= 0.5);
  out.trace = std::move(chains.front().trace);
  return out;
}

}  // namespace lvr
