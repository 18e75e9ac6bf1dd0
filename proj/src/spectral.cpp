#include "vnlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <random>
#include <tuple>

#include "vnlab/errors.hpp"

namespace vnlab {

namespace {

constexpr double kZeroEigTol = 1e-9;

std::uint64_t fnv1a(const void* bytes, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(bytes);
  std::uint64_t h = 14695981039346656037ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

// One Jacobi rotation zeroing a(p,q). Classic two-sided update.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e12) {
    t = 1.0 / (2.0 * theta);
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const double tau = s / (1.0 + c);
  const std::size_t n = a.rows();

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = akp - s * (akq + tau * akp);
    a(p, k) = a(k, p);
    a(k, q) = akq + s * (akp - tau * akq);
    a(q, k) = a(k, q);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = vkp - s * (vkq + tau * vkp);
    v(k, q) = vkq + s * (vkp - tau * vkq);
  }
}

double offdiag_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(2.0 * s);
}

}  // namespace

SpectralDecomposition eigendecompose(const Matrix& m, double sym_tol) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw input_error("eigendecompose needs a square matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > sym_tol)
        throw input_error("eigendecompose needs a symmetric matrix");

  Matrix a = m;
  // Symmetrize exactly so rotations stay consistent.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = avg;
      a(j, i) = avg;
    }
  Matrix v = Matrix::identity(n);

  const double scale = std::max(1.0, a.max_abs());
  const double stop = 1e-15 * scale * static_cast<double>(n);
  const int max_sweeps = 100;
  int sweep = 0;
  while (offdiag_norm(a) > stop) {
    if (++sweep > max_sweeps) throw numeric_error("jacobi eigensolver did not converge");
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > stop / (10.0 * static_cast<double>(n))) rotate(a, v, p, q);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a(x, x) < a(y, y); });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const int src = order[c];
    out.eigenvalues[c] = a(src, src);
    // Deterministic sign: largest-magnitude component positive.
    std::size_t arg = 0;
    double best = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      if (std::abs(v(r, src)) > best) {
        best = std::abs(v(r, src));
        arg = r;
      }
    const double sign = v(arg, src) >= 0.0 ? 1.0 : -1.0;
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, c) = sign * v(r, src);
  }
  out.source_hash = fnv1a(m.data(), sizeof(double) * n * n);
  return out;
}

SpectralDecomposition laplacian_spectrum(const Graph& g) {
  SpectralDecomposition spec = eigendecompose(g.laplacian());
  int zeros = 0;
  for (double& lam : spec.eigenvalues) {
    if (std::abs(lam) <= kZeroEigTol) {
      lam = 0.0;
      ++zeros;
    }
  }
  if (zeros != 1)
    throw numeric_error("graph is disconnected (laplacian kernel dimension " +
                        std::to_string(zeros) + ")");
  return spec;
}

Matrix laplacian_pseudoinverse(const SpectralDecomposition& spec) {
  const int n = spec.size();
  int zeros = 0;
  for (double lam : spec.eigenvalues)
    if (std::abs(lam) <= kZeroEigTol) ++zeros;
  if (zeros >= 2) throw numeric_error("laplacian pseudoinverse: disconnected graph");
  Matrix li(n, n);
  for (int ell = 0; ell < n; ++ell) {
    const double lam = spec.eigenvalues[ell];
    if (std::abs(lam) <= kZeroEigTol) continue;
    const double inv = 1.0 / lam;
    for (int i = 0; i < n; ++i) {
      const double vi = spec.vec(i, ell) * inv;
      for (int j = 0; j < n; ++j) li(i, j) += vi * spec.vec(j, ell);
    }
  }
  return li;
}

double effective_resistance(const SpectralDecomposition& spec, int i, int j) {
  const int n = spec.size();
  if (i < 0 || j < 0 || i >= n || j >= n) throw input_error("node index out of range");
  if (i == j) return 0.0;
  double r = 0.0;
  for (int ell = 0; ell < n; ++ell) {
    const double lam = spec.eigenvalues[ell];
    if (std::abs(lam) <= kZeroEigTol) continue;
    const double d = spec.vec(i, ell) - spec.vec(j, ell);
    r += d * d / lam;
  }
  return r;
}

CommuteReport commute_time(const Graph& g, const SpectralDecomposition& spec, int i, int j) {
  CommuteReport rep;
  rep.i = i;
  rep.j = j;
  rep.resistance = effective_resistance(spec, i, j);
  rep.commute = 2.0 * static_cast<double>(g.commute_edge_count()) * rep.resistance;
  return rep;
}

double walk_commute_expectation(const Graph& g, const SpectralDecomposition& spec, int i, int j) {
  const double degree_sum =
      std::accumulate(g.degrees().begin(), g.degrees().end(), 0.0);
  return degree_sum * effective_resistance(spec, i, j);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

McEstimate mc_commute_time(const Graph& g, int i, int j, long walks, std::uint64_t seed) {
  if (walks < 1) throw input_error("mc_commute_time needs walks >= 1");
  if (!g.connected()) throw numeric_error("mc_commute_time needs a connected graph");
  const auto& nbrs = g.neighbors();
  constexpr long kStepCap = 10'000'000;

  McEstimate est;
  est.walks = walks;
  if (i == j) return est;
  double sum = 0.0, sumsq = 0.0;
  long kept = 0;
  for (long w = 0; w < walks; ++w) {
    // Per-walk generator derived from (seed, walk index) so results do not
    // depend on any parallel schedule.
    std::mt19937_64 rng(splitmix64(seed + 0x51ed2701ull * static_cast<std::uint64_t>(w + 1)));
    int node = i;
    bool reached_j = false;
    bool completed = false;
    long steps = 0;
    while (steps < kStepCap) {
      const auto& opts = nbrs[node];
      node = static_cast<int>(opts[rng() % opts.size()]);
      ++steps;
      if (!reached_j) {
        if (node == j) reached_j = true;
      } else if (node == i) {
        completed = true;
        break;
      }
    }
    if (!completed) {
      est.failures += 1;
      continue;
    }
    sum += static_cast<double>(steps);
    sumsq += static_cast<double>(steps) * static_cast<double>(steps);
    ++kept;
  }
  if (kept == 0) throw numeric_error("mc_commute_time: all walks hit the step cap");
  est.mean = sum / static_cast<double>(kept);
  if (kept > 1) {
    const double var =
        (sumsq - sum * sum / static_cast<double>(kept)) / static_cast<double>(kept - 1);
    est.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(kept));
  }
  return est;
}

namespace {

void require_simple_connected(const Graph& g) {
  if (g.has_vn()) throw input_error("expected a simple (non-augmented) graph");
  if (!g.connected()) throw numeric_error("graph is disconnected");
}

}  // namespace

double vn_commute_delta(const Graph& g, const SpectralDecomposition& spec, int i, int j) {
  require_simple_connected(g);
  const int n = g.node_count();
  const double e = static_cast<double>(g.edge_count());
  double s = 0.0;
  for (int ell = 0; ell < n; ++ell) {
    const double lam = spec.eigenvalues[ell];
    if (std::abs(lam) <= kZeroEigTol) continue;
    const double d = spec.vec(i, ell) - spec.vec(j, ell);
    s += (1.0 / (lam * (lam + 1.0))) * (static_cast<double>(n) * lam / e - 1.0) * d * d;
  }
  return 2.0 * e * s;
}

double vn_avg_commute_delta(const Graph& g, const SpectralDecomposition& spec) {
  require_simple_connected(g);
  const int n = g.node_count();
  const double e = static_cast<double>(g.edge_count());
  double s = 0.0;
  for (int ell = 0; ell < n; ++ell) {
    const double lam = spec.eigenvalues[ell];
    if (std::abs(lam) <= kZeroEigTol) continue;
    s += (1.0 / (lam * (lam + 1.0))) * (static_cast<double>(n) * lam / e - 1.0);
  }
  return 4.0 * e / static_cast<double>(n) * s;
}

double vn_commute_time(const Graph& g, const SpectralDecomposition& spec, int i, int j) {
  require_simple_connected(g);
  const int n = g.node_count();
  const double e = static_cast<double>(g.edge_count());
  double r = 0.0;
  for (int ell = 0; ell < n; ++ell) {
    const double lam = spec.eigenvalues[ell];
    if (std::abs(lam) <= kZeroEigTol) continue;
    const double d = spec.vec(i, ell) - spec.vec(j, ell);
    r += d * d / (lam + 1.0);
  }
  return 2.0 * (e + static_cast<double>(n)) * r;
}

AlphaBounds vn_delta_alpha_bounds(const Graph& g, const SpectralDecomposition& spec, int i, int j) {
  require_simple_connected(g);
  if (i == j) throw input_error("alpha bounds need i != j");
  const int n = g.node_count();
  const double e = static_cast<double>(g.edge_count());
  AlphaBounds b;
  b.alpha = 1.0 + static_cast<double>(n) / e;
  const double lam1 = spec.eigenvalues[1];
  const double lamn = spec.eigenvalues[n - 1];
  b.lower = -4.0 * e * b.alpha / (lam1 * (lam1 + 1.0));
  b.upper = -4.0 * e * b.alpha / (lamn * (lamn + 1.0));
  const double tau = commute_time(g, spec, i, j).commute;
  b.value = vn_commute_time(g, spec, i, j) - b.alpha * tau;
  return b;
}

std::vector<double> vn_spectrum_analytic(const SpectralDecomposition& spec, const Graph& g) {
  require_simple_connected(g);
  const int n = g.node_count();
  std::vector<double> out;
  out.reserve(n + 1);
  out.push_back(0.0);
  for (int ell = 1; ell < n; ++ell) out.push_back(spec.eigenvalues[ell] + 1.0);
  out.push_back(static_cast<double>(n) + 1.0);
  std::sort(out.begin(), out.end());
  return out;
}

double depth_lower_bound(double tau) {
  if (tau < 0.0) throw input_error("commute time must be nonnegative");
  return tau / 8.0;
}

VnDepthBound vn_depth_lower_bound(const Graph& g, const SpectralDecomposition& spec, int i, int j) {
  VnDepthBound b;
  const double delta = vn_commute_delta(g, spec, i, j);
  b.applicable = delta < 0.0;
  const double tau_vn = vn_commute_time(g, spec, i, j);
  // delta = 2|E| * S, and the bound subtracts (|E|/8) * S = delta / 16.
  b.bound = tau_vn / 8.0 - delta / 16.0;
  return b;
}

std::vector<HistogramBin> histogram(const std::vector<double>& values, int bins) {
  if (bins < 1) throw input_error("histogram needs bins >= 1");
  std::vector<HistogramBin> out;
  if (values.empty()) return out;
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  double lo = *mn, hi = *mx;
  if (hi <= lo) hi = lo + 1.0;
  const double width = (hi - lo) / bins;
  out.resize(bins);
  for (int b = 0; b < bins; ++b) {
    out[b].lo = lo + b * width;
    out[b].hi = lo + (b + 1) * width;
  }
  for (double v : values) {
    int b = static_cast<int>((v - lo) / width);
    b = std::clamp(b, 0, bins - 1);
    out[b].count += 1;
  }
  return out;
}

VnEffectReport vn_effect_report(const Graph& g, const std::string& graph_id, int bins) {
  require_simple_connected(g);
  const SpectralDecomposition spec = laplacian_spectrum(g);
  const int n = g.node_count();
  VnEffectReport rep;
  rep.graph_id = graph_id;
  rep.n = n;
  rep.edge_count = g.edge_count();
  rep.avg_delta = vn_avg_commute_delta(g, spec);
  std::vector<double> deltas;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = vn_commute_delta(g, spec, i, j);
      rep.pairs.emplace_back(i, j, d);
      deltas.push_back(d);
    }
  if (n >= 2) {
    const AlphaBounds b = vn_delta_alpha_bounds(g, spec, 0, 1);
    rep.alpha = b.alpha;
    rep.bound_lower = b.lower;
    rep.bound_upper = b.upper;
  }
  rep.hist = histogram(deltas, bins);
  return rep;
}

}  // namespace vnlab
