#ifndef VNLAB_SPECTRAL_HPP
#define VNLAB_SPECTRAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vnlab/graph.hpp"
#include "vnlab/linalg.hpp"

namespace vnlab {

// Eigenvalues ascending, eigenvectors as orthonormal columns of the same
// index. source_hash identifies the decomposed matrix bytes.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
  std::uint64_t source_hash = 0;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  double vec(int row, int ell) const { return eigenvectors(row, ell); }
};

// Cyclic Jacobi sweeps; deterministic, fine with repeated eigenvalues.
// Throws input_error on asymmetric input (tolerance sym_tol) and
// numeric_error if sweeps fail to converge.
SpectralDecomposition eigendecompose(const Matrix& m, double sym_tol = 1e-12);

// Laplacian eigendecomposition of a connected graph. Eigenvalues within
// 1e-9 of zero are clamped to exactly zero; exactly one such eigenvalue
// must exist or a numeric_error (disconnected graph) is thrown.
SpectralDecomposition laplacian_spectrum(const Graph& g);

// L^+ = sum_{l>=1} v_l v_l^T / lambda_l.
Matrix laplacian_pseudoinverse(const SpectralDecomposition& spec);

// R(i,j) = sum_{l>=1} (v_l(i) - v_l(j))^2 / lambda_l.
double effective_resistance(const SpectralDecomposition& spec, int i, int j);

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long walks = 0;
  long failures = 0;  // walks that hit the step cap and were discarded
};

struct CommuteReport {
  int i = 0, j = 0;
  double resistance = 0.0;
  double commute = 0.0;  // 2 * commute_edge_count * R
  std::optional<McEstimate> mc;
};

// Commute time with the convention used throughout the analysis: the
// edge count of an augmented graph is |E| + n (VN self-loop excluded).
CommuteReport commute_time(const Graph& g, const SpectralDecomposition& spec, int i, int j);

// Round-trip hitting time i -> j -> i of the simple random walk,
// averaged over `walks` independent runs. On an augmented graph the VN
// self-loop is one of the n+1 equally likely transition options. Note
// that the walk on the augmented graph follows the Markov-chain edge
// convention, which differs from commute_time's |E| + n convention by a
// factor (2(|E|+n)+1) / (2(|E|+n)); see walk_commute_expectation.
McEstimate mc_commute_time(const Graph& g, int i, int j, long walks, std::uint64_t seed);

// The commute time the simple random walk actually realizes:
// (sum of degrees) * R(i,j). Coincides with commute_time on simple
// graphs; on augmented graphs the self-loop adds 1 to the degree sum.
double walk_commute_expectation(const Graph& g, const SpectralDecomposition& spec, int i, int j);

// tau_vn(i,j) - tau(i,j) from the spectrum of the *original* graph:
// 2|E| sum_l [1/(l(l+1))] (n*l/|E| - 1) (v_l(i)-v_l(j))^2 with l = lambda_l.
double vn_commute_delta(const Graph& g, const SpectralDecomposition& spec, int i, int j);

// Average of the per-pair delta over all n^2 ordered pairs:
// (4|E|/n) sum_l [1/(l(l+1))] (n*l/|E| - 1).
double vn_avg_commute_delta(const Graph& g, const SpectralDecomposition& spec);

// tau_vn(i,j) computed from the original graph's spectrum via the
// shifted eigenvalues: 2(|E|+n) sum_l (v_l(i)-v_l(j))^2 / (lambda_l + 1).
double vn_commute_time(const Graph& g, const SpectralDecomposition& spec, int i, int j);

struct AlphaBounds {
  double alpha = 0.0;  // 1 + n/|E|
  double lower = 0.0;  // -4|E|alpha / (lambda_1 (lambda_1 + 1))
  double upper = 0.0;  // -4|E|alpha / (lambda_{n-1} (lambda_{n-1} + 1))
  double value = 0.0;  // tau_vn(i,j) - alpha * tau(i,j)
};

AlphaBounds vn_delta_alpha_bounds(const Graph& g, const SpectralDecomposition& spec, int i, int j);

// {0} u {lambda_l + 1 : l >= 1} u {n + 1}, sorted ascending. Matches the
// numerical spectrum of the augmented Laplacian.
std::vector<double> vn_spectrum_analytic(const SpectralDecomposition& spec, const Graph& g);

// Minimal-depth bound tau/8.
double depth_lower_bound(double tau);

struct VnDepthBound {
  double bound = 0.0;
  bool applicable = false;  // only when the pair delta is negative
};

// tau_vn(i,j)/8 - (|E|/8) sum_l [1/(l(l+1))](n*l/|E| - 1)(v_l(i)-v_l(j))^2.
VnDepthBound vn_depth_lower_bound(const Graph& g, const SpectralDecomposition& spec, int i, int j);

struct HistogramBin {
  double lo = 0.0, hi = 0.0;
  long count = 0;
};

std::vector<HistogramBin> histogram(const std::vector<double>& values, int bins);

struct VnEffectReport {
  std::string graph_id;
  int n = 0;
  int edge_count = 0;
  double avg_delta = 0.0;
  double alpha = 0.0;
  double bound_lower = 0.0;
  double bound_upper = 0.0;
  std::vector<std::tuple<int, int, double>> pairs;  // i < j, delta
  std::vector<HistogramBin> hist;                   // over per-pair deltas
};

VnEffectReport vn_effect_report(const Graph& g, const std::string& graph_id, int bins = 20);

}  // namespace vnlab

#endif
