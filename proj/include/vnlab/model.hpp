#ifndef VNLAB_MODEL_HPP
#define VNLAB_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vnlab/graph.hpp"
#include "vnlab/linalg.hpp"

namespace vnlab {

enum class Arch {
  linear_mpnn,
  linear_mpnn_vn,
  pairnorm_vn,  // linear_mpnn_vn with the global weight pinned to -I
  gcn,
  gcn_vn,
  gcn_vng,
  gatedgcn,
  gatedgcn_vn,
  gatedgcn_vng,
  gps_lite,
};

enum class Activation { tanh, relu, identity };
enum class Readout { mean, v_pool };
enum class MeanAugment { none, add, subtract };

Arch parse_arch(const std::string& name);
std::string arch_name(Arch a);
bool arch_is_linear(Arch a);
bool arch_has_vn_state(Arch a);   // gcn_vn, gatedgcn_vn
bool arch_is_vng(Arch a);         // gcn_vng, gatedgcn_vng

struct ModelSpec {
  Arch arch = Arch::gcn;
  int depth = 1;
  int width = 4;     // hidden width d
  int in_dim = 0;    // 0 means "equal to width, no input embedding"
  int out_dim = 0;   // 0 means "equal to width"
  Activation activation = Activation::tanh;  // forced to identity for linear archs
  Readout readout = Readout::mean;
  bool vn_mean_normalizer = true;  // true: 1/n aggregation, false: sum
  MeanAugment mean_augment = MeanAugment::none;
  bool embedding_layer = false;  // linear embedding H^(0) = H * W_embed

  int hidden() const { return width; }
  int input_dim() const { return in_dim > 0 ? in_dim : width; }
  int output_dim() const { return out_dim > 0 ? out_dim : width; }
  bool has_input_embed() const { return embedding_layer || input_dim() != width; }
  Activation effective_activation() const {
    return arch_is_linear(arch) ? Activation::identity : activation;
  }
};

// All weight matrices are stored in the right-multiplying (row-feature)
// convention: a layer computes H * W with H holding node features as rows.
struct Params {
  std::vector<Matrix> omega;     // local self weight, per layer
  std::vector<Matrix> w;         // local aggregation weight, per layer
  std::vector<Matrix> q;         // VN-to-node / VN_G global / gps global weight
  std::vector<Matrix> omega_vn;  // VN state self weight (layers 0..m-2)
  std::vector<Matrix> w_vn;      // VN aggregation weight (layers 0..m-2)
  std::vector<Matrix> w1, w2, w3;        // GatedGCN gate weights
  std::vector<Matrix> wq, wk, wv;        // gps-lite attention weights
  std::vector<Matrix> f;                 // gps-lite post-combination dense layer
  Matrix theta;                          // readout, width x out_dim
  Matrix input_embed;                    // in_dim x width, empty when unused

  // Flat views over every trainable matrix (pairnorm's pinned Q and the
  // fixed zero VN initial state are not included).
  std::vector<Matrix*> trainable(const ModelSpec& spec);
  std::vector<const Matrix*> trainable(const ModelSpec& spec) const;
};

// Uniform[-1/sqrt(d), 1/sqrt(d)] entries, deterministic per seed. The
// input embedding starts identity-padded instead of random.
Params init_params(const ModelSpec& spec, std::uint64_t seed);

// Per-edge gate cache for GatedGCN: eta for the directed pair (i <- j).
struct GateCache {
  Matrix eta;    // |directed edges| x d, sigmoid values
  std::vector<std::pair<int, int>> pairs;
};

struct ForwardTrace {
  std::vector<Matrix> h;        // H^(0..m), n x d
  std::vector<Matrix> z;        // pre-activations per layer (1..m)
  std::vector<Matrix> h_loc;    // VN_G / gps local states per layer (1..m)
  std::vector<Matrix> z_f;      // gps dense-layer pre-activations per layer
  std::vector<Matrix> attn;     // gps attention matrices per layer
  std::vector<Matrix> h_vn;     // VN states h_vn^(0..), 1 x d rows
  std::vector<Matrix> z_vn;     // VN pre-activations
  std::vector<GateCache> gates; // GatedGCN caches per layer
  std::vector<Matrix> pooled;   // Mean(H^(l)) per layer, 1 x d
  Matrix readout;               // 1 x out_dim
};

// Runs the architecture on H0 (n x in_dim). The graph must match H0's
// row count; VN variants require connectivity only for the spectral
// comparisons, not for the forward pass itself.
ForwardTrace forward(const ModelSpec& spec, const Params& params, const Graph& g,
                     const Matrix& h0);

// Mean readout: Mean(H^(m)) * theta.
Matrix readout_mean(const ModelSpec& spec, const Params& params, const ForwardTrace& trace);

// v-pooled readout: (v^T H^(m)) * theta.
Matrix readout_v(const ModelSpec& spec, const Params& params, const ForwardTrace& trace,
                 const std::vector<double>& v);

// Layerwise 1 - cos(Mean(H^(l)), Mean(H^(m))); the final entry is 0.
// A zero vector on either side yields the sentinel value -1.
std::vector<double> cosine_trace(const ForwardTrace& trace);

// Symmetric 1/sqrt(d_i d_j) normalized adjacency of a simple graph.
Matrix gcn_normalized_adjacency(const Graph& g);

double activation_apply(Activation act, double x);
double activation_derivative(Activation act, double x);  // at pre-activation x

}  // namespace vnlab

#endif
