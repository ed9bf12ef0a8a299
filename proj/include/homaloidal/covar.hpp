#pragma once

#include <string>
#include <vector>

#include "homaloidal/graph.hpp"
#include "homaloidal/linalg.hpp"

namespace homaloidal {

struct SingularAfterRetries : std::runtime_error {
    explicit SingularAfterRetries(int tries)
        : std::runtime_error("Laplacian minor singular after " + std::to_string(tries) +
                             " weight draws") {}
};

/// Variable name for the entry of the symmetric sigma matrix at vertex
/// labels i, j (order-insensitive): "s_i_j" with i <= j.
std::string sigma_var(int i, int j);

/// Symmetric matrix of sigma variables indexed by the vertices of g minus k,
/// keeping the original labels.
SymMatrix sigma_matrix(const Graph& g, int k);

/// Generators of R_k: one adjugate entry adj(Sigma)_{i,j} per non-edge
/// {i, j} of g with i, j != k, and one adjugate column sum
/// sum_i adj(Sigma)_{i,j} per non-edge {j, k}.
std::vector<MPoly> rk_generators(const Graph& g, int k);

/// Rank-constraint minors: the (#ne(k)+1)-minors of the neighbor rows of
/// Sigma with an appended all-ones row (when #ne(k) < n-1), and for every
/// non-edge {i, j} avoiding k with i not adjacent to k, the (n-2)-minors of
/// Sigma with row i and column j deleted and an all-ones row appended.
std::vector<MPoly> rank_constraint_minors(const Graph& g, int k);

/// Exact point of the model: seeded integer edge weights and the exact
/// inverse of the corresponding Laplacian principal minor.
struct ModelSample {
    QPoint x;     // edge weights actually drawn
    QMat sigma;   // (L_{k^,k^}(x))^{-1}, rows/cols in label order
    std::vector<int> labels;

    /// Point assigning each sigma variable its sampled value.
    QPoint as_qpoint() const;
};

ModelSample sample_model_point(const Graph& g, int k, unsigned seed);

struct VanishingReport {
    bool all_zero = true;
    int polys = 0;
    int samples = 0;
    /// (polynomial index, sample index) of the first violation, if any.
    std::vector<std::pair<int, int>> violations;
    std::string note;  // states that only the containment direction is checked
};

/// Evaluates each polynomial at each sample exactly; any nonzero value is a
/// violation.
VanishingReport verify_vanishing(const std::vector<MPoly>& polys,
                                 const std::vector<ModelSample>& samples);

}  // namespace homaloidal
