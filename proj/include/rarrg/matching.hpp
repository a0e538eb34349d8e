#pragma once
#include <Eigen/Dense>
#include <string>
#include <vector>

namespace rarrg {

// Ground-truth key phrases padded with empty elements up to padded_size.
// Indices >= phrases.size() denote the empty element.
struct TargetSet {
    std::vector<std::string> phrases; // length m
    Eigen::MatrixXd embeddings;       // m x d, unit rows
    int padded_size = 0;              // N

    int real_count() const { return static_cast<int>(phrases.size()); }
    void validate() const;
};

struct PredictionSet {
    Eigen::VectorXd logits;    // N selection logits
    Eigen::VectorXd probs;     // N, sigmoid of logits
    Eigen::MatrixXd semantics; // N x d_embed, unit rows

    int count() const { return static_cast<int>(probs.size()); }
    void validate() const;
};

struct Assignment {
    std::vector<int> sigma; // target index i -> prediction index sigma[i]
    double total_cost = 0.0;
};

// Eq.-style matching cost: 0 for the empty element, otherwise
// -(mu * p_hat + cos_sim).
double matching_cost(bool is_empty, double p_hat, double cos_sim, double mu);

// C(i, j) = matching_cost(i >= m, probs[j], cos(v_i, vhat_j), mu).
Eigen::MatrixXd build_cost_matrix(const TargetSet& targets, const PredictionSet& preds,
                                  double mu);

// Exact minimum-cost assignment on a square matrix. Among exact cost ties the
// lexicographically smallest permutation is returned.
Assignment hungarian(const Eigen::MatrixXd& cost);

Assignment match_example(const TargetSet& targets, const PredictionSet& preds, double mu);

} // namespace rarrg
