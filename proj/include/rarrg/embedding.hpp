#pragma once
#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace rarrg {

using Embedding = Eigen::VectorXd;

// 2D grid of visual feature vectors. Tokens are stored row-major:
// token (r, c) lives at data.row(r * side + c).
struct TokenGrid {
    int side = 0;
    int channels = 0;
    Eigen::MatrixXd data; // (side * side) x channels

    int tokens() const { return side * side; }
    void validate() const;

    // Reshape a 1D token sequence into a square grid; the length must be a
    // perfect square.
    static TokenGrid from_sequence(const Eigen::MatrixXd& tokens_by_channels);
};

struct NoiseConfig {
    bool enabled = false;
    std::uint64_t rng_seed = 0;
};

Embedding l2_normalize(const Embedding& v);
double cosine(const Embedding& u, const Embedding& v);

// v + eps with eps_i ~ U[-1,1] / sqrt(d), drawn from the seeded generator.
Embedding add_noise(const Embedding& v, const NoiseConfig& cfg);

// Bilinear resampling, half-pixel-center convention, edge clamped.
TokenGrid interpolate_grid(const TokenGrid& src, int target_side);

// Channel-wise concatenation; b is resampled to a's side when sides differ.
// a's channels come first.
TokenGrid fuse_token_grids(const TokenGrid& a, const TokenGrid& b);

// Deterministic stand-in for a frozen text encoder: FNV-1a of the text seeds
// a splitmix64 stream of standard normals, then L2 normalization.
Embedding hash_embed(const std::string& text, int d);

class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    virtual int dim() const = 0;
    // Unit-norm embedding for the given text.
    virtual Embedding embed(const std::string& text) const = 0;
    virtual std::vector<Embedding> embed_batch(const std::vector<std::string>& texts) const;
};

class HashEmbeddingProvider final : public EmbeddingProvider {
public:
    explicit HashEmbeddingProvider(int d);
    int dim() const override { return d_; }
    Embedding embed(const std::string& text) const override;

private:
    int d_;
};

} // namespace rarrg
