#include "rarrg/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "rarrg/errors.hpp"
#include "rarrg/rng.hpp"

namespace rarrg {

void TokenGrid::validate() const {
    if (side <= 0 || channels <= 0) {
        throw ValidationError("token grid: side and channels must be positive");
    }
    if (data.rows() != static_cast<Eigen::Index>(side) * side || data.cols() != channels) {
        throw ValidationError("token grid: data shape does not match side/channels");
    }
    if (!data.allFinite()) {
        throw NumericError("token grid: non-finite entries");
    }
}

TokenGrid TokenGrid::from_sequence(const Eigen::MatrixXd& tokens_by_channels) {
    const auto n = tokens_by_channels.rows();
    const int side = static_cast<int>(std::llround(std::sqrt(static_cast<double>(n))));
    if (n <= 0 || static_cast<Eigen::Index>(side) * side != n) {
        throw ValidationError("token sequence length " + std::to_string(n) +
                              " is not a perfect square; cannot reshape to 2D");
    }
    TokenGrid grid;
    grid.side = side;
    grid.channels = static_cast<int>(tokens_by_channels.cols());
    grid.data = tokens_by_channels;
    grid.validate();
    return grid;
}

Embedding l2_normalize(const Embedding& v) {
    const double norm = v.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw ValidationError("cannot L2-normalize a zero or non-finite vector");
    }
    return v / norm;
}

double cosine(const Embedding& u, const Embedding& v) {
    if (u.size() != v.size()) {
        throw ValidationError("cosine: dimension mismatch (" + std::to_string(u.size()) +
                              " vs " + std::to_string(v.size()) + ")");
    }
    const double nu = u.norm();
    const double nv = v.norm();
    if (!(nu > 0.0) || !(nv > 0.0)) {
        throw ValidationError("cosine: zero vector");
    }
    return std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
}

Embedding add_noise(const Embedding& v, const NoiseConfig& cfg) {
    if (!cfg.enabled) {
        throw ValidationError("add_noise requires an enabled noise config");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(v.size()));
    SplitMix64 rng(cfg.rng_seed);
    Embedding out = v;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        out[i] += rng.next_symmetric() * scale;
    }
    return out;
}

TokenGrid interpolate_grid(const TokenGrid& src, int target_side) {
    src.validate();
    if (target_side <= 0) {
        throw ValidationError("interpolate_grid: target side must be positive");
    }
    if (target_side == src.side) {
        return src;
    }
    const int gs = src.side;
    const int gd = target_side;
    const double scale = static_cast<double>(gs) / gd;

    // Per-axis sample positions: source = (dst + 0.5) * scale - 0.5, clamped.
    std::vector<int> lo(gd), hi(gd);
    std::vector<double> frac(gd);
    for (int t = 0; t < gd; ++t) {
        double s = (t + 0.5) * scale - 0.5;
        s = std::clamp(s, 0.0, static_cast<double>(gs - 1));
        const int l = static_cast<int>(std::floor(s));
        lo[t] = l;
        hi[t] = std::min(l + 1, gs - 1);
        frac[t] = s - l;
    }

    TokenGrid out;
    out.side = gd;
    out.channels = src.channels;
    out.data.resize(static_cast<Eigen::Index>(gd) * gd, src.channels);
    for (int r = 0; r < gd; ++r) {
        for (int c = 0; c < gd; ++c) {
            const double fr = frac[r];
            const double fc = frac[c];
            const auto row = [&](int rr, int cc) {
                return src.data.row(static_cast<Eigen::Index>(rr) * gs + cc);
            };
            out.data.row(static_cast<Eigen::Index>(r) * gd + c) =
                (1.0 - fr) * ((1.0 - fc) * row(lo[r], lo[c]) + fc * row(lo[r], hi[c])) +
                fr * ((1.0 - fc) * row(hi[r], lo[c]) + fc * row(hi[r], hi[c]));
        }
    }
    return out;
}

TokenGrid fuse_token_grids(const TokenGrid& a, const TokenGrid& b) {
    a.validate();
    b.validate();
    const TokenGrid& rb = (b.side == a.side) ? b : interpolate_grid(b, a.side);
    TokenGrid out;
    out.side = a.side;
    out.channels = a.channels + b.channels;
    out.data.resize(a.data.rows(), out.channels);
    out.data.leftCols(a.channels) = a.data;
    out.data.rightCols(b.channels) = (b.side == a.side) ? b.data : rb.data;
    return out;
}

Embedding hash_embed(const std::string& text, int d) {
    if (text.empty()) {
        throw ValidationError("hash_embed: empty text");
    }
    if (d <= 0) {
        throw ValidationError("hash_embed: dimension must be positive");
    }
    SplitMix64 rng(fnv1a64(text));
    Embedding v(d);
    for (int i = 0; i < d; ++i) {
        v[i] = rng.next_normal();
    }
    return l2_normalize(v);
}

std::vector<Embedding> EmbeddingProvider::embed_batch(const std::vector<std::string>& texts) const {
    std::vector<Embedding> out;
    out.reserve(texts.size());
    for (const auto& t : texts) {
        out.push_back(embed(t));
    }
    return out;
}

HashEmbeddingProvider::HashEmbeddingProvider(int d) : d_(d) {
    if (d <= 0) {
        throw ValidationError("hash provider: dimension must be positive");
    }
}

Embedding HashEmbeddingProvider::embed(const std::string& text) const {
    return hash_embed(text, d_);
}

} // namespace rarrg
