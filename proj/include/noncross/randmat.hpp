#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "noncross/rational.hpp"

namespace noncross::rmt {

/// Philox4x32-10 counter-based generator (Salmon et al. 2011).
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;
    static Counter block(Counter counter, Key key);
};

/// A stream of variates determined by (seed, stream id): word j of the
/// stream is taken from Philox block j / 4 with counter (j/4, stream id).
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint32_t next_u32();
    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform();
    /// Standard normal (Box-Muller).
    double normal();

private:
    Philox4x32::Key key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    Philox4x32::Counter buffer_{};
    int used_ = 4;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// N x N matrix of i.i.d. complex Gaussians with E|g|^2 = 1/N (real and
/// imaginary parts N(0, 1/(2N))).
Eigen::MatrixXcd sample_ginibre(int n, RngStream& stream);

struct GinibreSpec {
    int n = 64;
    int l = 1;
    int trials = 50;
    std::uint64_t seed = 1;
    unsigned threads = 1;  // 0 = hardware concurrency
};

struct MomentEstimate {
    int k = 0;
    int trials = 0;
    double mean = 0.0;
    double std_error = 0.0;
    Rational target;  // Fuss-Catalan number from free_bessel_moments
    double z_score = 0.0;
};

/// Sample mean of (1/N) tr((W W^*)^k) with W = G_1 ... G_l. Throws
/// CapExceeded when the estimated flop count exceeds the budget, InputError
/// on non-positive parameters.
MomentEstimate estimate_product_moment(const GinibreSpec& spec, int k);

/// Same with W = G^l for a single Ginibre G.
MomentEstimate estimate_power_moment(const GinibreSpec& spec, int k);

/// Estimated floating point operations for one estimate.
double estimated_flops(const GinibreSpec& spec, int k);

}  // namespace noncross::rmt
