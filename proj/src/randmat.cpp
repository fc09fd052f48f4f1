#include "noncross/randmat.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "noncross/errors.hpp"
#include "noncross/freeprob.hpp"

namespace noncross::rmt {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53u;
constexpr std::uint32_t kM1 = 0xCD9E8D57u;
constexpr std::uint32_t kW0 = 0x9E3779B9u;
constexpr std::uint32_t kW1 = 0xBB67AE85u;

Philox4x32::Counter philox_round(const Philox4x32::Counter& c, const Philox4x32::Key& k)
{
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

// Pairwise sum in a fixed shape, independent of scheduling.
double tree_sum(const std::vector<double>& v, std::size_t lo, std::size_t hi)
{
    if (hi - lo == 0) return 0.0;
    if (hi - lo == 1) return v[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return tree_sum(v, lo, mid) + tree_sum(v, mid, hi);
}

enum class Model { kProduct, kPower };

double normalized_trace_power(const Eigen::MatrixXcd& w, int k)
{
    const Eigen::MatrixXcd a = w * w.adjoint();
    Eigen::MatrixXcd p = a;
    for (int j = 1; j < k; ++j) p = p * a;
    return p.trace().real() / static_cast<double>(w.rows());
}

MomentEstimate estimate(const GinibreSpec& spec, int k, Model model)
{
    if (spec.n < 1 || spec.l < 1 || spec.trials < 2 || k < 1) {
        throw InputError("need n >= 1, l >= 1, trials >= 2 and k >= 1");
    }
    if (spec.l > 255) throw InputError("at most 255 factors");
    const double flops = estimated_flops(spec, k);
    const double budget = current_limits().rmt_flop_budget;
    if (flops > budget) {
        throw CapExceeded("Monte Carlo run needs about " + std::to_string(flops) + " flops, budget is " +
                          std::to_string(budget));
    }
    const auto target = freeprob::free_bessel_moments(spec.l, k).at(k);

    std::vector<double> values(static_cast<std::size_t>(spec.trials));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int t = next++; t < spec.trials; t = next++) {
            const std::uint64_t base = static_cast<std::uint64_t>(t) << 8;
            Eigen::MatrixXcd w;
            if (model == Model::kProduct) {
                RngStream s0(spec.seed, base);
                w = sample_ginibre(spec.n, s0);
                for (int f = 1; f < spec.l; ++f) {
                    RngStream sf(spec.seed, base | static_cast<std::uint64_t>(f));
                    w = w * sample_ginibre(spec.n, sf);
                }
            } else {
                RngStream s0(spec.seed, base);
                const Eigen::MatrixXcd g = sample_ginibre(spec.n, s0);
                w = g;
                for (int f = 1; f < spec.l; ++f) w = w * g;
            }
            values[static_cast<std::size_t>(t)] = normalized_trace_power(w, k);
        }
    };
    unsigned threads = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec.threads;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(spec.trials));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    const auto n = static_cast<double>(spec.trials);
    const double mean = tree_sum(values, 0, values.size()) / n;
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) sq[i] = (values[i] - mean) * (values[i] - mean);
    const double var = tree_sum(sq, 0, sq.size()) / (n - 1.0);

    MomentEstimate out;
    out.k = k;
    out.trials = spec.trials;
    out.mean = mean;
    out.std_error = std::sqrt(var / n);
    out.target = target;
    const double tgt = to_double(target);
    out.z_score = out.std_error > 0 ? (mean - tgt) / out.std_error : (mean == tgt ? 0.0 : INFINITY);
    return out;
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter counter, Key key)
{
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            key[0] += kW0;
            key[1] += kW1;
        }
        counter = philox_round(counter, key);
    }
    return counter;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, stream_(stream_id)
{}

std::uint32_t RngStream::next_u32()
{
    if (used_ == 4) {
        buffer_ = Philox4x32::block({static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                                     static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
                                    key_);
        ++block_;
        used_ = 0;
    }
    return buffer_[static_cast<std::size_t>(used_++)];
}

double RngStream::uniform()
{
    const std::uint64_t hi = next_u32() >> 5;  // 27 bits
    const std::uint64_t lo = next_u32() >> 6;  // 26 bits
    const std::uint64_t bits = (hi << 26) | lo;
    return (static_cast<double>(bits) + 0.5) * 0x1p-53;
}

double RngStream::normal()
{
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Eigen::MatrixXcd sample_ginibre(int n, RngStream& stream)
{
    if (n < 1) throw InputError("matrix dimension must be positive");
    const double sd = std::sqrt(0.5 / static_cast<double>(n));
    Eigen::MatrixXcd g(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double re = stream.normal();
            const double im = stream.normal();
            g(i, j) = std::complex<double>(sd * re, sd * im);
        }
    }
    return g;
}

double estimated_flops(const GinibreSpec& spec, int k)
{
    const double n = spec.n;
    // A complex multiply-add is 8 real flops; (l - 1) factor products, one
    // W W^* and k - 1 powers, plus sampling.
    const double products = static_cast<double>(spec.l - 1) + static_cast<double>(k);
    return static_cast<double>(spec.trials) * (8.0 * n * n * n * products + 40.0 * n * n * spec.l);
}

MomentEstimate estimate_product_moment(const GinibreSpec& spec, int k) { return estimate(spec, k, Model::kProduct); }

MomentEstimate estimate_power_moment(const GinibreSpec& spec, int k) { return estimate(spec, k, Model::kPower); }

}  // namespace noncross::rmt
