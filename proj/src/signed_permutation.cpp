#include "noncross/signed_permutation.hpp"

#include <cstdlib>
#include <sstream>

#include "noncross/errors.hpp"

namespace noncross::cox {

SignedPermutation::SignedPermutation(std::span<const int> window)
{
    const auto n = static_cast<int>(window.size());
    if (n < 1 || n > kMaxLetters) throw InputError("signed permutation needs 1.." + std::to_string(kMaxLetters) + " letters");
    std::array<bool, kMaxLetters> seen{};
    for (int i = 0; i < n; ++i) {
        const int v = window[static_cast<std::size_t>(i)];
        const int a = std::abs(v);
        if (a < 1 || a > n || seen[static_cast<std::size_t>(a - 1)]) {
            throw InputError("not a signed permutation of 1.." + std::to_string(n));
        }
        seen[static_cast<std::size_t>(a - 1)] = true;
        window_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(v);
    }
    n_ = static_cast<std::int8_t>(n);
}

SignedPermutation::SignedPermutation(std::initializer_list<int> window)
    : SignedPermutation(std::span<const int>(window.begin(), window.size()))
{}

SignedPermutation SignedPermutation::identity(int n)
{
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return SignedPermutation(w);
}

SignedPermutation SignedPermutation::cycle(int n, std::span<const int> points)
{
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const int from = points[k];
        if (from < 1 || from > n) throw InputError("cycle point outside 1.." + std::to_string(n));
        w[static_cast<std::size_t>(from - 1)] = points[(k + 1) % points.size()];
    }
    return SignedPermutation(w);
}

std::vector<int> SignedPermutation::window() const { return {window_.begin(), window_.begin() + n_}; }

SignedPermutation SignedPermutation::inverse() const
{
    SignedPermutation out;
    out.n_ = n_;
    for (int i = 1; i <= n_; ++i) {
        const int v = window_[static_cast<std::size_t>(i - 1)];
        out.window_[static_cast<std::size_t>(std::abs(v) - 1)] = static_cast<std::int8_t>(v > 0 ? i : -i);
    }
    return out;
}

SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v)
{
    if (u.n_ != v.n_) throw InputError("signed permutations on different letter counts");
    SignedPermutation out;
    out.n_ = u.n_;
    for (int i = 1; i <= u.n_; ++i) out.window_[static_cast<std::size_t>(i - 1)] = static_cast<std::int8_t>(u(v(i)));
    return out;
}

bool SignedPermutation::is_identity() const noexcept
{
    for (int i = 0; i < n_; ++i) {
        if (window_[static_cast<std::size_t>(i)] != i + 1) return false;
    }
    return true;
}

int SignedPermutation::negative_count() const noexcept
{
    int c = 0;
    for (int i = 0; i < n_; ++i) c += window_[static_cast<std::size_t>(i)] < 0;
    return c;
}

std::vector<std::vector<int>> SignedPermutation::cycles() const
{
    if (!is_unsigned()) throw InputError("cycles() needs an unsigned permutation");
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int s = 1; s <= n_; ++s) {
        if (seen[static_cast<std::size_t>(s - 1)]) continue;
        std::vector<int> c;
        for (int x = s; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
            seen[static_cast<std::size_t>(x - 1)] = true;
            c.push_back(x);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> SignedPermutation::matrix() const
{
    const auto n = static_cast<std::size_t>(n_);
    std::vector<int> m(n * n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        const int v = window_[j];
        m[static_cast<std::size_t>(std::abs(v) - 1) * n + j] = v > 0 ? 1 : -1;
    }
    return m;
}

std::uint64_t SignedPermutation::key() const noexcept
{
    std::uint64_t k = static_cast<std::uint64_t>(n_);
    for (int i = 0; i < n_; ++i) k = (k << 5) | static_cast<std::uint64_t>(window_[static_cast<std::size_t>(i)] + 16);
    return k;
}

std::string SignedPermutation::to_string() const
{
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
        if (i) s += ',';
        s += std::to_string(window_[static_cast<std::size_t>(i)]);
    }
    return s + "]";
}

SignedPermutation parse_signed_permutation(const std::string& text)
{
    std::string cleaned;
    for (char ch : text) {
        if (ch != ' ' && ch != '\t') cleaned += ch;
    }
    if (cleaned.size() < 2 || cleaned.front() != '[' || cleaned.back() != ']') {
        throw InputError("signed permutation must look like [2,-1,3], got '" + text + "'");
    }
    std::vector<int> window;
    std::stringstream ss(cleaned.substr(1, cleaned.size() - 2));
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t used = 0;
            window.push_back(std::stoi(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw InputError("bad entry '" + token + "' in signed permutation");
        }
    }
    return SignedPermutation(window);
}

}  // namespace noncross::cox
