#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace noncross::cox {

/// Signed permutation of {±1, ..., ±n} in window notation: w(i) for
/// i = 1..n, with w(-i) = -w(i). Plain permutations are the all-positive
/// case. Composition (u * v)(i) = u(v(i)).
class SignedPermutation {
public:
    static constexpr int kMaxLetters = 12;

    SignedPermutation() = default;
    /// Throws InputError unless the window is a valid signed permutation.
    explicit SignedPermutation(std::span<const int> window);
    SignedPermutation(std::initializer_list<int> window);

    static SignedPermutation identity(int n);
    /// The cycle c_1 -> c_2 -> ... -> c_k -> c_1 on n letters (positive).
    static SignedPermutation cycle(int n, std::span<const int> points);

    int letters() const noexcept { return n_; }
    /// Image of i in {±1..±n}.
    int operator()(int i) const noexcept
    {
        return i > 0 ? window_[static_cast<std::size_t>(i - 1)] : -window_[static_cast<std::size_t>(-i - 1)];
    }
    std::vector<int> window() const;

    SignedPermutation inverse() const;
    friend SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v);

    bool is_identity() const noexcept;
    int negative_count() const noexcept;
    bool is_unsigned() const noexcept { return negative_count() == 0; }

    /// Cycles on {1..n} of an unsigned permutation (fixed points included).
    std::vector<std::vector<int>> cycles() const;

    /// Integer matrix of the linear action on Z^n: e_i -> sign * e_|w(i)|.
    /// Row-major n x n.
    std::vector<int> matrix() const;

    /// Injective 64-bit packing, usable as a hash key.
    std::uint64_t key() const noexcept;

    /// "[2,-1,3]".
    std::string to_string() const;

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) noexcept
    {
        return a.n_ == b.n_ && a.window_ == b.window_;
    }
    friend auto operator<=>(const SignedPermutation& a, const SignedPermutation& b) noexcept
    {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.window_ <=> b.window_;
    }

private:
    std::int8_t n_ = 0;
    std::array<std::int8_t, kMaxLetters> window_{};
};

/// Parses "[2,-1,3]" (whitespace tolerated). Throws InputError.
SignedPermutation parse_signed_permutation(const std::string& text);

}  // namespace noncross::cox

template <>
struct std::hash<noncross::cox::SignedPermutation> {
    std::size_t operator()(const noncross::cox::SignedPermutation& w) const noexcept
    {
        return std::hash<std::uint64_t>{}(w.key());
    }
};
