#include "noncross/io.hpp"

#include <cctype>
#include <cstdio>

#include "noncross/errors.hpp"

namespace noncross {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<std::string_view> split_items(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        if (j > i) out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw InputError("not a rational: '" + std::string(text) + "'");
    const Integer d(std::string{den});
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational r(Integer(std::string{num}), d);
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r)
{
    const Integer num = numerator(r);
    const Integer den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    for (auto item : split_items(text)) out.push_back(parse_rational(item));
    if (out.empty()) throw InputError("empty list of rationals");
    return out;
}

std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    for (auto item : split_items(text)) {
        std::string_view digits = item;
        if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
        if (!all_digits(digits) || digits.size() > 9) throw InputError("not an integer: '" + std::string(item) + "'");
        out.push_back(std::stoi(std::string(item)));
    }
    return out;
}

std::string to_decimal(const Rational& r, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, to_double(r));
    return buf;
}

}  // namespace noncross
