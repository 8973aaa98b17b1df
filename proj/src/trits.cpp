#include "e3c/trits.hpp"

#include <algorithm>

namespace e3c {

TritString::TritString(std::vector<std::uint8_t> d, int radix)
    : digits(std::move(d)), k(radix) {
    if (k < 2) throw dimension_error("radix must be at least 2");
    if (digits.empty()) throw dimension_error("string must have length >= 1");
    for (auto v : digits)
        if (v >= k) throw dimension_error("digit out of range for radix");
}

TritString parse_trits(const std::string& text, int k) {
    if (text.empty()) throw parse_error("empty digit string");
    std::vector<std::uint8_t> digits(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[text.size() - 1 - i];  // rightmost char is dimension 0
        if (c < '0' || c >= '0' + k)
            throw parse_error("invalid digit '" + std::string(1, c) +
                              "' for radix " + std::to_string(k));
        digits[i] = static_cast<std::uint8_t>(c - '0');
    }
    return TritString(std::move(digits), k);
}

std::string to_string(const TritString& s) {
    std::string out(s.size(), '0');
    for (std::size_t i = 0; i < s.size(); ++i)
        out[s.size() - 1 - i] = static_cast<char>('0' + s.digits[i]);
    return out;
}

int lee_weight(const TritString& s) {
    int w = 0;
    for (auto d : s.digits) w += std::min<int>(d, s.k - d);
    return w;
}

static void check_compatible(const TritString& x, const TritString& y) {
    if (x.size() != y.size())
        throw dimension_error("length mismatch");
    if (x.k != y.k) throw dimension_error("radix mismatch");
}

int lee_distance(const TritString& x, const TritString& y) {
    check_compatible(x, y);
    int w = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        int d = (x.digits[i] - y.digits[i] + x.k) % x.k;
        w += std::min(d, x.k - d);
    }
    return w;
}

int hamming_distance(const TritString& x, const TritString& y) {
    check_compatible(x, y);
    return hamming_distance(x, y, 0, static_cast<int>(x.size()) - 1);
}

int hamming_distance(const TritString& x, const TritString& y, int p, int q) {
    check_compatible(x, y);
    if (p < 0 || q >= static_cast<int>(x.size()) || p > q)
        throw dimension_error("invalid dimension range");
    int h = 0;
    for (int i = p; i <= q; ++i)
        if (x.digits[i] != y.digits[i]) ++h;
    return h;
}

}  // namespace e3c
