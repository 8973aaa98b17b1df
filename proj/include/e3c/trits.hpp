#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace e3c {

// Thrown when two strings of incompatible length/radix are combined, or an
// index range is out of bounds.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a textual vertex fails to parse.
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A fixed-length string of base-k digits.  Digit 0 is the *rightmost*
// character of the printed form, i.e. digits are stored little-endian so that
// digit indices coincide with cube dimensions.  The radix travels with the
// value; k = 3 everywhere except Lee-distance arithmetic demos.
struct TritString {
    std::vector<std::uint8_t> digits;  // digits[i] = dimension i
    int k = 3;

    TritString() = default;
    TritString(std::vector<std::uint8_t> d, int radix);

    std::size_t size() const { return digits.size(); }
    std::uint8_t operator[](std::size_t i) const { return digits[i]; }
    std::uint8_t& operator[](std::size_t i) { return digits[i]; }

    bool operator==(const TritString& o) const = default;
    auto operator<=>(const TritString& o) const = default;
};

// Parse a most-significant-first digit string, e.g. "0010".
TritString parse_trits(const std::string& text, int k);

// Print most-significant-first; inverse of parse_trits.
std::string to_string(const TritString& s);

// Sum over digits of min(d, k - d).
int lee_weight(const TritString& s);

// Lee weight of the digit-wise difference (x - y) mod k.
int lee_distance(const TritString& x, const TritString& y);

// Number of differing positions, optionally restricted to the inclusive
// dimension interval [p, q].
int hamming_distance(const TritString& x, const TritString& y);
int hamming_distance(const TritString& x, const TritString& y, int p, int q);

}  // namespace e3c
