#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "e3c/trits.hpp"

using namespace e3c;

TEST_CASE("lee weight") {
    CHECK(lee_weight(parse_trits("4321", 5)) == 6);
    CHECK(lee_weight(parse_trits("0000", 3)) == 0);
    CHECK(lee_weight(parse_trits("122", 3)) == 3);
}

TEST_CASE("lee distance") {
    CHECK(lee_distance(parse_trits("1234", 5), parse_trits("4321", 5)) == 6);
    CHECK(lee_distance(parse_trits("0212", 3), parse_trits("0212", 3)) == 0);
    CHECK(lee_distance(parse_trits("012", 3), parse_trits("210", 3)) == 2);
    CHECK_THROWS_AS(lee_distance(parse_trits("01", 3), parse_trits("011", 3)),
                    dimension_error);
    CHECK_THROWS_AS(lee_distance(parse_trits("01", 3), parse_trits("01", 5)),
                    dimension_error);
}

TEST_CASE("hamming distance") {
    CHECK(hamming_distance(parse_trits("1234", 5), parse_trits("4321", 5)) == 4);
    CHECK(hamming_distance(parse_trits("120", 3), parse_trits("120", 3)) == 0);
    // Dimension 0 is the rightmost character, so [1, 1] is the second digit
    // from the right.
    CHECK(hamming_distance(parse_trits("0010", 3), parse_trits("0000", 3), 1, 1) == 1);
    CHECK(hamming_distance(parse_trits("0100", 3), parse_trits("0000", 3), 1, 1) == 0);
    CHECK_THROWS_AS(
        hamming_distance(parse_trits("00", 3), parse_trits("00", 3), 0, 2),
        dimension_error);
}

TEST_CASE("parsing and printing round-trip") {
    for (const char* text : {"0010", "2101", "0", "2"}) {
        CHECK(to_string(parse_trits(text, 3)) == text);
    }
    CHECK_THROWS_AS(parse_trits("013", 3), parse_error);
    CHECK_THROWS_AS(parse_trits("", 3), parse_error);
    CHECK_THROWS_AS(parse_trits("0a1", 3), parse_error);
}

// Enumerate every string of the given length and radix.
static std::vector<TritString> all_strings(int len, int k) {
    std::vector<TritString> out;
    long long total = 1;
    for (int i = 0; i < len; ++i) total *= k;
    for (long long code = 0; code < total; ++code) {
        std::vector<std::uint8_t> digits(len);
        long long c = code;
        for (int i = 0; i < len; ++i) {
            digits[i] = static_cast<std::uint8_t>(c % k);
            c /= k;
        }
        out.emplace_back(std::move(digits), k);
    }
    return out;
}

TEST_CASE("lee equals hamming for k in {2,3}") {
    for (int k : {2, 3}) {
        for (int len = 1; len <= 4; ++len) {
            auto strings = all_strings(len, k);
            for (const auto& x : strings)
                for (const auto& y : strings)
                    CHECK(lee_distance(x, y) == hamming_distance(x, y));
        }
    }
}

TEST_CASE("lee distance is a metric on length-3 ternary strings") {
    auto strings = all_strings(3, 3);
    for (const auto& x : strings) {
        for (const auto& y : strings) {
            int dxy = lee_distance(x, y);
            CHECK(dxy == lee_distance(y, x));
            CHECK((dxy == 0) == (x == y));
            for (const auto& z : strings)
                CHECK(dxy <= lee_distance(x, z) + lee_distance(z, y));
        }
    }
}

TEST_CASE("lee weight bound") {
    for (int k : {2, 3, 5}) {
        for (const auto& x : all_strings(3, k))
            CHECK(lee_weight(x) <= 3 * (k / 2));
    }
}
