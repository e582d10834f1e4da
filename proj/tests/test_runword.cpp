#include "lsb/runword.hpp"

#include <doctest.h>

#include <random>

using namespace lsb;

namespace {

RunWord w(const char* digits) { return parse_digits(digits); }

std::string random_digit_string(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> digit_dist(0, 9);
    std::string s;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) s += static_cast<char>('0' + digit_dist(rng));
    return s;
}

std::vector<Run> random_runs(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_dist(1, 8);
    std::uniform_int_distribution<int> digit_dist(0, 9);
    std::uniform_int_distribution<long long> count_dist(1, 1'000'000'000'000LL);
    std::vector<Run> runs;
    int n = n_dist(rng);
    for (int i = 0; i < n; ++i)
        runs.push_back({Digit(digit_dist(rng)), Count(count_dist(rng))});
    return runs;
}

}  // namespace

TEST_CASE("parse_digits") {
    CHECK(w("11193222").runs() == std::vector<Run>{{Digit(1), 3}, {Digit(9), 1}, {Digit(3), 1}, {Digit(2), 3}});
    CHECK(w("7").runs() == std::vector<Run>{{Digit(7), 1}});
    CHECK(w("000").runs() == std::vector<Run>{{Digit(0), 3}});
    CHECK_THROWS_AS(parse_digits(""), ParseError);
    CHECK_THROWS_AS(parse_digits("12a3"), ParseError);
    try {
        parse_digits("12a3");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("parse_compressed") {
    CHECK(parse_compressed("2^22") == RunWord({{Digit(2), 22}}));
    CHECK(parse_compressed("1^3 9 3 2^3") == w("11193222"));
    CHECK(parse_compressed("2^3 2^4") == RunWord({{Digit(2), 7}}));
    CHECK(parse_compressed("2^33333333333") ==
          RunWord({{Digit(2), Count("33333333333")}}));
    CHECK(parse_compressed("11193222") == w("11193222"));

    CHECK_THROWS_AS(parse_compressed(""), ParseError);
    CHECK_THROWS_AS(parse_compressed("  "), ParseError);
    CHECK_THROWS_AS(parse_compressed("2^0"), ParseError);
    CHECK_THROWS_AS(parse_compressed("2^"), ParseError);
    CHECK_THROWS_AS(parse_compressed("x3"), ParseError);
    CHECK_THROWS_AS(parse_compressed("3^ 4"), ParseError);
}

TEST_CASE("render_digits") {
    CHECK(render_digits(RunWord({{Digit(3), 2}, {Digit(2), 2}}), 100) == "3322");
    CHECK(render_digits(RunWord({{Digit(0), 1}}), 1) == "0");
    RunWord giant({{Digit(2), Count("33333333333")}});
    CHECK_THROWS_AS(render_digits(giant, Count(1000000)), WordTooLongError);
    try {
        render_digits(giant, Count(1000000));
    } catch (const WordTooLongError& e) {
        CHECK(e.total_length() == Count("33333333333"));
    }
}

TEST_CASE("render_compressed") {
    CHECK(render_compressed(RunWord({{Digit(2), Count("33333333333")}})) == "2^33333333333");
    CHECK(render_compressed(RunWord({{Digit(3), 2}, {Digit(2), 2}})) == "3322");
    CHECK(render_compressed(RunWord({{Digit(1), 3}, {Digit(9), 1}})) == "1119");
}

TEST_CASE("normalize") {
    CHECK(normalize({{Digit(2), 2}, {Digit(2), 1}}) == RunWord({{Digit(2), 3}}));
    CHECK(normalize({{Digit(1), 1}, {Digit(2), 1}, {Digit(1), 1}}) == w("121"));
    CHECK(normalize({{Digit(3), 1}, {Digit(3), 2}, {Digit(3), 3}}) == RunWord({{Digit(3), 6}}));
    CHECK_THROWS_AS(normalize({}), std::invalid_argument);
    CHECK_THROWS_AS(normalize({{Digit(3), 0}}), std::invalid_argument);
}

TEST_CASE("total_length") {
    CHECK(w("11193222").total_length() == 8);
    CHECK(RunWord({{Digit(2), Count("33333333333")}}).total_length() == Count("33333333333"));
    CHECK(w("7").total_length() == 1);
}

TEST_CASE("word_compare") {
    CHECK(word_compare(w("332221"), w("333211")) < 0);
    CHECK(word_compare(w("9"), w("10")) < 0);
    CHECK(word_compare(parse_compressed("2^33333333333"), w("333333333332")) > 0);
    CHECK(word_compare(w("22"), w("22")) == 0);
    // Huge-run words compare without materializing.
    CHECK(word_compare(parse_compressed("2^999999999999999999"),
                       parse_compressed("3^999999999999999999")) < 0);
    CHECK(word_compare(parse_compressed("2^5 3"), parse_compressed("2^4 33")) < 0);
}

TEST_CASE("round trip and order properties") {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 2000; ++i) {
        std::string s = random_digit_string(rng, 40);
        RunWord word = parse_digits(s);
        CHECK(render_digits(word, Count(s.size())) == s);
        CHECK(parse_digits(render_digits(word, Count(s.size()))) == word);
    }
    for (int i = 0; i < 2000; ++i) {
        std::vector<Run> runs = random_runs(rng);
        RunWord once = normalize(runs);
        CHECK(normalize(once.runs()) == once);
        for (std::size_t k = 1; k < once.runs().size(); ++k)
            CHECK(once.runs()[k - 1].digit != once.runs()[k].digit);
        CHECK(parse_compressed(render_compressed(once)) == once);
    }
    // word_compare agrees with numeric order on no-leading-zero words.
    for (int i = 0; i < 2000; ++i) {
        std::uniform_int_distribution<long long> v(1, 99999999);
        long long x = v(rng), y = v(rng);
        auto cmp = word_compare(parse_digits(std::to_string(x)), parse_digits(std::to_string(y)));
        CHECK((cmp < 0) == (x < y));
        CHECK((cmp == 0) == (x == y));
    }
    // Antisymmetry and transitivity on a random triple.
    for (int i = 0; i < 1000; ++i) {
        RunWord a = parse_digits(random_digit_string(rng, 12));
        RunWord b = parse_digits(random_digit_string(rng, 12));
        RunWord c = parse_digits(random_digit_string(rng, 12));
        CHECK((word_compare(a, b) < 0) == (word_compare(b, a) > 0));
        if (word_compare(a, b) <= 0 && word_compare(b, c) <= 0)
            CHECK(word_compare(a, c) <= 0);
    }
}
