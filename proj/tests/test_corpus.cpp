#include "doctest.h"
#include "thompson/corpus.hpp"

using namespace thompson;

TEST_CASE("random words are freely reduced and bounded") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const GroupWord w = random_generator_word(rng, 12);
        CHECK(w.length() >= 1);
        CHECK(w.length() <= 12);
        const auto& letters = w.letters();
        for (std::size_t k = 1; k < letters.size(); ++k) {
            CHECK_FALSE((letters[k].symbol == letters[k - 1].symbol && letters[k].exponent == -letters[k - 1].exponent));
        }
    }
}

TEST_CASE("corpus sweep") {
    const CorpusReport report = run_corpus(0, 24);
    CHECK(report.cases.size() == 24);
    CHECK(report.passed() == 24);
    for (int p = 1; p <= 4; ++p) CHECK(report.parts[static_cast<std::size_t>(p)] > 0);
    for (const auto& cc : report.cases) {
        CHECK(cc.c >= -3);
        CHECK(cc.c <= 3);
        CHECK(cc.d >= -3);
        CHECK(cc.d <= 3);
    }
    CHECK(format_corpus(report) == format_corpus(run_corpus(0, 24)));
    CHECK(format_corpus(report).find("passed 24/24") != std::string::npos);
}
