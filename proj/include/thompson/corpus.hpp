#pragma once

// Seeded end-to-end sweep: random f, stratified targets, synthesis and an
// independent certificate check for every case.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "thompson/synthesis.hpp"

namespace thompson {

// Freely reduced word of length 1..max_len in x0^{+-1}, x1^{+-1}.
GroupWord random_generator_word(std::mt19937_64& rng, int max_len);

struct CorpusCase {
    std::size_t index = 0;
    int preferred_part = 1;
    GroupWord word;
    Element f;
    std::int64_t c = 0;
    std::int64_t d = 0;
    std::optional<SynthesisResult> result;
    Verdict verdict;
    std::string error;

    bool ok() const;
};

struct CorpusReport {
    std::uint64_t seed = 0;
    std::vector<CorpusCase> cases;
    std::array<std::size_t, 5> parts{};  // parts[p] = cases dispatched to part p

    std::size_t passed() const;
};

CorpusReport run_corpus(std::uint64_t seed, std::size_t count, int max_len = 12);

std::string format_corpus(const CorpusReport& report);

}  // namespace thompson
