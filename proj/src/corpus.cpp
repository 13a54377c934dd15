#include "thompson/corpus.hpp"

#include <iomanip>
#include <sstream>

#include "thompson/error.hpp"

namespace thompson {

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// Uniform in {-3,...,-1, 1,...,3}.
std::int64_t nonzero(std::mt19937_64& rng) {
    const auto k = static_cast<std::int64_t>(below(rng, 6));
    return k < 3 ? k - 3 : k - 2;
}

bool feasible(int part, const AbelianImage& a) {
    switch (part) {
        case 2: return a.at_one != 0;
        case 3: return a.at_zero != 0;
        case 4: return a.at_zero != 0 && a.at_one != 0;
        default: return true;
    }
}

}  // namespace

GroupWord random_generator_word(std::mt19937_64& rng, int max_len) {
    static const char* const names[2] = {"x0", "x1"};
    const int len = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(max_len)));
    std::vector<Letter> letters;
    int previous = -1;
    while (static_cast<int>(letters.size()) < len) {
        const int g = static_cast<int>(below(rng, 4));
        if (previous >= 0 && (g ^ 1) == previous) continue;
        letters.push_back({names[g / 2], g % 2 == 0 ? 1 : -1});
        previous = g;
    }
    return GroupWord(std::move(letters));
}

bool CorpusCase::ok() const {
    return result && verdict.pass() && abelianize(result->g) == AbelianImage{c, d};
}

std::size_t CorpusReport::passed() const {
    std::size_t n = 0;
    for (const auto& c : cases) n += c.ok() ? 1 : 0;
    return n;
}

CorpusReport run_corpus(std::uint64_t seed, std::size_t count, int max_len) {
    std::mt19937_64 rng(seed);
    const Assignment gens{{"x0", Element::x0()}, {"x1", Element::x1()}};
    CorpusReport report;
    report.seed = seed;
    for (std::size_t i = 0; i < count; ++i) {
        CorpusCase cc;
        cc.index = i;
        cc.preferred_part = static_cast<int>(i % 4) + 1;
        int part = 1;
        for (int attempt = 0; attempt < 64; ++attempt) {
            cc.word = random_generator_word(rng, max_len);
            cc.f = eval_word(cc.word, gens);
            if (cc.f.is_identity()) continue;
            if (feasible(cc.preferred_part, abelianize(cc.f))) {
                part = cc.preferred_part;
                break;
            }
        }
        while (cc.f.is_identity()) {
            cc.word = random_generator_word(rng, max_len);
            cc.f = eval_word(cc.word, gens);
        }
        switch (part) {
            case 1: cc.c = nonzero(rng); cc.d = nonzero(rng); break;
            case 2: cc.c = nonzero(rng); break;
            case 3: cc.d = nonzero(rng); break;
            default: break;
        }
        try {
            cc.result = synthesize(cc.f, cc.c, cc.d);
            cc.verdict = certify_normal_generation(cc.result->certificate);
            report.parts[static_cast<std::size_t>(cc.result->construction.part)] += 1;
        } catch (const Error& e) {
            cc.error = e.what();
        }
        report.cases.push_back(std::move(cc));
    }
    return report;
}

std::string format_corpus(const CorpusReport& report) {
    std::ostringstream out;
    out << "seed " << report.seed << ", " << report.cases.size() << " cases\n";
    out << std::left << std::setw(5) << "#" << std::setw(6) << "part" << std::setw(10) << "pi(f)" << std::setw(10)
        << "target" << std::setw(7) << "|f|" << std::setw(7) << "|g|" << std::setw(6) << "wit" << std::setw(7)
        << "depth" << std::setw(10) << "index" << std::setw(9) << "verdict" << "f\n";
    for (const auto& cc : report.cases) {
        const AbelianImage a = abelianize(cc.f);
        const AbelianImage t{cc.c, cc.d};
        out << std::setw(5) << cc.index;
        if (!cc.result) {
            out << std::setw(6) << "-" << std::setw(10) << a.to_string() << std::setw(10) << t.to_string()
                << "ERROR " << cc.error << " [" << cc.word.to_string() << "]\n";
            continue;
        }
        const auto& r = *cc.result;
        out << std::setw(6) << r.construction.part << std::setw(10) << a.to_string() << std::setw(10)
            << t.to_string() << std::setw(7) << cc.f.size() << std::setw(7) << r.g.size() << std::setw(6)
            << r.certificate.witnesses.size() << std::setw(7) << r.certificate.depth << std::setw(10)
            << r.index.to_string() << std::setw(9)
            << (cc.ok() ? "PASS" : "FAIL " + std::string(to_string(cc.verdict.reason))) << cc.word.to_string()
            << "\n";
    }
    out << "passed " << report.passed() << "/" << report.cases.size() << "\n";
    out << "parts 1:" << report.parts[1] << " 2:" << report.parts[2] << " 3:" << report.parts[3]
        << " 4:" << report.parts[4] << "\n";
    return out.str();
}

}  // namespace thompson
