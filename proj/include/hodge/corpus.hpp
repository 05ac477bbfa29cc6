#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hodge/classifier.hpp"

namespace hodge {

/** @brief Which constructor produced a corpus case. */
enum class CaseKind { MinimalWitness, HodgeTate, Principal };

/** @brief One generated LMHS together with the data it was built from. */
struct CorpusCase {
    std::string id;
    CaseKind kind = CaseKind::HodgeTate;
    LmhsDatum datum;
    std::optional<HodgeNumbers> h;               ///< requested Hodge numbers
    std::optional<MinimalType> type;             ///< minimal-witness cases
    std::optional<PrincipalFamily> family;       ///< principal cases
    int size = 0;                                ///< principal parameter
};

struct CorpusOptions {
    std::uint64_t seed = 1;
    std::optional<std::size_t> limit;            ///< run only the first `limit` cases after shuffling
    PolarizationSign sign = PolarizationSign::Positive;  ///< Flipped injects the mutation
    int min_max_weight = 4;                      ///< minimal witnesses: n <= this, entries <= 2
    int ht_max_dim = 8;                          ///< Hodge–Tate constructions: dim <= this, entries <= 3
    int principal_max = 4;                       ///< principal constructors: parameter <= this
};

struct CorpusResult {
    std::size_t cases = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures;           ///< "<case id>: <invariant id>: <message>"
    bool ok() const { return failures.empty(); }
    /** @brief Invariant id of the first failure, or empty. */
    std::string first_failure() const;
};

/** @brief The generated corpus, shuffled by the seed and truncated to the limit. */
std::vector<CorpusCase> generate_corpus(const CorpusOptions& opts);

/**
 * @brief Run every module invariant on one case; failures are appended as
 * "<case id>: <invariant id>: <message>".
 */
void verify_case(const CorpusCase& c, const CorpusOptions& opts, std::uint64_t sample_seed, CorpusResult& out);

/** @brief Generate and verify the whole corpus. */
CorpusResult verify_corpus(const CorpusOptions& opts);

}  // namespace hodge
