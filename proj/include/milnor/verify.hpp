#pragma once

// Cross-verification of corpus records: every stored expectation is
// recomputed from the defining polynomial and compared.  Checks collect
// failures instead of aborting, so one bad record cannot mask another.

#include <cstdint>
#include <string>
#include <vector>

#include "milnor/corpus.hpp"

namespace milnor {

struct CheckResult {
    std::string name;    // stable check identifier, e.g. "milnor", "polar-formula"
    bool passed;
    std::string detail;  // human-readable computed-vs-expected summary
};

struct RecordReport {
    std::string record;
    std::vector<CheckResult> checks;
    double seconds = 0.0;
    bool all_passed() const;
};

struct VerificationReport {
    std::vector<RecordReport> records;
    bool all_passed() const;
    int check_count() const;
    int failure_count() const;
};

// Verify one record.  `budget_limit` bounds each local standard-basis
// computation; `trials` is the number of random slices per sectional step.
// The seed is mixed with the record name, so reports are independent of
// corpus order.
RecordReport verify_record(const CorpusRecord& rec, std::uint64_t seed,
                           std::int64_t budget_limit = 1'000'000, int trials = 5);

// Verify many records, optionally on several worker threads (results are
// deterministic and ordered as given regardless of `jobs`).
VerificationReport verify_all(const std::vector<CorpusRecord>& corpus, std::uint64_t seed,
                              std::int64_t budget_limit = 1'000'000, int trials = 5,
                              int jobs = 1);

}  // namespace milnor
