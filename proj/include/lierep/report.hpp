#pragma once

#include <string>
#include <vector>

namespace lierep {

enum class CheckStatus { match, diff, skipped_budget, open_question };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::match: return "match";
        case CheckStatus::diff: return "diff";
        case CheckStatus::skipped_budget: return "skipped-budget";
        case CheckStatus::open_question: return "expected-open-question";
    }
    return "?";
}

// One verification record. `id` is the stable anchor of the check
// (series/identity/parameter), `left`/`right` carry the compared payloads
// when they differ.
struct CheckRecord {
    std::string suite;
    std::string id;
    CheckStatus status = CheckStatus::match;
    std::string detail;
    std::string left;
    std::string right;
    long long millis = 0;
};

struct Report {
    std::vector<CheckRecord> records;

    void add(CheckRecord r) { records.push_back(std::move(r)); }
    void merge(const Report& o) { records.insert(records.end(), o.records.begin(), o.records.end()); }
    int diffs() const {
        int n = 0;
        for (const auto& r : records)
            if (r.status == CheckStatus::diff) ++n;
        return n;
    }
    int skipped() const {
        int n = 0;
        for (const auto& r : records)
            if (r.status == CheckStatus::skipped_budget) ++n;
        return n;
    }
};

}  // namespace lierep
