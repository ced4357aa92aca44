#pragma once

// Structured verification outcomes.  Every suite produces a report whose
// items carry the identity id, a citation anchor, the truncation order the
// check actually achieved, and the first failing term on failure.

#include <qforms/biseries.hpp>
#include <qforms/pseries.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qforms {

enum class Status { pass, fail, skipped };

struct ReportItem {
    std::string id;
    std::string anchor;
    long order = 0;
    Status status = Status::pass;
    std::string detail;  // first failing term, or the skip reason
};

struct VerificationReport {
    std::string suite;
    long order = 0;
    std::optional<std::uint64_t> seed;
    std::vector<ReportItem> items;
    double elapsed_ms = 0.0;

    bool all_pass() const;
    void add(ReportItem item) { items.push_back(std::move(item)); }
    void merge(const VerificationReport& other);
    void sort_items();

    std::string to_text() const;
    std::string to_json() const;
};

// Check helpers: compare / test-for-zero and record the outcome.
void check_series_eq(VerificationReport& rep, const std::string& id, const std::string& anchor,
                     const PSeries& lhs, const PSeries& rhs, long min_order);
void check_series_zero(VerificationReport& rep, const std::string& id, const std::string& anchor,
                       const PSeries& s, long min_order);
void check_bifrac_eq(VerificationReport& rep, const std::string& id, const std::string& anchor,
                     const BiFrac& lhs, const BiFrac& rhs, long min_box);
void check_bifrac_zero(VerificationReport& rep, const std::string& id, const std::string& anchor,
                       const BiFrac& f, long min_box);
void check_true(VerificationReport& rep, const std::string& id, const std::string& anchor,
                bool ok, long order, const std::string& fail_detail = "");
void add_skipped(VerificationReport& rep, const std::string& id, const std::string& anchor,
                 const std::string& reason);

}  // namespace qforms
