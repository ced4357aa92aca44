#include <qforms/report.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace qforms {

bool VerificationReport::all_pass() const {
    return std::all_of(items.begin(), items.end(),
                       [](const ReportItem& it) { return it.status != Status::fail; });
}

void VerificationReport::merge(const VerificationReport& other) {
    for (const auto& it : other.items) items.push_back(it);
    elapsed_ms += other.elapsed_ms;
}

void VerificationReport::sort_items() {
    std::stable_sort(items.begin(), items.end(),
                     [](const ReportItem& a, const ReportItem& b) { return a.id < b.id; });
}

static const char* status_str(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        default: return "skipped";
    }
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << " (order " << order;
    if (seed) os << ", seed " << *seed;
    os << ")\n";
    for (const auto& it : items) {
        os << (it.status == Status::pass   ? "  [PASS] "
               : it.status == Status::fail ? "  [FAIL] "
                                           : "  [SKIP] ")
           << it.id << " (order " << it.order << ")";
        if (!it.detail.empty()) os << " -- " << it.detail;
        os << "\n       anchor: " << it.anchor << "\n";
    }
    long fails = std::count_if(items.begin(), items.end(),
                               [](const ReportItem& i) { return i.status == Status::fail; });
    os << "  " << items.size() << " checks, " << fails << " failures, " << elapsed_ms
       << " ms\n";
    return os.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["order"] = order;
    if (seed)
        j["seed"] = *seed;
    else
        j["seed"] = nullptr;
    j["items"] = nlohmann::json::array();
    for (const auto& it : items) {
        nlohmann::json ji;
        ji["id"] = it.id;
        ji["anchor"] = it.anchor;
        ji["order"] = it.order;
        ji["status"] = status_str(it.status);
        ji["detail"] = it.detail;
        j["items"].push_back(ji);
    }
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2);
}

void check_series_eq(VerificationReport& rep, const std::string& id, const std::string& anchor,
                     const PSeries& lhs, const PSeries& rhs, long min_order) {
    ReportItem item{id, anchor, min_order, Status::pass, ""};
    Rat overlap = PSeries::agree_prec_exp(lhs, rhs);
    if (overlap <= Rat(min_order)) {
        item.status = Status::fail;
        item.detail = "insufficient overlap: series known only below q^(" + rat_str(overlap) + ")";
        rep.add(std::move(item));
        return;
    }
    if (auto mm = PSeries::first_mismatch(lhs, rhs)) {
        item.status = Status::fail;
        item.detail = "first failing coefficient at q^(" + rat_str(mm->exponent) +
                      "): lhs=" + rat_str(mm->lhs) + " rhs=" + rat_str(mm->rhs);
    }
    rep.add(std::move(item));
}

void check_series_zero(VerificationReport& rep, const std::string& id, const std::string& anchor,
                       const PSeries& s, long min_order) {
    check_series_eq(rep, id, anchor, s, PSeries::zero(), min_order);
}

void check_bifrac_eq(VerificationReport& rep, const std::string& id, const std::string& anchor,
                     const BiFrac& lhs, const BiFrac& rhs, long min_box) {
    BiSeries diff = BiFrac::cross_diff(lhs, rhs);
    ReportItem item{id, anchor, diff.order() == BiSeries::kInf ? min_box : diff.order(),
                    Status::pass, ""};
    if (diff.order() != BiSeries::kInf && diff.order() < min_box) {
        item.status = Status::fail;
        item.detail = "insufficient box: cross-multiplied difference known only to order " +
                      std::to_string(diff.order());
        rep.add(std::move(item));
        return;
    }
    if (auto t = diff.first_nonzero()) {
        item.status = Status::fail;
        item.detail = "first failing coefficient at u1^" + std::to_string(t->i) + " u2^" +
                      std::to_string(t->j) + ": cross-difference " + rat_str(t->c);
    }
    rep.add(std::move(item));
}

void check_bifrac_zero(VerificationReport& rep, const std::string& id, const std::string& anchor,
                       const BiFrac& f, long min_box) {
    check_bifrac_eq(rep, id, anchor, f, BiFrac(Rat(0)), min_box);
}

void check_true(VerificationReport& rep, const std::string& id, const std::string& anchor,
                bool ok, long order, const std::string& fail_detail) {
    rep.add(ReportItem{id, anchor, order, ok ? Status::pass : Status::fail,
                       ok ? "" : fail_detail});
}

void add_skipped(VerificationReport& rep, const std::string& id, const std::string& anchor,
                 const std::string& reason) {
    rep.add(ReportItem{id, anchor, 0, Status::skipped, reason});
}

}  // namespace qforms
