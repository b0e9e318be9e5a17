#include "mlp/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace mlp {

std::string format_number(double v) {
    char buf[64];
    const int len = std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::string(buf, len);
}

std::string to_csv_row(const RunRecord& r) {
    std::ostringstream os;
    os << r.instance_id << ',' << r.algorithm << ',' << format_number(r.value) << ',';
    if (r.oracle_value) os << format_number(*r.oracle_value);
    os << ',';
    if (r.ratio) os << format_number(*r.ratio);
    os << ',';
    if (r.bound) os << (r.bound_empirical ? "empirical:" : "") << format_number(*r.bound);
    os << ',' << r.elapsed_ms << ',';
    if (r.seed) os << *r.seed;
    return os.str();
}

std::string render_csv(const std::vector<RunRecord>& records) {
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const RunRecord& r : records) os << to_csv_row(r) << '\n';

    std::vector<std::string> algo_order;
    std::map<std::string, std::vector<const RunRecord*>> by_algo;
    for (const RunRecord& r : records) {
        if (!by_algo.count(r.algorithm)) algo_order.push_back(r.algorithm);
        by_algo[r.algorithm].push_back(&r);
    }
    for (const std::string& algo : algo_order) {
        double mx = 0.0, sum = 0.0;
        int cnt = 0;
        std::optional<double> bound;
        bool empirical = false;
        for (const RunRecord* r : by_algo[algo]) {
            if (!r->ratio) continue;
            mx = std::max(mx, *r->ratio);
            sum += *r->ratio;
            ++cnt;
            bound = r->bound;
            empirical = r->bound_empirical;
        }
        if (cnt == 0) continue;
        // Summary rows carry only the ratio and bound columns.
        const std::string bstr =
            bound ? (empirical ? "empirical:" : "") + format_number(*bound) : std::string();
        os << "summary-max," << algo << ",,," << format_number(mx) << ',' << bstr << ",,\n";
        os << "summary-mean," << algo << ",,," << format_number(sum / cnt) << ',' << bstr
           << ",,\n";
    }
    return os.str();
}

bool any_proven_bound_violation(const std::vector<RunRecord>& records) {
    for (const RunRecord& r : records)
        if (r.bound && !r.bound_empirical && r.ratio && *r.ratio > *r.bound + 1e-9) return true;
    return false;
}

}  // namespace mlp
