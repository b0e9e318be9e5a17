#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mlp {

/// One solver invocation for CSV reporting. `ratio` is value/oracle for
/// minimization and oracle/value for maximization; empirical-only bounds
/// (line doubling's 9, the greedy 2) are flagged rather than enforced.
struct RunRecord {
    std::string instance_id;
    std::string algorithm;
    double value = 0.0;
    std::optional<double> oracle_value;
    std::optional<double> ratio;
    std::optional<double> bound;
    bool bound_empirical = false;
    std::int64_t elapsed_ms = 0;
    std::optional<std::int64_t> seed;
};

/// Locale-independent, 9 significant digits, '.' decimal separator.
std::string format_number(double v);

inline const char* kCsvHeader =
    "instance_id,algorithm,value,oracle_value,ratio,bound,elapsed_ms,seed";

std::string to_csv_row(const RunRecord& r);

/// Data rows in the given order followed by summary-max / summary-mean rows
/// per algorithm (in first-appearance order).
std::string render_csv(const std::vector<RunRecord>& records);

/// True when some record with a proven (non-empirical) bound violates it.
bool any_proven_bound_violation(const std::vector<RunRecord>& records);

}  // namespace mlp
