#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlp/instance.hpp"

namespace mlp {

/// Malformed instance file; the message carries "<name>:<line>: ...".
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class InstanceKind { Matrix, Tree, Line };

/// One parsed instance file: the structured form plus optional penalties.
struct ParsedInstance {
    InstanceKind kind = InstanceKind::Matrix;
    std::optional<MetricInstance> metric;
    std::optional<TreeInstance> tree;
    std::optional<LineInstance> line;
    std::vector<double> penalties;  // empty when the file has no PENALTY lines

    int n() const;
    /// The instance as a metric: matrix as-is, tree via closure, line via
    /// line_to_metric.
    MetricInstance to_metric() const;
    /// Penalties sized to the metric view (zeros when absent).
    std::vector<double> metric_penalties() const;
};

ParsedInstance parse_instance(const std::string& path);
ParsedInstance parse_instance_stream(std::istream& in, const std::string& name);

void write_instance(std::ostream& out, const MetricInstance& m,
                    const std::vector<double>& penalties = {});
void write_instance(std::ostream& out, const TreeInstance& t,
                    const std::vector<double>& penalties = {});
void write_instance(std::ostream& out, const LineInstance& l,
                    const std::vector<double>& penalties = {});
void write_instance_file(const std::string& path, const ParsedInstance& p);

}  // namespace mlp
