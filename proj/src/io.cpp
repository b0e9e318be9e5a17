#include "mlp/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mlp {

namespace {

// Triangle verification is cubic; skip it for matrices past this size and
// trust the file (desk-scale files are always checked).
constexpr int kTriangleCheckMaxN = 300;

struct LineReader {
    std::istream& in;
    std::string name;
    int lineno = 0;

    /// Next non-empty line with comments stripped, split into tokens.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            tokens.clear();
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(name + ":" + std::to_string(lineno) + ": " + msg);
    }
};

double parse_real(const LineReader& r, const std::string& tok) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        r.fail("expected a number, got '" + tok + "'");
    }
}

int parse_int(const LineReader& r, const std::string& tok) {
    int v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        r.fail("expected an integer, got '" + tok + "'");
    return v;
}

}  // namespace

int ParsedInstance::n() const {
    switch (kind) {
        case InstanceKind::Matrix: return metric->n;
        case InstanceKind::Tree: return tree->n;
        case InstanceKind::Line: return line->n();
    }
    return 0;
}

MetricInstance ParsedInstance::to_metric() const {
    switch (kind) {
        case InstanceKind::Matrix: return *metric;
        case InstanceKind::Tree: return metric_closure(*tree);
        case InstanceKind::Line: return line_to_metric(*line);
    }
    throw std::logic_error("ParsedInstance: bad kind");
}

std::vector<double> ParsedInstance::metric_penalties() const {
    const MetricInstance m = to_metric();
    std::vector<double> out(m.n, 0.0);
    if (penalties.empty()) return out;
    if (kind == InstanceKind::Line) {
        for (int i = 0; i < line->n(); ++i) out[line_point_vertex(*line, i)] = penalties[i];
    } else {
        out = penalties;
    }
    return out;
}

ParsedInstance parse_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return parse_instance_stream(in, path);
}

ParsedInstance parse_instance_stream(std::istream& in, const std::string& name) {
    LineReader r{in, name};
    std::vector<std::string> tok;

    if (!r.next(tok) || tok.size() != 2 || tok[0] != "MLP" || tok[1] != "1")
        r.fail("expected header 'MLP 1'");
    if (!r.next(tok) || tok.size() != 2 || tok[0] != "TYPE")
        r.fail("expected 'TYPE matrix|tree|line'");
    InstanceKind kind;
    if (tok[1] == "matrix")
        kind = InstanceKind::Matrix;
    else if (tok[1] == "tree")
        kind = InstanceKind::Tree;
    else if (tok[1] == "line")
        kind = InstanceKind::Line;
    else
        r.fail("unknown TYPE '" + tok[1] + "'");

    if (!r.next(tok) || tok.size() != 2 || tok[0] != "N") r.fail("expected 'N <n>'");
    const int n = parse_int(r, tok[1]);
    if (n < 1) r.fail("N must be >= 1");

    if (!r.next(tok) || tok.size() != 2 || tok[0] != "START")
        r.fail(kind == InstanceKind::Line ? "expected 'START <coord>'" : "expected 'START <idx>'");

    ParsedInstance out;
    out.kind = kind;
    int start_idx = 0;
    double start_coord = 0.0;
    if (kind == InstanceKind::Line)
        start_coord = parse_real(r, tok[1]);
    else {
        start_idx = parse_int(r, tok[1]);
        if (start_idx < 0 || start_idx >= n) r.fail("START out of range");
    }

    switch (kind) {
        case InstanceKind::Matrix: {
            std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
            for (int i = 0; i < n; ++i) {
                if (!r.next(tok)) r.fail("matrix row " + std::to_string(i) + " missing");
                if (static_cast<int>(tok.size()) != n)
                    r.fail("matrix row " + std::to_string(i) + " has " +
                           std::to_string(tok.size()) + " entries, expected " + std::to_string(n));
                for (int j = 0; j < n; ++j) d[static_cast<std::size_t>(i) * n + j] =
                    parse_real(r, tok[j]);
            }
            for (int i = 0; i < n; ++i) {
                if (d[static_cast<std::size_t>(i) * n + i] != 0.0) r.fail("nonzero diagonal");
                for (int j = 0; j < n; ++j) {
                    const double dij = d[static_cast<std::size_t>(i) * n + j];
                    if (dij < 0.0) r.fail("negative distance");
                    if (dij != d[static_cast<std::size_t>(j) * n + i])
                        r.fail("asymmetric matrix at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
                }
            }
            MetricInstance m(n, std::move(d), start_idx);
            if (n <= kTriangleCheckMaxN) {
                m.verify_triangle();
            } else {
                m.metric_flag = true;  // trusted for large files
            }
            out.metric = std::move(m);
            break;
        }
        case InstanceKind::Tree: {
            std::vector<TreeEdge> edges;
            for (int i = 0; i < n - 1; ++i) {
                if (!r.next(tok)) r.fail("edge line " + std::to_string(i) + " missing");
                if (tok.size() != 4 || tok[0] != "EDGE") r.fail("expected 'EDGE u v w'");
                TreeEdge e{parse_int(r, tok[1]), parse_int(r, tok[2]), parse_real(r, tok[3])};
                if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) r.fail("edge endpoint out of range");
                if (e.w <= 0.0) r.fail("edge weight must be positive");
                edges.push_back(e);
            }
            try {
                out.tree = TreeInstance(n, std::move(edges), start_idx);
            } catch (const std::invalid_argument& e) {
                r.fail(e.what());
            }
            break;
        }
        case InstanceKind::Line: {
            if (!r.next(tok)) r.fail("coordinate line missing");
            if (static_cast<int>(tok.size()) != n)
                r.fail("expected " + std::to_string(n) + " coordinates");
            std::vector<double> coords(n);
            for (int i = 0; i < n; ++i) coords[i] = parse_real(r, tok[i]);
            out.line = LineInstance(std::move(coords), start_coord);
            break;
        }
    }

    while (r.next(tok)) {
        if (tok.size() != 3 || tok[0] != "PENALTY") r.fail("expected 'PENALTY <v> <p>'");
        const int v = parse_int(r, tok[1]);
        const double p = parse_real(r, tok[2]);
        if (v < 0 || v >= n) r.fail("PENALTY vertex out of range");
        if (p < 0.0) r.fail("negative penalty");
        if (out.penalties.empty()) out.penalties.assign(n, 0.0);
        out.penalties[v] = p;
    }
    return out;
}

namespace {

std::string fmt_full(double v) {
    char buf[64];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, len);
}

void write_penalties(std::ostream& out, const std::vector<double>& penalties) {
    for (std::size_t v = 0; v < penalties.size(); ++v)
        if (penalties[v] != 0.0)
            out << "PENALTY " << v << ' ' << fmt_full(penalties[v]) << '\n';
}

}  // namespace

void write_instance(std::ostream& out, const MetricInstance& m,
                    const std::vector<double>& penalties) {
    out << "MLP 1\nTYPE matrix\nN " << m.n << "\nSTART " << m.start << '\n';
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) out << (j ? " " : "") << fmt_full(m.dist(i, j));
        out << '\n';
    }
    write_penalties(out, penalties);
}

void write_instance(std::ostream& out, const TreeInstance& t,
                    const std::vector<double>& penalties) {
    out << "MLP 1\nTYPE tree\nN " << t.n << "\nSTART " << t.start << '\n';
    for (const TreeEdge& e : t.edges)
        out << "EDGE " << e.u << ' ' << e.v << ' ' << fmt_full(e.w) << '\n';
    write_penalties(out, penalties);
}

void write_instance(std::ostream& out, const LineInstance& l,
                    const std::vector<double>& penalties) {
    out << "MLP 1\nTYPE line\nN " << l.n() << "\nSTART " << fmt_full(l.start) << '\n';
    for (int i = 0; i < l.n(); ++i) out << (i ? " " : "") << fmt_full(l.coords[i]);
    out << '\n';
    write_penalties(out, penalties);
}

void write_instance_file(const std::string& path, const ParsedInstance& p) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    switch (p.kind) {
        case InstanceKind::Matrix: write_instance(out, *p.metric, p.penalties); break;
        case InstanceKind::Tree: write_instance(out, *p.tree, p.penalties); break;
        case InstanceKind::Line: write_instance(out, *p.line, p.penalties); break;
    }
}

}  // namespace mlp
