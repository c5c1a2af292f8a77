#include "grasp/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "grasp/errors.hpp"

namespace grasp {

namespace {

// Lines with `#` comments stripped and blanks skipped, tracking the source
// line number for error messages.
class LineReader {
public:
    explicit LineReader(std::istream& in)
        : in_(in)
    {
    }

    bool next(std::string& out)
    {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            if (raw.find_first_not_of(" \t\r\n") == std::string::npos)
                continue;
            if (!raw.empty() && raw.back() == '\r')
                raw.pop_back();
            out = raw;
            return true;
        }
        return false;
    }

    int line() const { return line_; }

private:
    std::istream& in_;
    int line_ = 0;
};

[[noreturn]] void fail(int line, const std::string& what)
{
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens_of(const std::string& s)
{
    std::istringstream iss(s);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t)
        toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int line)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail(line, "expected an integer, got '" + tok + "'");
    return value;
}

double parse_double(const std::string& tok, int line)
{
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail(line, "expected a number, got '" + tok + "'");
    return value;
}

// 1-based on disk, 0-based in memory.
int parse_vertex(const std::string& tok, int m, int line)
{
    int v = parse_int(tok, line);
    if (v < 1 || v > m)
        fail(line, "vertex " + tok + " outside 1.." + std::to_string(m));
    return v - 1;
}

int parse_header(LineReader& reader, const std::string& keyword)
{
    std::string line;
    if (!reader.next(line))
        fail(reader.line(), "missing '" + keyword + " <m>' header");
    auto toks = tokens_of(line);
    if (toks.size() != 2 || toks[0] != keyword)
        fail(reader.line(), "expected '" + keyword + " <m>', got '" + line + "'");
    int m = parse_int(toks[1], reader.line());
    if (m < 1)
        fail(reader.line(), "vertex count must be positive, got " + toks[1]);
    return m;
}

std::string format_double(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open '" + path + "' for writing");
    return out;
}

std::vector<CiStatement> read_ci_body(LineReader& reader, int m)
{
    std::vector<CiStatement> statements;
    std::string line;
    while (reader.next(line)) {
        auto bar = line.find('|');
        if (bar == std::string::npos)
            fail(reader.line(), "expected '<i> <j> | <z...>', got '" + line + "'");
        auto left = tokens_of(line.substr(0, bar));
        auto right = tokens_of(line.substr(bar + 1));
        if (left.size() != 2)
            fail(reader.line(), "expected two vertices left of '|'");
        int i = parse_vertex(left[0], m, reader.line());
        int j = parse_vertex(left[1], m, reader.line());
        std::vector<int> z;
        z.reserve(right.size());
        for (const auto& tok : right)
            z.push_back(parse_vertex(tok, m, reader.line()));
        try {
            statements.emplace_back(i, j, std::move(z));
        } catch (const GraspError& e) {
            fail(reader.line(), e.what());
        }
    }
    return statements;
}

Dag read_dag_block(LineReader& reader, std::string& pending)
{
    int m = parse_header(reader, "dag");
    std::vector<Edge> edges;
    std::string line;
    while (reader.next(line)) {
        auto toks = tokens_of(line);
        if (toks.size() == 2 && toks[0] == "ci") {
            pending = line;
            break;
        }
        if (toks.size() != 2)
            fail(reader.line(), "expected '<j> <k>', got '" + line + "'");
        int j = parse_vertex(toks[0], m, reader.line());
        int k = parse_vertex(toks[1], m, reader.line());
        edges.emplace_back(j, k);
    }
    return Dag(m, std::move(edges));
}

} // namespace

Dag read_dag(std::istream& in)
{
    LineReader reader(in);
    std::string pending;
    Dag g = read_dag_block(reader, pending);
    if (!pending.empty())
        throw ParseError("unexpected '" + pending + "' after dag block");
    return g;
}

void write_dag(std::ostream& out, const Dag& g)
{
    out << "dag " << g.vertex_count() << "\n";
    for (const auto& [j, k] : g.edges())
        out << j + 1 << " " << k + 1 << "\n";
}

Cpdag read_cpdag(std::istream& in)
{
    LineReader reader(in);
    int m = parse_header(reader, "dag");
    std::vector<Edge> directed;
    std::vector<Edge> undirected;
    std::string line;
    while (reader.next(line)) {
        auto toks = tokens_of(line);
        if (toks.size() == 3 && toks[1] == "--") {
            int j = parse_vertex(toks[0], m, reader.line());
            int k = parse_vertex(toks[2], m, reader.line());
            undirected.emplace_back(j, k);
        } else if (toks.size() == 2) {
            int j = parse_vertex(toks[0], m, reader.line());
            int k = parse_vertex(toks[1], m, reader.line());
            directed.emplace_back(j, k);
        } else {
            fail(reader.line(), "expected '<j> <k>' or '<j> -- <k>', got '" + line + "'");
        }
    }
    return Cpdag(m, std::move(directed), std::move(undirected));
}

void write_cpdag(std::ostream& out, const Cpdag& g)
{
    out << "dag " << g.vertex_count() << "\n";
    for (const auto& [j, k] : g.directed_edges())
        out << j + 1 << " " << k + 1 << "\n";
    for (const auto& [j, k] : g.undirected_edges())
        out << j + 1 << " -- " << k + 1 << "\n";
}

CiFile read_ci(std::istream& in)
{
    LineReader reader(in);
    CiFile f;
    f.m = parse_header(reader, "ci");
    f.statements = read_ci_body(reader, f.m);
    return f;
}

void write_ci(std::ostream& out, const CiFile& f)
{
    out << "ci " << f.m << "\n";
    for (const auto& s : f.statements) {
        out << s.i + 1 << " " << s.j + 1 << " |";
        for (int v : s.z)
            out << " " << v + 1;
        out << "\n";
    }
}

ModelFile read_model(std::istream& in)
{
    LineReader reader(in);
    std::string pending;
    Dag g = read_dag_block(reader, pending);
    std::vector<CiStatement> extra;
    if (!pending.empty()) {
        auto toks = tokens_of(pending);
        int m = parse_int(toks[1], reader.line());
        if (m != g.vertex_count())
            fail(reader.line(), "ci block spans " + toks[1] + " vertices, dag block has " +
                                    std::to_string(g.vertex_count()));
        extra = read_ci_body(reader, m);
    }
    return ModelFile{std::move(g), std::move(extra)};
}

void write_model(std::ostream& out, const ModelFile& f)
{
    write_dag(out, f.dag);
    CiFile ci{f.dag.vertex_count(), f.extra};
    write_ci(out, ci);
}

Dataset read_dataset(std::istream& in)
{
    std::string raw;
    int line_no = 0;
    std::vector<std::string> names;
    std::vector<double> values;

    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream iss(s);
        while (std::getline(iss, cell, ','))
            cells.push_back(cell);
        return cells;
    };
    auto trim = [](std::string s) {
        auto a = s.find_first_not_of(" \t\r");
        auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };

    while (std::getline(in, raw)) {
        ++line_no;
        auto stripped = trim(raw);
        if (stripped.empty() || stripped[0] == '#')
            continue;
        auto cells = split(raw);
        if (names.empty()) {
            for (auto& c : cells) {
                auto name = trim(c);
                if (name.empty())
                    fail(line_no, "empty column name");
                names.push_back(name);
            }
            continue;
        }
        if (cells.size() != names.size())
            fail(line_no, "row has " + std::to_string(cells.size()) + " cells, header has " +
                              std::to_string(names.size()));
        for (auto& c : cells)
            values.push_back(parse_double(trim(c), line_no));
    }
    if (names.empty())
        throw ParseError("dataset has no header row");
    const int m = static_cast<int>(names.size());
    const int n = static_cast<int>(values.size()) / m;
    if (n == 0)
        throw ParseError("dataset has no data rows");
    return Dataset(std::move(names), std::move(values), n, m);
}

void write_dataset(std::ostream& out, const Dataset& d)
{
    for (int c = 0; c < d.m(); ++c)
        out << (c ? "," : "") << d.names()[c];
    out << "\n";
    for (int r = 0; r < d.n(); ++r) {
        for (int c = 0; c < d.m(); ++c)
            out << (c ? "," : "") << format_double(d.at(r, c));
        out << "\n";
    }
}

Dag read_dag_file(const std::string& path)
{
    auto in = open_input(path);
    return read_dag(in);
}

void write_dag_file(const std::string& path, const Dag& g)
{
    auto out = open_output(path);
    write_dag(out, g);
}

Cpdag read_cpdag_file(const std::string& path)
{
    auto in = open_input(path);
    return read_cpdag(in);
}

void write_cpdag_file(const std::string& path, const Cpdag& g)
{
    auto out = open_output(path);
    write_cpdag(out, g);
}

CiFile read_ci_file(const std::string& path)
{
    auto in = open_input(path);
    return read_ci(in);
}

void write_ci_file(const std::string& path, const CiFile& f)
{
    auto out = open_output(path);
    write_ci(out, f);
}

ModelFile read_model_file(const std::string& path)
{
    auto in = open_input(path);
    return read_model(in);
}

void write_model_file(const std::string& path, const ModelFile& f)
{
    auto out = open_output(path);
    write_model(out, f);
}

Dataset read_dataset_file(const std::string& path)
{
    auto in = open_input(path);
    return read_dataset(in);
}

void write_dataset_file(const std::string& path, const Dataset& d)
{
    auto out = open_output(path);
    write_dataset(out, d);
}

} // namespace grasp
