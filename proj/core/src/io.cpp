#include "mpv/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>

namespace mpv {

ParseError::ParseError(std::size_t line, const std::string& message)
    : DomainError(line ? "line " + std::to_string(line) + ": " + message : message), line(line)
{
}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

// Significant lines split on whitespace.
std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto end = text.find('\n');
        std::string_view raw = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            if (i > start)
                line.tokens.push_back(raw.substr(start, i - start));
        }
        if (line.tokens.empty() || line.tokens.front().front() == '#')
            continue;
        lines.push_back(std::move(line));
    }
    return lines;
}

std::string in_quotes(std::string_view s)
{
    return "'" + std::string(s) + "'";
}

std::uint64_t to_unsigned(std::string_view token, std::size_t line, const char* what)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got "
                                   + in_quotes(token));
    return value;
}

BigInt to_big(std::string_view token, std::size_t line, const char* what)
{
    if (token.empty() || !std::all_of(token.begin(), token.end(),
                                      [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got "
                                   + in_quotes(token));
    return BigInt(std::string(token));
}

// "<t>:" with t the expected 1-based index.
void expect_index(const Line& line, std::string_view keyword, std::size_t expected)
{
    if (line.tokens.size() < 2 || line.tokens[1].back() != ':')
        throw ParseError(line.number, "expected " + in_quotes(std::string(keyword) + " <t>:"));
    auto index = line.tokens[1].substr(0, line.tokens[1].size() - 1);
    auto t = to_unsigned(index, line.number, "the stage index");
    if (t != expected)
        throw ParseError(line.number, std::string(keyword) + " " + std::to_string(t)
                                          + " out of order, expected " + std::to_string(expected));
}

struct Header {
    Variant variant = Variant::conservative;
    std::map<std::string, std::uint64_t, std::less<>> numbers;
    std::optional<BigInt> x;
    std::size_t last_line = 0;
};

// Reads "mpv 1" and the key/value directives up to the first line starting
// with `body`. Returns the index of that line.
std::size_t parse_header(const std::vector<Line>& lines, std::span<const std::string_view> keys,
                         std::string_view body, Header& header)
{
    if (lines.empty())
        throw ParseError(0, "empty input");
    const auto& first = lines.front();
    if (first.tokens.size() != 2 || first.tokens[0] != "mpv" || first.tokens[1] != "1")
        throw ParseError(first.number, "expected header 'mpv 1'");

    bool have_variant = false;
    std::size_t i = 1;
    for (; i < lines.size(); ++i) {
        const auto& line = lines[i];
        auto key = line.tokens[0];
        if (key == body)
            break;
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "directive " + in_quotes(key) + " takes one value");
        auto value = line.tokens[1];
        if (key == "variant") {
            if (have_variant)
                throw ParseError(line.number, "duplicate directive 'variant'");
            if (value == "C")
                header.variant = Variant::conservative;
            else if (value == "R")
                header.variant = Variant::revolutionary;
            else
                throw ParseError(line.number, "variant must be C or R, got " + in_quotes(value));
            have_variant = true;
        } else if (key == "x") {
            if (header.x)
                throw ParseError(line.number, "duplicate directive 'x'");
            header.x = to_big(value, line.number, "x");
        } else if (std::find(keys.begin(), keys.end(), key) != keys.end()) {
            auto [it, fresh] = header.numbers.emplace(std::string(key), 0);
            if (!fresh)
                throw ParseError(line.number, "duplicate directive " + in_quotes(key));
            it->second = to_unsigned(value, line.number, std::string(key).c_str());
        } else {
            throw ParseError(line.number, "unknown directive " + in_quotes(key));
        }
    }

    std::size_t at = i < lines.size() ? lines[i].number : lines.back().number;
    if (!have_variant)
        throw ParseError(at, "missing directive 'variant'");
    if (!header.x)
        throw ParseError(at, "missing directive 'x'");
    for (auto key : keys)
        if (!header.numbers.count(key))
            throw ParseError(at, "missing directive " + in_quotes(key));
    header.last_line = lines.back().number;
    return i;
}

void check_stage_count(std::size_t found, std::size_t expected, std::size_t line, const char* what)
{
    if (found != expected)
        throw ParseError(line, "found " + std::to_string(found) + " " + what + " lines, expected "
                                   + std::to_string(expected));
}

std::size_t as_size(std::uint64_t value)
{
    return static_cast<std::size_t>(value);
}

}  // namespace

Instance parse_instance(std::string_view text)
{
    auto lines = tokenize(text);
    static constexpr std::string_view keys[] = {"agents", "candidates", "stages", "k", "ell"};
    Header header;
    auto i = parse_header(lines, keys, "profile", header);

    const auto n = as_size(header.numbers["agents"]);
    const auto m = as_size(header.numbers["candidates"]);
    const auto tau = as_size(header.numbers["stages"]);
    if (*header.x > BigInt(std::numeric_limits<std::size_t>::max()))
        throw ParseError(0, "x is too large for a unit instance");

    std::vector<std::vector<CandidateId>> ballots;
    for (; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens[0] != "profile")
            throw ParseError(line.number, "unknown directive " + in_quotes(line.tokens[0])
                                              + " among profile lines");
        if (ballots.size() == tau)
            throw ParseError(line.number, "more than " + std::to_string(tau) + " profile lines");
        expect_index(line, "profile", ballots.size() + 1);
        if (line.tokens.size() - 2 != n)
            throw ParseError(line.number, "profile has " + std::to_string(line.tokens.size() - 2)
                                              + " ballots, expected " + std::to_string(n));
        std::vector<CandidateId> stage;
        stage.reserve(n);
        for (std::size_t a = 2; a < line.tokens.size(); ++a) {
            auto c = to_unsigned(line.tokens[a], line.number, "a ballot");
            if (c > m)
                throw ParseError(line.number, "candidate id " + std::to_string(c)
                                                  + " out of range 0.." + std::to_string(m));
            stage.push_back(static_cast<CandidateId>(c));
        }
        ballots.push_back(std::move(stage));
    }
    check_stage_count(ballots.size(), tau, header.last_line, "profile");

    try {
        return Instance(header.variant, n, m, std::move(ballots), as_size(header.numbers["k"]),
                        as_size(header.numbers["ell"]), header.x->convert_to<std::size_t>());
    } catch (const DomainError& e) {
        throw ParseError(0, e.what());
    }
}

std::string emit_instance(const Instance& instance)
{
    std::ostringstream os;
    os << "mpv 1\n"
       << "variant " << variant_letter(instance.variant()) << '\n'
       << "agents " << instance.agents() << '\n'
       << "candidates " << instance.candidates() << '\n'
       << "stages " << instance.stages() << '\n'
       << "k " << instance.k() << '\n'
       << "ell " << instance.ell() << '\n'
       << "x " << instance.x() << '\n';
    for (std::size_t t = 0; t < instance.stages(); ++t) {
        os << "profile " << t + 1 << ':';
        for (auto c : instance.ballots(t))
            os << ' ' << c;
        os << '\n';
    }
    return os.str();
}

WeightedInstance parse_weighted(std::string_view text)
{
    auto lines = tokenize(text);
    static constexpr std::string_view keys[] = {"candidates", "stages", "k", "ell"};
    Header header;
    auto i = parse_header(lines, keys, "weights", header);

    const auto m = as_size(header.numbers["candidates"]);
    const auto tau = as_size(header.numbers["stages"]);
    WeightedInstance out;
    out.variant = header.variant;
    out.k = as_size(header.numbers["k"]);
    out.ell = as_size(header.numbers["ell"]);
    out.x = *header.x;
    for (; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens[0] != "weights")
            throw ParseError(line.number, "unknown directive " + in_quotes(line.tokens[0])
                                              + " among weight lines");
        if (out.weights.size() == tau)
            throw ParseError(line.number, "more than " + std::to_string(tau) + " weight lines");
        expect_index(line, "weights", out.weights.size() + 1);
        if (line.tokens.size() - 2 != m)
            throw ParseError(line.number, "weights line has " + std::to_string(line.tokens.size() - 2)
                                              + " entries, expected " + std::to_string(m));
        std::vector<BigInt> row;
        for (std::size_t c = 2; c < line.tokens.size(); ++c)
            row.push_back(to_big(line.tokens[c], line.number, "a weight"));
        out.weights.push_back(std::move(row));
    }
    check_stage_count(out.weights.size(), tau, header.last_line, "weights");
    try {
        out.validate();
    } catch (const DomainError& e) {
        throw ParseError(0, e.what());
    }
    return out;
}

std::string emit_weighted(const WeightedInstance& instance)
{
    std::ostringstream os;
    os << "mpv 1\n"
       << "variant " << variant_letter(instance.variant) << '\n'
       << "candidates " << instance.candidates() << '\n'
       << "stages " << instance.stages() << '\n'
       << "k " << instance.k << '\n'
       << "ell " << instance.ell << '\n'
       << "x " << instance.x << '\n';
    for (std::size_t t = 0; t < instance.stages(); ++t) {
        os << "weights " << t + 1 << ':';
        for (const auto& w : instance.weights[t])
            os << ' ' << w;
        os << '\n';
    }
    return os.str();
}

bool is_weighted_text(std::string_view text)
{
    for (const auto& line : tokenize(text))
        if (line.tokens[0] == "weights")
            return true;
    return false;
}

CommitteeSequence parse_solution(std::string_view text, std::size_t stages, std::size_t candidates)
{
    CommitteeSequence seq;
    std::size_t last = 0;
    for (const auto& line : tokenize(text)) {
        last = line.number;
        if (line.tokens[0] != "stage")
            throw ParseError(line.number, "unknown directive " + in_quotes(line.tokens[0]));
        if (seq.size() == stages)
            throw ParseError(line.number, "more than " + std::to_string(stages) + " stage lines");
        expect_index(line, "stage", seq.size() + 1);
        Committee committee;
        for (std::size_t i = 2; i < line.tokens.size(); ++i) {
            auto c = to_unsigned(line.tokens[i], line.number, "a candidate id");
            if (c < 1 || c > candidates)
                throw ParseError(line.number, "candidate id " + std::to_string(c)
                                                  + " out of range 1.." + std::to_string(candidates));
            if (committee.contains(static_cast<CandidateId>(c)))
                throw ParseError(line.number, "candidate " + std::to_string(c) + " listed twice");
            committee.insert(static_cast<CandidateId>(c));
        }
        seq.push_back(std::move(committee));
    }
    check_stage_count(seq.size(), stages, last, "stage");
    return seq;
}

CommitteeSequence parse_solution(std::string_view text, const Instance& instance)
{
    return parse_solution(text, instance.stages(), instance.candidates());
}

std::string emit_solution(const CommitteeSequence& seq)
{
    std::ostringstream os;
    for (std::size_t t = 0; t < seq.size(); ++t) {
        os << "stage " << t + 1 << ':';
        for (auto c : seq[t])
            os << ' ' << c;
        os << '\n';
    }
    return os.str();
}

namespace {

Graph parse_graph_lines(const std::vector<Line>& lines, std::size_t& next)
{
    if (lines.empty())
        throw ParseError(0, "empty input");
    const auto& head = lines.front();
    if (head.tokens.size() != 3 || head.tokens[0] != "graph")
        throw ParseError(head.number, "expected 'graph <vertices> <edges>'");
    Graph graph;
    graph.vertices = as_size(to_unsigned(head.tokens[1], head.number, "the vertex count"));
    const auto edges = as_size(to_unsigned(head.tokens[2], head.number, "the edge count"));
    next = 1;
    for (; next < lines.size() && graph.edges.size() < edges; ++next) {
        const auto& line = lines[next];
        if (line.tokens.size() != 2)
            throw ParseError(line.number, "expected an edge 'u v'");
        auto u = to_unsigned(line.tokens[0], line.number, "an endpoint");
        auto v = to_unsigned(line.tokens[1], line.number, "an endpoint");
        if (u > 0xffffffffu || v > 0xffffffffu)
            throw ParseError(line.number, "endpoint out of range");
        graph.edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
        try {
            graph.validate();
        } catch (const DomainError& e) {
            throw ParseError(line.number, e.what());
        }
    }
    if (graph.edges.size() != edges)
        throw ParseError(lines.back().number, "found " + std::to_string(graph.edges.size())
                                                  + " edges, expected " + std::to_string(edges));
    return graph;
}

}  // namespace

Graph parse_graph(std::string_view text)
{
    auto lines = tokenize(text);
    std::size_t next = 0;
    auto graph = parse_graph_lines(lines, next);
    if (next < lines.size())
        throw ParseError(lines[next].number, "unexpected line after the edge list");
    return graph;
}

PartitionedGraph parse_partitioned_graph(std::string_view text)
{
    auto lines = tokenize(text);
    std::size_t next = 0;
    PartitionedGraph out;
    out.graph = parse_graph_lines(lines, next);
    if (next >= lines.size())
        throw ParseError(lines.back().number, "missing 'parts <p>' line");
    const auto& head = lines[next];
    if (head.tokens.size() != 2 || head.tokens[0] != "parts")
        throw ParseError(head.number, "expected 'parts <p>'");
    const auto p = as_size(to_unsigned(head.tokens[1], head.number, "the part count"));
    for (++next; next < lines.size(); ++next) {
        const auto& line = lines[next];
        if (out.parts.size() == p)
            throw ParseError(line.number, "more than " + std::to_string(p) + " part lines");
        std::vector<std::uint32_t> part;
        for (auto token : line.tokens) {
            auto v = to_unsigned(token, line.number, "a vertex id");
            if (v > 0xffffffffu)
                throw ParseError(line.number, "vertex id out of range");
            part.push_back(static_cast<std::uint32_t>(v));
        }
        out.parts.push_back(std::move(part));
    }
    if (out.parts.size() != p)
        throw ParseError(lines.back().number, "found " + std::to_string(out.parts.size())
                                                  + " part lines, expected " + std::to_string(p));
    try {
        out.validate();
    } catch (const DomainError& e) {
        throw ParseError(0, e.what());
    }
    return out;
}

std::string emit_graph(const Graph& graph)
{
    std::ostringstream os;
    os << "graph " << graph.vertices << ' ' << graph.edges.size() << '\n';
    for (auto [u, v] : graph.edges)
        os << u << ' ' << v << '\n';
    return os.str();
}

std::string emit_partitioned_graph(const PartitionedGraph& graph)
{
    std::ostringstream os;
    os << emit_graph(graph.graph) << "parts " << graph.parts.size() << '\n';
    for (const auto& part : graph.parts) {
        for (std::size_t i = 0; i < part.size(); ++i)
            os << (i ? " " : "") << part[i];
        os << '\n';
    }
    return os.str();
}

std::string emit_id_map(std::span<const CandidateId> original_ids, std::size_t fillers_per_stage,
                        std::span<const CandidateId> spare)
{
    std::ostringstream os;
    os << "idmap 1\n";
    for (std::size_t i = 0; i < original_ids.size(); ++i)
        os << "map " << i + 1 << ' ' << original_ids[i] << '\n';
    if (fillers_per_stage > 0) {
        os << "fillers_per_stage " << fillers_per_stage << '\n' << "spare";
        for (auto c : spare)
            os << ' ' << c;
        os << '\n';
    }
    return os.str();
}

}  // namespace mpv
