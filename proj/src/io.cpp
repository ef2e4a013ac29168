#include "recolor/io.hpp"

#include <cstdint>
#include <istream>
#include <sstream>

namespace recolor {

namespace {

std::vector<std::string> lines_of(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(line);
    }
    return out;
}

std::pair<int, std::string> split_indexed(const std::string& line, const char* what) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(std::string(what) + ": missing ':' in \"" + line + "\"");
    int v;
    try {
        v = std::stoi(line.substr(0, colon));
    } catch (...) {
        throw ParseError(std::string(what) + ": bad vertex id in \"" + line + "\"");
    }
    return {v, line.substr(colon + 1)};
}

std::vector<int> ints_of(const std::string& s, const char* what) {
    std::istringstream is(s);
    std::vector<int> out;
    int x;
    while (is >> x) out.push_back(x);
    if (!is.eof()) throw ParseError(std::string(what) + ": trailing junk in \"" + s + "\"");
    return out;
}

}  // namespace

uint64_t coloring_checksum(const Coloring& c) {
    uint64_t h = 1469598103934665603ULL;
    for (int x : c) {
        for (int b = 0; b < 4; ++b) {
            h ^= static_cast<uint64_t>((x >> (8 * b)) & 0xff);
            h *= 1099511628211ULL;
        }
    }
    return h;
}

PlaneGraph parse_rotation(std::istream& in) {
    auto lines = lines_of(in);
    if (lines.empty()) throw ParseError("rotation: empty input");
    std::istringstream head(lines[0]);
    std::string tag;
    int n = 0;
    if (!(head >> tag >> n) || tag != "plane" || n <= 0)
        throw ParseError("rotation: expected header \"plane <n>\"");
    std::vector<std::vector<Vertex>> rot(n);
    std::vector<char> seen(n, 0);
    for (size_t i = 1; i < lines.size(); ++i) {
        auto [v, rest] = split_indexed(lines[i], "rotation");
        if (v < 0 || v >= n) throw ParseError("rotation: vertex " + std::to_string(v) + " out of range");
        if (seen[v]) throw ParseError("rotation: duplicate line for vertex " + std::to_string(v));
        seen[v] = 1;
        for (int u : ints_of(rest, "rotation")) rot[v].push_back(u);
    }
    return PlaneGraph::build(rot);
}

std::string emit_rotation(const PlaneGraph& g) { return g.to_rotation_text(); }

ListAssignment parse_lists(std::istream& in, int n) {
    ListAssignment L;
    L.lists.assign(n, {});
    for (const auto& line : lines_of(in)) {
        auto [v, rest] = split_indexed(line, "lists");
        if (v < 0 || v >= n) throw ParseError("lists: vertex " + std::to_string(v) + " out of range");
        auto cs = ints_of(rest, "lists");
        if (cs.empty()) throw ParseError("lists: empty list for vertex " + std::to_string(v));
        for (int c : cs)
            if (c < 0) throw ParseError("lists: negative color at vertex " + std::to_string(v));
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        L.lists[v] = cs;
    }
    return L;
}

std::string emit_lists(const ListAssignment& L) {
    std::ostringstream os;
    for (size_t v = 0; v < L.lists.size(); ++v) {
        if (L.lists[v].empty()) continue;
        os << v << ":";
        for (int c : L.lists[v]) os << " " << c;
        os << "\n";
    }
    return os.str();
}

Coloring parse_coloring(std::istream& in, int n) {
    Coloring col(n, -1);
    for (const auto& line : lines_of(in)) {
        std::istringstream is(line);
        int v, c;
        if (!(is >> v >> c)) throw ParseError("coloring: expected \"v c\" in \"" + line + "\"");
        if (v < 0 || v >= n) throw ParseError("coloring: vertex " + std::to_string(v) + " out of range");
        col[v] = c;
    }
    return col;
}

std::string emit_coloring(const Coloring& c) {
    std::ostringstream os;
    for (size_t v = 0; v < c.size(); ++v)
        if (c[v] >= 0) os << v << " " << c[v] << "\n";
    return os.str();
}

RecolorSequence parse_sequence(std::istream& in) {
    auto lines = lines_of(in);
    if (lines.empty()) throw ParseError("sequence: empty input");
    std::istringstream head(lines[0]);
    std::string tag;
    long long n, steps;
    uint64_t asum, bsum;
    if (!(head >> tag >> n >> steps >> asum >> bsum) || tag != "seq")
        throw ParseError("sequence: expected header \"seq <n> <steps> <asum> <bsum>\"");
    RecolorSequence seq;
    seq.alpha.assign(n, -1);
    seq.beta.assign(n, -1);
    size_t li = 1;
    // alpha/beta blocks: "a v c" and "b v c" lines, then steps
    for (; li < lines.size(); ++li) {
        std::istringstream is(lines[li]);
        std::string kind;
        is >> kind;
        if (kind != "a" && kind != "b") break;
        int v, c;
        if (!(is >> v >> c) || v < 0 || v >= n)
            throw ParseError("sequence: bad endpoint line \"" + lines[li] + "\"");
        (kind == "a" ? seq.alpha : seq.beta)[v] = c;
    }
    for (; li < lines.size(); ++li) {
        std::istringstream is(lines[li]);
        int v, o, c;
        if (!(is >> v >> o >> c)) throw ParseError("sequence: bad step \"" + lines[li] + "\"");
        seq.steps.push_back({v, o, c});
    }
    if (static_cast<long long>(seq.steps.size()) != steps)
        throw ParseError("sequence: step count mismatch");
    if (coloring_checksum(seq.alpha) != asum || coloring_checksum(seq.beta) != bsum)
        throw ParseError("sequence: endpoint checksum mismatch");
    return seq;
}

std::string emit_sequence(const RecolorSequence& seq) {
    std::ostringstream os;
    os << "seq " << seq.alpha.size() << " " << seq.steps.size() << " "
       << coloring_checksum(seq.alpha) << " " << coloring_checksum(seq.beta) << "\n";
    for (size_t v = 0; v < seq.alpha.size(); ++v)
        if (seq.alpha[v] >= 0) os << "a " << v << " " << seq.alpha[v] << "\n";
    for (size_t v = 0; v < seq.beta.size(); ++v)
        if (seq.beta[v] >= 0) os << "b " << v << " " << seq.beta[v] << "\n";
    for (const auto& s : seq.steps) os << s.v << " " << s.from << " " << s.to << "\n";
    return os.str();
}

}  // namespace recolor
