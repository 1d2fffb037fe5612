#include "weyl/corpus.hpp"

#include "weyl/errors.hpp"
#include "weyl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace weyl {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_uint(const std::string& s, std::size_t line) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError("expected a non-negative integer, got '" + s + "'", line, 1);
    }
    return std::stoull(s);
}

std::vector<std::uint32_t> parse_shifts(const std::string& s, std::size_t line) {
    std::string spaced = s;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream in(spaced);
    std::vector<std::uint32_t> out;
    std::string tok;
    while (in >> tok) out.push_back(static_cast<std::uint32_t>(parse_uint(tok, line)));
    return out;
}

// Re-anchors a parse error inside a value at the corpus line.
template <class F>
auto at_line(std::size_t line, F f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(e.message(), line, e.column());
    }
}

} // namespace

CorpusEntry parse_corpus(std::string_view text, const std::string& default_name) {
    CorpusEntry entry;
    entry.name = default_name;

    std::optional<std::size_t> n;
    std::vector<DiffOp> generators;
    struct PendingSpec {
        std::vector<DiffOp> generators;
        std::vector<std::uint32_t> shifts;
    };
    std::vector<PendingSpec> specs;
    std::optional<std::vector<std::uint32_t>> default_shift;

    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        const auto line = trim(raw);
        if (line.empty()) continue;

        if (!n) {
            if (line.rfind("n", 0) != 0 || line.find('=') == std::string::npos) {
                throw ParseError("first line must be n=<int>", line_no, 1);
            }
            n = parse_uint(trim(line.substr(line.find('=') + 1)), line_no);
            if (*n == 0) throw ParseError("n must be positive", line_no, 1);
            continue;
        }

        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value'", line_no, 1);
        const auto key = trim(line.substr(0, colon));
        const auto value = trim(line.substr(colon + 1));

        if (key == "name") {
            entry.name = value;
        } else if (key == "gen") {
            auto g = at_line(line_no, [&] { return parse(value, *n); });
            if (g.is_zero()) throw ParseError("generator is zero", line_no, 1);
            generators.push_back(std::move(g));
        } else if (key == "expect_d") {
            entry.expected_d = static_cast<std::int64_t>(parse_uint(value, line_no));
        } else if (key == "height") {
            entry.height_h = parse_uint(value, line_no);
        } else if (key == "sub") {
            entry.submodule_elements.push_back(at_line(line_no, [&] { return parse(value, *n); }));
        } else if (key == "u") {
            auto us = at_line(line_no, [&] { return parse_list(value, *n); });
            if (us.empty()) throw ParseError("a filtration spec needs generators", line_no, 1);
            specs.push_back({std::move(us), {}});
        } else if (key == "shift") {
            auto shifts = parse_shifts(value, line_no);
            if (specs.empty()) {
                default_shift = std::move(shifts);
            } else {
                specs.back().shifts = std::move(shifts);
            }
        } else {
            throw ParseError("unknown key '" + key + "'", line_no, 1);
        }
    }
    if (!n) throw ParseError("missing n=<int> line", line_no + 1, 1);

    entry.n = *n;
    entry.ideal = LeftIdealPresentation(*n, std::move(generators));
    if (specs.empty() && default_shift) {
        specs.push_back({{DiffOp::constant(*n, 1)}, *default_shift});
    }
    for (auto& s : specs) {
        if (s.shifts.empty()) s.shifts.assign(s.generators.size(), 0);
        GoodFiltrationSpec spec{entry.ideal, std::move(s.generators), std::move(s.shifts)};
        spec.validate();
        entry.filtrations.push_back(std::move(spec));
    }
    return entry;
}

CorpusEntry load_corpus_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str(), path.stem().string());
}

std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir) {
    std::vector<CorpusEntry> out;
    for (const auto& item : std::filesystem::directory_iterator(dir)) {
        if (item.is_regular_file() && item.path().extension() == ".weyl") out.push_back(load_corpus_file(item.path()));
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.name < r.name; });
    return out;
}

} // namespace weyl
