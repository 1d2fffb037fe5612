#pragma once

#include "weyl/filtration.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weyl {

/// One cyclic module D/I from a corpus file.
///
/// File format (one module per file, `#` starts a comment):
///
///     n=2
///     name: airy            optional, defaults to the file stem
///     gen: d1               one generator of I per line; none means I = 0
///     expect_d: 2           optional expected d(M)
///     height: 2             optional height h of a monomial prime (x1..xh)
///     sub: x1               optional submodule generators p
///     u: 1, x1              starts a good-filtration spec with these generators
///     shift: 0 0            shifts k_i for the latest `u:` spec (or for the
///                           default spec {1} when no `u:` line precedes it)
struct CorpusEntry {
    std::string name;
    std::size_t n = 0;
    LeftIdealPresentation ideal{0, {}};
    std::optional<std::int64_t> expected_d;
    std::optional<std::size_t> height_h;
    std::vector<DiffOp> submodule_elements;
    std::vector<GoodFiltrationSpec> filtrations;
};

CorpusEntry parse_corpus(std::string_view text, const std::string& default_name);
CorpusEntry load_corpus_file(const std::filesystem::path& path);
/// Every *.weyl file under the directory, sorted by entry name.
std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir);

} // namespace weyl
