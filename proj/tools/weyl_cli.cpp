#include "weyl/corpus.hpp"
#include "weyl/errors.hpp"
#include "weyl/hilbert.hpp"
#include "weyl/parser.hpp"
#include "weyl/proof_lab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

using json = nlohmann::json;

namespace {

enum Exit : int { ok = 0, failure = 1, usage = 2, zero_module = 3, inconclusive = 4 };

int exit_for(weyl::Verdict v) {
    switch (v) {
    case weyl::Verdict::pass: return ok;
    case weyl::Verdict::fail: return failure;
    case weyl::Verdict::inconclusive: return inconclusive;
    }
    return failure;
}

int worst(int a, int b) {
    // failure outranks inconclusive
    if (a == failure || b == failure) return failure;
    return std::max(a, b);
}

struct CliConfig {
    std::size_t n = 1;
    std::optional<std::uint32_t> slack;
    std::uint32_t budget = 16;
    std::uint32_t window = 4;
    std::string output = "json";
    std::uint64_t seed = 1;
    std::optional<std::uint32_t> trunc;

    weyl::TruncationParams truncation() const {
        weyl::TruncationParams p;
        p.slack = slack;
        return p;
    }
    weyl::DimensionConfig dimension() const {
        weyl::DimensionConfig c;
        c.truncation = truncation();
        c.budget = budget;
        c.fit_window = window;
        c.initial_t_hi = std::min<std::uint32_t>(c.initial_t_hi, budget);
        return c;
    }
    bool table() const { return output == "table"; }
};

unsigned thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("WEYL_THREADS")) {
        try {
            const auto v = std::stoul(env);
            if (v > 0) return static_cast<unsigned>(std::min<unsigned long>(v, hw));
        } catch (const std::exception&) {
        }
    }
    return hw;
}

void emit(const CliConfig& cfg, const json& j, const std::string& table) {
    if (cfg.table()) {
        std::cout << table;
    } else {
        std::cout << j.dump(2) << '\n';
    }
}

std::string rational(const weyl::Coefficient& c) { return c.get_str(); }

// ---- dim ----

int cmd_dim(const CliConfig& cfg, const std::optional<std::string>& ideal_text, const std::string& file) {
    std::optional<weyl::LeftIdealPresentation> ideal;
    std::size_t n = cfg.n;
    if (!file.empty()) {
        auto entry = weyl::load_corpus_file(file);
        n = entry.n;
        ideal = entry.ideal;
    } else if (ideal_text) {
        ideal = weyl::LeftIdealPresentation(n, weyl::parse_list(*ideal_text, n));
    } else {
        std::cerr << "dim: give --ideal or a corpus file\n";
        return usage;
    }

    const auto result = weyl::module_dimension(*ideal, cfg.dimension());
    const auto d = result.d.value();
    const auto nn = static_cast<std::int64_t>(n);
    const bool lower = d >= nn;
    const bool upper = d <= 2 * nn;

    auto j = weyl::to_json(result.fit, n);
    j["d"] = d;
    j["verdict"] = std::string("d >= n: ") + (lower ? "PASS" : "FAIL");
    j["upper_bound"] = std::string("d <= 2n: ") + (upper ? "PASS" : "FAIL");

    std::ostringstream t;
    t << "n             " << n << '\n';
    t << "d             " << d << '\n';
    t << "multiplicity  " << rational(weyl::multiplicity(result.fit)) << '\n';
    t << "fit window    t = " << result.fit.t_lo << ".." << result.fit.t_hi << '\n';
    t << "coefficients ";
    for (const auto& c : result.fit.binomial_coeffs) t << ' ' << rational(c);
    t << "  (basis C(t, j))\n";
    t << "h(t)         ";
    for (const auto& s : result.samples) t << ' ' << s.value;
    t << '\n';
    t << "stabilized    " << (result.fit.stabilized() ? "yes" : "no") << '\n';
    t << "d >= n: " << (lower ? "PASS" : "FAIL") << '\n';
    t << "d <= 2n: " << (upper ? "PASS" : "FAIL") << '\n';
    emit(cfg, j, t.str());
    return lower && upper ? ok : failure;
}

// ---- check ----

struct CheckArgs {
    bool eq1 = false, eq2 = false, eq3 = false, eq4 = false, independence = false, submodule = false;
    std::optional<std::string> f;
    std::optional<std::uint32_t> s, t, h;
    std::size_t i = 1;
    std::size_t cases = 200;
    std::optional<std::string> p;
    std::optional<std::string> ideal;
};

struct CheckOutput {
    json reports = json::array();
    std::ostringstream table;
    int code = ok;

    void add(const weyl::IdentityReport& r) {
        reports.push_back(weyl::to_json(r));
        table << r.identity_name << ' ' << r.parameters.dump() << ": " << weyl::to_string(r.verdict);
        if (!r.detail.empty()) table << " (" << r.detail << ')';
        if (!r.witness.empty()) table << " witness " << r.witness;
        table << '\n';
        code = worst(code, exit_for(r.verdict));
    }
};

int cmd_check(const CliConfig& cfg, const CheckArgs& a) {
    if (!(a.eq1 || a.eq2 || a.eq3 || a.eq4 || a.independence || a.submodule)) {
        std::cerr << "check: choose at least one of --eq1 --eq2 --eq3 --eq4 --independence --submodule\n";
        return usage;
    }
    if (a.i == 0 || a.i > cfg.n) {
        std::cerr << "check: --i must lie in 1..n\n";
        return usage;
    }
    const auto n = cfg.n;
    const auto i = a.i - 1;
    const auto f = weyl::parse_polynomial(a.f.value_or("x" + std::to_string(a.i)), n);
    const auto params = cfg.truncation();
    CheckOutput out;

    if (a.eq1) {
        const auto suite = weyl::product_rule_suite(cfg.seed, n, a.cases);
        json j{{"identity", "product_rule"}, {"seed", cfg.seed}, {"n", n}, {"cases", a.cases},
               {"passed", suite.passed}, {"failed", suite.failed}, {"verdict", weyl::to_string(suite.verdict())}};
        json failures = json::array();
        for (const auto& r : suite.reports) {
            if (!r.holds()) failures.push_back(weyl::to_json(r));
        }
        if (!failures.empty()) j["failures"] = failures;
        out.reports.push_back(j);
        out.table << "product_rule seed " << cfg.seed << ": " << suite.passed << '/' << a.cases << ' '
                  << weyl::to_string(suite.verdict()) << '\n';
        out.code = worst(out.code, exit_for(suite.verdict()));
    }
    if (a.eq2) {
        if (a.s && a.t) {
            out.add(weyl::check_vanishing(f, i, *a.s, *a.t, params));
        } else {
            for (std::uint32_t s = 1; s <= 4; ++s) {
                for (std::uint32_t t = 0; t < s; ++t) out.add(weyl::check_vanishing(f, i, s, t, params));
            }
        }
    }
    if (a.eq3) {
        if (a.s && a.t) {
            out.add(weyl::check_recursion(f, i, *a.s, *a.t));
        } else {
            for (std::uint32_t s = 1; s <= 4; ++s) {
                for (std::uint32_t t = 1; t <= 4; ++t) out.add(weyl::check_recursion(f, i, s, t));
            }
        }
    }
    if (a.eq4) {
        if (a.t) {
            out.add(weyl::check_factorial_identity(f, i, *a.t, params));
        } else {
            for (std::uint32_t t = 0; t <= 3; ++t) out.add(weyl::check_factorial_identity(f, i, t, params));
        }
    }
    if (a.independence) {
        if (!a.h || !a.t) {
            std::cerr << "check --independence needs --h and --t\n";
            return usage;
        }
        const auto r = weyl::independence_rank(n, *a.h, *a.t, params);
        out.reports.push_back({{"identity", "independence"},
                               {"n", r.n},
                               {"h", r.h},
                               {"t", r.t},
                               {"rank", r.rank},
                               {"expected", r.expected.get_str()},
                               {"stabilized", r.stabilized},
                               {"verdict", weyl::to_string(r.verdict)}});
        out.table << "independence n=" << r.n << " h=" << r.h << " t=" << r.t << ": rank " << r.rank << " = C("
                  << r.t + r.h << ',' << r.h << ") = " << r.expected.get_str() << ' ' << weyl::to_string(r.verdict)
                  << '\n';
        out.code = worst(out.code, exit_for(r.verdict));
    }
    if (a.submodule) {
        if (!a.p || !a.ideal) {
            std::cerr << "check --submodule needs --ideal and --p\n";
            return usage;
        }
        const weyl::LeftIdealPresentation ideal(n, weyl::parse_list(*a.ideal, n));
        const auto p = weyl::parse(*a.p, n);
        const auto r = weyl::submodule_monotonicity(ideal, p, cfg.dimension());
        json j{{"identity", "submodule"}, {"ideal", *a.ideal}, {"p", weyl::print(p)}, {"n", n},
               {"verdict", weyl::to_string(r.verdict)}};
        if (!r.d_sub.is_neg_inf()) j["d_sub"] = r.d_sub.value();
        if (!r.d_full.is_neg_inf()) j["d_full"] = r.d_full.value();
        if (!r.detail.empty()) j["detail"] = r.detail;
        out.reports.push_back(j);
        out.table << "submodule p=" << weyl::print(p) << ": d_sub " << r.d_sub.to_string() << " <= d_full "
                  << r.d_full.to_string() << ' ' << weyl::to_string(r.verdict) << '\n';
        out.code = worst(out.code, exit_for(r.verdict));
    }

    json j{{"seed", cfg.seed}, {"reports", out.reports}};
    j["verdict"] = out.code == ok ? "PASS" : out.code == failure ? "FAIL" : "INCONCLUSIVE";
    emit(cfg, j, out.table.str());
    return out.code;
}

// ---- compare ----

int cmd_compare(const CliConfig& cfg, const std::string& file, std::uint32_t t_max) {
    const auto entry = weyl::load_corpus_file(file);
    std::vector<weyl::GoodFiltrationSpec> specs = entry.filtrations;
    if (specs.size() == 1) specs.insert(specs.begin(), weyl::GoodFiltrationSpec::standard(entry.ideal));
    if (specs.size() != 2) {
        std::cerr << "compare: expected one or two filtration specs, found " << specs.size() << '\n';
        return usage;
    }
    const auto w = weyl::interleave_width(specs[0], specs[1], t_max, cfg.truncation());
    const auto a = weyl::filtration_dimension(specs[0], cfg.dimension());
    const auto b = weyl::filtration_dimension(specs[1], cfg.dimension());
    const bool equal = a.d == b.d;

    json j{{"name", entry.name}, {"n", entry.n}, {"t_max", t_max}, {"stabilized", w.stabilized}};
    j["w"] = w.width ? json(*w.width) : json(nullptr);
    j["degree_gamma"] = a.d.value();
    j["degree_omega"] = b.d.value();
    j["degrees_equal"] = equal;

    int code = ok;
    if (!equal || (!w.width && w.stabilized)) code = failure;
    else if (!w.stabilized) code = inconclusive;
    j["verdict"] = code == ok ? "PASS" : code == failure ? "FAIL" : "INCONCLUSIVE";

    std::ostringstream t;
    t << "w              " << (w.width ? std::to_string(*w.width) : "none") << (w.stabilized ? "" : " (unstabilized)")
      << '\n';
    t << "degree gamma   " << a.d.value() << '\n';
    t << "degree omega   " << b.d.value() << '\n';
    t << "equal degrees  " << (equal ? "PASS" : "FAIL") << '\n';
    emit(cfg, j, t.str());
    return code;
}

// ---- corpus ----

int cmd_corpus(const CliConfig& cfg, const std::vector<std::string>& paths) {
    std::vector<weyl::CorpusEntry> entries;
    for (const auto& path : paths) {
        if (std::filesystem::is_directory(path)) {
            auto more = weyl::load_corpus_dir(path);
            std::move(more.begin(), more.end(), std::back_inserter(entries));
        } else {
            entries.push_back(weyl::load_corpus_file(path));
        }
    }
    const auto report = weyl::bernstein_corpus(entries, cfg.dimension(), thread_cap());
    json j{{"entries", weyl::to_json(report)},
           {"failures", report.failures()},
           {"inconclusive", report.inconclusive()}};
    emit(cfg, j, weyl::to_table(report));
    if (report.failures() > 0) return failure;
    if (report.inconclusive() > 0) return inconclusive;
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with differential operators and D-module dimensions"};
    app.require_subcommand(1);

    CliConfig cfg;
    auto add_globals = [&](CLI::App* a) {
        a->add_option("-n", cfg.n, "Number of variables")->check(CLI::PositiveNumber);
        a->add_option("--slack", cfg.slack, "Truncation slack (default: max generator degree + 2)");
        a->add_option("--budget", cfg.budget, "Largest sampled t")->check(CLI::PositiveNumber);
        a->add_option("--window", cfg.window, "Hilbert fit window")->check(CLI::PositiveNumber);
        a->add_option("--output", cfg.output, "Report format")->check(CLI::IsMember({"json", "table"}));
        a->add_option("--seed", cfg.seed, "Seed for randomized checks");
        a->add_option("--trunc", cfg.trunc, "x-degree truncation for apply")->check(CLI::PositiveNumber);
    };
    add_globals(&app);

    auto* normalize = app.add_subcommand("normalize", "Print the normal form of an operator");
    std::string expr;
    normalize->add_option("expr", expr)->required();

    auto* apply = app.add_subcommand("apply", "Apply an operator to a polynomial");
    std::string op_text, poly_text;
    apply->add_option("op", op_text)->required();
    apply->add_option("poly", poly_text)->required();

    auto* dim = app.add_subcommand("dim", "Hilbert polynomial and d(M) of D/I");
    std::optional<std::string> ideal_text;
    std::string dim_file;
    dim->add_option("--ideal", ideal_text, "Comma-separated generators of I");
    dim->add_option("file", dim_file, "Corpus file")->check(CLI::ExistingFile);

    auto* check = app.add_subcommand("check", "Verify operator identities");
    check->set_help_flag("--help", "Print this help message and exit");
    CheckArgs ca;
    check->add_flag("--eq1", ca.eq1, "Product rule on random polynomials");
    check->add_flag("--eq2", ca.eq2, "f^s d^t z = 0 for s > t");
    check->add_flag("--eq3", ca.eq3, "Recursion for f^s d^t");
    check->add_flag("--eq4", ca.eq4, "f^t d^t z = (-1)^t t! f'^t z");
    check->add_flag("--independence", ca.independence, "Rank of d^tau z in D/(x_1..x_h)");
    check->add_flag("--submodule", ca.submodule, "d(D p) <= d(D/I)");
    check->add_option("--f", ca.f, "Polynomial f in x_i");
    check->add_option("--s", ca.s);
    check->add_option("--t", ca.t);
    check->add_option("--h", ca.h);
    check->add_option("--i", ca.i, "Variable index (1-based)");
    check->add_option("--cases", ca.cases, "Random cases for --eq1")->check(CLI::PositiveNumber);
    check->add_option("--p", ca.p, "Submodule generator");
    check->add_option("--ideal", ca.ideal, "Comma-separated generators of I");

    auto* compare = app.add_subcommand("compare", "Interleaving width of two good filtrations");
    std::string compare_file;
    std::uint32_t t_max = 8;
    compare->add_option("file", compare_file)->required()->check(CLI::ExistingFile);
    compare->add_option("--tmax", t_max)->check(CLI::PositiveNumber);

    auto* corpus = app.add_subcommand("corpus", "d(M) over a corpus of modules");
    std::vector<std::string> corpus_paths;
    corpus->add_option("paths", corpus_paths)->required()->check(CLI::ExistingPath);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*normalize) {
            std::cout << weyl::print(weyl::parse(expr, cfg.n)) << '\n';
            return ok;
        }
        if (*apply) {
            const auto op = weyl::parse(op_text, cfg.n);
            const auto f = weyl::parse_polynomial(poly_text, cfg.n);
            std::cout << weyl::print(weyl::apply(op, f, cfg.trunc)) << '\n';
            return ok;
        }
        if (*dim) return cmd_dim(cfg, ideal_text, dim_file);
        if (*check) return cmd_check(cfg, ca);
        if (*compare) return cmd_compare(cfg, compare_file, t_max);
        if (*corpus) return cmd_corpus(cfg, corpus_paths);
    } catch (const weyl::ZeroModule& e) {
        std::cerr << "error: " << e.what() << '\n';
        return zero_module;
    } catch (const weyl::Inconclusive& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return inconclusive;
    } catch (const weyl::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
