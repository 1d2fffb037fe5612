#include "weyl/filtration.hpp"

#include "weyl/errors.hpp"

#include <algorithm>
#include <limits>

namespace weyl {

LeftIdealPresentation::LeftIdealPresentation(std::size_t n, std::vector<DiffOp> generators)
    : n_(n), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
        if (g.vars() != n_) throw DimensionMismatch(n_, g.vars());
        if (g.is_zero()) throw Error("ideal generators must be nonzero");
    }
}

std::uint32_t LeftIdealPresentation::max_generator_degree() const {
    std::uint32_t best = 0;
    for (const auto& g : generators_) best = std::max(best, static_cast<std::uint32_t>(bernstein_degree(g).value()));
    return best;
}

GoodFiltrationSpec GoodFiltrationSpec::standard(LeftIdealPresentation ideal) {
    const auto n = ideal.vars();
    return {std::move(ideal), {DiffOp::constant(n, 1)}, {0}};
}

void GoodFiltrationSpec::validate() const {
    if (generators.empty()) throw Error("a good filtration needs at least one generator");
    if (generators.size() != shifts.size()) throw Error("filtration generators and shifts differ in length");
    for (const auto& u : generators) {
        if (u.vars() != ideal.vars()) throw DimensionMismatch(ideal.vars(), u.vars());
    }
}

namespace {

void compositions(std::size_t slots, std::uint32_t total, Exponents& cur, std::size_t pos,
                  std::vector<Exponents>& out) {
    if (pos + 1 == slots) {
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    for (std::uint32_t v = 0; v <= total; ++v) {
        cur[pos] = v;
        compositions(slots, total - v, cur, pos + 1, out);
    }
}

// All exponent pairs in 2n slots with the given total, degrevlex-descending.
std::vector<ExponentPair> monomials_of_degree(std::size_t n, std::uint32_t degree) {
    std::vector<ExponentPair> out;
    if (n == 0) {
        if (degree == 0) out.emplace_back(0);
        return out;
    }
    std::vector<Exponents> flat;
    Exponents cur(2 * n, 0);
    compositions(2 * n, degree, cur, 0, flat);
    out.reserve(flat.size());
    for (const auto& f : flat) {
        out.emplace_back(Exponents(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n)),
                         Exponents(f.begin() + static_cast<std::ptrdiff_t>(n), f.end()));
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return degrevlex_compare(l, r) > 0; });
    return out;
}

std::uint64_t filtration_degree_of(const ExponentPair& e, Filtration f) {
    return f == Filtration::order ? e.d_degree() : e.degree();
}

} // namespace

std::vector<ExponentPair> monomial_basis(std::size_t n, std::uint32_t t, Filtration f, Truncation trunc) {
    std::vector<ExponentPair> out;
    if (f == Filtration::bernstein) {
        for (std::uint32_t d = 0; d <= t; ++d) {
            auto layer = monomials_of_degree(n, d);
            out.insert(out.end(), layer.begin(), layer.end());
        }
        return out;
    }
    if (!trunc) throw UnboundedBasis();
    for (std::uint32_t d = 0; d <= t + *trunc; ++d) {
        for (auto& e : monomials_of_degree(n, d)) {
            if (e.d_degree() <= t && e.x_degree() <= *trunc) out.push_back(std::move(e));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        const auto dl = filtration_degree_of(l, Filtration::order);
        const auto dr = filtration_degree_of(r, Filtration::order);
        if (dl != dr) return dl < dr;
        return degrevlex_compare(l, r) > 0;
    });
    return out;
}

std::size_t bernstein_basis_size(std::size_t n, std::uint32_t t) {
    return binomial(t + 2 * n, 2 * n).get_ui();
}

std::size_t MonomialIndex::Hash::operator()(const ExponentPair& e) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::uint32_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (auto v : e.a) mix(v);
    for (auto v : e.b) mix(v);
    return h;
}

void MonomialIndex::ensure(std::uint32_t degree) {
    if (degree >= kMaxDegree) throw Error("monomial degree out of range");
    while (by_degree_.size() <= degree) {
        const auto d = static_cast<std::uint32_t>(by_degree_.size());
        auto layer = monomials_of_degree(n_, d);
        const Column high = static_cast<Column>(kMaxDegree - d) << 32;
        for (std::size_t r = 0; r < layer.size(); ++r) columns_.emplace(layer[r], high | r);
        by_degree_.push_back(std::move(layer));
    }
}

Column MonomialIndex::column(const ExponentPair& e) {
    if (e.vars() != n_) throw DimensionMismatch(n_, e.vars());
    ensure(static_cast<std::uint32_t>(e.degree()));
    return columns_.at(e);
}

const ExponentPair& MonomialIndex::monomial(Column c) const {
    return by_degree_.at(degree_of(c)).at(static_cast<std::size_t>(c & 0xffffffffu));
}

const std::vector<ExponentPair>& MonomialIndex::of_degree(std::uint32_t degree) {
    ensure(degree);
    return by_degree_[degree];
}

ModuleEngine::ModuleEngine(LeftIdealPresentation ideal) : ideal_(std::move(ideal)), index_(ideal_.vars()) {}

void ModuleEngine::grow_to(std::uint32_t level) {
    if (grown_ && level <= level_) return;
    const std::uint32_t start = grown_ ? level_ + 1 : 0;
    for (std::uint32_t s = start; s <= level; ++s) {
        for (const auto& g : ideal_.generators()) {
            const auto dg = static_cast<std::uint32_t>(bernstein_degree(g).value());
            if (s < dg) continue;
            // Copy: of_degree may reallocate while coordinates() extends the index.
            const auto layer = index_.of_degree(s - dg);
            for (const auto& m : layer) {
                auto row = coordinates(mul(DiffOp::monomial(m, 1), g));
                if (echelon_.insert(std::move(row), s)) {
                    lead_degree_.push_back(MonomialIndex::degree_of(echelon_.rows().back().vector.lead().first));
                }
            }
        }
    }
    level_ = level;
    grown_ = true;
}

std::size_t ModuleEngine::ideal_dim(std::uint32_t t, std::uint32_t level) {
    grow_to(level);
    std::size_t count = 0;
    const auto& rows = echelon_.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].tag <= level && lead_degree_[i] <= t) ++count;
    }
    return count;
}

std::vector<SparseVector> ModuleEngine::ideal_rows(std::uint32_t t, std::uint32_t level) {
    grow_to(level);
    std::vector<SparseVector> out;
    const auto& rows = echelon_.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].tag <= level && lead_degree_[i] <= t) out.push_back(rows[i].vector);
    }
    return out;
}

SparseVector ModuleEngine::coordinates(const DiffOp& p) {
    if (p.vars() != vars()) throw DimensionMismatch(vars(), p.vars());
    std::vector<SparseVector::Entry> entries;
    entries.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) entries.emplace_back(index_.column(e), c);
    return SparseVector(std::move(entries));
}

DiffOp ModuleEngine::to_diffop(const SparseVector& v) const {
    DiffOp::Terms terms;
    for (const auto& [c, value] : v.entries()) terms.emplace(index_.monomial(c), value);
    return DiffOp(vars(), std::move(terms));
}

SparseVector ModuleEngine::reduce(const DiffOp& p, std::uint32_t level) {
    grow_to(level);
    return echelon_.reduce(coordinates(p), level);
}

IdealSubspace truncated_ideal_subspace(const LeftIdealPresentation& ideal, std::uint32_t t,
                                       const TruncationParams& params) {
    ModuleEngine engine(ideal);
    const auto level = engine.level_for(t, params.slack_for(ideal));
    auto rows = engine.ideal_rows(t, level);

    IdealSubspace out;
    std::vector<Column> cols;
    for (std::uint32_t d = t + 1; d-- > 0;) {
        for (const auto& m : engine.index().of_degree(d)) {
            cols.push_back(engine.index().column(m));
            out.columns.push_back(m);
        }
    }
    // cols is increasing, so local positions preserve the engine column order.
    std::vector<SparseVector> local;
    local.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<SparseVector::Entry> entries;
        for (const auto& [c, v] : r.entries()) {
            auto pos = static_cast<Column>(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin());
            entries.emplace_back(pos, v);
        }
        local.emplace_back(std::move(entries));
    }
    out.reduction = row_reduce(RationalMatrix(cols.size(), std::move(local)));
    return out;
}

GammaValue gamma_value(ModuleEngine& engine, std::uint32_t t, const TruncationParams& params) {
    const auto slack = params.slack_for(engine.ideal());
    const auto base = engine.level_for(t, slack);
    const auto size = bernstein_basis_size(engine.vars(), t);
    const auto first = size - engine.ideal_dim(t, base);
    bool stable = true;
    for (std::uint32_t k = 1; k <= params.stabilization_window; ++k) {
        if (size - engine.ideal_dim(t, base + k) != first) stable = false;
    }
    return {first, stable};
}

FiltrationSnapshot gamma_dim(const LeftIdealPresentation& ideal, std::uint32_t t, const TruncationParams& params) {
    ModuleEngine engine(ideal);
    const auto value = gamma_value(engine, t, params);
    auto sub = truncated_ideal_subspace(ideal, t, params);

    FiltrationSnapshot snap;
    snap.t = t;
    snap.columns = std::move(sub.columns);
    snap.ideal_dim_in_Bt = sub.reduction.rank;
    snap.gamma_dim = value.value;
    snap.stabilized = value.stabilized;
    snap.slack_used = params.slack_for(ideal);
    std::vector<SparseVector> rows(sub.reduction.rref.row_data().begin(),
                                   sub.reduction.rref.row_data().begin() + static_cast<std::ptrdiff_t>(sub.reduction.rank));
    snap.basis = RationalMatrix(snap.columns.size(), std::move(rows));
    return snap;
}

bool ReducedElement::is_zero() const {
    return std::all_of(coordinates.begin(), coordinates.end(), [](const Coefficient& c) { return sgn(c) == 0; });
}

ReducedElement reduce_element(const DiffOp& p, ModuleEngine& engine, const TruncationParams& params) {
    const auto n = engine.vars();
    ReducedElement out;
    if (p.is_zero()) {
        out.coordinates.assign(1, Coefficient(0));
        out.stabilized = true;
        return out;
    }
    out.t = static_cast<std::uint32_t>(bernstein_degree(p).value());
    const auto base = engine.level_for(out.t, params.slack_for(engine.ideal()));
    const auto first = engine.reduce(p, base);
    out.stabilized = true;
    for (std::uint32_t k = 1; k <= params.stabilization_window; ++k) {
        if (!(engine.reduce(p, base + k) == first)) out.stabilized = false;
    }

    const auto basis = monomial_basis(n, out.t, Filtration::bernstein);
    out.coordinates.assign(basis.size(), Coefficient(0));
    for (const auto& [c, v] : first.entries()) {
        const auto& m = engine.index().monomial(c);
        auto it = std::find(basis.begin(), basis.end(), m);
        out.coordinates[static_cast<std::size_t>(it - basis.begin())] = v;
    }
    return out;
}

ReducedElement reduce_element(const DiffOp& p, const LeftIdealPresentation& ideal, const TruncationParams& params) {
    ModuleEngine engine(ideal);
    return reduce_element(p, engine, params);
}

namespace {

std::uint32_t max_degree(const std::vector<DiffOp>& ops) {
    std::uint32_t best = 0;
    for (const auto& u : ops) {
        if (!u.is_zero()) best = std::max(best, static_cast<std::uint32_t>(bernstein_degree(u).value()));
    }
    return best;
}

// Coordinates of every spanning element m*u_i of a good filtration, grouped by
// the filtration step j = deg(m) + k_i at which it enters.
std::vector<std::vector<DiffOp>> filtration_spanning_sets(ModuleEngine& engine, const GoodFiltrationSpec& spec,
                                                          std::uint32_t steps) {
    std::vector<std::vector<DiffOp>> out(steps + 1);
    for (std::uint32_t j = 0; j <= steps; ++j) {
        for (std::size_t i = 0; i < spec.generators.size(); ++i) {
            if (j < spec.shifts[i]) continue;
            const auto layer = engine.index().of_degree(j - spec.shifts[i]);
            for (const auto& m : layer) out[j].push_back(mul(DiffOp::monomial(m, 1), spec.generators[i]));
        }
    }
    return out;
}

Echelon filtration_echelon(ModuleEngine& engine, const std::vector<std::vector<DiffOp>>& spanning,
                           std::uint32_t level) {
    Echelon e;
    for (std::uint32_t j = 0; j < spanning.size(); ++j) {
        for (const auto& p : spanning[j]) e.insert(engine.reduce(p, level), j);
    }
    return e;
}

std::size_t rank_at(const Echelon& e, std::uint32_t tag) {
    return static_cast<std::size_t>(std::count_if(e.rows().begin(), e.rows().end(),
                                                  [tag](const auto& r) { return r.tag <= tag; }));
}

constexpr std::uint32_t kNever = std::numeric_limits<std::uint32_t>::max();

// need[j] = least l with from_j ⊆ to_l, or kNever when no computed step suffices.
std::vector<std::uint32_t> containment_steps(const Echelon& from, const Echelon& to, std::uint32_t steps) {
    std::vector<std::uint32_t> need(steps + 1, 0);
    std::vector<std::uint32_t> row_need;
    for (const auto& row : from.rows()) {
        std::uint32_t l = 0;
        while (l <= steps && !to.contains(row.vector, l)) ++l;
        row_need.push_back(l > steps ? kNever : l);
    }
    for (std::uint32_t j = 0; j <= steps; ++j) {
        std::uint32_t worst = 0;
        for (std::size_t r = 0; r < from.rows().size(); ++r) {
            if (from.rows()[r].tag <= j) worst = std::max(worst, row_need[r]);
        }
        need[j] = worst;
    }
    return need;
}

std::optional<std::uint32_t> width_from(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                        std::uint32_t t_max) {
    std::uint32_t w = 0;
    for (std::uint32_t j = 0; j <= t_max; ++j) {
        for (auto need : {a[j], b[j]}) {
            if (need == kNever) return std::nullopt;
            if (need > j) w = std::max(w, need - j);
        }
    }
    if (w > t_max) return std::nullopt;
    return w;
}

} // namespace

InterleaveResult interleave_width(const GoodFiltrationSpec& gamma, const GoodFiltrationSpec& omega,
                                  std::uint32_t t_max, const TruncationParams& params) {
    gamma.validate();
    omega.validate();
    if (!(gamma.ideal == omega.ideal)) throw ModuleMismatch();

    ModuleEngine engine(gamma.ideal);
    const std::uint32_t steps = 2 * t_max;
    const auto ambient = steps + std::max(max_degree(gamma.generators), max_degree(omega.generators));
    const auto base = engine.level_for(ambient, params.slack_for(gamma.ideal));
    const auto span_g = filtration_spanning_sets(engine, gamma, steps);
    const auto span_o = filtration_spanning_sets(engine, omega, steps);

    InterleaveResult result;
    result.stabilized = true;
    for (std::uint32_t k = 0; k <= params.stabilization_window; ++k) {
        const auto eg = filtration_echelon(engine, span_g, base + k);
        const auto eo = filtration_echelon(engine, span_o, base + k);
        auto w = width_from(containment_steps(eg, eo, steps), containment_steps(eo, eg, steps), t_max);
        if (k == 0) {
            result.width = w;
        } else if (w != result.width) {
            result.stabilized = false;
        }
    }
    return result;
}

FiltrationDims filtration_dims(const GoodFiltrationSpec& spec, std::uint32_t t_hi, const TruncationParams& params) {
    spec.validate();
    ModuleEngine engine(spec.ideal);
    const auto ambient = t_hi + max_degree(spec.generators);
    const auto base = engine.level_for(ambient, params.slack_for(spec.ideal));
    const auto spanning = filtration_spanning_sets(engine, spec, t_hi);

    FiltrationDims out;
    out.stabilized = true;
    for (std::uint32_t k = 0; k <= params.stabilization_window; ++k) {
        const auto e = filtration_echelon(engine, spanning, base + k);
        std::vector<std::size_t> dims;
        for (std::uint32_t j = 0; j <= t_hi; ++j) dims.push_back(rank_at(e, j));
        if (k == 0) {
            out.dims = std::move(dims);
        } else if (dims != out.dims) {
            out.stabilized = false;
        }
    }
    return out;
}

} // namespace weyl
