#include "weyl/hilbert.hpp"

#include "weyl/errors.hpp"

#include <algorithm>

namespace weyl {

namespace {

mpq_class binomial_q(std::int64_t t, std::size_t j) {
    // C(t, j) as a polynomial in t, valid for negative t too.
    mpq_class r = 1;
    for (std::size_t i = 0; i < j; ++i) {
        r *= mpq_class(t - static_cast<std::int64_t>(i));
        r /= mpq_class(static_cast<long>(i + 1));
    }
    return r;
}

mpz_class factorial(std::size_t k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

} // namespace

Coefficient HilbertFit::evaluate(std::int64_t t) const {
    Coefficient sum = 0;
    for (std::size_t j = 0; j < binomial_coeffs.size(); ++j) sum += binomial_coeffs[j] * binomial_q(t, j);
    return sum;
}

bool HilbertFit::stabilized() const {
    return std::all_of(samples.begin(), samples.end(), [](const auto& s) { return s.stabilized; });
}

std::vector<HilbertSample> hilbert_function(ModuleEngine& engine, std::uint32_t t_lo, std::uint32_t t_hi,
                                            const TruncationParams& params) {
    if (t_lo > t_hi) throw Error("hilbert_function needs t_lo <= t_hi");
    std::vector<HilbertSample> out;
    for (std::uint32_t t = t_lo; t <= t_hi; ++t) {
        const auto v = gamma_value(engine, t, params);
        out.push_back({t, v.value, v.stabilized});
    }
    return out;
}

std::vector<HilbertSample> hilbert_function(const LeftIdealPresentation& ideal, std::uint32_t t_lo,
                                            std::uint32_t t_hi, const TruncationParams& params) {
    ModuleEngine engine(ideal);
    return hilbert_function(engine, t_lo, t_hi, params);
}

HilbertFit finite_difference_fit(std::span<const HilbertSample> samples) {
    if (samples.size() < 3) throw InsufficientData("finite-difference fit needs at least 3 samples");
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].t != samples[i - 1].t + 1) throw Error("samples must have consecutive t");
    }
    const std::size_t len = samples.size();

    // rows[j][i] = Δ^j h(t_lo + i)
    std::vector<std::vector<mpq_class>> rows;
    rows.emplace_back();
    for (const auto& s : samples) rows[0].emplace_back(static_cast<unsigned long>(s.value));
    for (std::size_t j = 1; j < len; ++j) {
        const auto& prev = rows[j - 1];
        std::vector<mpq_class> next;
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
        rows.push_back(std::move(next));
    }

    HilbertFit fit;
    fit.samples.assign(samples.begin(), samples.end());
    fit.t_lo = samples.front().t;
    fit.t_hi = samples.back().t;

    std::optional<std::size_t> degree;
    for (std::size_t j = len; j-- > 0;) {
        if (std::any_of(rows[j].begin(), rows[j].end(), [](const auto& v) { return sgn(v) != 0; })) {
            degree = j;
            break;
        }
    }
    if (!degree) {
        fit.exact_on_window = true;
        fit.leading = 0;
        return fit;
    }
    const std::size_t d = *degree;
    if (d + 2 > len) {
        throw InsufficientData("degree " + std::to_string(d) + " needs " + std::to_string(d + 2) +
                               " samples, got " + std::to_string(len));
    }

    // Newton coefficients at t_lo, then walk the difference table back to t = 0
    // so that p(t) = sum_j c_j C(t, j).
    std::vector<mpq_class> delta(d + 1);
    for (std::size_t j = 0; j <= d; ++j) delta[j] = rows[j][0];
    for (std::uint32_t t = fit.t_lo; t > 0; --t) {
        for (std::size_t j = d; j-- > 0;) delta[j] -= delta[j + 1];
    }
    fit.binomial_coeffs = std::move(delta);
    fit.degree = Degree(static_cast<std::int64_t>(d));
    fit.leading = fit.binomial_coeffs[d];
    fit.exact_on_window = true;
    return fit;
}

std::optional<HilbertFit> trailing_fit(std::span<const HilbertSample> samples, std::uint32_t window) {
    if (window == 0) throw Error("fit window must be positive");
    for (std::size_t d = 0; d + 1 + window <= samples.size(); ++d) {
        const auto len = std::max<std::size_t>(d + 1 + window, 3);
        if (len > samples.size()) break;
        auto tail = samples.subspan(samples.size() - len);
        try {
            auto fit = finite_difference_fit(tail);
            if (fit.degree.is_neg_inf() || fit.degree.value() <= static_cast<std::int64_t>(d)) return fit;
        } catch (const InsufficientData&) {
        }
    }
    return std::nullopt;
}

DimensionResult dimension_from_samples(std::span<const HilbertSample> samples, std::uint32_t window) {
    auto fit = trailing_fit(samples, window);
    if (!fit) throw Inconclusive("Hilbert function not yet polynomial on a trailing window");
    return {fit->degree, std::move(*fit), {samples.begin(), samples.end()}};
}

namespace {

template <class Sampler>
DimensionResult grow_until_fit(const DimensionConfig& config, Sampler sample) {
    std::uint32_t t_hi = std::min(config.initial_t_hi, config.budget);
    while (true) {
        const auto samples = sample(t_hi);
        if (auto fit = trailing_fit(samples, config.fit_window); fit && fit->stabilized()) {
            auto d = fit->degree;
            return {d, std::move(*fit), samples};
        }
        if (t_hi >= config.budget) break;
        t_hi = std::min(2 * t_hi, config.budget);
    }
    throw Inconclusive("no stabilized polynomial Hilbert function up to t=" + std::to_string(config.budget));
}

} // namespace

DimensionResult module_dimension(const LeftIdealPresentation& ideal, const DimensionConfig& config) {
    ModuleEngine engine(ideal);
    const auto one = reduce_element(DiffOp::constant(ideal.vars(), 1), engine, config.truncation);
    if (one.is_zero()) throw ZeroModule();
    return grow_until_fit(config, [&](std::uint32_t t_hi) { return hilbert_function(engine, 0, t_hi, config.truncation); });
}

DimensionResult filtration_dimension(const GoodFiltrationSpec& spec, const DimensionConfig& config) {
    {
        ModuleEngine engine(spec.ideal);
        if (reduce_element(DiffOp::constant(spec.ideal.vars(), 1), engine, config.truncation).is_zero()) {
            throw ZeroModule();
        }
    }
    return grow_until_fit(config, [&](std::uint32_t t_hi) {
        const auto dims = filtration_dims(spec, t_hi, config.truncation);
        std::vector<HilbertSample> samples;
        for (std::uint32_t j = 0; j <= t_hi; ++j) samples.push_back({j, dims.dims[j], dims.stabilized});
        return samples;
    });
}

Coefficient multiplicity(const HilbertFit& fit) {
    if (fit.degree.is_neg_inf()) throw Error("multiplicity of the zero polynomial is undefined");
    const auto d = static_cast<std::size_t>(fit.degree.value());
    // Power-basis leading coefficient of c_d C(t, d) is c_d / d!.
    const Coefficient power_leading = fit.leading / mpq_class(factorial(d));
    return power_leading * mpq_class(factorial(d));
}

nlohmann::json to_json(const HilbertFit& fit, std::size_t n) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : fit.samples) samples.push_back({s.t, s.value});
    nlohmann::json out;
    out["n"] = n;
    out["samples"] = std::move(samples);
    if (fit.degree.is_neg_inf()) {
        out["degree"] = "-inf";
        out["multiplicity"] = nullptr;
    } else {
        out["degree"] = fit.degree.value();
        out["multiplicity"] = multiplicity(fit).get_str();
    }
    out["leading"] = fit.leading.get_str();
    out["exact"] = fit.exact_on_window;
    out["stabilized"] = fit.stabilized();
    return out;
}

} // namespace weyl
