#pragma once

#include "weyl/filtration.hpp"

#include <json.hpp>

#include <span>
#include <vector>

namespace weyl {

struct HilbertSample {
    std::uint32_t t = 0;
    std::size_t value = 0;
    bool stabilized = false;
};

/// Polynomial p(t) = sum_j binomial_coeffs[j] * C(t, j) matching the samples
/// exactly on [t_lo, t_hi].
struct HilbertFit {
    std::vector<HilbertSample> samples;
    std::vector<Coefficient> binomial_coeffs;
    Degree degree = Degree::neg_inf();
    Coefficient leading;  // binomial_coeffs[degree]; zero for the zero polynomial
    std::uint32_t t_lo = 0;
    std::uint32_t t_hi = 0;
    bool exact_on_window = false;

    Coefficient evaluate(std::int64_t t) const;
    bool stabilized() const;
};

std::vector<HilbertSample> hilbert_function(ModuleEngine& engine, std::uint32_t t_lo, std::uint32_t t_hi,
                                            const TruncationParams& params);
std::vector<HilbertSample> hilbert_function(const LeftIdealPresentation& ideal, std::uint32_t t_lo,
                                            std::uint32_t t_hi, const TruncationParams& params);

/// Newton forward-difference fit over all given samples (consecutive t, at
/// least 3). The degree is the largest j with Δ^j not identically zero; the
/// window must hold degree + 2 points, else InsufficientData.
HilbertFit finite_difference_fit(std::span<const HilbertSample> samples);

/// Smallest-degree fit on a trailing window in which Δ^{d+1} vanishes at
/// `window` consecutive points. nullopt if no such window fits the samples.
std::optional<HilbertFit> trailing_fit(std::span<const HilbertSample> samples, std::uint32_t window);

struct DimensionConfig {
    TruncationParams truncation;
    std::uint32_t fit_window = 4;
    std::uint32_t initial_t_hi = 8;
    std::uint32_t budget = 16;
};

struct DimensionResult {
    Degree d = Degree::neg_inf();
    HilbertFit fit;
    std::vector<HilbertSample> samples;  // everything sampled, t = 0..t_hi
};

/// d(M) for M = D/I: the degree of the eventual Hilbert polynomial of B_t z.
/// Throws ZeroModule when 1 lies in I, Inconclusive when no stabilized exact
/// fit is found within the budget.
DimensionResult module_dimension(const LeftIdealPresentation& ideal, const DimensionConfig& config = {});

/// Same, for an arbitrary good filtration of the module.
DimensionResult filtration_dimension(const GoodFiltrationSpec& spec, const DimensionConfig& config = {});

/// Fits an explicit Hilbert function with the same windowing rules.
DimensionResult dimension_from_samples(std::span<const HilbertSample> samples, std::uint32_t window);

/// e = d! * (leading coefficient of p in the power basis).
Coefficient multiplicity(const HilbertFit& fit);

nlohmann::json to_json(const HilbertFit& fit, std::size_t n);

} // namespace weyl
