#ifndef DSO_INDICES_HPP
#define DSO_INDICES_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dso/graph.hpp"

namespace dso {

/// The sixteen degree-based index formulas. All aggregate by summing the
/// edge contribution except MultiplicativeForgotten, which multiplies.
enum class IndexTag {
    M1,
    Randic,
    Albertson,
    GA,
    Harmonic,
    ISI,
    GAF,
    SumConnectivity,            // chi
    GeneralSumConnectivity,     // chi_alpha, parametric
    Forgotten,
    MultiplicativeForgotten,    // pi_f, product-aggregated
    SF,
    BSO,
    SDD,
    Sombor,
    DSO,
};

constexpr int index_tag_count = 16;

/// A concrete index: tag plus the exponent for GeneralSumConnectivity
/// (ignored by every other tag).
struct IndexKind {
    IndexTag tag = IndexTag::DSO;
    double alpha = 0.0;

    bool operator==(const IndexKind& o) const {
        if (tag != o.tag) return false;
        return tag != IndexTag::GeneralSumConnectivity || alpha == o.alpha;
    }
};

inline IndexKind chi_alpha(double a) { return {IndexTag::GeneralSumConnectivity, a}; }

struct IndexValue {
    IndexKind kind;
    double value = 0.0;
};

/// Contribution of a single edge with endpoint degrees (du, dv).
/// Both degrees must be >= 1; symmetric in its arguments.
double edge_contribution(IndexKind kind, int du, int dv);

/// Sum (or product, for pi_f) of edge contributions over all edges of g,
/// with degrees taken from the whole graph. Edgeless graphs give 0 for
/// sums and 1 for the empty product.
double compute_index(const Graph& g, IndexKind kind);

/// Every non-parametric index plus one GeneralSumConnectivity value per
/// requested exponent, computed in a single pass over the edges.
std::vector<IndexValue> compute_all(const Graph& g, std::span<const double> alphas);

/// log of the multiplicative forgotten index; bounds consume
/// pi_f^(1/m) = exp(log_multiplicative_forgotten(g) / m) to dodge overflow.
double log_multiplicative_forgotten(const Graph& g);

// Exact integer companions used as float cross-checks.
long long m1_exact(const Graph& g);
long long m1_vertex_form(const Graph& g);  // sum of squared degrees
long long albertson_exact(const Graph& g);
long long forgotten_exact(const Graph& g);
/// nullopt when the product leaves the 64-bit range.
std::optional<long long> multiplicative_forgotten_exact(const Graph& g);

/// CLI/report token, e.g. "dso", "m1", "chi_alpha(-2)".
std::string index_token(IndexKind kind);

/// Inverse of index_token; throws std::invalid_argument on unknown tokens
/// (the message lists the valid ones).
IndexKind index_kind_from_token(std::string_view token);

/// The fifteen non-parametric kinds in catalog order.
std::span<const IndexKind> nonparametric_kinds();

}  // namespace dso

#endif
