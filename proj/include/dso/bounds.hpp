#ifndef DSO_BOUNDS_HPP
#define DSO_BOUNDS_HPP

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dso/graph.hpp"
#include "dso/indices.hpp"

namespace dso {

/// Structural precondition of a bound, decidable from degree/connectivity
/// queries alone. Encoded as a conjunction of simple thresholds.
struct Applicability {
    bool need_connected = false;
    int min_edges = 0;
    int min_degree = 0;
    int min_order = 0;

    bool admits(const Graph& g, const DegreeSummary& s, bool connected) const {
        if (need_connected && !connected) return false;
        if (g.size() < min_edges) return false;
        if (s.min_degree < min_degree) return false;
        if (g.order() < min_order) return false;
        return true;
    }

    std::string describe() const;
};

/// The paper's claimed equality characterization for a bound.
enum class EqualityClaim {
    EmptyGraph,             // G is edgeless
    Regular,                // delta = Delta >= 1
    AllComponentsRegular,   // d_u = d_v on every edge, m >= 1
    Matching,               // all degrees <= 1, m >= 1
    EdgeSquareSumConstant,  // d_u^2 + d_v^2 single-valued over edges
    K3OrStar,               // G is K_3 or K_{1,n-1}
    NoneStated,
};

std::string to_string(EqualityClaim c);

/// Tests the characterization label on a concrete graph.
bool equality_predicate(EqualityClaim label, const Graph& g);

/// Scalars a bound expression may reference: the index values plus the four
/// structural parameters. log_pi_f backs pi_f^(1/m) in log space.
struct BoundInputs {
    int n = 0;
    int m = 0;
    int min_degree = 0;
    int max_degree = 0;
    double log_pi_f = 0.0;
    std::vector<IndexValue> indices;

    double index(IndexKind kind) const {
        for (const IndexValue& iv : indices)
            if (iv.kind == kind) return iv.value;
        throw std::runtime_error("bound evaluation: missing index value for '" +
                                 index_token(kind) + "'");
    }
    double index(IndexTag tag) const { return index(IndexKind{tag}); }
};

/// Builds inputs directly from a graph (computes every index the catalog
/// references, including chi_alpha(-2)).
BoundInputs make_bound_inputs(const Graph& g);

/// One inequality of the catalog, stated as lhs <= rhs.
struct BoundRecord {
    std::string id;
    std::string description;
    Applicability applicability;
    std::function<double(const BoundInputs&)> lhs;
    std::function<double(const BoundInputs&)> rhs;
    EqualityClaim equality_claim = EqualityClaim::NoneStated;
    std::string claim_note;  // caveats carried alongside the claim as stated
    std::vector<IndexKind> required;  // index kinds the expressions read
    /// When set, the verifier additionally evaluates the bound outside its
    /// applicability predicate (m >= 1 still required) and reports those
    /// outcomes separately instead of asserting them.
    bool observe_outside_applicability = false;
};

/// All bounds, in fixed order. Ids are part of the CLI/report contract.
const std::vector<BoundRecord>& catalog();

const BoundRecord& catalog_record(const std::string& id);

struct BoundEvaluation {
    std::string bound_id;
    bool applicable = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    bool holds = false;
    bool hard_violation = false;
    bool equality_achieved = false;
    bool characterization_predicted = false;
    bool characterization_match = false;
};

/// Relative scale used by both tolerance tiers: max(1, |lhs|, |rhs|).
double tolerance_scale(double lhs, double rhs);

/// Slack below -hard_violation_tol * scale is a hard violation; anything
/// between the two tiers counts as borderline float noise.
constexpr double default_tol_rel = 1e-9;
constexpr double hard_violation_tol = 1e-6;

BoundEvaluation evaluate_bound(const Graph& g, const BoundRecord& rec,
                               const BoundInputs& inputs, double tol_rel = default_tol_rel);

/// Spec-shaped overload: index values supplied by the caller; throws if a
/// kind the record requires is missing.
BoundEvaluation evaluate_bound(const Graph& g, const BoundRecord& rec,
                               std::span<const IndexValue> indices,
                               double tol_rel = default_tol_rel);

}  // namespace dso

#endif
