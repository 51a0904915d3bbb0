#include "dso/indices.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace dso {

double edge_contribution(IndexKind kind, int du, int dv) {
    if (du < 1 || dv < 1)
        throw std::domain_error("edge_contribution: endpoint degrees must be >= 1");
    const double a = du, b = dv;
    switch (kind.tag) {
        case IndexTag::M1: return a + b;
        case IndexTag::Randic: return 1.0 / std::sqrt(a * b);
        case IndexTag::Albertson: return std::abs(a - b);
        case IndexTag::GA: return 2.0 * std::sqrt(a * b) / (a + b);
        case IndexTag::Harmonic: return 2.0 / (a + b);
        case IndexTag::ISI: return a * b / (a + b);
        case IndexTag::GAF: return 2.0 * a * b / (a * a + b * b);
        case IndexTag::SumConnectivity: return 1.0 / std::sqrt(a + b);
        case IndexTag::GeneralSumConnectivity: return std::pow(a + b, kind.alpha);
        case IndexTag::Forgotten: return a * a + b * b;
        case IndexTag::MultiplicativeForgotten: return a * a + b * b;
        case IndexTag::SF: return 1.0 / std::sqrt(a * a + b * b);
        case IndexTag::BSO: return std::sqrt(1.0 / (a * a) + 1.0 / (b * b));
        case IndexTag::SDD: return (a * a + b * b) / (a * b);
        case IndexTag::Sombor: return std::sqrt(a * a + b * b);
        case IndexTag::DSO: return std::sqrt(a * a + b * b) / (a + b);
    }
    throw std::logic_error("edge_contribution: unhandled tag");
}

double compute_index(const Graph& g, IndexKind kind) {
    const DegreeSummary s = degree_summary(g);
    const bool product = kind.tag == IndexTag::MultiplicativeForgotten;
    double acc = product ? 1.0 : 0.0;
    g.for_each_edge([&](int u, int v) {
        const double c = edge_contribution(kind, s.degrees[static_cast<std::size_t>(u)],
                                           s.degrees[static_cast<std::size_t>(v)]);
        if (product)
            acc *= c;
        else
            acc += c;
    });
    return acc;
}

std::span<const IndexKind> nonparametric_kinds() {
    static const std::array<IndexKind, 15> kinds = {{
        {IndexTag::M1}, {IndexTag::Randic}, {IndexTag::Albertson}, {IndexTag::GA},
        {IndexTag::Harmonic}, {IndexTag::ISI}, {IndexTag::GAF},
        {IndexTag::SumConnectivity}, {IndexTag::Forgotten},
        {IndexTag::MultiplicativeForgotten}, {IndexTag::SF}, {IndexTag::BSO},
        {IndexTag::SDD}, {IndexTag::Sombor}, {IndexTag::DSO},
    }};
    return kinds;
}

std::vector<IndexValue> compute_all(const Graph& g, std::span<const double> alphas) {
    const DegreeSummary s = degree_summary(g);
    std::vector<IndexValue> out;
    out.reserve(15 + alphas.size());
    for (IndexKind k : nonparametric_kinds()) out.push_back({k, k.tag == IndexTag::MultiplicativeForgotten ? 1.0 : 0.0});
    for (double a : alphas) out.push_back({chi_alpha(a), 0.0});

    g.for_each_edge([&](int u, int v) {
        const int du = s.degrees[static_cast<std::size_t>(u)];
        const int dv = s.degrees[static_cast<std::size_t>(v)];
        for (auto& iv : out) {
            const double c = edge_contribution(iv.kind, du, dv);
            if (iv.kind.tag == IndexTag::MultiplicativeForgotten)
                iv.value *= c;
            else
                iv.value += c;
        }
    });
    return out;
}

double log_multiplicative_forgotten(const Graph& g) {
    const DegreeSummary s = degree_summary(g);
    double acc = 0.0;
    g.for_each_edge([&](int u, int v) {
        const double du = s.degrees[static_cast<std::size_t>(u)];
        const double dv = s.degrees[static_cast<std::size_t>(v)];
        acc += std::log(du * du + dv * dv);
    });
    return acc;
}

namespace {

template <typename F>
long long edge_int_sum(const Graph& g, F&& term) {
    const DegreeSummary s = degree_summary(g);
    long long acc = 0;
    g.for_each_edge([&](int u, int v) {
        acc += term(static_cast<long long>(s.degrees[static_cast<std::size_t>(u)]),
                    static_cast<long long>(s.degrees[static_cast<std::size_t>(v)]));
    });
    return acc;
}

}  // namespace

long long m1_exact(const Graph& g) {
    return edge_int_sum(g, [](long long a, long long b) { return a + b; });
}

long long m1_vertex_form(const Graph& g) {
    long long acc = 0;
    for (int v = 0; v < g.order(); ++v) {
        const long long d = g.degree(v);
        acc += d * d;
    }
    return acc;
}

long long albertson_exact(const Graph& g) {
    return edge_int_sum(g, [](long long a, long long b) { return a > b ? a - b : b - a; });
}

long long forgotten_exact(const Graph& g) {
    return edge_int_sum(g, [](long long a, long long b) { return a * a + b * b; });
}

std::optional<long long> multiplicative_forgotten_exact(const Graph& g) {
    const DegreeSummary s = degree_summary(g);
    long long acc = 1;
    bool overflow = false;
    g.for_each_edge([&](int u, int v) {
        const long long a = s.degrees[static_cast<std::size_t>(u)];
        const long long b = s.degrees[static_cast<std::size_t>(v)];
        if (!overflow && __builtin_mul_overflow(acc, a * a + b * b, &acc)) overflow = true;
    });
    if (overflow) return std::nullopt;
    return acc;
}

namespace {

std::string format_alpha(double a) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, a);
    return std::string(buf, res.ptr);
}

constexpr std::string_view simple_tokens[] = {
    "m1", "randic", "albertson", "ga", "harmonic", "isi", "gaf", "chi",
    "forgotten", "pi_f", "sf", "bso", "sdd", "so", "dso",
};

constexpr IndexTag simple_tags[] = {
    IndexTag::M1, IndexTag::Randic, IndexTag::Albertson, IndexTag::GA,
    IndexTag::Harmonic, IndexTag::ISI, IndexTag::GAF, IndexTag::SumConnectivity,
    IndexTag::Forgotten, IndexTag::MultiplicativeForgotten, IndexTag::SF,
    IndexTag::BSO, IndexTag::SDD, IndexTag::Sombor, IndexTag::DSO,
};

}  // namespace

std::string index_token(IndexKind kind) {
    if (kind.tag == IndexTag::GeneralSumConnectivity)
        return "chi_alpha(" + format_alpha(kind.alpha) + ")";
    for (std::size_t i = 0; i < std::size(simple_tags); ++i)
        if (simple_tags[i] == kind.tag) return std::string(simple_tokens[i]);
    throw std::logic_error("index_token: unhandled tag");
}

IndexKind index_kind_from_token(std::string_view token) {
    for (std::size_t i = 0; i < std::size(simple_tokens); ++i)
        if (token == simple_tokens[i]) return {simple_tags[i]};
    constexpr std::string_view prefix = "chi_alpha(";
    if (token.substr(0, prefix.size()) == prefix && token.back() == ')') {
        const std::string_view num = token.substr(prefix.size(), token.size() - prefix.size() - 1);
        double a = 0.0;
        auto res = std::from_chars(num.data(), num.data() + num.size(), a);
        if (res.ec == std::errc{} && res.ptr == num.data() + num.size()) return chi_alpha(a);
    }
    std::string valid = "chi_alpha(<real>)";
    for (auto t : simple_tokens) {
        valid += ", ";
        valid += t;
    }
    throw std::invalid_argument("unknown index token '" + std::string(token) +
                                "'; valid tokens: " + valid);
}

}  // namespace dso
