#include "kcut/formulas.hpp"

#include <stdexcept>

#include "kcut/errors.hpp"

namespace kcut {

long long binom2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

namespace {

void check_k(int n, int k) {
    if (k < 2 || k > n)
        throw std::invalid_argument("k = " + std::to_string(k) +
                                    " outside [2," + std::to_string(n) + "]");
}

} // namespace

int lambda_k_closed_form(GraphFamily f, int n, int k) {
    check_k(n, k);
    switch (f) {
    case GraphFamily::path:
    case GraphFamily::star:
    case GraphFamily::tree:
        return k - 1;
    case GraphFamily::cycle:
        if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
        return k;
    case GraphFamily::wheel:
        if (n < 4) throw std::invalid_argument("wheel requires n >= 4");
        return k <= n - 1 ? 2 * k - 1 : 2 * k - 2;
    case GraphFamily::complete:
        return static_cast<int>(binom2(n) - binom2(n - k + 1));
    case GraphFamily::complete_minus_edge:
        if (n < 3)
            throw std::invalid_argument("complete-minus-edge requires n >= 3");
        return static_cast<int>(binom2(n) - binom2(n - k + 1) - 1);
    }
    throw std::invalid_argument("unknown family");
}

long long max_edges_with_k_components(int n, int k) {
    if (k < 1 || k > n)
        throw std::invalid_argument("k = " + std::to_string(k) +
                                    " outside [1," + std::to_string(n) + "]");
    return binom2(n - k + 1);
}

LambdaRange lambda_range(int n, int k) {
    check_k(n, k);
    return {k - 1, binom2(n) - binom2(n - k + 1)};
}

std::string extremal_class_name(ExtremalClass c) {
    switch (c) {
    case ExtremalClass::LowerTight: return "LowerTight";
    case ExtremalClass::UpperTight: return "UpperTight";
    case ExtremalClass::UpperMinusOne: return "UpperMinusOne";
    case ExtremalClass::Interior: return "Interior";
    }
    return "?";
}

ExtremalClass characterize_extremal(const Graph& g, int k, int lam) {
    int n = g.order();
    check_k(n, k);
    if (!is_connected(g))
        throw std::invalid_argument("characterize_extremal: graph must be "
                                    "connected");
    LambdaRange range = lambda_range(n, k);
    long long ub = range.upper;
    long long m = g.size();

    bool value_lower = (lam == k - 1);
    bool struct_lower = (static_cast<int>(bridges(g).size()) >= k - 1);
    if (value_lower != struct_lower)
        throw internal_error(
            "extremal mismatch at the lower level: lambda_" +
            std::to_string(k) + " = " + std::to_string(lam) +
            (value_lower ? " equals k-1 but the graph has only "
                         : " differs from k-1 yet the graph has ") +
            std::to_string(bridges(g).size()) + " cut edges");

    bool value_ub = (lam == ub);
    bool struct_complete = (m == binom2(n));
    if (value_ub != struct_complete)
        throw internal_error("extremal mismatch at the upper level: lambda_" +
                             std::to_string(k) + " = " + std::to_string(lam) +
                             ", upper bound " + std::to_string(ub) +
                             ", edge count " + std::to_string(m));

    bool value_ub1 = (lam == ub - 1);
    bool struct_kne = (m == binom2(n) - 1);
    if (value_ub1 != struct_kne)
        throw internal_error(
            "extremal mismatch one below the upper level: lambda_" +
            std::to_string(k) + " = " + std::to_string(lam) +
            ", upper bound " + std::to_string(ub) + ", edge count " +
            std::to_string(m));

    if (value_lower) return ExtremalClass::LowerTight;
    if (value_ub) return ExtremalClass::UpperTight;
    if (value_ub1) return ExtremalClass::UpperMinusOne;
    return ExtremalClass::Interior;
}

} // namespace kcut
