#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxpoly/algebra_spec.hpp"
#include "coxpoly/coxeter.hpp"
#include "coxpoly/errors.hpp"
#include "coxpoly/numeric.hpp"
#include "coxpoly/poly.hpp"

namespace coxpoly {

enum class RepKind { domestic, tubular, wild };

inline const char* to_string(RepKind k) {
    switch (k) {
        case RepKind::domestic: return "domestic";
        case RepKind::tubular: return "tubular";
        case RepKind::wild: return "wild";
    }
    return "?";
}

// Weight defect t - 2 - sum 1/p_i of a canonical algebra; its sign decides
// the representation type.
struct WeightType {
    Rat delta;
    RepKind kind;
};

inline WeightType weight_type(const std::vector<int>& weights) {
    check_canonical_weights(weights);
    Rat delta = Rat(static_cast<int>(weights.size())) - 2;
    for (int p : weights) delta -= Rat(1, p);
    RepKind kind = delta < 0   ? RepKind::domestic
                   : delta > 0 ? RepKind::wild
                               : RepKind::tubular;
    return WeightType{std::move(delta), kind};
}

// Which of the three coefficient conditions certified canonical type.
enum class SeparationCondition { cond_i, cond_ii, cond_iii };

inline const char* to_string(SeparationCondition c) {
    switch (c) {
        case SeparationCondition::cond_i: return "i";
        case SeparationCondition::cond_ii: return "ii";
        case SeparationCondition::cond_iii: return "iii";
    }
    return "?";
}

enum class AlgebraClass {
    non_tree_hereditary,  // hereditary type, underlying graph not a tree
    tree_type,            // hereditary type with a tree graph
    canonical,            // canonical type
    undecided,            // trace alone cannot separate; coefficient test needed
};

struct ClassLabel {
    AlgebraClass kind;
    Int trace;
    // Exact branch count when known; when only the trace is known and it is
    // < -1 the count is merely "more than three".
    std::optional<int> branches;
    bool branches_exceed_three = false;
    std::optional<SeparationCondition> condition;
    std::optional<WeightType> weights;
};

// Trace trichotomy for a connected piecewise hereditary algebra: trace > -1
// means hereditary non-tree, trace < -1 means canonical with more than three
// branches, trace = -1 needs the coefficient conditions.
inline ClassLabel trace_trichotomy(const Int& trace) {
    ClassLabel label{AlgebraClass::undecided, trace, std::nullopt, false, std::nullopt,
                     std::nullopt};
    if (trace > -1) {
        label.kind = AlgebraClass::non_tree_hereditary;
    } else if (trace < -1) {
        label.kind = AlgebraClass::canonical;
        label.branches_exceed_three = true;
    }
    return label;
}

struct SeparationResult {
    bool canonical;  // true: canonical type with three branches; false: tree type
    std::optional<SeparationCondition> condition;
};

// Separates canonical type (three branches) from tree type at trace -1 by
// inspecting the Coxeter polynomial chi = sum_{i=0}^{n+1} lambda_i x^i:
//
//   (i)   lambda_{n-1} = 0, lambda_{n-2} = -1 = lambda_{n-3}, lambda_{n-4} = 0
//   (ii)  lambda_{n-1} = 0 = lambda_{n-2}, lambda_{n-l} <= -1 for some l >= 3
//   (iii) lambda_{n-1} = 1 and lambda_{n-l} <= 0 for some l >= 2
//
// Any of them certifies canonical type; none of them, tree type. Condition
// (i) only applies when n >= 9: the canonical family it certifies (weights
// (2, 3, c+1) with nonnegative defect, so c >= 5) starts at n = 9, and the
// lone smaller polynomial matching its equalities is the 7-vertex star tree
// with branches (1, 2, 3), which must stay on the tree side. The caller must
// have trace -1; lambda_n != 1 is rejected.
inline SeparationResult separate_trace_minus_one(const Poly& chi) {
    const long deg = chi.degree();  // n + 1
    if (deg < 1) throw TraceMismatchError("polynomial of degree " + std::to_string(deg));
    const long n = deg - 1;
    if (chi.coeff(n) != 1)
        throw TraceMismatchError("lambda_n = " + chi.coeff(n).str() +
                                 ", expected 1 (trace -1)");

    if (n >= 9 && chi.coeff(n - 1) == 0 && chi.coeff(n - 2) == -1 && chi.coeff(n - 3) == -1 &&
        chi.coeff(n - 4) == 0)
        return {true, SeparationCondition::cond_i};

    if (chi.coeff(n - 1) == 0 && chi.coeff(n - 2) == 0) {
        for (long l = 3; l <= n; ++l)
            if (chi.coeff(n - l) <= -1) return {true, SeparationCondition::cond_ii};
    }

    if (chi.coeff(n - 1) == 1) {
        for (long l = 2; l <= n; ++l)
            if (chi.coeff(n - l) <= 0) return {true, SeparationCondition::cond_iii};
    }

    return {false, std::nullopt};
}

// End-to-end classification of a described algebra, assumed connected and
// piecewise hereditary (not checked; the coefficient conditions carry no
// meaning otherwise). Weights, when supplied, only add the representation
// type and exact branch count of a canonical construction.
inline ClassLabel classify_algebra(const AlgebraSpec& spec,
                                   const std::optional<std::vector<int>>& weights = std::nullopt) {
    const CoxeterData data = CoxeterData::from_cartan(spec.cartan());
    ClassLabel label = trace_trichotomy(data.trace());
    if (label.kind == AlgebraClass::undecided) {
        const SeparationResult sep = separate_trace_minus_one(data.chi);
        label.kind = sep.canonical ? AlgebraClass::canonical : AlgebraClass::tree_type;
        label.condition = sep.condition;
        if (sep.canonical) label.branches = 3;
    }
    if (weights) {
        label.weights = weight_type(*weights);
        if (label.kind == AlgebraClass::canonical && label.branches_exceed_three)
            label.branches = static_cast<int>(weights->size());
    }
    return label;
}

}  // namespace coxpoly
