#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supersplit/superdim.hpp"

namespace supersplit {

enum class LesStatus { Solved, Ambiguous, Inconsistent };

struct LesResult {
    LesStatus status = LesStatus::Solved;
    std::vector<SuperDim> dims;  // resolved sequence (valid when Solved)
    std::string detail;
};

/// Dimension solver for an exact sequence 0 -> A_0 -> ... -> A_k -> 0.
/// Entries are known dimensions or unknowns; `ranks[j]`, when given, is the
/// rank of the map A_j -> A_{j+1}. Propagates only forced values (bracketing
/// zeros, Euler-characteristic constraints, supplied ranks) and reports
/// Ambiguous rather than guessing; contradictory constraints give
/// Inconsistent.
LesResult les_solve(const std::vector<std::optional<SuperDim>>& items,
                    const std::vector<std::optional<SuperDim>>& ranks = {});

}  // namespace supersplit
