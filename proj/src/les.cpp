#include "supersplit/les.hpp"

namespace supersplit {

namespace {

enum class Part { Solved, Ambiguous, Inconsistent };

using Val = std::optional<long>;

// One parity component. Exactness at every position of
// 0 -> A_0 -> ... -> A_{k-1} -> 0 gives d_j = r_{j-1} + r_j with
// r_{-1} = r_{k-1} = 0 and all ranks nonnegative.
Part solve_component(std::vector<Val>& d, std::vector<Val>& r) {
    const size_t k = d.size();
    std::vector<Val> rf(k + 1);
    rf[0] = 0;
    rf[k] = 0;
    for (size_t j = 0; j + 1 < k; ++j) rf[j + 1] = r[j];
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t j = 0; j < k; ++j) {
            Val& rin = rf[j];
            Val& rout = rf[j + 1];
            if (d[j] && rin && !rout) {
                long v = *d[j] - *rin;
                if (v < 0) return Part::Inconsistent;
                rout = v;
                changed = true;
            } else if (d[j] && rout && !rin) {
                long v = *d[j] - *rout;
                if (v < 0) return Part::Inconsistent;
                rin = v;
                changed = true;
            } else if (!d[j] && rin && rout) {
                d[j] = *rin + *rout;
                changed = true;
            }
        }
    }
    for (size_t j = 0; j < k; ++j) {
        if (!d[j]) return Part::Ambiguous;
        if (rf[j] && rf[j + 1] && *d[j] != *rf[j] + *rf[j + 1])
            return Part::Inconsistent;
    }
    return Part::Solved;
}

}  // namespace

LesResult les_solve(const std::vector<std::optional<SuperDim>>& items,
                    const std::vector<std::optional<SuperDim>>& ranks) {
    const size_t k = items.size();
    LesResult res;
    if (k == 0) return res;
    std::vector<Val> de(k), dodd(k);
    for (size_t j = 0; j < k; ++j) {
        if (items[j]) {
            de[j] = items[j]->even;
            dodd[j] = items[j]->odd;
        }
    }
    std::vector<Val> re(k - 1), ro(k - 1);
    for (size_t j = 0; j < ranks.size() && j + 1 < k; ++j) {
        if (ranks[j]) {
            re[j] = ranks[j]->even;
            ro[j] = ranks[j]->odd;
        }
    }
    Part pe = solve_component(de, re);
    Part po = solve_component(dodd, ro);
    if (pe == Part::Inconsistent || po == Part::Inconsistent) {
        res.status = LesStatus::Inconsistent;
        res.detail = "exactness constraints are contradictory";
        return res;
    }
    if (pe == Part::Ambiguous || po == Part::Ambiguous) {
        res.status = LesStatus::Ambiguous;
        res.detail = "dimension constraints do not force every unknown";
        return res;
    }
    res.dims.resize(k);
    for (size_t j = 0; j < k; ++j) res.dims[j] = SuperDim(*de[j], *dodd[j]);
    return res;
}

}  // namespace supersplit
