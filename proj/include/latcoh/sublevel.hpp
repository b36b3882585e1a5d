#pragma once

#include <cstdint>
#include <unordered_map>

#include "latcoh/charlat.hpp"

namespace latcoh {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

constexpr long long kDefaultBudget = 10'000'000;

// {x : chi_K(x) <= n}, points sorted lexicographically.
struct SublevelSet {
    long long level = 0;
    std::vector<IVec> points;
    std::vector<long long> chi_values;                       // parallel to points
    std::unordered_map<IVec, int, IVecHash> index;           // point -> position
    std::vector<std::pair<int, int>> adjacency() const;      // (i, j) with x_j = x_i + e_v
    std::vector<int> component_ids() const;                  // union-find partition,
                                                             // ids = smallest contained index
};

// Exact recursive ellipsoid enumeration (complete-the-square over rationals on
// the positive-definite form -M). Budget caps the number of emitted points.
SublevelSet enumerate_sublevel(const IntersectionForm& form, const CharVector& k, long long n,
                               long long budget = kDefaultBudget);

// Naive oracle for tests: enumerate the box [-B,B]^n with B derived from the
// LDL^T data so that chi_K <= n implies membership, then filter.
SublevelSet enumerate_sublevel_box_oracle(const IntersectionForm& form, const CharVector& k,
                                          long long n, long long budget = kDefaultBudget);

// Upper bound on the leaf count of the ellipsoid recursion for {chi_K <= n}
// (product of per-pivot fanout bounds); cheap feasibility prescreen.
Rat sublevel_box_volume(const IntersectionForm& form, const CharVector& k, long long n);

// BFS flood of the connected component of `start` inside {chi_K <= n}.
// Exact and box-free; throws BudgetExceeded if the component outgrows the budget.
std::vector<IVec> component_of(const IntersectionForm& form, const CharVector& k, const IVec& start,
                               long long n, long long budget = kDefaultBudget);

}  // namespace latcoh
