#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace latcoh {

// Dense bitset GF(2) linear system solver (incremental row reduction).
// Variables are indexed 0..n-1; each equation is xor of variables = rhs bit.
class Gf2System {
   public:
    explicit Gf2System(int num_vars);

    // Returns false if the equation is inconsistent with those already added.
    bool add_equation(const std::vector<int>& vars, bool rhs);
    bool consistent() const { return consistent_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    int num_vars() const { return num_vars_; }

    // A particular solution (free variables set to 0); empty if inconsistent.
    std::optional<std::vector<bool>> solve() const;

   private:
    int num_vars_;
    int words_;
    bool consistent_ = true;
    struct Row {
        std::vector<uint64_t> bits;
        bool rhs;
        int pivot;
    };
    std::vector<Row> rows_;  // reduced rows, distinct pivots
};

// Union-find with parity for homogeneous 2-variable GF(2) systems
// (x = y, x = y+1, x = 0, x = 1). Computes solution-space dimension in
// near-linear time.
class ParityUnionFind {
   public:
    explicit ParityUnionFind(int n);
    bool equate(int a, int b, bool parity);  // x_a = x_b + parity; false on conflict
    bool pin(int a, bool value);             // x_a = value
    bool consistent() const { return consistent_; }
    int solution_dimension();  // number of unpinned classes

   private:
    std::pair<int, bool> find(int a);  // (root, parity to root)
    std::vector<int> parent_;
    std::vector<unsigned char> parity_;
    std::vector<unsigned char> pinned_;  // per root: 0 = free, 1 = pinned
    std::vector<unsigned char> pin_value_;
    bool consistent_ = true;
};

}  // namespace latcoh
