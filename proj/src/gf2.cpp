#include "latcoh/gf2.hpp"

namespace latcoh {

Gf2System::Gf2System(int num_vars) : num_vars_(num_vars), words_((num_vars + 63) / 64) {}

bool Gf2System::add_equation(const std::vector<int>& vars, bool rhs) {
    Row row;
    row.bits.assign(words_, 0);
    row.rhs = rhs;
    for (int v : vars) row.bits[v / 64] ^= 1ull << (v % 64);
    // reduce against existing rows
    for (const Row& r : rows_) {
        if (row.bits[r.pivot / 64] >> (r.pivot % 64) & 1) {
            for (int w = 0; w < words_; ++w) row.bits[w] ^= r.bits[w];
            row.rhs = row.rhs != r.rhs;
        }
    }
    row.pivot = -1;
    for (int w = 0; w < words_ && row.pivot < 0; ++w)
        if (row.bits[w]) row.pivot = w * 64 + __builtin_ctzll(row.bits[w]);
    if (row.pivot < 0) {
        if (row.rhs) consistent_ = false;
        return consistent_;
    }
    // eliminate the new pivot from existing rows to keep full reduction
    for (Row& r : rows_) {
        if (r.bits[row.pivot / 64] >> (row.pivot % 64) & 1) {
            for (int w = 0; w < words_; ++w) r.bits[w] ^= row.bits[w];
            r.rhs = r.rhs != row.rhs;
        }
    }
    rows_.push_back(std::move(row));
    return consistent_;
}

std::optional<std::vector<bool>> Gf2System::solve() const {
    if (!consistent_) return std::nullopt;
    std::vector<bool> x(num_vars_, false);
    // rows are fully reduced: each pivot appears in exactly one row, and the
    // row's other variables are non-pivots (free, set to 0)
    for (const Row& r : rows_) x[r.pivot] = r.rhs;
    return x;
}

ParityUnionFind::ParityUnionFind(int n)
    : parent_(n), parity_(n, 0), pinned_(n, 0), pin_value_(n, 0) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
}

std::pair<int, bool> ParityUnionFind::find(int a) {
    bool p = false;
    int root = a;
    while (parent_[root] != root) {
        p = p != static_cast<bool>(parity_[root]);
        root = parent_[root];
    }
    // path compression
    int cur = a;
    bool cp = p;
    while (parent_[cur] != root) {
        int next = parent_[cur];
        bool np = cp != static_cast<bool>(parity_[cur]);
        parent_[cur] = root;
        parity_[cur] = cp;
        cur = next;
        cp = np;
    }
    return {root, p};
}

bool ParityUnionFind::equate(int a, int b, bool parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
        if ((pa != pb) != parity) consistent_ = false;
        return consistent_;
    }
    // attach rb under ra: x_b-root = x_a-root + (pa + pb + parity)
    parent_[rb] = ra;
    parity_[rb] = (pa != pb) != parity;
    if (pinned_[rb]) {
        bool val = static_cast<bool>(pin_value_[rb]) != static_cast<bool>(parity_[rb]);
        if (pinned_[ra]) {
            if (static_cast<bool>(pin_value_[ra]) != val) consistent_ = false;
        } else {
            pinned_[ra] = 1;
            pin_value_[ra] = val;
        }
    }
    return consistent_;
}

bool ParityUnionFind::pin(int a, bool value) {
    auto [ra, pa] = find(a);
    bool root_val = value != pa;
    if (pinned_[ra]) {
        if (static_cast<bool>(pin_value_[ra]) != root_val) consistent_ = false;
    } else {
        pinned_[ra] = 1;
        pin_value_[ra] = root_val;
    }
    return consistent_;
}

int ParityUnionFind::solution_dimension() {
    int dim = 0;
    for (size_t i = 0; i < parent_.size(); ++i) {
        if (parent_[i] == static_cast<int>(i) && !pinned_[i]) ++dim;
    }
    return dim;
}

}  // namespace latcoh
