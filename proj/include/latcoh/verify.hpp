#pragma once

#include <string>

#include "latcoh/blowdown.hpp"
#include "latcoh/root.hpp"
#include "latcoh/tower.hpp"

namespace latcoh {

struct VerifyOptions {
    long long budget = kDefaultBudget;
    int depth = -1;  // -1: module default
};

struct VerifyReport {
    int schema_version = 1;
    // graph summary
    int n = 0;
    Int det;
    Int group_order;
    IVec k0;
    // root summary
    bool root_complete = true;
    long long min_level = 0;
    long long stable_level = 0;
    std::vector<std::pair<long long, int>> vertices_per_level;  // modeled levels
    int branch_count = 0;
    size_t leaf_count = 0;
    // blowdown summary
    int rounds = 0;
    size_t d_size = 0;
    size_t s_size = 0;
    // checks
    bool shape_chi_zero_on_c0 = false;
    bool shape_connected = false;
    bool shape_single_chain_above = false;
    bool s_equals_c0 = false;
    bool psi0_in_ker_u = false;
    Tri psi0_in_im_u = Tri::unknown;
    bool rational = false;
    bool rationality_agreement = false;  // in_im_u(psi0) <=> is_rational
    Height ht;
    std::string failure_witness;  // empty when everything passes

    bool all_pass() const;
    std::string to_json() const;  // deterministic (ordered keys)
};

VerifyReport run_verify(const PlumbingGraph& g, const VerifyOptions& opts = {});

}  // namespace latcoh
