#pragma once

#include "latcoh/charlat.hpp"
#include "latcoh/sublevel.hpp"

namespace latcoh {

struct InvariantViolated : std::runtime_error {
    InvariantViolated(const std::string& what) : std::runtime_error(what) {}
};

// Per original vertex: its current homology class in the fixed lattice H2(X)
// (E-basis), tracked through blowdown rounds.
struct CurveState {
    IVec cls;
    bool alive = true;
    bool smooth = true;
    int blown_down_in_round = -1;  // -1 = survives
};

struct Proximity {
    int source;        // vertex blown down ...
    int source_round;  // ... in this round
    int target;        // meets the image of this vertex
    long long multiplicity;
    bool target_blown_down_later;  // true: enters the proximity recursion (mult must be 1)
};

struct BlowdownTrace {
    std::vector<std::vector<int>> rounds;  // vertex ids blown down per round
    std::vector<CurveState> final_state;   // per original vertex
    std::vector<Proximity> proximities;
    std::vector<int> d_order;  // blown-down vertex ids in round order (ties: vertex order)
    // D-classes, parallel to d_order: the class of each blown-down curve at the
    // moment of blowdown.
    std::vector<IVec> d_classes;
};

// Greedy simultaneous blowdown of every alive, smooth, self-intersection -1
// curve; homology bookkeeping C -> C + (C.d) d in the fixed lattice; smoothness
// lost when C.d >= 2. Throws InvariantViolated on round-orthogonality or
// proximity-multiplicity failures.
BlowdownTrace blowdown_sequence(const PlumbingGraph& g, const IntersectionForm& form);

// Verifies the proximity recursion D^m = E^m + sum of proximate earlier D's
// against the recorded classes; throws InvariantViolated ("RecursionMismatch")
// on disagreement. Returns the D-classes.
std::vector<IVec> d_classes(const IntersectionForm& form, const BlowdownTrace& trace);

struct SSet {
    std::vector<IVec> sums;  // all 2^{|D|} subset sums, sorted, deduplicated only if
                             // classes coincide (they never do on valid traces)
};

// All subset sums of distinct D-classes; verifies <K0,d> = 1, d.d = -1,
// pairwise d.d' = 0 and chi_{K0} = 0 on every sum. Cap |D| <= 20.
SSet s_set(const IntersectionForm& form, const BlowdownTrace& trace);

struct SEqualsC0Report {
    bool equal = false;
    bool paths_ok = false;  // lexicographic t(F) paths stay inside S
    size_t s_size = 0;
    size_t c0_size = 0;
    std::string witness;  // first failure, empty if pass
};

// Set equality of S with the level-0 component of 0, plus reconstruction of the
// lattice path to 0 for each F in S by the lexicographic recursion on
// t(F) = (s_R, ..., s_1), checking every partial sum stays in S.
SEqualsC0Report verify_s_equals_c0(const PlumbingGraph& g, const IntersectionForm& form,
                                   long long budget = kDefaultBudget);

// Support {K0 + 2 PD(s) : s in S} of phi0; verifies every element is
// characteristic, in the orbit [K0], and has w equal to w(K0).
std::vector<CharVector> phi0_support(const IntersectionForm& form, const BlowdownTrace& trace);

// JSON report: rounds, classes in the E-basis, proximity list with
// multiplicities, terminal state with smooth flags.
std::string trace_to_json(const PlumbingGraph& g, const BlowdownTrace& trace);

}  // namespace latcoh
