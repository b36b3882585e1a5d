#pragma once

#include "latcoh/blowdown.hpp"
#include "latcoh/tower.hpp"

namespace latcoh {

// Function on a finite window of the Char-model: the orbit points K + 2PD(x)
// for x in a finite set, values in the truncated tower.
struct CharModelFunction {
    CharVector base;             // K
    std::vector<IVec> offsets;   // x-coordinates; window member i is K + 2PD(offsets[i])
    std::vector<TowerElement> values;
    int depth = 0;
    int find_offset(const IVec& x) const;  // -1 if absent
};

// Function on a finite box in L.
struct LModelFunction {
    CharVector base;  // K (fixes chi)
    std::vector<IVec> points;
    std::vector<TowerElement> values;
    int depth = 0;
    int find_point(const IVec& x) const;
};

struct NotConstantOnComponent : std::runtime_error {
    IVec witness_a, witness_b;
    NotConstantOnComponent(const std::string& what, IVec a, IVec b)
        : std::runtime_error(what), witness_a(std::move(a)), witness_b(std::move(b)) {}
};

struct WindowMisalignment : std::runtime_error {
    WindowMisalignment(const std::string& what) : std::runtime_error(what) {}
};

// Compatibility checks (shift equations between in-window neighbor pairs).
bool validate_char_model(const IntersectionForm& form, const CharModelFunction& f);
bool validate_l_model(const IntersectionForm& form, const LModelFunction& f);

// phi0 as a Char-model function: generator on the support {K0 + 2PD(s)}, zero
// on the rest of the box window.
CharModelFunction phi0_char_model(const IntersectionForm& form, const BlowdownTrace& trace,
                                  const std::vector<IVec>& box, int depth);

// Pullback along iota_K(x) = K + 2PD(x); the box must map into phi's window.
LModelFunction iota_pullback(const IntersectionForm& form, const CharModelFunction& phi,
                             const std::vector<IVec>& box);

// Decides whether phi factors through theta (x -> component of x at level
// chi(x)); returns the induced root function on the model, or throws
// NotConstantOnComponent with a witness pair.
RootFunction theta_pushforward_check(const IntersectionForm& form, const LModelFunction& phi,
                                     const TowerModel& model);

struct ModelEquivalenceReport {
    int dim_char = -1;
    int dim_l = -1;
    int dim_root = -1;
    bool dims_agree = false;
    bool iota_bijective = false;
    bool theta_bijective = false;
    int box_radius = 0;
    int depth = 0;
    bool pass() const { return dims_agree && iota_bijective && theta_bijective; }
};

// Brute-force window verification of the two isomorphisms: GF(2) solution-space
// dimensions of the Char-, L- and root-models on aligned windows, plus
// bijectivity of the maps on the window.
ModelEquivalenceReport check_model_equivalence(const IntersectionForm& form, const CharVector& k,
                                               int box_radius, int depth,
                                               long long budget = kDefaultBudget);

// All points of the box [-r, r]^n, lexicographic.
std::vector<IVec> lattice_box(int n, int radius);

}  // namespace latcoh
