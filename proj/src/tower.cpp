#include "latcoh/tower.hpp"

#include <algorithm>

namespace latcoh {

TowerElement TowerElement::generator(int d) {
    TowerElement t = zero(d);
    t.bits[0] = true;
    return t;
}

bool TowerElement::is_zero() const {
    return std::none_of(bits.begin(), bits.end(), [](bool b) { return b; });
}

TowerElement TowerElement::u_shift() const {
    TowerElement t = zero(static_cast<int>(bits.size()));
    for (size_t j = 0; j + 1 < bits.size(); ++j) t.bits[j] = bits[j + 1];
    return t;
}

bool RootFunction::is_zero() const {
    return std::all_of(values.begin(), values.end(),
                       [](const TowerElement& t) { return t.is_zero(); });
}

int default_depth(const GradedRoot& root) {
    long long min_modeled = root.complete ? root.min_level : 0;
    return static_cast<int>(root.stable_level - min_modeled) + 2;
}

TowerModel::TowerModel(const GradedRoot& root, int depth) : root_(&root), depth_(depth) {
    if (depth < default_depth(root))
        throw TruncationTooShallow("depth " + std::to_string(depth) + " < faithfulness bound " +
                                   std::to_string(default_depth(root)));
    window_of_root_.assign(root.vertices.size(), -1);
    for (const auto& v : root.vertices) {
        if (v.unresolved) continue;
        window_of_root_[v.id] = static_cast<int>(levels_.size());
        levels_.push_back(v.level);
        root_ids_.push_back(v.id);
    }
    up_.resize(levels_.size());
    for (size_t i = 0; i < levels_.size(); ++i) {
        int ru = root.vertices[root_ids_[i]].up;
        up_[i] = (ru >= 0) ? window_of_root_[ru] : -1;
    }
    w0_index_ = window_of_root_[root.zero_component_id];
}

int TowerModel::window_index_of_root_vertex(int root_id) const {
    return window_of_root_[root_id];
}

RootFunction TowerModel::zero() const {
    RootFunction f;
    f.depth = depth_;
    f.values.assign(size(), TowerElement::zero(depth_));
    return f;
}

RootFunction TowerModel::psi0() const {
    for (int i = 0; i < size(); ++i)
        if (up_[i] == w0_index_ && levels_[i] < levels_[w0_index_])
            throw EdgeConditionViolated("w0 has a lower neighbor");
    for (const auto& v : root_->vertices)
        if (v.unresolved && v.up == root_->zero_component_id)
            throw EdgeConditionViolated("w0 has an unresolved lower neighbor");
    RootFunction f = zero();
    f.values[w0_index_] = TowerElement::generator(depth_);
    return f;
}

RootFunction TowerModel::u_apply(const RootFunction& f) const {
    RootFunction g;
    g.depth = f.depth;
    g.values.reserve(f.values.size());
    for (const auto& t : f.values) g.values.push_back(t.u_shift());
    return g;
}

bool TowerModel::validate(const RootFunction& f) const {
    if (static_cast<int>(f.values.size()) != size() || f.depth != depth_) return false;
    for (int i = 0; i < size(); ++i) {
        int u = up_[i];
        if (u < 0) continue;
        // psi(up) = U psi(i) within the truncated model
        for (int t = 0; t < depth_; ++t) {
            bool rhs = (t + 1 < depth_) ? f.values[i].bits[t + 1] : false;
            if (f.values[u].bits[t] != rhs) return false;
        }
    }
    return true;
}

bool TowerModel::in_ker_u(const RootFunction& f) const { return u_apply(f).is_zero(); }

TowerModel::ImUResult TowerModel::in_pow_im_u(const RootFunction& target, int m) const {
    // unknowns: psi'(i) in the depth-truncated tower; var(i, j) = i*depth + j
    auto var = [&](int i, int j) { return i * depth_ + j; };
    Gf2System sys(size() * depth_);
    bool ok = true;
    // edge conditions: psi'(up)[t] = psi'(i)[t+1] (0 beyond the truncation)
    for (int i = 0; i < size() && ok; ++i) {
        int u = up_[i];
        if (u < 0) continue;
        for (int t = 0; t < depth_ && ok; ++t) {
            if (t + 1 < depth_) {
                ok = sys.add_equation({var(u, t), var(i, t + 1)}, false);
            } else if (root_->complete) {
                // truncated-model closure (justifies returned witnesses); not
                // valid on partial roots, where a true witness may have deeper
                // support -- omitted there so that "no" stays sound
                ok = sys.add_equation({var(u, t)}, false);
            }
        }
    }
    // target: (U^m psi')(i)[j] = psi'(i)[j+m] = target(i)[j]
    for (int i = 0; i < size() && ok; ++i) {
        for (int j = 0; j < depth_; ++j) {
            bool bit = target.values[i].bits[j];
            if (j + m < depth_) {
                ok = sys.add_equation({var(i, j + m)}, bit);
                if (!ok) break;
            } else if (bit) {
                throw TruncationTooShallow("target coefficient beyond truncation");
            }
        }
    }
    ImUResult res;
    if (!ok) {
        res.result = Tri::no;  // sound also on partial roots: every included
                               // constraint holds in the true module
        return res;
    }
    if (!root_->complete) {
        res.result = Tri::unknown;
        return res;
    }
    auto sol = sys.solve();
    RootFunction w = zero();
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < depth_; ++j) w.values[i].bits[j] = (*sol)[var(i, j)];
    // closure check: the witness really maps to the target
    RootFunction img = w;
    for (int s = 0; s < m; ++s) img = u_apply(img);
    if (!validate(w) || !(img == target))
        throw std::logic_error("in_pow_im_u: witness verification failed");
    res.result = Tri::yes;
    res.witness = std::move(w);
    return res;
}

bool is_rational(const GradedRoot& root) { return root.single_chain(); }

Height height_of_tower(const GradedRoot& root, int cap) {
    Height h;
    if (is_rational(root)) {
        h.infinite = true;
        return h;
    }
    int span = default_depth(root) - 2;
    int m = 0;
    while (m < cap) {
        TowerModel model(root, span + m + 3);
        auto res = model.in_pow_im_u(model.psi0(), m + 1);
        if (res.result != Tri::yes) break;
        ++m;
    }
    h.value = m;
    h.capped = (m == cap);
    return h;
}

}  // namespace latcoh
