#pragma once

#include <vector>

#include "serredim/monomial.hpp"

namespace serredim {

enum class OrderKind { degrevlex, lex };

/// Three-way compare; > 0 means a > b.
inline int mono_cmp(OrderKind kind, int nvars, const Monomial& a, const Monomial& b) {
    if (kind == OrderKind::degrevlex) {
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        // larger exponent in the last differing variable loses
        for (int i = nvars - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }
    for (int i = 0; i < nvars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

/// Term position in a free module: basis component plus monomial.
struct ModMono {
    int comp = 0;
    Monomial m;
};

/// Order on free-module monomials. Position-over-term with "earlier basis
/// element greater", or its Schreyer twist by the lead terms of a fixed
/// Groebner basis (compare the images m * lead[comp], ties to smaller index).
class ModuleOrder {
public:
    static ModuleOrder pot(OrderKind base) {
        ModuleOrder o;
        o.base_ = base;
        return o;
    }

    static ModuleOrder schreyer(OrderKind base, std::vector<ModMono> leads) {
        ModuleOrder o;
        o.base_ = base;
        o.schreyer_ = true;
        o.leads_ = std::move(leads);
        return o;
    }

    OrderKind base() const { return base_; }
    bool is_schreyer() const { return schreyer_; }

    int cmp(int nvars, const ModMono& a, const ModMono& b) const {
        if (!schreyer_) {
            if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
            return mono_cmp(base_, nvars, a.m, b.m);
        }
        const ModMono& la = leads_[static_cast<size_t>(a.comp)];
        const ModMono& lb = leads_[static_cast<size_t>(b.comp)];
        if (la.comp != lb.comp) return la.comp < lb.comp ? 1 : -1;
        int c = mono_cmp(base_, nvars, mono_mul(a.m, la.m, nvars), mono_mul(b.m, lb.m, nvars));
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
    }

private:
    OrderKind base_ = OrderKind::degrevlex;
    bool schreyer_ = false;
    std::vector<ModMono> leads_;
};

}  // namespace serredim
