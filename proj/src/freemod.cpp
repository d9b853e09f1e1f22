#include "serredim/freemod.hpp"

#include <algorithm>

#include "serredim/errors.hpp"

namespace serredim {

FreeElem elem_normalize(const Ring& R, const ModuleOrder& o, int rank, std::vector<VTerm> ts) {
    const int n = R.nvars();
    const Field& K = R.field();
    std::sort(ts.begin(), ts.end(), [&](const VTerm& a, const VTerm& b) {
        return o.cmp(n, ModMono{a.comp, a.m}, ModMono{b.comp, b.m}) > 0;
    });
    FreeElem out(rank);
    auto& r = out.raw();
    r.reserve(ts.size());
    for (auto& t : ts) {
        if (K.is_zero(t.c)) continue;
        if (!r.empty() && r.back().comp == t.comp && mono_equal(r.back().m, t.m, n)) {
            r.back().c = K.add(r.back().c, t.c);
            if (K.is_zero(r.back().c)) r.pop_back();
        } else {
            r.push_back(std::move(t));
        }
    }
    return out;
}

FreeElem elem_resort(const Ring& R, const ModuleOrder& o, const FreeElem& a) {
    return elem_normalize(R, o, a.rank(), a.terms());
}

FreeElem elem_add(const Ring& R, const ModuleOrder& o, const FreeElem& a, const FreeElem& b) {
    internal_check(a.rank() == b.rank() || a.is_zero() || b.is_zero(), "rank mismatch in elem_add");
    const int n = R.nvars();
    const Field& K = R.field();
    FreeElem out(a.is_zero() ? b.rank() : a.rank());
    auto& r = out.raw();
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const VTerm& x = a.terms()[i];
        const VTerm& y = b.terms()[j];
        int c = o.cmp(n, ModMono{x.comp, x.m}, ModMono{y.comp, y.m});
        if (c > 0) {
            r.push_back(a.terms()[i++]);
        } else if (c < 0) {
            r.push_back(b.terms()[j++]);
        } else {
            mpq_class s = K.add(x.c, y.c);
            if (!K.is_zero(s)) r.push_back(VTerm{x.comp, x.m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a.terms()[i]);
    for (; j < b.size(); ++j) r.push_back(b.terms()[j]);
    return out;
}

FreeElem elem_neg(const Ring& R, const FreeElem& a) {
    const Field& K = R.field();
    FreeElem out = a;
    for (VTerm& t : out.raw()) t.c = K.neg(t.c);
    return out;
}

FreeElem elem_sub(const Ring& R, const ModuleOrder& o, const FreeElem& a, const FreeElem& b) {
    return elem_add(R, o, a, elem_neg(R, b));
}

FreeElem elem_mul_term(const Ring& R, const FreeElem& a, const Monomial& m, const mpq_class& c) {
    const int n = R.nvars();
    const Field& K = R.field();
    FreeElem out(a.rank());
    if (K.is_zero(c)) return out;
    auto& r = out.raw();
    r.reserve(a.size());
    for (const VTerm& t : a.terms()) r.push_back(VTerm{t.comp, mono_mul(t.m, m, n), K.mul(t.c, c)});
    return out;
}

FreeElem elem_mul_poly(const Ring& R, const ModuleOrder& o, const Poly& p, const FreeElem& a) {
    FreeElem acc(a.rank());
    for (const Term& t : p.terms()) acc = elem_add(R, o, acc, elem_mul_term(R, a, t.m, t.c));
    return acc;
}

FreeElem elem_scale(const Ring& R, const FreeElem& a, const mpq_class& c) {
    return elem_mul_term(R, a, Monomial{}, c);
}

FreeElem elem_monic(const Ring& R, const FreeElem& a) {
    if (a.is_zero()) return a;
    return elem_scale(R, a, R.field().inv(a.lead().c));
}

FreeElem elem_from_poly(int rank, int comp, const Poly& p) {
    FreeElem out(rank);
    out.raw().reserve(p.size());
    for (const Term& t : p.terms()) out.raw().push_back(VTerm{comp, t.m, t.c});
    return out;
}

Poly elem_coord(const Ring& R, OrderKind o, const FreeElem& a, int comp) {
    std::vector<Term> ts;
    for (const VTerm& t : a.terms())
        if (t.comp == comp) ts.push_back(Term{t.m, t.c});
    return poly_normalize(R, o, std::move(ts));
}

FreeElem elem_basis(const Ring& R, int rank, int comp) {
    return elem_from_poly(rank, comp, poly_one(R));
}

bool elem_equal(const Ring& R, const FreeElem& a, const FreeElem& b) {
    if (a.rank() != b.rank() || a.size() != b.size()) return false;
    const int n = R.nvars();
    for (size_t i = 0; i < a.size(); ++i) {
        const VTerm& x = a.terms()[i];
        const VTerm& y = b.terms()[i];
        if (x.comp != y.comp || !mono_equal(x.m, y.m, n) || x.c != y.c) return false;
    }
    return true;
}

int elem_cmp(const ModuleOrder& o, int nvars, const FreeElem& a, const FreeElem& b) {
    size_t k = std::min(a.size(), b.size());
    for (size_t i = 0; i < k; ++i) {
        const VTerm& x = a.terms()[i];
        const VTerm& y = b.terms()[i];
        int c = o.cmp(nvars, ModMono{x.comp, x.m}, ModMono{y.comp, y.m});
        if (c != 0) return c;
        int s = cmp(x.c, y.c);
        if (s != 0) return s;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

bool elem_is_homogeneous_columns(const FreeElem& a) {
    // per coordinate: all monomials of that coordinate share one degree
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a.terms()[i].comp == a.terms()[j].comp &&
                a.terms()[i].m.deg != a.terms()[j].m.deg)
                return false;
    return true;
}

std::string elem_str(const Ring& R, const FreeElem& a) {
    std::string s = "(";
    for (int c = 0; c < a.rank(); ++c) {
        if (c) s += ",";
        s += poly_str(R, elem_coord(R, OrderKind::degrevlex, a, c));
    }
    return s + ")";
}

}  // namespace serredim
