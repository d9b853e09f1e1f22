#include "serredim/poly.hpp"

#include <algorithm>

#include "serredim/errors.hpp"

namespace serredim {

Poly poly_normalize(const Ring& R, OrderKind o, std::vector<Term> ts) {
    const int n = R.nvars();
    const Field& K = R.field();
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(o, n, a.m, b.m) > 0;
    });
    Poly out;
    auto& r = out.raw();
    r.reserve(ts.size());
    for (auto& t : ts) {
        if (K.is_zero(t.c)) continue;
        if (!r.empty() && mono_equal(r.back().m, t.m, n)) {
            r.back().c = K.add(r.back().c, t.c);
            if (K.is_zero(r.back().c)) r.pop_back();
        } else {
            r.push_back(std::move(t));
        }
    }
    return out;
}

Poly poly_resort(const Ring& R, OrderKind o, const Poly& a) {
    return poly_normalize(R, o, a.terms());
}

Poly poly_add(const Ring& R, OrderKind o, const Poly& a, const Poly& b) {
    const int n = R.nvars();
    const Field& K = R.field();
    Poly out;
    auto& r = out.raw();
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = mono_cmp(o, n, a.terms()[i].m, b.terms()[j].m);
        if (c > 0) {
            r.push_back(a.terms()[i++]);
        } else if (c < 0) {
            r.push_back(b.terms()[j++]);
        } else {
            mpq_class s = K.add(a.terms()[i].c, b.terms()[j].c);
            if (!K.is_zero(s)) r.push_back(Term{a.terms()[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a.terms()[i]);
    for (; j < b.size(); ++j) r.push_back(b.terms()[j]);
    return out;
}

Poly poly_neg(const Ring& R, const Poly& a) {
    const Field& K = R.field();
    Poly out = a;
    for (Term& t : out.raw()) t.c = K.neg(t.c);
    return out;
}

Poly poly_sub(const Ring& R, OrderKind o, const Poly& a, const Poly& b) {
    return poly_add(R, o, a, poly_neg(R, b));
}

Poly poly_mul_term(const Ring& R, const Poly& a, const Monomial& m, const mpq_class& c) {
    const int n = R.nvars();
    const Field& K = R.field();
    Poly out;
    if (K.is_zero(c)) return out;
    auto& r = out.raw();
    r.reserve(a.size());
    for (const Term& t : a.terms()) r.push_back(Term{mono_mul(t.m, m, n), K.mul(t.c, c)});
    return out;
}

Poly poly_scale(const Ring& R, const Poly& a, const mpq_class& c) {
    return poly_mul_term(R, a, Monomial{}, c);
}

Poly poly_mul(const Ring& R, OrderKind o, const Poly& a, const Poly& b) {
    Poly acc;
    for (const Term& t : a.terms()) acc = poly_add(R, o, acc, poly_mul_term(R, b, t.m, t.c));
    return acc;
}

Poly poly_monic(const Ring& R, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(R, a, R.field().inv(a.lead().c));
}

Poly poly_constant(const Ring& R, const mpq_class& c) {
    Poly out;
    if (!R.field().is_zero(c)) out.raw().push_back(Term{Monomial{}, c});
    return out;
}

Poly poly_one(const Ring& R) { return poly_constant(R, R.field().from_long(1)); }

Poly poly_var(const Ring& R, int var, uint16_t exp) {
    Poly out;
    if (exp == 0) return poly_one(R);
    out.raw().push_back(Term{mono_var(var, exp), R.field().from_long(1)});
    return out;
}

Poly poly_term(const Ring& R, const Monomial& m, const mpq_class& c) {
    Poly out;
    if (!R.field().is_zero(c)) out.raw().push_back(Term{m, c});
    return out;
}

bool poly_equal(const Ring& R, const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return false;
    const int n = R.nvars();
    for (size_t i = 0; i < a.size(); ++i) {
        if (!mono_equal(a.terms()[i].m, b.terms()[i].m, n)) return false;
        if (a.terms()[i].c != b.terms()[i].c) return false;
    }
    return true;
}

int poly_cmp(OrderKind o, int nvars, const Poly& a, const Poly& b) {
    size_t k = std::min(a.size(), b.size());
    for (size_t i = 0; i < k; ++i) {
        int c = mono_cmp(o, nvars, a.terms()[i].m, b.terms()[i].m);
        if (c != 0) return c;
        int s = cmp(a.terms()[i].c, b.terms()[i].c);
        if (s != 0) return s;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

bool poly_is_monomial(const Poly& a) { return a.size() == 1; }

bool poly_is_constant(const Poly& a) {
    return a.is_zero() || (a.size() == 1 && a.lead().m.is_one());
}

bool poly_is_homogeneous(const Poly& a) {
    for (const Term& t : a.terms())
        if (t.m.deg != a.lead().m.deg) return false;
    return true;
}

std::string mono_str(const Ring& R, const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < R.nvars(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += "*";
        s += R.vars()[static_cast<size_t>(i)];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

std::string poly_str(const Ring& R, const Poly& a) {
    if (a.is_zero()) return "0";
    const Field& K = R.field();
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        const Term& t = a.terms()[i];
        mpq_class c = t.c;
        bool negative = K.kind() == FieldKind::rationals && sgn(c) < 0;
        if (i == 0) {
            if (negative) s += "-";
        } else {
            s += negative ? "-" : "+";
        }
        mpq_class abs_c = negative ? mpq_class(-c) : c;
        std::string cs = K.str(abs_c);
        if (t.m.is_one()) {
            s += cs;
        } else {
            if (cs != "1") s += cs + "*";
            s += mono_str(R, t.m);
        }
    }
    return s;
}

}  // namespace serredim
