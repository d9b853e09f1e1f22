#pragma once

#include <string>
#include <vector>

#include "serredim/order.hpp"
#include "serredim/ring.hpp"

namespace serredim {

struct Term {
    Monomial m;
    mpq_class c;
};

/// Sparse polynomial: nonzero terms, strictly descending under the order the
/// producing operation was given. All layers above poly_kernel use degrevlex;
/// lex appears only in explicit Groebner runs.
class Poly {
public:
    Poly() = default;

    const std::vector<Term>& terms() const { return t_; }
    std::vector<Term>& raw() { return t_; }

    bool is_zero() const { return t_.empty(); }
    const Term& lead() const { return t_.front(); }
    size_t size() const { return t_.size(); }

    // max total degree; -1 for zero
    int degree() const {
        int d = -1;
        for (const Term& t : t_)
            if (static_cast<int>(t.m.deg) > d) d = static_cast<int>(t.m.deg);
        return d;
    }

private:
    std::vector<Term> t_;
};

Poly poly_normalize(const Ring& R, OrderKind o, std::vector<Term> ts);
Poly poly_resort(const Ring& R, OrderKind o, const Poly& a);

Poly poly_add(const Ring& R, OrderKind o, const Poly& a, const Poly& b);
Poly poly_sub(const Ring& R, OrderKind o, const Poly& a, const Poly& b);
Poly poly_neg(const Ring& R, const Poly& a);
Poly poly_mul(const Ring& R, OrderKind o, const Poly& a, const Poly& b);
// multiplying by a single term keeps the sort for any multiplicative order
Poly poly_mul_term(const Ring& R, const Poly& a, const Monomial& m, const mpq_class& c);
Poly poly_scale(const Ring& R, const Poly& a, const mpq_class& c);
Poly poly_monic(const Ring& R, const Poly& a);

Poly poly_constant(const Ring& R, const mpq_class& c);
Poly poly_one(const Ring& R);
Poly poly_var(const Ring& R, int var, uint16_t exp = 1);
Poly poly_term(const Ring& R, const Monomial& m, const mpq_class& c);

bool poly_equal(const Ring& R, const Poly& a, const Poly& b);
// deterministic total order on equally-sorted polynomials (for canonical sorts)
int poly_cmp(OrderKind o, int nvars, const Poly& a, const Poly& b);

bool poly_is_monomial(const Poly& a);   // exactly one term
bool poly_is_constant(const Poly& a);   // zero or degree-0 single term
bool poly_is_homogeneous(const Poly& a);

std::string mono_str(const Ring& R, const Monomial& m);
std::string poly_str(const Ring& R, const Poly& a);

}  // namespace serredim
