#pragma once

#include <string>
#include <vector>

#include "serredim/poly.hpp"

namespace serredim {

struct VTerm {
    int comp = 0;
    Monomial m;
    mpq_class c;
};

/// Element of a free module R^rank. Terms are strictly descending under the
/// module order of the producing operation.
class FreeElem {
public:
    FreeElem() = default;
    explicit FreeElem(int rank) : rank_(rank) {}

    int rank() const { return rank_; }
    const std::vector<VTerm>& terms() const { return t_; }
    std::vector<VTerm>& raw() { return t_; }

    bool is_zero() const { return t_.empty(); }
    const VTerm& lead() const { return t_.front(); }
    ModMono lead_mm() const { return ModMono{t_.front().comp, t_.front().m}; }
    size_t size() const { return t_.size(); }

private:
    int rank_ = 0;
    std::vector<VTerm> t_;
};

FreeElem elem_normalize(const Ring& R, const ModuleOrder& o, int rank, std::vector<VTerm> ts);
FreeElem elem_resort(const Ring& R, const ModuleOrder& o, const FreeElem& a);

FreeElem elem_add(const Ring& R, const ModuleOrder& o, const FreeElem& a, const FreeElem& b);
FreeElem elem_sub(const Ring& R, const ModuleOrder& o, const FreeElem& a, const FreeElem& b);
FreeElem elem_neg(const Ring& R, const FreeElem& a);
FreeElem elem_mul_term(const Ring& R, const FreeElem& a, const Monomial& m, const mpq_class& c);
FreeElem elem_mul_poly(const Ring& R, const ModuleOrder& o, const Poly& p, const FreeElem& a);
FreeElem elem_scale(const Ring& R, const FreeElem& a, const mpq_class& c);
FreeElem elem_monic(const Ring& R, const FreeElem& a);

// place a polynomial in one coordinate (sort is preserved under POT/Schreyer)
FreeElem elem_from_poly(int rank, int comp, const Poly& p);
Poly elem_coord(const Ring& R, OrderKind o, const FreeElem& a, int comp);
FreeElem elem_basis(const Ring& R, int rank, int comp);

bool elem_equal(const Ring& R, const FreeElem& a, const FreeElem& b);
int elem_cmp(const ModuleOrder& o, int nvars, const FreeElem& a, const FreeElem& b);

bool elem_is_homogeneous_columns(const FreeElem& a);  // every coordinate homogeneous

std::string elem_str(const Ring& R, const FreeElem& a);  // "(p0, p1, ...)"

}  // namespace serredim
