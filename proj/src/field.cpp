#include "serredim/field.hpp"

#include "serredim/errors.hpp"

namespace serredim {

Field Field::rationals() { return Field(FieldKind::rationals, 0); }

Field Field::prime(unsigned long p) {
    if (p < 2 || p >= (1ul << 31))
        throw ContractError("prime-field modulus must satisfy 2 <= p < 2^31");
    mpz_class m(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(m.get_mpz_t(), 32) == 0)
        throw ContractError("prime-field modulus " + m.get_str() + " is not prime");
    return Field(FieldKind::prime, p);
}

mpq_class Field::reduce(mpz_class n) const {
    mpz_class p(p_);
    mpz_class r;
    mpz_mod(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());  // result in [0, p)
    return mpq_class(r);
}

mpq_class Field::from_long(long n) const {
    if (kind_ == FieldKind::rationals) return mpq_class(n);
    return reduce(mpz_class(n));
}

mpq_class Field::from_integer(const mpz_class& n) const {
    if (kind_ == FieldKind::rationals) return mpq_class(n);
    return reduce(n);
}

mpq_class Field::add(const mpq_class& a, const mpq_class& b) const {
    if (kind_ == FieldKind::rationals) return a + b;
    return reduce(a.get_num() + b.get_num());
}

mpq_class Field::sub(const mpq_class& a, const mpq_class& b) const {
    if (kind_ == FieldKind::rationals) return a - b;
    return reduce(a.get_num() - b.get_num());
}

mpq_class Field::mul(const mpq_class& a, const mpq_class& b) const {
    if (kind_ == FieldKind::rationals) return a * b;
    return reduce(a.get_num() * b.get_num());
}

mpq_class Field::neg(const mpq_class& a) const {
    if (kind_ == FieldKind::rationals) return -a;
    return reduce(-a.get_num());
}

mpq_class Field::inv(const mpq_class& a) const {
    if (is_zero(a)) throw InternalError("field inverse of zero");
    if (kind_ == FieldKind::rationals) return 1 / a;
    mpz_class p(p_), r;
    if (mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
        throw InternalError("no modular inverse; modulus not prime?");
    return mpq_class(r);
}

mpq_class Field::div(const mpq_class& a, const mpq_class& b) const {
    if (kind_ == FieldKind::rationals) {
        if (is_zero(b)) throw InternalError("field division by zero");
        return a / b;
    }
    return mul(a, inv(b));
}

std::size_t Field::bit_size(const mpq_class& a) const {
    std::size_t n = mpz_sizeinbase(a.get_num().get_mpz_t(), 2);
    std::size_t d = mpz_sizeinbase(a.get_den().get_mpz_t(), 2);
    return n > d ? n : d;
}

std::string Field::str(const mpq_class& a) const {
    if (kind_ == FieldKind::prime || a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

}  // namespace serredim
