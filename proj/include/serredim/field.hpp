#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace serredim {

enum class FieldKind { rationals, prime };

/// Coefficient arithmetic context. Elements are mpq_class values; in prime
/// mode they are integer representatives in [0, p) with denominator 1.
class Field {
public:
    static Field rationals();
    static Field prime(unsigned long p);  // p prime, p < 2^31

    FieldKind kind() const { return kind_; }
    unsigned long modulus() const { return p_; }

    mpq_class from_long(long n) const;
    mpq_class from_integer(const mpz_class& n) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const;
    mpq_class sub(const mpq_class& a, const mpq_class& b) const;
    mpq_class mul(const mpq_class& a, const mpq_class& b) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const;
    mpq_class neg(const mpq_class& a) const;
    mpq_class inv(const mpq_class& a) const;

    bool is_zero(const mpq_class& a) const { return sgn(a) == 0; }
    bool is_one(const mpq_class& a) const { return a == 1; }

    // largest bit length among numerator and denominator
    std::size_t bit_size(const mpq_class& a) const;

    std::string str(const mpq_class& a) const;

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    Field(FieldKind k, unsigned long p) : kind_(k), p_(p) {}
    mpq_class reduce(mpz_class n) const;

    FieldKind kind_;
    unsigned long p_;
};

}  // namespace serredim
