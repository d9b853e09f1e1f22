#pragma once

#include <string>
#include <vector>

#include "serredim/field.hpp"

namespace serredim {

struct Limits {
    int max_vars = 8;            // user-visible variables
    int max_input_degree = 12;   // total degree of a declared generator
    std::size_t coeff_bits = 4096;  // rational coefficient budget inside GB runs
};

/// Polynomial ring over QQ or F_p with named variables and standard grading
/// (every variable has degree 1).
class Ring {
public:
    Ring(Field field, std::vector<std::string> vars, Limits limits = {});

    int nvars() const { return static_cast<int>(vars_.size()); }
    const Field& field() const { return field_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const Limits& limits() const { return limits_; }

    int var_index(const std::string& name) const;  // -1 if absent

    /// Same ring with one fresh variable appended. Internal use only
    /// (radical membership); may exceed max_vars by one slot.
    Ring extended(const std::string& fresh) const;

    std::string summary() const;  // e.g. "QQ[x,y,z]" or "F101[x,y]"

    bool operator==(const Ring& o) const { return field_ == o.field_ && vars_ == o.vars_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

private:
    Ring() : field_(Field::rationals()) {}
    Field field_;
    std::vector<std::string> vars_;
    Limits limits_;
};

}  // namespace serredim
