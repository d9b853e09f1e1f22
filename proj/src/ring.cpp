#include "serredim/ring.hpp"

#include <algorithm>

#include "serredim/errors.hpp"
#include "serredim/monomial.hpp"

namespace serredim {

Ring::Ring(Field field, std::vector<std::string> vars, Limits limits)
    : field_(field), vars_(std::move(vars)), limits_(limits) {
    if (vars_.empty()) throw ContractError("ring needs at least one variable");
    if (static_cast<int>(vars_.size()) > limits_.max_vars)
        throw ContractError("variable count " + std::to_string(vars_.size()) +
                            " exceeds the limit of " + std::to_string(limits_.max_vars));
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].empty()) throw ContractError("empty variable name");
        for (size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw ContractError("duplicate variable name '" + vars_[i] + "'");
    }
}

int Ring::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

Ring Ring::extended(const std::string& fresh) const {
    if (var_index(fresh) >= 0) throw InternalError("extended(): variable name not fresh");
    if (nvars() + 1 > kMaxVars) throw ResourceError("no free variable slot for internal extension");
    Ring r;
    r.field_ = field_;
    r.vars_ = vars_;
    r.vars_.push_back(fresh);
    r.limits_ = limits_;
    return r;
}

std::string Ring::summary() const {
    std::string s = field_.kind() == FieldKind::rationals
                        ? "QQ"
                        : "F" + std::to_string(field_.modulus());
    s += "[";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    s += "]";
    return s;
}

}  // namespace serredim
