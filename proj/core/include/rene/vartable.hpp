#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rene/errors.hpp"

namespace rene {

/// Ordered list of distinct indeterminate names. The order is fixed for the
/// table's lifetime and defines both variable indices and the lex tiebreak of
/// the monomial order. An empty table describes the constant ring.
class VarTable {
public:
    explicit VarTable(std::vector<std::string> names);

    static std::shared_ptr<const VarTable> make(std::vector<std::string> names);
    /// The default table of this artifact: m, n, M, N.
    static std::shared_ptr<const VarTable> standard();

    std::size_t arity() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index(std::string_view name) const;

    friend bool operator==(const VarTable& a, const VarTable& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

/// Tables agree if they are the same object or carry the same name sequence.
inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_table(const VarTablePtr& a, const VarTablePtr& b) {
    if (!same_table(a, b)) {
        throw TableMismatch("operands use different indeterminate tables");
    }
}

} // namespace rene
