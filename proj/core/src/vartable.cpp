#include "rene/vartable.hpp"

#include <algorithm>

namespace rene {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) {
            throw Error("indeterminate names must be nonempty");
        }
        for (std::size_t j = i + 1; j < names_.size(); ++j) {
            if (names_[i] == names_[j]) {
                throw Error("duplicate indeterminate name '" + names_[i] + "'");
            }
        }
    }
}

VarTablePtr VarTable::make(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
}

VarTablePtr VarTable::standard() {
    static const VarTablePtr table = make({"m", "n", "M", "N"});
    return table;
}

std::optional<std::size_t> VarTable::index(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

} // namespace rene
