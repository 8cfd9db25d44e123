#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monomtest {

using VarIndex = std::uint32_t;  // 1-based; T1 > T2 > ... in the lex order

// Variable display names. Index 1 maps to names[0]; missing entries fall
// back to T<i>.
struct NameTable {
    std::vector<std::string> names;

    std::string name(VarIndex i) const {
        if (i >= 1 && i <= names.size()) return names[i - 1];
        return "T" + std::to_string(i);
    }
};

}  // namespace monomtest
