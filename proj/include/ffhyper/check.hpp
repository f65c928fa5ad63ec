#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ffhyper/modarith.hpp"

namespace ffhyper {

using ParamValue = std::variant<i64, std::string>;

// One instance of an identity: its parameters and both sides in canonical text.
struct CheckCase {
    std::vector<std::pair<std::string, ParamValue>> params;
    std::string lhs;
    std::string rhs;
    bool equal = false;
};

}  // namespace ffhyper
