#pragma once

#include "modelspace/core.hpp"

#include <vector>

namespace testing_support {

inline modelspace::ZeroSequence zs(std::vector<modelspace::Complex> pts) {
    return modelspace::ZeroSequence(std::move(pts));
}

inline modelspace::ValueSequence vs(std::vector<modelspace::Complex> vals) {
    return modelspace::ValueSequence(std::move(vals));
}

}  // namespace testing_support
