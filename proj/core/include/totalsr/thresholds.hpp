#pragma once

#include "totalsr/utility.hpp"

namespace totalsr {

struct Thresholds {
    Utility minutil;      // must be positive
    Fraction minconf;     // in [0, 1]
};

}  // namespace totalsr
