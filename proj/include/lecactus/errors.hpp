#pragma once

#include <stdexcept>
#include <string>

namespace lecactus {

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct InvalidIndices : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidRank : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InadmissiblePartition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InadmissibleBlock : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAnOrdinalSum : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a brute-force search would exceed its extension cap. The
// verdict is unknown in that case; callers must not treat it as "true".
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lecactus
