#include "stego/reference_tables.hpp"

// Data lives in the header as constexpr arrays; this translation unit only
// anchors the target in the build.
