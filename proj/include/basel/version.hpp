#pragma once

namespace basel {

inline constexpr const char* kVersion = "1.0.0";

}
