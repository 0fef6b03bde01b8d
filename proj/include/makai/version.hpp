#pragma once

#include <string_view>

namespace makai {

// Reports embed this instead of timestamps so identical runs stay
// byte-identical.
inline constexpr std::string_view kVersion = "makai 0.1.0";

}  // namespace makai
