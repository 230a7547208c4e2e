#pragma once

#include <string>
#include <string_view>

namespace rnnids::signatures {

// Turns a raw pattern emitted by the sequence model into one parse_regex()
// accepts: unescaped '/' are removed, a dangling trailing backslash is
// dropped, then every open class and group is closed innermost first.
// Idempotent. Throws UnrepairableOutput when the result still fails to parse.
std::string repair_generated(std::string_view raw);

}  // namespace rnnids::signatures
