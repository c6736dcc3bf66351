#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nonreg {

/// Names accepted by builtin_example, in a fixed order.
const std::vector<std::string>& builtin_names();

/// Device file text of a bundled example machine or grammar.
std::optional<std::string_view> builtin_example(std::string_view name);

/// "cfg", "pda", "efa" or "fatl" for a known name.
std::optional<std::string_view> builtin_kind(std::string_view name);

} // namespace nonreg
