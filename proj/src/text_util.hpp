#pragma once

#include <string_view>
#include <vector>

namespace cyclenum::detail {

// "1,3,4,2" or compact digits "1342".
std::vector<int> parse_int_list(std::string_view text);

}  // namespace cyclenum::detail
