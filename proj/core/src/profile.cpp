#include "nonreg/profile.hpp"

#include <limits>
#include <sstream>

namespace nonreg {

std::size_t Profile::at(std::size_t n) const {
    auto it = entries.find(n);
    return it == entries.end() ? 0 : it->second;
}

std::string to_csv(const Profile& p) {
    std::ostringstream out;
    out << "n,value\n";
    for (const auto& [n, v] : p.entries) out << n << ',' << v << '\n';
    return out.str();
}

std::size_t word_count(std::size_t alphabet_size, std::size_t n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (alphabet_size != 0 && total > std::numeric_limits<std::size_t>::max() / alphabet_size) {
            return std::numeric_limits<std::size_t>::max();
        }
        total *= alphabet_size;
    }
    return total;
}

} // namespace nonreg
