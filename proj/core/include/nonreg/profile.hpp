#pragma once

#include <cstddef>
#include <map>
#include <string>

namespace nonreg {

/// Growth curve of a measure: word length n -> maximum measure over all
/// words of length n (non-members contribute 0).
struct Profile {
    std::map<std::size_t, std::size_t> entries;
    std::size_t exhaustive_up_to = 0;

    std::size_t at(std::size_t n) const;
    bool operator==(const Profile&) const = default;
};

/// "n,value" header then one row per n, ascending.
std::string to_csv(const Profile& p);

/// Number of words of length exactly n over `alphabet_size` letters,
/// saturating at SIZE_MAX.
std::size_t word_count(std::size_t alphabet_size, std::size_t n);

/// Default per-length enumeration guard (words per length).
inline constexpr std::size_t default_enumeration_cap = std::size_t{1} << 20;

} // namespace nonreg
