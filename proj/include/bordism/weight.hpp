#pragma once

#include <compare>
#include <string>
#include <vector>

namespace bordism {

/// A nonzero integer vector in Z^r naming a nontrivial irreducible character
/// of the torus (S^1)^r. The dual character is the negation.
struct Weight {
    std::vector<int> mu;

    Weight() = default;
    explicit Weight(std::vector<int> m);

    int rank() const { return static_cast<int>(mu.size()); }
    Weight dual() const;
    bool is_zero() const;

    auto operator<=>(const Weight& o) const = default;

    std::string str() const;            // "(1,-2)"
    static Weight parse(const std::string& s); // accepts "(1,-2)" or "1,-2"
};

} // namespace bordism
