#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zerosum {

/// An element of a finite abelian group, one reduced residue per invariant factor.
/// Residues are kept reduced at all times, so tuple equality is group equality.
struct Element {
    std::vector<std::int64_t> residues;

    friend bool operator==(const Element& a, const Element& b) { return a.residues == b.residues; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
    // Lexicographic on residue tuples; this is the fixed total order used everywhere.
    friend bool operator<(const Element& a, const Element& b) { return a.residues < b.residues; }

    std::string to_string() const;  // "1,0,2"
};

/// A finite abelian group presented by its invariant factor chain n_1 | n_2 | ... | n_r.
class GroupSpec {
  public:
    explicit GroupSpec(std::vector<std::int64_t> invariant_factors);

    /// Accepts a comma list of invariant factors ("9,9,9") or the homocyclic
    /// shorthand "p^n^r" (e.g. "3^2^3" for C_9^3).
    static GroupSpec parse(std::string_view text);

    int rank() const { return static_cast<int>(factors_.size()); }
    std::int64_t exponent() const { return factors_.back(); }
    std::int64_t order() const { return order_; }
    std::int64_t factor(int i) const { return factors_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& invariant_factors() const { return factors_; }

    /// 1 + sum(n_i - 1); equals the Davenport constant for p-groups.
    std::int64_t davenport_star() const;

    std::string to_string() const;  // canonical comma list

    bool valid(const Element& g) const;
    void require_valid(const Element& g) const;  // throws InvalidElementError

    Element zero() const;
    Element add(const Element& g, const Element& h) const;
    Element negate(const Element& g) const;
    Element scalar_mul(std::int64_t c, const Element& g) const;
    /// Least m >= 1 with m*g = 0 (lcm of coordinate orders).
    std::int64_t order_of(const Element& g) const;

    /// Mixed-radix rank; rank order coincides with the lexicographic element order.
    std::int64_t rank_of(const Element& g) const;
    Element element_at(std::int64_t rank) const;

    Element parse_element(std::string_view text) const;  // "1,0,2"

    /// The unique prime p when every invariant factor is a power of p.
    std::optional<std::int64_t> p_group_prime() const;
    /// (p, n) when the group is C_{p^n}^r.
    std::optional<std::pair<std::int64_t, int>> homocyclic_prime_power() const;
    /// p when the group is C_p^r.
    std::optional<std::int64_t> elementary_abelian_prime() const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.factors_ == b.factors_; }
    friend bool operator!=(const GroupSpec& a, const GroupSpec& b) { return !(a == b); }

  private:
    std::vector<std::int64_t> factors_;
    std::vector<std::int64_t> strides_;
    std::int64_t order_;
};

/// Image of g under pi: g -> p^{n-1} g, expressed in C_p^r.
/// Requires a homocyclic group C_{p^n}^r with n >= 2.
Element projection_hom(const Element& g, const GroupSpec& parent);
/// The codomain C_p^r of projection_hom.
GroupSpec projected_group(const GroupSpec& parent);

/// The fixed identification ker pi ~= C_{p^{n-1}}^r: divide every coordinate by p.
Element kernel_iso(const Element& g, const GroupSpec& parent);
GroupSpec kernel_group(const GroupSpec& parent);
/// Inverse of kernel_iso: multiply every coordinate by p.
Element kernel_iso_inv(const Element& h, const GroupSpec& parent);

bool is_prime(std::int64_t n);

}  // namespace zerosum
