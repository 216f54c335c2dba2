#pragma once

#include "zerosum/group.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zerosum {

/// A finite multiset of group elements (the free-abelian-monoid sequence object).
/// Entries are kept sorted by the lexicographic element order with aggregated
/// multiplicities, so equal multisets compare equal.
class Sequence {
  public:
    explicit Sequence(GroupSpec group) : group_(std::move(group)) {}

    const GroupSpec& group() const { return group_; }
    const std::vector<std::pair<Element, int>>& entries() const { return entries_; }

    int length() const;
    bool empty() const { return entries_.empty(); }
    int multiplicity(const Element& g) const;
    int distinct_count() const { return static_cast<int>(entries_.size()); }

    Element sigma() const;

    void push(const Element& g, int multiplicity = 1);
    Sequence concat(const Sequence& other) const;

    bool contains(const Sequence& sub) const;
    /// Multiset difference; throws NotContainedError when sub is not contained.
    Sequence remove(const Sequence& sub) const;

    /// Multiplicity-expanded element list in the fixed total order.
    std::vector<Element> expanded() const;
    std::vector<std::int64_t> expanded_ranks() const;

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.group_ == b.group_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Sequence& a, const Sequence& b) { return !(a == b); }
    friend bool operator<(const Sequence& a, const Sequence& b);  // lex on expanded form

    /// Multiset text form for logs: "(1,0,0)^2 (0,1,0)".
    std::string to_string() const;

    /// Sequence file body: "group <spec>" header then one "<element> [xM]" line
    /// per distinct element; '#' lines are comments.
    std::string serialize() const;
    static Sequence parse(std::string_view text);
    static Sequence parse_stream(std::istream& in);

  private:
    GroupSpec group_;
    std::vector<std::pair<Element, int>> entries_;
};

/// Lexicographically least image of S under the group's symmetry action:
/// the full invertible linear action for elementary abelian C_p^r, and
/// coordinate permutations (among equal invariant factors) combined with
/// global unit scalings otherwise. Idempotent.
Sequence canonical_form(const Sequence& s);

}  // namespace zerosum
