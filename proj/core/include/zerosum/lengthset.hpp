#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zerosum {

/// A set of subsequence lengths, given as a union of integer ranges or as the
/// special "all nonempty lengths" set (the Davenport constant case).
/// Text syntax: "a..b" for ranges, "k" or "{k}" for singletons, comma for
/// unions ("1..4,9"), and "all" for every length >= 1.
class LengthSet {
  public:
    static LengthSet all_nonempty();
    static LengthSet range(int lo, int hi);
    static LengthSet singleton(int k);
    static LengthSet parse(std::string_view text);

    bool is_all_nonempty() const { return all_; }
    bool contains(int k) const;
    /// Largest member; only valid for finite sets.
    int max() const;
    int min() const;
    bool empty() const { return !all_ && ranges_.empty(); }
    /// True when some member is a positive multiple of m.
    bool contains_multiple_of(std::int64_t m) const;
    /// Members k with lo <= k <= hi, ascending.
    std::vector<int> members(int lo, int hi) const;

    std::string to_string() const;

    friend bool operator==(const LengthSet& a, const LengthSet& b) {
        return a.all_ == b.all_ && a.ranges_ == b.ranges_;
    }

  private:
    LengthSet() = default;
    void normalize();

    bool all_ = false;
    std::vector<std::pair<int, int>> ranges_;  // disjoint, sorted, inclusive
};

}  // namespace zerosum
