#include "zerosum/lengthset.hpp"

#include "zerosum/errors.hpp"

#include <algorithm>
#include <sstream>

namespace zerosum {

namespace {

int parse_length(std::string_view s) {
    if (s.empty()) throw ParseError("empty length in length set");
    long v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("bad length '" + std::string(s) + "' in length set");
        v = v * 10 + (c - '0');
        if (v > 1'000'000) throw ParseError("length too large in length set");
    }
    return static_cast<int>(v);
}

}  // namespace

LengthSet LengthSet::all_nonempty() {
    LengthSet s;
    s.all_ = true;
    return s;
}

LengthSet LengthSet::range(int lo, int hi) {
    if (lo < 1 || hi < lo) throw DomainError("bad length range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    LengthSet s;
    s.ranges_.emplace_back(lo, hi);
    return s;
}

LengthSet LengthSet::singleton(int k) { return range(k, k); }

LengthSet LengthSet::parse(std::string_view text) {
    if (text == "all") return all_nonempty();
    LengthSet s;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i != text.size() && text[i] != ',') continue;
        std::string_view part = text.substr(start, i - start);
        start = i + 1;
        if (part.empty()) throw ParseError("empty part in length set '" + std::string(text) + "'");
        if (part.front() == '{' && part.back() == '}') part = part.substr(1, part.size() - 2);
        auto dots = part.find("..");
        if (dots == std::string_view::npos) {
            int k = parse_length(part);
            if (k < 1) throw ParseError("lengths must be >= 1");
            s.ranges_.emplace_back(k, k);
        } else {
            int lo = parse_length(part.substr(0, dots));
            int hi = parse_length(part.substr(dots + 2));
            if (lo < 1 || hi < lo) throw ParseError("bad range '" + std::string(part) + "' in length set");
            s.ranges_.emplace_back(lo, hi);
        }
    }
    if (s.ranges_.empty()) throw ParseError("empty length set");
    s.normalize();
    return s;
}

void LengthSet::normalize() {
    std::sort(ranges_.begin(), ranges_.end());
    std::vector<std::pair<int, int>> merged;
    for (auto [lo, hi] : ranges_) {
        if (!merged.empty() && lo <= merged.back().second + 1)
            merged.back().second = std::max(merged.back().second, hi);
        else
            merged.emplace_back(lo, hi);
    }
    ranges_ = std::move(merged);
}

bool LengthSet::contains(int k) const {
    if (k < 1) return false;
    if (all_) return true;
    for (auto [lo, hi] : ranges_) {
        if (k < lo) return false;
        if (k <= hi) return true;
    }
    return false;
}

int LengthSet::max() const {
    if (all_ || ranges_.empty()) throw DomainError("length set has no finite maximum");
    return ranges_.back().second;
}

int LengthSet::min() const {
    if (all_) return 1;
    if (ranges_.empty()) throw DomainError("empty length set has no minimum");
    return ranges_.front().first;
}

bool LengthSet::contains_multiple_of(std::int64_t m) const {
    if (all_) return true;
    for (auto [lo, hi] : ranges_) {
        std::int64_t first = ((lo + m - 1) / m) * m;
        if (first <= hi) return true;
    }
    return false;
}

std::vector<int> LengthSet::members(int lo, int hi) const {
    std::vector<int> out;
    for (int k = std::max(lo, 1); k <= hi; ++k)
        if (contains(k)) out.push_back(k);
    return out;
}

std::string LengthSet::to_string() const {
    if (all_) return "all";
    std::ostringstream os;
    for (std::size_t i = 0; i < ranges_.size(); ++i) {
        if (i) os << ',';
        if (ranges_[i].first == ranges_[i].second)
            os << ranges_[i].first;
        else
            os << ranges_[i].first << ".." << ranges_[i].second;
    }
    return os.str();
}

}  // namespace zerosum
