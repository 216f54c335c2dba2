#include "zerosum/sequence.hpp"

#include "zerosum/errors.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace zerosum {

int Sequence::length() const {
    int n = 0;
    for (const auto& [g, m] : entries_) n += m;
    return n;
}

int Sequence::multiplicity(const Element& g) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), g,
                               [](const auto& e, const Element& x) { return e.first < x; });
    if (it != entries_.end() && it->first == g) return it->second;
    return 0;
}

Element Sequence::sigma() const {
    Element acc = group_.zero();
    for (const auto& [g, m] : entries_) acc = group_.add(acc, group_.scalar_mul(m, g));
    return acc;
}

void Sequence::push(const Element& g, int multiplicity) {
    if (multiplicity <= 0) throw DomainError("multiplicity must be >= 1");
    group_.require_valid(g);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), g,
                               [](const auto& e, const Element& x) { return e.first < x; });
    if (it != entries_.end() && it->first == g)
        it->second += multiplicity;
    else
        entries_.insert(it, {g, multiplicity});
}

Sequence Sequence::concat(const Sequence& other) const {
    if (group_ != other.group_) throw DomainError("cannot concatenate sequences over different groups");
    Sequence out = *this;
    for (const auto& [g, m] : other.entries_) out.push(g, m);
    return out;
}

bool Sequence::contains(const Sequence& sub) const {
    if (group_ != sub.group_) return false;
    for (const auto& [g, m] : sub.entries_)
        if (multiplicity(g) < m) return false;
    return true;
}

Sequence Sequence::remove(const Sequence& sub) const {
    if (group_ != sub.group_) throw DomainError("cannot remove a sequence over a different group");
    Sequence out(group_);
    auto it = sub.entries_.begin();
    for (const auto& [g, m] : entries_) {
        int taken = 0;
        if (it != sub.entries_.end() && it->first == g) {
            taken = it->second;
            ++it;
        }
        if (taken > m)
            throw NotContainedError("sequence does not contain " + std::to_string(taken) + " copies of (" +
                                    g.to_string() + ")");
        if (m - taken > 0) out.push(g, m - taken);
    }
    if (it != sub.entries_.end())
        throw NotContainedError("sequence does not contain (" + it->first.to_string() + ")");
    return out;
}

std::vector<Element> Sequence::expanded() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (const auto& [g, m] : entries_)
        for (int i = 0; i < m; ++i) out.push_back(g);
    return out;
}

std::vector<std::int64_t> Sequence::expanded_ranks() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (const auto& [g, m] : entries_) {
        std::int64_t r = group_.rank_of(g);
        for (int i = 0; i < m; ++i) out.push_back(r);
    }
    return out;
}

bool operator<(const Sequence& a, const Sequence& b) { return a.expanded() < b.expanded(); }

std::string Sequence::to_string() const {
    if (entries_.empty()) return "(empty)";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, m] : entries_) {
        if (!first) os << ' ';
        first = false;
        os << '(' << g.to_string() << ')';
        if (m > 1) os << '^' << m;
    }
    return os.str();
}

std::string Sequence::serialize() const {
    std::ostringstream os;
    os << "group " << group_.to_string() << '\n';
    for (const auto& [g, m] : entries_) {
        os << g.to_string();
        if (m > 1) os << " x" << m;
        os << '\n';
    }
    return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

Sequence Sequence::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_stream(in);
}

Sequence Sequence::parse_stream(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::string_view body;

    // header
    GroupSpec group({2});
    bool have_group = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        if (s.substr(0, 6) != "group ")
            throw ParseError("expected 'group <spec>' header, got '" + std::string(s) + "'", line_no);
        try {
            group = GroupSpec::parse(trim(s.substr(6)));
        } catch (const Error& e) {
            throw ParseError(e.what(), line_no);
        }
        have_group = true;
        break;
    }
    if (!have_group) throw ParseError("missing 'group <spec>' header", line_no ? line_no : 1);

    Sequence seq(group);
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        std::string_view elem_part = s;
        int mult = 1;
        auto space = s.find_first_of(" \t");
        if (space != std::string_view::npos) {
            elem_part = trim(s.substr(0, space));
            std::string_view mult_part = trim(s.substr(space + 1));
            if (mult_part.empty() || mult_part.front() != 'x')
                throw ParseError("expected multiplicity 'xM', got '" + std::string(mult_part) + "'", line_no);
            mult_part.remove_prefix(1);
            long v = 0;
            if (mult_part.empty()) throw ParseError("empty multiplicity", line_no);
            for (char c : mult_part) {
                if (c < '0' || c > '9') throw ParseError("bad multiplicity 'x" + std::string(mult_part) + "'", line_no);
                v = v * 10 + (c - '0');
                if (v > 1'000'000) throw ParseError("multiplicity too large", line_no);
            }
            if (v == 0) throw ParseError("multiplicity must be >= 1", line_no);
            mult = static_cast<int>(v);
        }
        try {
            seq.push(group.parse_element(elem_part), mult);
        } catch (const Error& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return seq;
}

}  // namespace zerosum
