#include "zerosum/group.hpp"

#include "zerosum/errors.hpp"

#include <numeric>
#include <sstream>

namespace zerosum {

namespace {

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 40;

std::int64_t parse_int(std::string_view s, const char* what) {
    if (s.empty()) throw ParseError(std::string("empty ") + what);
    std::int64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError(std::string("bad ") + what + ": '" + std::string(s) + "'");
        v = v * 10 + (c - '0');
        if (v > kMaxOrder) throw ParseError(std::string(what) + " too large: '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) {
        r *= b;
        if (r > kMaxOrder) throw DomainError("group order exceeds supported limit");
    }
    return r;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string Element::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (i) os << ',';
        os << residues[i];
    }
    return os.str();
}

GroupSpec::GroupSpec(std::vector<std::int64_t> invariant_factors) : factors_(std::move(invariant_factors)) {
    if (factors_.empty()) throw DomainError("group needs at least one invariant factor");
    order_ = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw DomainError("invariant factors must be >= 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw DomainError("invariant factors must form a divisibility chain n_1 | n_2 | ... | n_r");
        order_ *= factors_[i];
        if (order_ > kMaxOrder) throw DomainError("group order exceeds supported limit");
    }
    strides_.assign(factors_.size(), 1);
    for (int i = static_cast<int>(factors_.size()) - 2; i >= 0; --i)
        strides_[static_cast<std::size_t>(i)] =
            strides_[static_cast<std::size_t>(i) + 1] * factors_[static_cast<std::size_t>(i) + 1];
}

GroupSpec GroupSpec::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty group spec");
    if (text.find('^') != std::string_view::npos) {
        auto parts = split(text, '^');
        if (parts.size() != 3) throw ParseError("group shorthand must be p^n^r, got '" + std::string(text) + "'");
        std::int64_t p = parse_int(parts[0], "prime");
        int n = static_cast<int>(parse_int(parts[1], "exponent"));
        int r = static_cast<int>(parse_int(parts[2], "rank"));
        if (!is_prime(p)) throw ParseError("group shorthand p^n^r needs p prime, got p=" + std::to_string(p));
        if (n < 1 || r < 1) throw ParseError("group shorthand p^n^r needs n,r >= 1");
        return GroupSpec(std::vector<std::int64_t>(static_cast<std::size_t>(r), ipow(p, n)));
    }
    std::vector<std::int64_t> factors;
    for (auto part : split(text, ',')) factors.push_back(parse_int(part, "invariant factor"));
    return GroupSpec(std::move(factors));
}

std::int64_t GroupSpec::davenport_star() const {
    std::int64_t d = 1;
    for (auto n : factors_) d += n - 1;
    return d;
}

std::string GroupSpec::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << ',';
        os << factors_[i];
    }
    return os.str();
}

bool GroupSpec::valid(const Element& g) const {
    if (g.residues.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (g.residues[i] < 0 || g.residues[i] >= factors_[i]) return false;
    return true;
}

void GroupSpec::require_valid(const Element& g) const {
    if (g.residues.size() != factors_.size())
        throw InvalidElementError("element has " + std::to_string(g.residues.size()) + " coordinates, group " +
                                  to_string() + " has rank " + std::to_string(rank()));
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (g.residues[i] < 0 || g.residues[i] >= factors_[i])
            throw InvalidElementError("residue " + std::to_string(g.residues[i]) + " out of range for factor " +
                                      std::to_string(factors_[i]));
}

Element GroupSpec::zero() const { return Element{std::vector<std::int64_t>(factors_.size(), 0)}; }

Element GroupSpec::add(const Element& g, const Element& h) const {
    require_valid(g);
    require_valid(h);
    Element out = g;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        out.residues[i] += h.residues[i];
        if (out.residues[i] >= factors_[i]) out.residues[i] -= factors_[i];
    }
    return out;
}

Element GroupSpec::negate(const Element& g) const {
    require_valid(g);
    Element out = g;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (out.residues[i] != 0) out.residues[i] = factors_[i] - out.residues[i];
    return out;
}

Element GroupSpec::scalar_mul(std::int64_t c, const Element& g) const {
    require_valid(g);
    Element out = g;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::int64_t m = (c % factors_[i] + factors_[i]) % factors_[i];
        out.residues[i] = (g.residues[i] * m) % factors_[i];
    }
    return out;
}

std::int64_t GroupSpec::order_of(const Element& g) const {
    require_valid(g);
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::int64_t coord_order = factors_[i] / std::gcd(g.residues[i], factors_[i]);
        ord = std::lcm(ord, coord_order);
    }
    return ord;
}

std::int64_t GroupSpec::rank_of(const Element& g) const {
    require_valid(g);
    std::int64_t r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) r += g.residues[i] * strides_[i];
    return r;
}

Element GroupSpec::element_at(std::int64_t rank) const {
    if (rank < 0 || rank >= order_) throw DomainError("element rank out of range");
    Element out = zero();
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        out.residues[i] = rank / strides_[i];
        rank %= strides_[i];
    }
    return out;
}

Element GroupSpec::parse_element(std::string_view text) const {
    auto parts = split(text, ',');
    if (parts.size() != factors_.size())
        throw ParseError("element '" + std::string(text) + "' has " + std::to_string(parts.size()) +
                         " coordinates, expected " + std::to_string(factors_.size()));
    Element out;
    out.residues.reserve(parts.size());
    for (auto part : parts) out.residues.push_back(parse_int(part, "residue"));
    require_valid(out);
    return out;
}

std::optional<std::int64_t> GroupSpec::p_group_prime() const {
    std::int64_t m = factors_.front();
    std::int64_t p = 0;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = m;
    for (auto n : factors_) {
        while (n % p == 0) n /= p;
        if (n != 1) return std::nullopt;
    }
    return p;
}

std::optional<std::pair<std::int64_t, int>> GroupSpec::homocyclic_prime_power() const {
    for (auto n : factors_)
        if (n != factors_.front()) return std::nullopt;
    auto p = p_group_prime();
    if (!p) return std::nullopt;
    int n = 0;
    for (std::int64_t m = factors_.front(); m > 1; m /= *p) ++n;
    return std::make_pair(*p, n);
}

std::optional<std::int64_t> GroupSpec::elementary_abelian_prime() const {
    auto hp = homocyclic_prime_power();
    if (hp && hp->second == 1) return hp->first;
    return std::nullopt;
}

GroupSpec projected_group(const GroupSpec& parent) {
    auto hp = parent.homocyclic_prime_power();
    if (!hp || hp->second < 2)
        throw DomainError("projection requires a homocyclic group C_{p^n}^r with n >= 2, got " + parent.to_string());
    return GroupSpec(std::vector<std::int64_t>(static_cast<std::size_t>(parent.rank()), hp->first));
}

Element projection_hom(const Element& g, const GroupSpec& parent) {
    auto hp = parent.homocyclic_prime_power();
    if (!hp || hp->second < 2)
        throw DomainError("projection requires a homocyclic group C_{p^n}^r with n >= 2, got " + parent.to_string());
    parent.require_valid(g);
    Element out = g;
    for (auto& x : out.residues) x %= hp->first;
    return out;
}

GroupSpec kernel_group(const GroupSpec& parent) {
    auto hp = parent.homocyclic_prime_power();
    if (!hp || hp->second < 2)
        throw DomainError("kernel identification requires C_{p^n}^r with n >= 2, got " + parent.to_string());
    return GroupSpec(
        std::vector<std::int64_t>(static_cast<std::size_t>(parent.rank()), parent.exponent() / hp->first));
}

Element kernel_iso(const Element& g, const GroupSpec& parent) {
    auto hp = parent.homocyclic_prime_power();
    if (!hp || hp->second < 2)
        throw DomainError("kernel identification requires C_{p^n}^r with n >= 2, got " + parent.to_string());
    parent.require_valid(g);
    Element out = g;
    for (auto& x : out.residues) {
        if (x % hp->first != 0)
            throw NotInKernelError("element " + g.to_string() + " is not in ker pi over " + parent.to_string());
        x /= hp->first;
    }
    return out;
}

Element kernel_iso_inv(const Element& h, const GroupSpec& parent) {
    auto hp = parent.homocyclic_prime_power();
    if (!hp || hp->second < 2)
        throw DomainError("kernel identification requires C_{p^n}^r with n >= 2, got " + parent.to_string());
    kernel_group(parent).require_valid(h);
    Element out = h;
    for (auto& x : out.residues) x *= hp->first;
    return out;
}

}  // namespace zerosum
