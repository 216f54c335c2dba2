#include "zerosum/construct.hpp"

#include "zerosum/count.hpp"
#include "zerosum/errors.hpp"

#include <algorithm>

namespace zerosum {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

Element basis_vector(const GroupSpec& g, int i) {
    Element e = g.zero();
    e.residues[static_cast<std::size_t>(i)] = 1;
    return e;
}

Element all_ones(const GroupSpec& g) {
    Element e = g.zero();
    for (auto& x : e.residues) x = 1;
    return e;
}

void require_spectrum(const Sequence& s, const std::vector<int>& expected, const char* what) {
    if (zero_sum_length_spectrum(s) != expected)
        throw InvariantViolation(std::string(what) + " failed its certificate: unexpected zero-sum spectrum");
}

}  // namespace

Sequence construct_thm2_lower(std::int64_t p, int r) {
    if (!is_prime(p)) throw DomainError("construct_thm2_lower needs p prime");
    if (r < 2) throw DomainError("construct_thm2_lower needs rank r >= 2");
    GroupSpec g(std::vector<std::int64_t>(static_cast<std::size_t>(r), p));
    Sequence s(g);
    for (int i = 0; i < r; ++i) s.push(basis_vector(g, i), static_cast<int>(p - 1));
    s.push(all_ones(g));

    const int len = static_cast<int>(r * p - r + 1);
    if (s.length() != len) throw InvariantViolation("construct_thm2_lower emitted the wrong length");
    require_spectrum(s, {len}, "construct_thm2_lower");  // minimal zero-sum
    return s;
}

Sequence construct_thm3_lower(std::int64_t p, int n, int r, std::int64_t k) {
    if (!is_prime(p)) throw DomainError("construct_thm3_lower needs p prime");
    if (!(3 <= r && r < p)) throw DomainError("construct_thm3_lower needs 3 <= r < p");
    if (!(2 <= k && k <= p - r + 1)) throw DomainError("construct_thm3_lower needs 2 <= k <= p - r + 1");
    if (n < 1) throw DomainError("construct_thm3_lower needs n >= 1");

    const std::int64_t q = ipow(p, n);
    const std::int64_t ones_mult = (k + r - 2) / (r - 1);  // ceil(k / (r-1))
    GroupSpec g(std::vector<std::int64_t>(static_cast<std::size_t>(r), q));
    Sequence s(g);
    for (int i = 0; i < r; ++i) s.push(basis_vector(g, i), static_cast<int>(q - 1));
    s.push(all_ones(g), static_cast<int>(ones_mult));

    const std::int64_t davenport = r * q - r + 1;
    if (s.length() != davenport + ones_mult - 1)
        throw InvariantViolation("construct_thm3_lower emitted the wrong length");
    const auto spectrum = zero_sum_length_spectrum(s);
    const std::int64_t shortest = r * q - (r - 1) * ones_mult;
    if (spectrum.empty() || spectrum.front() != shortest || shortest <= davenport - k)
        throw InvariantViolation("construct_thm3_lower failed its certificate: shortest zero-sum is off");
    return s;
}

namespace {

Sequence thm6_base(std::int64_t p, int n, bool with_closing_entry, const char* what) {
    if (!is_prime(p) || p == 2) throw DomainError(std::string(what) + " needs an odd prime p");
    if (n < 1) throw DomainError(std::string(what) + " needs n >= 1");
    const std::int64_t q = ipow(p, n);
    GroupSpec g({q, q, q});
    Sequence s(g);
    s.push(g.parse_element("1,0,0"), static_cast<int>(q - 1));
    s.push(g.parse_element("0,1,0"), static_cast<int>(q - 1));
    s.push(g.parse_element("0,0,1"), static_cast<int>(q - 1));
    s.push(Element{{1, 1, q - 1}}, static_cast<int>(q - 1));  // (1,1,-1)
    if (with_closing_entry) s.push(g.parse_element("1,1,0"));
    return s;
}

}  // namespace

Sequence construct_thm6_lower(std::int64_t p, int n) {
    Sequence s = thm6_base(p, n, true, "construct_thm6_lower");
    const std::int64_t q = ipow(p, n);
    if (s.length() != 4 * q - 3) throw InvariantViolation("construct_thm6_lower emitted the wrong length");
    require_spectrum(s, {static_cast<int>(2 * q - 1), static_cast<int>(2 * q)}, "construct_thm6_lower");
    return s;
}

Sequence construct_cor5_lower(std::int64_t p, int n) {
    Sequence s = thm6_base(p, n, false, "construct_cor5_lower");
    const std::int64_t q = ipow(p, n);
    if (s.length() != 4 * q - 4) throw InvariantViolation("construct_cor5_lower emitted the wrong length");
    require_spectrum(s, {static_cast<int>(2 * q)}, "construct_cor5_lower");
    return s;
}

Sequence construct_egz_lower(const GroupSpec& g, std::int64_t k, const SearchOptions& options) {
    if (k < 1) throw DomainError("construct_egz_lower needs k >= 1");

    Sequence zero_sum_free(g);
    if (g.p_group_prime()) {
        // prod e_i^[n_i - 1]: zero-sum-free of length D*(G) - 1 = D(G) - 1 for p-groups
        for (int i = 0; i < g.rank(); ++i)
            zero_sum_free.push(basis_vector(g, i), static_cast<int>(g.factor(i) - 1));
    } else {
        SearchRun run = max_avoiding(g, LengthSet::all_nonempty(), options);
        if (run.certificate.status != CertStatus::Exhaustive)
            throw ResourceError("no maximal zero-sum-free sequence available under the search budget for " +
                                g.to_string());
        zero_sum_free = run.certificate.witness;
    }

    const std::int64_t target = k * g.exponent();
    Sequence s(g);
    s.push(g.zero(), static_cast<int>(target - 1));
    s = s.concat(zero_sum_free);

    if (!zero_sum_length_spectrum(zero_sum_free).empty())
        throw InvariantViolation("construct_egz_lower: W is not zero-sum-free");
    const auto spectrum = zero_sum_length_spectrum(s);
    if (std::binary_search(spectrum.begin(), spectrum.end(), static_cast<int>(target)))
        throw InvariantViolation("construct_egz_lower failed its certificate: target length is attained");
    return s;
}

}  // namespace zerosum
