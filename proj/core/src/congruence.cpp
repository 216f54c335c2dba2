#include "zerosum/congruence.hpp"

#include "zerosum/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace zerosum {

namespace {

void require_p_group(const Sequence& s, std::int64_t p) {
    auto gp = s.group().p_group_prime();
    if (!gp || *gp != p)
        throw DomainError("group " + s.group().to_string() + " is not a " + std::to_string(p) + "-group");
}

}  // namespace

CongruenceReport olson_alternating(const Sequence& s, std::int64_t p, const DpBudget& budget) {
    require_p_group(s, p);
    const auto counts = count_mod_p(s, p, budget);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        if (k % 2 == 0)
            acc += counts[k];
        else
            acc -= counts[k];
    }
    const int residue = static_cast<int>((acc % p + p) % p);
    std::ostringstream inputs;
    inputs << "group=" << s.group().to_string() << " len=" << s.length();
    return CongruenceReport{CongruenceStatement::OlsonAlternating,
                            inputs.str(),
                            p,
                            residue,
                            residue == 0,
                            s.length() >= s.group().davenport_star()};
}

CongruenceReport corollary_pn(const Sequence& s, std::int64_t p, std::int64_t q, const DpBudget& budget) {
    require_p_group(s, p);
    std::int64_t qq = q;
    while (qq > 1 && qq % p == 0) qq /= p;
    if (qq != 1 || q < p) throw DomainError("q = " + std::to_string(q) + " is not a positive power of p");
    const auto counts = count_mod_p(s, p, budget);
    std::int64_t acc = 0;
    for (std::int64_t j = 0; j * q <= s.length(); ++j) {
        const auto c = counts[static_cast<std::size_t>(j * q)];
        if (j % 2 == 0)
            acc += c;
        else
            acc -= c;
    }
    const int residue = static_cast<int>((acc % p + p) % p);
    std::ostringstream inputs;
    inputs << "group=" << s.group().to_string() << " len=" << s.length() << " q=" << q;
    return CongruenceReport{CongruenceStatement::CorollaryPrimePower,
                            inputs.str(),
                            p,
                            residue,
                            residue == 0,
                            s.length() >= s.group().davenport_star() + q - 1};
}

namespace {

// Enumerates distinct sub-multisets T of size m together with the number of
// index-subsets of S realizing T, i.e. prod_i C(mult_i, t_i).
void for_each_window(const Sequence& s, int m, const std::function<void(const Sequence&, const BigInt&)>& fn) {
    const auto& entries = s.entries();
    Sequence window(s.group());
    BigInt weight = 1;

    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int remaining) {
        if (remaining == 0) {
            fn(window, weight);
            return;
        }
        if (idx == entries.size()) return;
        int avail = 0;
        for (std::size_t i = idx; i < entries.size(); ++i) avail += entries[i].second;
        if (avail < remaining) return;

        const auto& [elem, mult] = entries[idx];
        for (int take = 0; take <= std::min(mult, remaining); ++take) {
            BigInt saved = weight;
            weight *= binomial(mult, take);
            if (take > 0) window.push(elem, take);
            rec(idx + 1, remaining - take);
            if (take > 0) {
                auto removed = Sequence(s.group());
                removed.push(elem, take);
                window = window.remove(removed);
            }
            weight = saved;
        }
    };
    rec(0, m);
}

}  // namespace

WindowReport window_identity_check(const Sequence& s, int j, int m, const DpBudget& budget) {
    if (j < 0 || j > m || m > s.length())
        throw DomainError("window identity needs 0 <= j <= m <= |S|");
    BigInt lhs = 0;
    for_each_window(s, m, [&](const Sequence& window, const BigInt& weight) {
        lhs += weight * count_table(window, budget).at(j);
    });
    const BigInt rhs = binomial(s.length() - j, m - j) * count_table(s, budget).at(j);
    return WindowReport{j, m, lhs, rhs, lhs == rhs};
}

int lucas_binomial(std::int64_t a, std::int64_t b, std::int64_t p) {
    if (!is_prime(p)) throw DomainError("Lucas reduction needs a prime modulus");
    if (a < 0 || b < 0) throw DomainError("Lucas reduction needs a, b >= 0");
    if (b > a) return 0;
    std::int64_t result = 1;
    while (a > 0 || b > 0) {
        const std::int64_t ad = a % p, bd = b % p;
        if (bd > ad) return 0;
        const std::int64_t digit = mod_reduce(binomial(ad, bd), p);
        result = result * digit % p;
        a /= p;
        b /= p;
    }
    return static_cast<int>(result);
}

namespace {

BigInt exact_det(std::vector<std::vector<BigInt>> m) {
    // Fraction-free Bareiss elimination.
    const int n = static_cast<int>(m.size());
    BigInt prev = 1;
    int sign = 1;
    for (int col = 0; col < n - 1; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
            sign = -sign;
        }
        for (int row = col + 1; row < n; ++row) {
            for (int j = col + 1; j < n; ++j) {
                auto& cell = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
                cell = (m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)] * cell -
                        m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] *
                            m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)]) /
                       prev;
            }
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
        }
        prev = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    }
    return sign * m[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n) - 1];
}

std::vector<std::int64_t> matrix_columns_heads(std::int64_t a, std::int64_t k) {
    // column heads a+k, 2k-1, 2k-2, ..., k
    std::vector<std::int64_t> heads;
    heads.push_back(a + k);
    for (std::int64_t c = 2 * k - 1; c >= k; --c) heads.push_back(c);
    return heads;
}

int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int row = rank; row < rows; ++row)
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] % p != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        std::int64_t lead = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)] % p;
        std::int64_t inv = 1;
        for (std::int64_t u = 1; u < p; ++u)
            if ((lead % p + p) % p * u % p == 1) {
                inv = u;
                break;
            }
        for (int row = rank + 1; row < rows; ++row) {
            std::int64_t f = ((m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] % p + p) % p) * inv % p;
            if (f == 0) continue;
            for (int j = col; j < cols; ++j) {
                auto& cell = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
                cell = ((cell - f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

DetIdentityReport lemma6_matrix_det(std::int64_t a, std::int64_t k) {
    if (a < 1 || k < 1) throw DomainError("determinant identity needs a, k >= 1");
    const auto heads = matrix_columns_heads(a, k);
    std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(k) + 1,
                                       std::vector<BigInt>(static_cast<std::size_t>(k) + 1));
    for (std::size_t col = 0; col < heads.size(); ++col)
        for (std::int64_t row = 0; row <= k; ++row)
            m[static_cast<std::size_t>(row)][col] = binomial(heads[col], row);

    const BigInt det = exact_det(std::move(m));
    const int sign = (k * (k + 1) / 2) % 2 == 0 ? 1 : -1;
    const BigInt formula = sign * binomial(a, k);
    return DetIdentityReport{det, formula, det == formula};
}

RankArgumentReport theorem3_rank_argument(std::int64_t p, std::int64_t n, std::int64_t r, std::int64_t k) {
    if (!is_prime(p)) throw DomainError("rank argument needs p prime");
    if (!(3 <= r && r < p)) throw DomainError("rank argument needs 3 <= r < p");
    if (!(2 <= k && k <= p - r + 1)) throw DomainError("rank argument needs 2 <= k <= p - r + 1");
    if (n < 1) throw DomainError("rank argument needs n >= 1");

    std::int64_t q = 1;
    for (std::int64_t i = 0; i < n; ++i) q *= p;
    const std::int64_t seq_len = r * q - r + 1 + k;  // |S| in the contradiction step

    // b_i = C(|S|, i); A columns C(2k-1, .), ..., C(k, .)
    std::vector<std::vector<std::int64_t>> coeff(static_cast<std::size_t>(k) + 1);
    std::vector<std::vector<std::int64_t>> augmented(static_cast<std::size_t>(k) + 1);
    for (std::int64_t row = 0; row <= k; ++row) {
        auto& arow = augmented[static_cast<std::size_t>(row)];
        auto& crow = coeff[static_cast<std::size_t>(row)];
        arow.push_back(lucas_binomial(seq_len, row, p));
        for (std::int64_t c = 2 * k - 1; c >= k; --c) {
            const int v = lucas_binomial(c, row, p);
            arow.push_back(v);
            crow.push_back(v);
        }
    }

    const int rank_a = rank_mod_p(coeff, p);
    const int rank_aug = rank_mod_p(augmented, p);
    const int lucas_res = lucas_binomial(p - r + 1, k, p);
    const bool certified = rank_a <= k && rank_aug == k + 1;
    return RankArgumentReport{p, n, r, k, rank_a, rank_aug, lucas_res, certified};
}

}  // namespace zerosum
