#include "zerosum/symmetry.hpp"

#include "zerosum/errors.hpp"
#include "zerosum/sequence.hpp"

#include <algorithm>
#include <numeric>

namespace zerosum {

namespace {

constexpr std::int64_t kMaxMatrixStream = std::int64_t{1} << 26;
constexpr std::int64_t kMaxRankPermCells = std::int64_t{1} << 25;

bool invertible_mod_p(std::vector<std::int64_t> m, int r, std::int64_t p) {
    // Gaussian elimination over F_p.
    for (int col = 0; col < r; ++col) {
        int pivot = -1;
        for (int row = col; row < r; ++row) {
            if (m[static_cast<std::size_t>(row * r + col)] % p != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return false;
        if (pivot != col)
            for (int j = 0; j < r; ++j)
                std::swap(m[static_cast<std::size_t>(pivot * r + j)], m[static_cast<std::size_t>(col * r + j)]);
        std::int64_t inv = 1, a = m[static_cast<std::size_t>(col * r + col)] % p;
        for (std::int64_t u = 1; u < p; ++u)
            if (a * u % p == 1) {
                inv = u;
                break;
            }
        for (int row = col + 1; row < r; ++row) {
            std::int64_t f = m[static_cast<std::size_t>(row * r + col)] % p * inv % p;
            if (f == 0) continue;
            for (int j = col; j < r; ++j) {
                auto& cell = m[static_cast<std::size_t>(row * r + j)];
                cell = ((cell - f * m[static_cast<std::size_t>(col * r + j)]) % p + p) % p;
            }
        }
    }
    return true;
}

std::int64_t inverse_mod_p(std::int64_t c, std::int64_t p) {
    for (std::int64_t u = 1; u < p; ++u)
        if (c * u % p == 1) return u;
    throw DomainError("no inverse of " + std::to_string(c) + " mod " + std::to_string(p));
}

std::int64_t ipow_checked(std::int64_t b, int e, std::int64_t cap) {
    std::int64_t r = 1;
    while (e-- > 0) {
        r *= b;
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

std::vector<CoordAutomorphism> perm_unit_automorphisms(const GroupSpec& g) {
    const int r = g.rank();
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        bool ok = true;
        for (int i = 0; i < r; ++i)
            if (g.factor(idx[static_cast<std::size_t>(i)]) != g.factor(i)) ok = false;
        if (ok) perms.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));

    std::vector<std::int64_t> units;
    for (std::int64_t u = 1; u < g.exponent(); ++u)
        if (std::gcd(u, g.exponent()) == 1) units.push_back(u);

    std::vector<CoordAutomorphism> out;
    out.reserve(perms.size() * units.size());
    for (const auto& perm : perms)
        for (auto u : units) out.push_back({perm, u});
    return out;
}

Element apply_coord_automorphism(const CoordAutomorphism& a, const Element& x, const GroupSpec& g) {
    Element out = g.zero();
    for (int i = 0; i < g.rank(); ++i) {
        std::int64_t n = g.factor(i);
        out.residues[static_cast<std::size_t>(i)] =
            (x.residues[static_cast<std::size_t>(a.perm[static_cast<std::size_t>(i)])] % n) * (a.unit % n) % n;
    }
    return out;
}

void for_each_invertible_matrix(std::int64_t p, int r,
                                const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    const int cells = r * r;
    if (ipow_checked(p, cells, kMaxMatrixStream) > kMaxMatrixStream)
        throw ResourceError("linear symmetry enumeration over C_" + std::to_string(p) + "^" + std::to_string(r) +
                            " exceeds the p^(r*r) <= 2^26 streaming bound");
    std::vector<std::int64_t> m(static_cast<std::size_t>(cells), 0);
    while (true) {
        if (invertible_mod_p(m, r, p)) fn(m);
        int i = 0;
        for (; i < cells; ++i) {
            if (++m[static_cast<std::size_t>(i)] < p) break;
            m[static_cast<std::size_t>(i)] = 0;
        }
        if (i == cells) break;
    }
}

Element apply_matrix(const std::vector<std::int64_t>& m, const Element& x, std::int64_t p) {
    const int r = static_cast<int>(x.residues.size());
    Element out;
    out.residues.assign(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j < r; ++j) acc += m[static_cast<std::size_t>(i * r + j)] * x.residues[static_cast<std::size_t>(j)];
        out.residues[static_cast<std::size_t>(i)] = acc % p;
    }
    return out;
}

std::vector<std::vector<std::int32_t>> automorphism_rank_perms(const GroupSpec& g) {
    const std::int64_t n = g.order();
    std::vector<std::vector<std::int32_t>> out;
    auto push_perm = [&](const std::function<Element(const Element&)>& phi) {
        std::vector<std::int32_t> perm(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i)
            perm[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(g.rank_of(phi(g.element_at(i))));
        out.push_back(std::move(perm));
    };

    if (auto p = g.elementary_abelian_prime()) {
        for_each_invertible_matrix(*p, g.rank(), [&](const std::vector<std::int64_t>& m) {
            if (static_cast<std::int64_t>(out.size() + 1) * n > kMaxRankPermCells)
                throw ResourceError("automorphism table for " + g.to_string() + " exceeds the rank-perm memory cap");
            push_perm([&](const Element& x) { return apply_matrix(m, x, *p); });
        });
        return out;
    }
    for (const auto& a : perm_unit_automorphisms(g)) {
        if (static_cast<std::int64_t>(out.size() + 1) * n > kMaxRankPermCells)
            throw ResourceError("automorphism table for " + g.to_string() + " exceeds the rank-perm memory cap");
        push_perm([&](const Element& x) { return apply_coord_automorphism(a, x, g); });
    }
    return out;
}

Sequence canonical_form(const Sequence& s) {
    const GroupSpec& g = s.group();
    if (s.empty()) return s;

    std::vector<Element> best = s.expanded();
    std::sort(best.begin(), best.end());
    auto consider = [&](const std::function<Element(const Element&)>& phi) {
        std::vector<Element> image;
        image.reserve(best.size());
        for (const auto& [elem, mult] : s.entries()) {
            Element h = phi(elem);
            for (int i = 0; i < mult; ++i) image.push_back(h);
        }
        std::sort(image.begin(), image.end());
        if (image < best) best = std::move(image);
    };

    if (auto p = g.elementary_abelian_prime()) {
        for_each_invertible_matrix(*p, g.rank(),
                                   [&](const std::vector<std::int64_t>& m) {
                                       consider([&](const Element& x) { return apply_matrix(m, x, *p); });
                                   });
    } else {
        for (const auto& a : perm_unit_automorphisms(g))
            consider([&](const Element& x) { return apply_coord_automorphism(a, x, g); });
    }

    Sequence out(g);
    for (const auto& e : best) out.push(e);
    return out;
}

SymmetryReps search_symmetry_reps(const GroupSpec& g) {
    SymmetryReps reps;
    const std::int64_t n = g.order();

    if (auto pe = g.elementary_abelian_prime()) {
        // Orbit structure of single elements and unordered pairs under GL(r, p):
        // nonzero elements form one orbit with minimum (0,...,0,1) = rank 1;
        // pairs are {0,0}, {0,v}, {v,cv} keyed by the ratio class {c, c^-1},
        // and one orbit of independent pairs with minimum {(0,..,0,1), (0,..,1,0)}.
        const std::int64_t p = *pe;
        reps.first = {0};
        reps.second.push_back({0, 1});
        if (n > 1) {
            reps.first.push_back(1);
            std::vector<std::int32_t> after_e = {1};
            for (std::int64_t c = 2; c < p; ++c)
                if (c <= inverse_mod_p(c, p)) after_e.push_back(static_cast<std::int32_t>(c));
            if (g.rank() >= 2) after_e.push_back(static_cast<std::int32_t>(p));  // rank of (0,...,0,1,0)
            std::sort(after_e.begin(), after_e.end());
            reps.second.push_back(std::move(after_e));
        }
        return reps;
    }

    const auto autos = perm_unit_automorphisms(g);
    std::vector<std::int32_t> image(static_cast<std::size_t>(n));
    std::vector<std::vector<std::int32_t>> perms;
    perms.reserve(autos.size());
    for (const auto& a : autos) {
        for (std::int64_t i = 0; i < n; ++i)
            image[static_cast<std::size_t>(i)] =
                static_cast<std::int32_t>(g.rank_of(apply_coord_automorphism(a, g.element_at(i), g)));
        perms.push_back(image);
    }

    for (std::int32_t e = 0; e < n; ++e) {
        bool minimal = true;
        for (const auto& perm : perms)
            if (perm[static_cast<std::size_t>(e)] < e) {
                minimal = false;
                break;
            }
        if (!minimal) continue;
        reps.first.push_back(e);
        std::vector<std::int32_t> seconds;
        for (std::int32_t f = e; f < n; ++f) {
            std::pair<std::int32_t, std::int32_t> mine{e, f};
            bool canonical = true;
            for (const auto& perm : perms) {
                auto a = perm[static_cast<std::size_t>(e)];
                auto b = perm[static_cast<std::size_t>(f)];
                if (a > b) std::swap(a, b);
                if (std::pair{a, b} < mine) {
                    canonical = false;
                    break;
                }
            }
            if (canonical) seconds.push_back(f);
        }
        reps.second.push_back(std::move(seconds));
    }
    return reps;
}

}  // namespace zerosum
