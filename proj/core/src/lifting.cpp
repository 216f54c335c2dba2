#include "zerosum/lifting.hpp"

#include "zerosum/errors.hpp"

#include <algorithm>

namespace zerosum {

namespace {

std::int64_t ipow3(int n) {
    std::int64_t r = 1;
    while (n-- > 0) r *= 3;
    return r;
}

// n with group == C_{3^n}^3
int require_triple_three_group(const GroupSpec& g) {
    auto hp = g.homocyclic_prime_power();
    if (!hp || hp->first != 3 || g.rank() != 3)
        throw DomainError("lifting finders need a group C_{3^n}^3, got " + g.to_string());
    return hp->second;
}

void require_length(const Sequence& s, std::int64_t needed, const char* what) {
    if (s.length() < needed)
        throw DomainError(std::string(what) + " needs |S| >= " + std::to_string(needed) + ", got " +
                          std::to_string(s.length()));
}

void check_witness(const Sequence& source, const Witness& w, std::int64_t target, const char* what) {
    if (w.sub.length() != target || w.sub.sigma() != source.group().zero() || !source.contains(w.sub))
        throw InvariantViolation(std::string(what) + " produced an invalid witness");
}

Sequence project_sequence(const Sequence& s, const GroupSpec& image) {
    Sequence t(image);
    for (const auto& [elem, mult] : s.entries()) t.push(projection_hom(elem, s.group()), mult);
    return t;
}

// Picks a concrete preimage sub-multiset of `projected_witness`: for each
// projected element, the lexicographically least residual elements mapping to it.
Sequence lift_block(const Sequence& residual, const Sequence& projected_witness) {
    const GroupSpec& g = residual.group();
    Sequence block(g);
    for (const auto& [pelem, pmult] : projected_witness.entries()) {
        int still = pmult;
        for (const auto& [elem, mult] : residual.entries()) {
            if (still == 0) break;
            if (projection_hom(elem, g) != pelem) continue;
            const int take = std::min(mult, still);
            block.push(elem, take);
            still -= take;
        }
        if (still != 0) throw InvariantViolation("projected witness has no preimage in the residual sequence");
    }
    return block;
}

}  // namespace

Witness find_2x(const Sequence& s, LiftingStats* stats) {
    const int n = require_triple_three_group(s.group());
    const std::int64_t q = ipow3(n);
    require_length(s, 7 * q - 8, "find_2x");
    const std::int64_t target = 2 * q;

    if (n == 1) {
        // |S| >= 13 = s_{2*3}(C_3^3), so a length-6 zero-sum always exists.
        auto w = find_zero_sum_of_length(s, static_cast<int>(target));
        if (!w) throw InvariantViolation("find_2x: no length-6 zero-sum in a length-13 sequence over C_3^3");
        check_witness(s, *w, target, "find_2x");
        return *w;
    }

    const GroupSpec image = projected_group(s.group());
    const GroupSpec kernel = kernel_group(s.group());
    const std::int64_t t = 7 * (q / 3) - 8;

    // Greedy disjoint length-3 zero-sum blocks of the projection; the residual
    // projected length stays >= 19 = s(C_3^3) through the last extraction.
    Sequence residual = s;
    std::vector<Sequence> blocks;
    Sequence kernel_sums(kernel);
    std::vector<Element> kernel_of_block;
    for (std::int64_t i = 0; i < t; ++i) {
        if (residual.length() < 19)
            throw InvariantViolation("find_2x: residual projected length dropped below s(C_3^3) = 19");
        auto pw = find_zero_sum_of_length(project_sequence(residual, image), 3);
        if (!pw) throw InvariantViolation("find_2x: no length-3 zero-sum in a projected sequence of length >= 19");
        Sequence block = lift_block(residual, pw->sub);
        residual = residual.remove(block);
        Element ksum = kernel_iso(block.sigma(), s.group());
        kernel_sums.push(ksum);
        kernel_of_block.push_back(ksum);
        blocks.push_back(std::move(block));
        if (stats) ++stats->blocks_extracted;
    }

    if (stats) ++stats->recursion_depth;
    Witness sub_witness = find_2x(kernel_sums, stats);

    // Select blocks realizing the recursive witness, earliest blocks first.
    Sequence out(s.group());
    Sequence chosen = sub_witness.sub;
    for (std::size_t i = 0; i < blocks.size() && chosen.length() > 0; ++i) {
        if (chosen.multiplicity(kernel_of_block[i]) == 0) continue;
        Sequence one(kernel);
        one.push(kernel_of_block[i]);
        chosen = chosen.remove(one);
        out = out.concat(blocks[i]);
    }
    if (chosen.length() != 0) throw InvariantViolation("find_2x: recursive witness does not match extracted blocks");

    Witness w{std::move(out), static_cast<int>(target)};
    check_witness(s, w, target, "find_2x");
    return w;
}

Witness find_3x(const Sequence& s) {
    const int n = require_triple_three_group(s.group());
    const std::int64_t q = ipow3(n);
    require_length(s, 6 * q - 3, "find_3x");
    const std::int64_t target = 3 * q;

    auto w = find_zero_sum_of_length(s, static_cast<int>(target));
    if (!w)
        throw InvariantViolation("find_3x: 1 - N^{3q}(S) == 0 (mod 3) guarantees a witness at this length");
    check_witness(s, *w, target, "find_3x");
    return *w;
}

Witness find_5x(const Sequence& s, LiftingStats* stats) {
    const int n = require_triple_three_group(s.group());
    const std::int64_t q = ipow3(n);
    require_length(s, 8 * q - 3, "find_5x");
    const std::int64_t target = 5 * q;

    Witness two = find_2x(s, stats);
    Sequence remainder = s.remove(two.sub);  // length >= 6q - 3
    Witness three = find_3x(remainder);

    Witness w{two.sub.concat(three.sub), static_cast<int>(target)};
    check_witness(s, w, target, "find_5x");
    return w;
}

}  // namespace zerosum
