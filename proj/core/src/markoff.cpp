#include "isoverify/markoff.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "factor.hpp"
#include "isoverify/errors.hpp"

namespace isoverify {

namespace {

struct TripleLess {
    bool operator()(const MarkoffTriple& a, const MarkoffTriple& b) const {
        int c = ::cmp(a.m, b.m);
        if (c != 0) return c < 0;
        c = ::cmp(a.m1, b.m1);
        if (c != 0) return c < 0;
        return ::cmp(a.m2, b.m2) < 0;
    }
};

MarkoffTriple sorted_triple(Int x, Int y, Int z) {
    if (x < y) std::swap(x, y);
    if (y < z) std::swap(y, z);
    if (x < y) std::swap(x, y);
    return MarkoffTriple{std::move(x), std::move(y), std::move(z)};
}

}  // namespace

std::vector<MarkoffTriple> markoff_triples(const Int& bound) {
    if (bound < 1) throw InvalidArgument("markoff_triples requires bound >= 1");
    std::set<MarkoffTriple, TripleLess> seen;
    std::deque<MarkoffTriple> queue;
    MarkoffTriple root{1, 1, 1};
    queue.push_back(root);
    seen.insert(root);
    while (!queue.empty()) {
        MarkoffTriple t = std::move(queue.front());
        queue.pop_front();
        // Vieta involution on each coordinate; children beyond the bound
        // are pruned (a child's maximum never shrinks below its parent's).
        MarkoffTriple children[3] = {
            sorted_triple(3 * t.m1 * t.m2 - t.m, t.m1, t.m2),
            sorted_triple(3 * t.m * t.m2 - t.m1, t.m, t.m2),
            sorted_triple(3 * t.m * t.m1 - t.m2, t.m, t.m1),
        };
        for (auto& child : children) {
            if (child.m > bound) continue;
            if (seen.insert(child).second) queue.push_back(child);
        }
    }
    std::vector<MarkoffTriple> out(seen.begin(), seen.end());
    for (const auto& t : out) {
        if (!t.satisfies_equation())
            throw Error("generated triple violates the Markoff equation");  // unreachable
    }
    return out;
}

std::vector<Int> markoff_numbers(std::size_t count) {
    if (count < 1) throw InvalidArgument("markoff_numbers requires count >= 1");
    Int bound = 1000;
    for (;;) {
        std::vector<MarkoffTriple> triples = markoff_triples(bound);
        std::map<Int, const MarkoffTriple*, IntLess> by_max;
        for (const auto& t : triples) {
            auto [it, inserted] = by_max.emplace(t.m, &t);
            if (!inserted)
                throw UnicityViolation("two distinct Markoff triples share the maximum " +
                                       to_string(t.m));
        }
        if (by_max.size() >= count) {
            std::vector<Int> out;
            out.reserve(count);
            for (const auto& [m, _] : by_max) {
                out.push_back(m);
                if (out.size() == count) break;
            }
            return out;
        }
        bound *= 10;
    }
}

SpectrumConstant mu_constant(std::size_t nu, const Budget& budget) {
    if (nu < 1) throw InvalidArgument("mu is indexed from nu = 1");
    Int m = markoff_numbers(nu).back();
    Int discriminant = 9 * m * m - 4;
    // Factor through the split 9m^2-4 = (3m-2)(3m+2): each half is near
    // 3m, so trial division stays cheap even when 9m^2-4 would not.
    auto lo = detail::square_free_decompose(3 * m - 2, budget);
    auto hi = detail::square_free_decompose(3 * m + 2, budget);
    Int g = gcd(lo.squarefree, hi.squarefree);
    Int s = lo.square_root * hi.square_root * g;
    Int r = (lo.squarefree / g) * (hi.squarefree / g);
    // m / sqrt(D) = m sqrt(D) / D; with D = s^2 r this is (m s sqrt(r)) / D.
    QuadraticSurd mu = QuadraticSurd::from_square_free(0, m * s, discriminant, std::move(r));
    return SpectrumConstant{nu, std::move(m), std::move(mu)};
}

}  // namespace isoverify
