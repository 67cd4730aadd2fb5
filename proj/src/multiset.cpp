#include "pseudochar/multiset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pseudochar/errors.hpp"

namespace pseudochar {

Multiset::Multiset(std::vector<Element> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_)
        if (e.kind() != entries_.front().kind())
            throw BackendMismatch(std::string("multiset mixes ") + kind_name(entries_.front().kind()) + " and " +
                                  kind_name(e.kind()));
    std::sort(entries_.begin(), entries_.end());
}

std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
}

std::string Multiset::to_string() const {
    std::vector<std::string> parts;
    parts.reserve(entries_.size());
    for (const auto& e : entries_) parts.push_back(e.to_string());
    std::sort(parts.begin(), parts.end());
    std::string s = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += parts[i];
    }
    return s + '}';
}

PartialBijection::PartialBijection(std::uint32_t n, std::uint32_t m, std::vector<Pair> pairs)
    : n_(n), m_(m), pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    std::vector<bool> used_i(n + 1), used_j(m + 1);
    for (const auto& [i, j] : pairs_) {
        if (i < 1 || i > n || j < 1 || j > m)
            throw DimensionMismatch("partial bijection pair (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") outside [" + std::to_string(n) + "]x[" + std::to_string(m) + "]");
        if (used_i[i] || used_j[j]) throw PreconditionFailed("partial bijection is not injective");
        used_i[i] = used_j[j] = true;
    }
}

std::string PartialBijection::to_string() const {
    std::string s = "{";
    for (std::size_t t = 0; t < pairs_.size(); ++t) {
        if (t) s += ',';
        s += "(" + std::to_string(pairs_[t].first) + "," + std::to_string(pairs_[t].second) + ")";
    }
    return s + "}";
}

mpz_class partial_bijection_count(std::uint32_t n, std::uint32_t m) {
    mpz_class total = 0;
    for (std::uint32_t k = 0; k <= std::min(n, m); ++k) {
        mpz_class cn, cm;
        mpz_bin_uiui(cn.get_mpz_t(), n, k);
        mpz_bin_uiui(cm.get_mpz_t(), m, k);
        total += cn * cm * factorial(k);
    }
    return total;
}

namespace {

/// Advances a k-subset of {1..n} (sorted) to its lexicographic successor.
bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n) {
    const std::size_t k = c.size();
    for (std::size_t t = k; t-- > 0;) {
        if (c[t] < n - k + t + 1) {
            ++c[t];
            for (std::size_t u = t + 1; u < k; ++u) c[u] = c[u - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::uint32_t> first_combination(std::uint32_t k) {
    std::vector<std::uint32_t> c(k);
    std::iota(c.begin(), c.end(), 1u);
    return c;
}

void require_budget(const mpz_class& predicted, const ProductBudget& budget) {
    if (predicted > mpz_class(std::to_string(budget.max_intermediate)))
        throw BudgetExceeded("product needs " + predicted.get_str() + " intermediate multisets, budget is " +
                             std::to_string(budget.max_intermediate));
}

void require_same_backend(std::span<const Element> xs, std::span<const Element> ys) {
    if (!xs.empty() && !ys.empty() && xs.front().kind() != ys.front().kind())
        throw BackendMismatch(std::string("cannot multiply multisets of ") + kind_name(xs.front().kind()) + " and " +
                              kind_name(ys.front().kind()));
}

Multiset along(std::span<const Element> xs, std::span<const Element> ys,
               std::span<const PartialBijection::Pair> pairs) {
    std::vector<bool> matched_x(xs.size()), matched_y(ys.size());
    std::vector<Element> out;
    out.reserve(xs.size() + ys.size() - pairs.size());
    for (const auto& [i, j] : pairs) {
        matched_x[i - 1] = true;
        matched_y[j - 1] = true;
        out.push_back(xs[i - 1] * ys[j - 1]);
    }
    for (std::size_t s = 0; s < xs.size(); ++s)
        if (!matched_x[s]) out.push_back(xs[s]);
    for (std::size_t t = 0; t < ys.size(); ++t)
        if (!matched_y[t]) out.push_back(ys[t]);
    return Multiset(std::move(out));
}

}  // namespace

void for_each_partial_bijection(std::uint32_t n, std::uint32_t m,
                                const std::function<void(std::span<const PartialBijection::Pair>)>& visit) {
    std::vector<PartialBijection::Pair> pairs;
    for (std::uint32_t k = 0; k <= std::min(n, m); ++k) {
        pairs.resize(k);
        auto domain = first_combination(k);
        do {
            auto codomain = first_combination(k);
            do {
                auto image = codomain;
                do {
                    for (std::uint32_t t = 0; t < k; ++t) pairs[t] = {domain[t], image[t]};
                    visit(pairs);
                } while (std::next_permutation(image.begin(), image.end()));
            } while (next_combination(codomain, m));
        } while (next_combination(domain, n));
    }
}

std::vector<PartialBijection> partial_bijections(std::uint32_t n, std::uint32_t m) {
    std::vector<PartialBijection> out;
    for_each_partial_bijection(n, m, [&](std::span<const PartialBijection::Pair> p) {
        out.emplace_back(n, m, std::vector<PartialBijection::Pair>(p.begin(), p.end()));
    });
    return out;
}

FormalSum::FormalSum(Multiset m, mpz_class coefficient) { add(std::move(m), coefficient); }

mpz_class FormalSum::coefficient(const Multiset& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void FormalSum::add(const Multiset& m, const mpz_class& c) { add(Multiset(m), c); }

void FormalSum::add(Multiset&& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FormalSum& FormalSum::operator+=(const FormalSum& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, c);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, -c);
    return *this;
}

FormalSum FormalSum::operator-() const { return scaled(-1); }

FormalSum FormalSum::scaled(const mpz_class& c) const {
    FormalSum out;
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& [m, coeff] : out.terms_) coeff *= c;
    return out;
}

std::string FormalSum::to_string() const {
    if (terms_.empty()) return "0";
    struct Rendered {
        std::size_t size;
        std::string text;
        mpz_class coeff;
    };
    std::vector<Rendered> rows;
    rows.reserve(terms_.size());
    for (const auto& [m, c] : terms_) rows.push_back({m.size(), m.to_string(), c});
    std::sort(rows.begin(), rows.end(), [](const Rendered& a, const Rendered& b) {
        return a.size != b.size ? a.size > b.size : a.text < b.text;
    });
    std::ostringstream os;
    for (std::size_t t = 0; t < rows.size(); ++t) {
        mpz_class c = rows[t].coeff;
        if (t == 0) {
            os << c.get_str();
        } else if (c < 0) {
            os << " - " << mpz_class(-c).get_str();
        } else {
            os << " + " << c.get_str();
        }
        os << '*' << rows[t].text;
    }
    return os.str();
}

Multiset product_along(std::span<const Element> xs, std::span<const Element> ys, const PartialBijection& alpha) {
    if (alpha.n() != xs.size() || alpha.m() != ys.size())
        throw DimensionMismatch("partial bijection is [" + std::to_string(alpha.n()) + "]->[" +
                                std::to_string(alpha.m()) + "] but multisets have sizes " +
                                std::to_string(xs.size()) + " and " + std::to_string(ys.size()));
    require_same_backend(xs, ys);
    return along(xs, ys, alpha.pairs());
}

Multiset product_along(const Multiset& x, const Multiset& y, const PartialBijection& alpha) {
    return product_along(std::span<const Element>(x.entries()), std::span<const Element>(y.entries()), alpha);
}

FormalSum multiset_product(std::span<const Element> xs, std::span<const Element> ys, const ProductBudget& budget) {
    require_same_backend(xs, ys);
    const auto n = static_cast<std::uint32_t>(xs.size());
    const auto m = static_cast<std::uint32_t>(ys.size());
    require_budget(partial_bijection_count(n, m), budget);
    FormalSum out;
    const mpz_class one = 1;
    for_each_partial_bijection(n, m, [&](std::span<const PartialBijection::Pair> pairs) {
        out.add(along(xs, ys, pairs), one);
    });
    return out;
}

FormalSum multiset_product(const Multiset& x, const Multiset& y, const ProductBudget& budget) {
    return multiset_product(std::span<const Element>(x.entries()), std::span<const Element>(y.entries()), budget);
}

FormalSum formal_product(const FormalSum& s, const FormalSum& t, const ProductBudget& budget) {
    mpz_class predicted = 0;
    for (const auto& [x, a] : s.terms())
        for (const auto& [y, b] : t.terms())
            predicted += partial_bijection_count(static_cast<std::uint32_t>(x.size()),
                                                 static_cast<std::uint32_t>(y.size()));
    require_budget(predicted, budget);

    FormalSum out;
    for (const auto& [x, a] : s.terms()) {
        for (const auto& [y, b] : t.terms()) {
            const mpz_class ab = a * b;
            const FormalSum xy = multiset_product(x, y, budget);
            for (const auto& [z, c] : xy.terms()) out.add(z, ab * c);
        }
    }
    return out;
}

FormalSum map_formal(const SemigroupHom& hom, const FormalSum& s) {
    FormalSum out;
    for (const auto& [x, a] : s.terms()) {
        std::vector<Element> mapped;
        mapped.reserve(x.size());
        for (const auto& e : x.entries()) mapped.push_back(hom.apply(e));
        out.add(Multiset(std::move(mapped)), a);
    }
    return out;
}

}  // namespace pseudochar
