#include "pseudochar/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace pseudochar {

namespace {

Monomial multiply_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->first < j->first) {
            out.push_back(*i++);
        } else if (j->first < i->first) {
            out.push_back(*j++);
        } else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), i, a.end());
    out.insert(out.end(), j, b.end());
    return out;
}

unsigned degree_of(const Monomial& m) {
    unsigned d = 0;
    for (const auto& [name, e] : m) d += e;
    return d;
}

std::string render_monomial(const Monomial& m) {
    std::string s;
    for (const auto& [name, e] : m) {
        if (!s.empty()) s += '*';
        s += name;
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

}  // namespace

Polynomial::Polynomial(const mpq_class& constant) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.terms_.emplace(Monomial{{name, 1u}}, mpq_class(1));
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

mpq_class Polynomial::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

unsigned Polynomial::total_degree() const noexcept {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
    return d;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out;
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_) out.add_term(multiply_monomials(ma, mb), ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    if (c == 0) return {};
    Polynomial out = *this;
    for (auto& [m, coeff] : out.terms_) coeff *= c;
    return out;
}

std::strong_ordering operator<=>(const Polynomial& lhs, const Polynomial& rhs) {
    auto i = lhs.terms_.begin();
    auto j = rhs.terms_.begin();
    for (; i != lhs.terms_.end() && j != rhs.terms_.end(); ++i, ++j) {
        if (i->first != j->first) return i->first < j->first ? std::strong_ordering::less : std::strong_ordering::greater;
        int c = cmp(i->second, j->second);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (i == lhs.terms_.end() && j == rhs.terms_.end()) return std::strong_ordering::equal;
    return i == lhs.terms_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(),
                     [](auto* a, auto* b) { return degree_of(a->first) > degree_of(b->first); });

    std::ostringstream os;
    bool first = true;
    for (const auto* term : order) {
        const Monomial& m = term->first;
        mpq_class c = term->second;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (m.empty()) {
            os << c.get_str();
        } else if (c == 1) {
            os << render_monomial(m);
        } else {
            os << c.get_str() << '*' << render_monomial(m);
        }
    }
    return os.str();
}

}  // namespace pseudochar
