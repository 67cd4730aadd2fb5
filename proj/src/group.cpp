#include "pseudochar/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "pseudochar/errors.hpp"

namespace pseudochar {

std::shared_ptr<const Group> Group::from_table(Table table) {
    const std::size_t n = table.size();
    if (n == 0) throw ParseError("group table is empty");
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw ParseError("group table row " + std::to_string(i) + " has wrong length");
        for (auto v : table[i])
            if (v >= n) throw ParseError("group table entry " + std::to_string(v) + " out of range");
    }
    for (std::uint32_t i = 0; i < n; ++i)
        if (table[0][i] != i || table[i][0] != i) throw ParseError("index 0 is not the identity");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> row(n), col(n);
        for (std::size_t j = 0; j < n; ++j) {
            row[table[i][j]] = true;
            col[table[j][i]] = true;
        }
        if (std::find(row.begin(), row.end(), false) != row.end() ||
            std::find(col.begin(), col.end(), false) != col.end())
            throw ParseError("group table is not a Latin square (missing inverses)");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw ParseError("group table is not associative at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
    return std::shared_ptr<const Group>(new Group(std::move(table)));
}

std::shared_ptr<const Group> Group::parse(std::istream& in) {
    std::string keyword;
    long long n = 0;
    if (!(in >> keyword >> n) || keyword != "order") throw ParseError("group file must start with 'order n'");
    if (n < 1 || n > 1024) throw ParseError("group order out of range");
    Table table(static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(n)));
    for (auto& row : table) {
        for (auto& v : row) {
            long long x = 0;
            if (!(in >> x)) throw ParseError("group table truncated");
            if (x < 0) throw ParseError("negative index in group table");
            v = static_cast<std::uint32_t>(x);
        }
    }
    std::string extra;
    if (in >> extra) throw ParseError("trailing data after group table");
    return from_table(std::move(table));
}

std::shared_ptr<const Group> Group::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file '" + path + "'");
    return parse(in);
}

std::shared_ptr<const Group> Group::cyclic(std::uint32_t n) {
    if (n == 0) throw PreconditionFailed("cyclic group needs n >= 1");
    Table t(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(std::move(t));
}

std::shared_ptr<const Group> Group::symmetric(std::uint32_t k) {
    if (k == 0 || k > 4) throw PreconditionFailed("symmetric group supported for 1 <= k <= 4");
    std::vector<std::vector<std::uint32_t>> perms;
    std::vector<std::uint32_t> p(k);
    std::iota(p.begin(), p.end(), 0u);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    auto rank = [&](const std::vector<std::uint32_t>& q) {
        return static_cast<std::uint32_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    const auto n = static_cast<std::uint32_t>(perms.size());
    Table t(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
            std::vector<std::uint32_t> c(k);
            for (std::uint32_t i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = rank(c);
        }
    }
    return from_table(std::move(t));
}

GroupAlgebraElement::GroupAlgebraElement(std::shared_ptr<const Group> group, ScalarRing ring, Coefficients coeffs)
    : group_(std::move(group)), ring_(ring) {
    if (!group_) throw PreconditionFailed("group algebra element needs a group");
    for (auto& [g, c] : coeffs) {
        if (g >= group_->order()) throw DimensionMismatch("group index " + std::to_string(g) + " out of range");
        if (!(c.ring() == ring_)) throw BackendMismatch("group algebra coefficient from " + c.ring().to_string());
        if (!c.is_zero()) coeffs_.emplace(g, std::move(c));
    }
}

GroupAlgebraElement GroupAlgebraElement::basis(std::shared_ptr<const Group> group, const ScalarRing& ring,
                                               std::uint32_t g) {
    return GroupAlgebraElement(std::move(group), ring, {{g, ring.one()}});
}

GroupAlgebraElement GroupAlgebraElement::zero(std::shared_ptr<const Group> group, const ScalarRing& ring) {
    return GroupAlgebraElement(std::move(group), ring, {});
}

Scalar GroupAlgebraElement::coefficient(std::uint32_t g) const {
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? ring_.zero() : it->second;
}

namespace {

void require_compatible(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (!(a.group() == b.group())) throw BackendMismatch("group algebra elements over different groups");
    if (!(a.ring() == b.ring()))
        throw BackendMismatch("group algebra elements over " + a.ring().to_string() + " and " + b.ring().to_string());
}

}  // namespace

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    require_compatible(a, b);
    auto out = a.coeffs_;
    for (const auto& [g, c] : b.coeffs_) {
        auto [it, inserted] = out.try_emplace(g, c);
        if (!inserted) it->second += c;
    }
    return GroupAlgebraElement(a.group_, a.ring_, std::move(out));
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    require_compatible(a, b);
    GroupAlgebraElement::Coefficients out;
    for (const auto& [g, cg] : a.coeffs_) {
        for (const auto& [h, ch] : b.coeffs_) {
            auto gh = a.group_->multiply(g, h);
            auto [it, inserted] = out.try_emplace(gh, cg * ch);
            if (!inserted) it->second += cg * ch;
        }
    }
    return GroupAlgebraElement(a.group_, a.ring_, std::move(out));
}

GroupAlgebraElement GroupAlgebraElement::operator-() const { return scaled(ring_.from_int(-1)); }

GroupAlgebraElement GroupAlgebraElement::scaled(const Scalar& c) const {
    Coefficients out;
    for (const auto& [g, x] : coeffs_) out.emplace(g, c * x);
    return GroupAlgebraElement(group_, ring_, std::move(out));
}

std::strong_ordering operator<=>(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.group_ != b.group_) {
        if (auto c = *a.group_ <=> *b.group_; c != 0) return c;
    }
    if (!(a.ring_ == b.ring_)) {
        if (a.ring_.kind() != b.ring_.kind()) return a.ring_.kind() <=> b.ring_.kind();
        return a.ring_.modulus() <=> b.ring_.modulus();
    }
    return std::lexicographical_compare_three_way(
        a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
        [](const auto& x, const auto& y) -> std::strong_ordering {
            if (x.first != y.first) return x.first <=> y.first;
            return x.second <=> y.second;
        });
}

std::string GroupAlgebraElement::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : coeffs_) {
        std::string cs = c.to_string();
        bool negative = !cs.empty() && cs[0] == '-' && c.ring().kind() == ScalarRing::Kind::Rational;
        if (negative) cs.erase(0, 1);
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        if (cs != "1") os << cs << '*';
        os << 'g' << g;
    }
    return os.str();
}

}  // namespace pseudochar
