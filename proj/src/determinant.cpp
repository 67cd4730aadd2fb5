#include "pseudochar/determinant.hpp"

#include <algorithm>
#include <numeric>

#include "pseudochar/errors.hpp"

namespace pseudochar {

namespace {

Scalar binomial(unsigned n, unsigned k, const ScalarRing& ring) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return ring.from_integer(c);
}

Element unit_of(const CentralFunction& f) {
    if (!f.domain().is_unital()) throw PreconditionFailed("operation needs a unital algebra, got " + f.domain().to_string());
    return f.domain().one();
}

std::string render_args(std::span<const Element> xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += xs[i].to_string();
    }
    return s + ")";
}

}  // namespace

Scalar CharPoly::recovered_trace() const {
    if (coefficients.size() < 2) throw PreconditionFailed("characteristic polynomial of degree 0 has no trace term");
    return -coefficients[coefficients.size() - 2];
}

std::string CharPoly::to_string() const {
    std::string out;
    for (std::size_t k = coefficients.size(); k-- > 0;) {
        const Scalar& c = coefficients[k];
        if (c.is_zero()) continue;
        std::string s = c.to_string();
        bool negative = s.size() > 1 && s[0] == '-' && s.find(' ') == std::string::npos;
        if (negative) s.erase(0, 1);
        if (s.find(' ') != std::string::npos) s = "(" + s + ")";
        std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        std::string term = mono.empty() ? s : (s == "1" ? mono : s + "*" + mono);
        if (out.empty()) out = (negative ? "-" : "") + term;
        else out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

RPolynomial::RPolynomial(Algebra algebra, std::vector<Element> coefficients)
    : algebra_(std::move(algebra)), coeffs_(std::move(coefficients)) {
    if (!algebra_.has_addition()) throw PreconditionFailed("R[t] needs an algebra with addition");
    for (const auto& c : coeffs_)
        if (!algebra_.contains(c)) throw BackendMismatch("R[t] coefficient " + c.to_string() + " is not in " + algebra_.to_string());
    const Element zero = algebra_.zero();
    while (!coeffs_.empty() && coeffs_.back() == zero) coeffs_.pop_back();
}

RPolynomial RPolynomial::t_minus(const Algebra& algebra, const Element& x) {
    return RPolynomial(algebra, {-x, algebra.one()});
}

Element RPolynomial::evaluate(const Scalar& t) const {
    Element acc = algebra_.zero();
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc.scaled(t) + coeffs_[k];
    return acc;
}

Scalar det_from_pseudocharacter(const CentralFunction& f, const Element& x, FormCaps caps) {
    const unsigned d = f.dimension();
    const Scalar inv = inverse_of_factorial(d, f.ring());
    const std::vector<Element> args(d, x);
    return f_rec(f, args, caps) * inv;
}

CharPoly char_poly(const CentralFunction& f, const Element& x, FormCaps caps) {
    const unsigned d = f.dimension();
    const Scalar inv = inverse_of_factorial(d, f.ring());
    const Element one = unit_of(f);
    const Element neg_x = -x;
    FormEvaluator eval(f, caps);
    CharPoly p;
    p.coefficients.reserve(d + 1);
    for (unsigned k = 0; k <= d; ++k) {
        std::vector<Element> args(d - k, neg_x);
        args.insert(args.end(), k, one);
        p.coefficients.push_back(inv * binomial(d, k, f.ring()) * eval(args));
    }
    return p;
}

CharPoly char_poly_by_interpolation(const CentralFunction& f, const Element& x, FormCaps caps) {
    const unsigned d = f.dimension();
    const ScalarRing& ring = f.ring();
    (void)inverse_of_factorial(d, ring);
    const RPolynomial shifted = RPolynomial::t_minus(f.domain(), x);

    std::vector<Scalar> values;
    for (unsigned j = 0; j <= d; ++j) values.push_back(det_from_pseudocharacter(f, shifted.evaluate(ring.from_int(j)), caps));

    std::vector<Scalar> result(d + 1, ring.zero());
    for (unsigned j = 0; j <= d; ++j) {
        // Numerator prod_{i != j} (t - i), built up one linear factor at a time.
        std::vector<Scalar> basis{ring.one()};
        std::int64_t denom = 1;
        for (unsigned i = 0; i <= d; ++i) {
            if (i == j) continue;
            std::vector<Scalar> next(basis.size() + 1, ring.zero());
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k].times(i);
            }
            basis = std::move(next);
            denom *= static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i);
        }
        const Scalar weight = values[j] * ring.from_int(denom).inverse();
        for (std::size_t k = 0; k < basis.size(); ++k) result[k] += weight * basis[k];
    }
    return CharPoly{std::move(result)};
}

IdentityCheck product_formula_check(const CentralFunction& f, const Multiset& x, const Multiset& y, FormCaps caps,
                                    const ProductBudget& budget) {
    Scalar lhs = f_hat(f, multiset_product(x, y, budget), caps);
    FormEvaluator eval(f, caps);
    Scalar rhs = eval(x) * eval(y);
    bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

IdentityCheck degree_d_product_check(const CentralFunction& f, std::span<const Element> xs,
                                     std::span<const Element> ys, FormCaps caps) {
    const unsigned d = f.dimension();
    if (xs.size() != d || ys.size() != d)
        throw DimensionMismatch("degree-d product check needs " + std::to_string(d) + " elements on each side");
    if (d > caps.max_oracle_arity)
        throw BudgetExceeded("degree-d product check with d=" + std::to_string(d) + " exceeds permutation cap");
    FormEvaluator eval(f, caps);
    Scalar lhs = eval(xs) * eval(ys);

    std::vector<std::size_t> sigma(d);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    Scalar rhs = f.ring().zero();
    std::vector<Element> paired;
    do {
        paired.clear();
        for (std::size_t i = 0; i < d; ++i) paired.push_back(xs[i] * ys[sigma[i]]);
        rhs += eval(paired);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

IdentityCheck multiplicativity_check(const CentralFunction& f, const Element& x, const Element& y, FormCaps caps) {
    Scalar lhs = det_from_pseudocharacter(f, x * y, caps);
    Scalar rhs = det_from_pseudocharacter(f, x, caps) * det_from_pseudocharacter(f, y, caps);
    bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

IdentityCheck lemma_ones_check(const CentralFunction& f, const Element& x, unsigned n, FormCaps caps) {
    if (n == 0) throw PreconditionFailed("lemma check needs n >= 1");
    const Element one = unit_of(f);
    std::vector<Element> args{x};
    args.insert(args.end(), n - 1, one);
    Scalar lhs = f_rec(f, args, caps);

    const Scalar f_one = f(one);
    Scalar rhs = f(x);
    for (unsigned i = 1; i < n; ++i) rhs *= f_one - f.ring().from_int(i);
    bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

bool CheckReport::passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.passed; });
}

const CheckEntry* CheckReport::find(const std::string& name) const {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const CheckEntry& e) { return e.name == name; });
    return it == entries.end() ? nullptr : &*it;
}

CheckReport check_pseudocharacter(const CentralFunction& f, std::span<const Element> samples, FormCaps caps) {
    CheckReport report;
    const unsigned d = f.dimension();
    const ScalarRing& ring = f.ring();

    if (f.domain().is_unital()) {
        Scalar f_one = f(f.domain().one());
        bool ok = f_one == ring.from_int(d);
        report.entries.push_back({"unit", ok, "f(1) = " + f_one.to_string() + ", d = " + std::to_string(d)});
    } else {
        report.entries.push_back({"unit", false, "domain " + f.domain().to_string() + " has no unit"});
    }

    try {
        Scalar inv = inverse_of_factorial(d, ring);
        report.entries.push_back({"factorial-invertible", true, "(d!)^-1 = " + inv.to_string()});
    } catch (const NotInvertible& e) {
        report.entries.push_back({"factorial-invertible", false, e.what()});
    }

    CheckEntry central{"central", true, std::to_string(samples.size()) + " samples"};
    for (std::size_t i = 0; i < samples.size() && central.passed; ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            Scalar a = f(samples[i] * samples[j]);
            Scalar b = f(samples[j] * samples[i]);
            if (a != b) {
                central = {"central", false,
                           "f(xy) = " + a.to_string() + " != f(yx) = " + b.to_string() + " for x = " +
                               samples[i].to_string() + ", y = " + samples[j].to_string()};
                break;
            }
        }
    }
    report.entries.push_back(central);

    if (f.domain().has_addition()) {
        CheckEntry linear{"linear", true, std::to_string(samples.size()) + " samples"};
        for (std::size_t i = 0; i + 1 < samples.size() && linear.passed; ++i) {
            const Element& x = samples[i];
            const Element& y = samples[i + 1];
            const Scalar a = ring.from_int(static_cast<std::int64_t>(i % 5) - 2);
            if (f(x + y) != f(x) + f(y)) {
                linear = {"linear", false, "f(x+y) != f(x)+f(y) for x = " + x.to_string() + ", y = " + y.to_string()};
            } else if (f(x.scaled(a)) != a * f(x)) {
                linear = {"linear", false, "f(a x) != a f(x) for a = " + a.to_string() + ", x = " + x.to_string()};
            }
        }
        report.entries.push_back(linear);
    } else {
        report.entries.push_back({"linear", false, "domain has no addition"});
    }

    CheckEntry vanishing{"vanishing", true, ""};
    if (samples.empty()) {
        vanishing.detail = "no samples";
    } else if (d + 1 > caps.max_arity) {
        vanishing = {"vanishing", false, "f^[d+1] exceeds the arity cap"};
    } else {
        FormEvaluator eval(f, caps);
        std::size_t tuples = 0;
        for (std::size_t start = 0; start < samples.size(); ++start) {
            std::vector<Element> tuple;
            for (unsigned k = 0; k <= d; ++k) tuple.push_back(samples[(start + k) % samples.size()]);
            Scalar v = eval(tuple);
            ++tuples;
            if (!v.is_zero()) {
                vanishing = {"vanishing", false, "f^[d+1]" + render_args(tuple) + " = " + v.to_string()};
                break;
            }
        }
        if (vanishing.passed) vanishing.detail = std::to_string(tuples) + " tuples";
    }
    report.entries.push_back(vanishing);
    return report;
}

CheckReport trace_roundtrip_check(const CentralFunction& f, std::span<const Element> samples, FormCaps caps) {
    CheckReport report;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Element& x = samples[i];
        CharPoly p = char_poly(f, x, caps);
        Scalar recovered = p.recovered_trace();
        Scalar expected = f(x);
        bool ok = recovered == expected;
        report.entries.push_back({"roundtrip[" + std::to_string(i) + "]", ok,
                                  "-c_{d-1} = " + recovered.to_string() + ", f(x) = " + expected.to_string() +
                                      (ok ? "" : " for x = " + x.to_string())});
    }
    return report;
}

}  // namespace pseudochar
