#include "pseudochar/forms.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "pseudochar/errors.hpp"

namespace pseudochar {

namespace {

void require_arity(std::size_t n, unsigned cap, const char* what) {
    if (n == 0) throw PreconditionFailed(std::string(what) + " needs at least one argument");
    if (n > cap)
        throw BudgetExceeded(std::string(what) + " arity " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

}  // namespace

FormEvaluator::FormEvaluator(const CentralFunction& f, FormCaps caps)
    : FormEvaluator(f, caps, f.is_central()) {}

FormEvaluator::FormEvaluator(const CentralFunction& f, FormCaps caps, bool memoize)
    : f_(f), caps_(caps), memoize_(memoize) {}

Scalar FormEvaluator::call_f(const Element& x) {
    ++calls_to_f_;
    return f_(x);
}

Scalar FormEvaluator::operator()(std::span<const Element> args) {
    require_arity(args.size(), caps_.max_arity, "f^[n]");
    std::vector<Element> v(args.begin(), args.end());
    if (!memoize_) return recurse_ordered(v);
    std::sort(v.begin(), v.end());
    return recurse_sorted(std::move(v));
}

Scalar FormEvaluator::operator()(const Multiset& x) {
    if (x.empty()) return f_.ring().one();
    return (*this)(std::span<const Element>(x.entries()));
}

Scalar FormEvaluator::recurse_sorted(std::vector<Element> args) {
    if (args.size() == 1) {
        Multiset key(args);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Scalar v = call_f(args.front());
        memo_.emplace(std::move(key), v);
        return v;
    }
    Multiset key(args);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const Element last = args.back();
    args.pop_back();
    Scalar result = call_f(last) * recurse_sorted(args);
    std::optional<Scalar> previous;
    for (std::size_t i = 0; i < args.size(); ++i) {
        // Equal neighbours yield the same merged multiset.
        if (!(previous && args[i] == args[i - 1])) {
            std::vector<Element> merged = args;
            merged[i] = args[i] * last;
            std::sort(merged.begin(), merged.end());
            previous = recurse_sorted(std::move(merged));
        }
        result -= *previous;
    }
    memo_.emplace(std::move(key), result);
    return result;
}

Scalar FormEvaluator::recurse_ordered(const std::vector<Element>& args) {
    if (args.size() == 1) return call_f(args.front());
    std::vector<Element> rest(args.begin(), args.end() - 1);
    const Element& last = args.back();
    Scalar result = call_f(last) * recurse_ordered(rest);
    for (std::size_t i = 0; i < rest.size(); ++i) {
        std::vector<Element> merged = rest;
        merged[i] = rest[i] * last;
        result -= recurse_ordered(merged);
    }
    return result;
}

Scalar f_rec(const CentralFunction& f, std::span<const Element> args, FormCaps caps) {
    FormEvaluator eval(f, caps);
    return eval(args);
}

Scalar f_hat(const CentralFunction& f, const FormalSum& s, FormCaps caps) {
    FormEvaluator eval(f, caps);
    Scalar total = f.ring().zero();
    for (const auto& [x, a] : s.terms()) total += f.ring().from_integer(a) * eval(x);
    return total;
}

Scalar taylor_oracle(const CentralFunction& f, std::span<const Element> args, FormCaps caps) {
    require_arity(args.size(), caps.max_oracle_arity, "cycle-sum oracle");
    const std::size_t n = args.size();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    Scalar total = f.ring().zero();
    std::vector<bool> seen(n);
    do {
        std::fill(seen.begin(), seen.end(), false);
        Scalar term = f.ring().one();
        std::size_t cycles = 0;
        for (std::size_t start = 0; start < n; ++start) {
            if (seen[start]) continue;
            ++cycles;
            Element product = args[start];
            seen[start] = true;
            for (std::size_t i = sigma[start]; i != start; i = sigma[i]) {
                product = product * args[i];
                seen[i] = true;
            }
            term *= f(product);
        }
        if ((n - cycles) % 2 == 1) term = -term;
        total += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

}  // namespace pseudochar
