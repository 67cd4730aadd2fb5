#pragma once

#include <functional>
#include <optional>
#include <string>

#include "pseudochar/algebra.hpp"

namespace pseudochar {

/// A function f: R -> A together with its declared dimension d.
///
/// The evaluator must be pure. `central` records whether f(xy) = f(yx) may be
/// assumed; the recursive forms only memoize on canonical multisets when it is
/// set. When a dimension is declared over Z/m the constructor eagerly checks
/// that d! is invertible and throws NotInvertible otherwise.
class CentralFunction {
   public:
    using Evaluator = std::function<Scalar(const Element&)>;

    CentralFunction(std::string name, Algebra domain, ScalarRing codomain, std::optional<unsigned> dimension,
                    Evaluator evaluator, bool central = true);

    /// Matrix trace on M_n(A); the declared dimension defaults to n.
    static CentralFunction trace(const Algebra& matrices, std::optional<unsigned> dimension = std::nullopt);
    /// |G| times the identity coefficient: the trace of the regular representation.
    static CentralFunction regular_trace(const Algebra& group_algebra, std::optional<unsigned> dimension = std::nullopt);

    Scalar operator()(const Element& x) const { return evaluator_(x); }

    const std::string& name() const noexcept { return name_; }
    const Algebra& domain() const noexcept { return domain_; }
    const ScalarRing& ring() const noexcept { return codomain_; }
    /// Declared dimension; PreconditionFailed when none was declared.
    unsigned dimension() const;
    bool has_dimension() const noexcept { return dimension_.has_value(); }
    bool is_central() const noexcept { return central_; }

    /// Same evaluator with a different declared dimension.
    CentralFunction with_dimension(unsigned d) const;

   private:
    std::string name_;
    Algebra domain_;
    ScalarRing codomain_;
    std::optional<unsigned> dimension_;
    Evaluator evaluator_;
    bool central_;
};

}  // namespace pseudochar
