#include "pseudochar/central_function.hpp"

#include "pseudochar/errors.hpp"

namespace pseudochar {

CentralFunction::CentralFunction(std::string name, Algebra domain, ScalarRing codomain,
                                 std::optional<unsigned> dimension, Evaluator evaluator, bool central)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      codomain_(codomain),
      dimension_(dimension),
      evaluator_(std::move(evaluator)),
      central_(central) {
    if (!evaluator_) throw PreconditionFailed("central function needs an evaluator");
    if (dimension_) {
        if (*dimension_ == 0) throw PreconditionFailed("declared dimension must be >= 1");
        if (codomain_.kind() == ScalarRing::Kind::Modular) (void)inverse_of_factorial(*dimension_, codomain_);
    }
}

CentralFunction CentralFunction::trace(const Algebra& matrices, std::optional<unsigned> dimension) {
    if (matrices.kind() != Element::Kind::Matrix) throw BackendMismatch("trace needs a matrix algebra");
    return CentralFunction("trace", matrices, matrices.ring(),
                           dimension.value_or(static_cast<unsigned>(matrices.matrix_size())),
                           [](const Element& x) { return x.as_matrix().trace(); });
}

CentralFunction CentralFunction::regular_trace(const Algebra& group_algebra, std::optional<unsigned> dimension) {
    if (group_algebra.kind() != Element::Kind::GroupAlgebra)
        throw BackendMismatch("regular trace needs a group algebra");
    const auto order = static_cast<std::int64_t>(group_algebra.group()->order());
    return CentralFunction("regular-trace", group_algebra, group_algebra.ring(),
                           dimension.value_or(static_cast<unsigned>(order)),
                           [order](const Element& x) { return x.as_group_algebra().coefficient(0).times(order); });
}

unsigned CentralFunction::dimension() const {
    if (!dimension_) throw PreconditionFailed("central function '" + name_ + "' has no declared dimension");
    return *dimension_;
}

CentralFunction CentralFunction::with_dimension(unsigned d) const {
    return CentralFunction(name_, domain_, codomain_, d, evaluator_, central_);
}

}  // namespace pseudochar
