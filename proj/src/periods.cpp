#include "ramper/periods.hpp"

#include <stdexcept>

namespace ramper {

std::string DifferentialForm::label() const { return "x^" + std::to_string(i) + " dx/y"; }

FilteredBasis filtered_basis(long g) {
    if (g < 1) throw std::invalid_argument("filtered_basis: g must be >= 1");
    FilteredBasis basis{g, {}};
    basis.forms.reserve(static_cast<size_t>(g));
    for (long i = 0; i < g; ++i) basis.forms.push_back(DifferentialForm{i});
    return basis;
}

RamifiedElem PullbackMatrix::det() const {
    RamifiedElem prod = RamifiedElem::one(diagonal.at(0).p(), diagonal.at(0).precision());
    for (const auto& entry : diagonal) prod *= entry;
    return prod;
}

PullbackMatrix pullback_matrix(const RamifiedElem& alpha, long g) {
    if (g < 1) throw std::invalid_argument("pullback_matrix: g must be >= 1");
    if ((alpha - RamifiedElem::one(alpha.p(), alpha.precision())).valuation_lower_bound() < 1)
        throw std::invalid_argument("pullback_matrix: alpha is not congruent to 1 mod pi");
    PullbackMatrix m{g, {}};
    m.diagonal.reserve(static_cast<size_t>(g));
    // (x, y) |-> (alpha^-1 x, alpha^-(g+1) y) scales x^i dx/y by alpha^(g-i)
    for (long i = 0; i < g; ++i) m.diagonal.push_back(alpha.pow(g - i));
    return m;
}

MinimalPeriod minimal_period(const RamifiedElem& alpha, long g) {
    PullbackMatrix m = pullback_matrix(alpha, g);
    mpz_class d = mpz_class(g) * (g + 1) / 2;
    RamifiedElem value = alpha.pow(d.get_si());
    if (value != m.det())
        throw std::runtime_error("minimal_period: alpha^(g(g+1)/2) differs from the pullback determinant");
    return MinimalPeriod{value, d, g};
}

}  // namespace ramper
