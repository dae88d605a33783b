#include "holo/exact/random.hpp"

namespace holo::exact {

int RandomSource::uniform_int(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

bool RandomSource::coin(double p_true) { return std::bernoulli_distribution(p_true)(rng_); }

Rational RandomSource::rational(int bound, int max_den)
{
    return Rational(uniform_int(-bound, bound), uniform_int(1, max_den));
}

Scalar RandomSource::scalar(bool complex, int bound)
{
    if (!complex)
        return Scalar(rational(bound));
    return Scalar(rational(bound), rational(bound));
}

Scalar RandomSource::nonzero_scalar(bool complex, int bound)
{
    for (;;) {
        Scalar s = scalar(complex, bound);
        if (!s.is_zero())
            return s;
    }
}

TruncPoly RandomSource::poly(Ring ring, int max_deg, int terms, bool complex)
{
    TruncPoly out(ring);
    if (max_deg < 0)
        return out;
    for (int t = 0; t < terms; ++t) {
        int deg = uniform_int(0, max_deg);
        Exponent e(ring.n_vars, 0);
        for (int k = 0; k < deg; ++k)
            e[uniform_int(0, ring.n_vars - 1)] += 1;
        out.add_term(e, nonzero_scalar(complex));
    }
    return out;
}

ExteriorForm RandomSource::form(Ring ring, int degree, int max_deg, int terms, bool complex)
{
    ExteriorForm out(ring, degree);
    if (degree > ring.n_vars)
        return out;
    std::vector<IndexSet> sets;
    for (IndexSet s = 0; s < (IndexSet(1) << ring.n_vars); ++s)
        if (popcount(s) == degree)
            sets.push_back(s);
    for (int t = 0; t < terms; ++t) {
        IndexSet s = sets[uniform_int(0, static_cast<int>(sets.size()) - 1)];
        out.add_component(s, poly(ring, max_deg, 1, complex));
    }
    return out;
}

ScalarMatrix RandomSource::scalar_matrix(std::size_t rows, std::size_t cols, bool complex, double density)
{
    ScalarMatrix out = scalar_zero(rows, cols);
    for (auto& x : out.data())
        if (coin(density))
            x = scalar(complex);
    return out;
}

PolyMatrix RandomSource::poly_matrix(Ring ring, std::size_t rows, std::size_t cols, int max_deg, double density)
{
    PolyMatrix out = poly_zero(ring, rows, cols);
    for (auto& x : out.data())
        if (coin(density))
            x = poly(ring, max_deg, 2);
    return out;
}

FormMatrix RandomSource::one_form_matrix(Ring ring, std::size_t rows, std::size_t cols, int max_deg,
                                         double density, bool complex)
{
    FormMatrix out = form_zero(ring, 1, rows, cols);
    for (auto& x : out.data())
        if (coin(density))
            x = form(ring, 1, max_deg, 2, complex);
    return out;
}

ScalarMatrix RandomSource::invertible(std::size_t n, int steps)
{
    ScalarMatrix g = scalar_identity(n);
    if (n < 2)
        return g;
    for (int s = 0; s < steps; ++s) {
        std::size_t i = uniform_int(0, static_cast<int>(n) - 1);
        std::size_t j = uniform_int(0, static_cast<int>(n) - 2);
        if (j >= i)
            ++j;
        Scalar c = Scalar(uniform_int(-2, 2));
        // row_i += c * row_j
        for (std::size_t k = 0; k < n; ++k)
            g(i, k) += c * g(j, k);
    }
    return g;
}

} // namespace holo::exact
