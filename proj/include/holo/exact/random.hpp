#pragma once

#include <cstdint>
#include <random>

#include "holo/exact/matrix.hpp"

namespace holo::exact {

/// Seeded generator of small exact objects, used by property tests, the
/// fuzzing command and random acceptance instances.
class RandomSource
{
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }

    int uniform_int(int lo, int hi);
    bool coin(double p_true = 0.5);

    // numerator in [-bound, bound], denominator in [1, max_den]
    Rational rational(int bound = 3, int max_den = 2);
    Scalar scalar(bool complex = false, int bound = 3);
    Scalar nonzero_scalar(bool complex = false, int bound = 3);

    // Random polynomial of degree <= max_deg with about `terms` terms.
    TruncPoly poly(Ring ring, int max_deg, int terms = 3, bool complex = false);
    ExteriorForm form(Ring ring, int degree, int max_deg, int terms = 2, bool complex = false);
    ScalarMatrix scalar_matrix(std::size_t rows, std::size_t cols, bool complex = false, double density = 0.7);
    PolyMatrix poly_matrix(Ring ring, std::size_t rows, std::size_t cols, int max_deg, double density = 0.6);
    // rows x cols matrix of 1-forms with polynomial coefficients of degree <= max_deg
    FormMatrix one_form_matrix(Ring ring, std::size_t rows, std::size_t cols, int max_deg, double density = 0.5,
                               bool complex = false);
    // Unimodular matrix over the rationals (product of elementary operations).
    ScalarMatrix invertible(std::size_t n, int steps = 6);

private:
    std::mt19937_64 rng_;
};

} // namespace holo::exact
