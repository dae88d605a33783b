#pragma once

#include "holo/brane/complex.hpp"
#include "holo/brane/gauge.hpp"
#include "holo/exact/random.hpp"

namespace holo::brane {

struct RandomComplexOptions
{
    int n_vars = 2;
    int trunc = 4;
    int max_terms = 3;
    int max_rank = 3;
    /// Allow polynomial changes of frame (differential degree up to 2).
    bool polynomial_frames = true;
    /// Allow Koszul and multiplication-by-x blocks, which carry Atiyah
    /// obstructions.
    bool koszul = true;
};

/// Complexes delta^i = g_{i+1} N_i g_i^{-1} with N_i partial identities
/// (N_{i+1} N_i = 0) and g_i unimodular, or small Koszul complexes.
BraneComplex random_complex(exact::RandomSource& rs, const RandomComplexOptions& opts);

/// Unimodular polynomial matrix with an explicit inverse.
struct Frame
{
    PolyMatrix g;
    PolyMatrix g_inv;
};

Frame random_frame(exact::RandomSource& rs, Ring ring, int rank, bool polynomial);

/// Exact unitary matrix: signed permutation, phases in {1, -1, i, -i} and
/// Givens rotations by Pythagorean triples.
ScalarMatrix random_unitary(exact::RandomSource& rs, int n);

/// Block sizes used by the standard form of random_complex: for term i,
/// incoming image k_{i-1}, outgoing k_i and the rest is cohomology.
struct StandardForm
{
    std::map<int, int> ranks;
    std::map<int, int> out_rank;
};

StandardForm random_standard_form(exact::RandomSource& rs, int terms, int max_rank);
/// N_i for the standard form.
PolyMatrix standard_delta(Ring ring, const StandardForm& sf, int i);

/// Complex with constant differentials in constant unitary frames together with a
/// compatible family of connections: A^i = g_i M_i g_i^{-1} where M_i is block
/// diagonal over (incoming, outgoing, rest) and the outgoing block of M_i
/// equals the incoming block of M_{i+1}.
struct AdaptedInstance
{
    BraneComplex complex;
    FormFamily connections;
    StandardForm form;
};

AdaptedInstance random_adapted(exact::RandomSource& rs, Ring ring, int terms, int max_rank, int conn_degree);

} // namespace holo::brane
