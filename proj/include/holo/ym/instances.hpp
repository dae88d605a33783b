#pragma once

#include "holo/brane/instances.hpp"
#include "holo/ym/checks.hpp"

namespace holo::ym {

using exact::RandomSource;

/// Base connection with variation directions E_1..E_m.
struct SheafInstance
{
    Connection base;
    std::vector<HomElement> directions;
};

/// Rank 2 over two variables, A0 = 0, E1 = N dx1, E2 = N^T dx2 with N the
/// elementary nilpotent.
SheafInstance nilpotent_instance(int trunc = 2);

SheafInstance random_sheaf_instance(RandomSource& rs, Ring ring, int rank, int m, int conn_degree, int dir_degree);

/// Rank one with closed directions E_i = d p_i + c_i dx_k.
SheafInstance random_rank_one_closed(RandomSource& rs, Ring ring, int m, int conn_degree, int dir_degree);

struct ConeInstance
{
    BraneComplex a;
    FormFamily alpha;
    BraneComplex b;
    FormFamily beta;
    ChainMap f;
};

FormFamily family_sum(const BraneComplex& a, const FormFamily& fa, const BraneComplex& b, const FormFamily& fb);

/// Compatible chain maps between adapted instances: zero, scalar multiples of
/// the identity, inclusions A -> A (+) C and projections A (+) C -> A.
ConeInstance random_cone_instance(RandomSource& rs, Ring ring, int conn_degree);

/// One to three H blocks with directions p tau dx1 (pairwise wedge products
/// vanish, so the brane P is quadratic) and an optional acyclic G part.
SplitData random_split_data(RandomSource& rs, Ring ring, int conn_degree);

struct StationarityInstance
{
    GaugeField psi;
    FormFamily xi;
    CohomologyResult h;
};

/// Adapted brane with its compatible family as psi and xi a random
/// combination of gauge_solve's affine basis at coefficient cap 1. With
/// `flat` the family is zero.
StationarityInstance random_stationarity_instance(RandomSource& rs, Ring ring, bool flat);

} // namespace holo::ym
