#pragma once

#include <map>
#include <vector>

#include "holo/brane/gauge.hpp"

namespace holo::brane {

using Point = std::vector<Scalar>;

/// H^j at the base point. reps is r_j x h_j with columns in ker(delta^j) and
/// hermitian-orthogonal to im(delta^{j-1}); proj = (R^* R)^{-1} R^*. The
/// metric inherited from the ambient frame is gram = R^* R.
struct CohomologySpace
{
    int degree = 0;
    int rank = 0;
    ScalarMatrix reps;
    ScalarMatrix proj;
    ScalarMatrix gram;

    /// proj X reps for an End-valued form matrix on F^j.
    FormMatrix restrict(const FormMatrix& x) const;
};

struct CohomologyResult
{
    std::map<int, CohomologySpace> spaces;
    /// rank of delta^i at every evaluation point (identical by construction)
    std::map<int, int> delta_ranks;

    int rank(int j) const;
    const CohomologySpace& at(int j) const;
};

/// Origin plus three fixed rational points.
std::vector<Point> default_eval_points(Ring ring);

/// Throws RankJump when some delta^i changes rank across the points and
/// NonGlobalFrame when the base-point representatives are not global
/// cocycles orthogonal to the image.
CohomologyResult cohomology(const BraneComplex& f, const std::vector<Point>& points);

/// theta^j = P B^j R on every nonzero H^j.
std::map<int, dg::Connection> induced_connections(const GaugeField& g, const CohomologyResult& h);

/// Connections induced by a compatible family (NotCompatible otherwise).
std::map<int, dg::Connection> compatible_family_connections(const BraneComplex& f, const FormFamily& a,
                                                            const CohomologyResult& h);

/// xi^j = P (B_phi^j - B_psi^j) R.
HomElement variation_difference(const GaugeField& psi, const GaugeField& phi, const CohomologySpace& space);

} // namespace holo::brane
