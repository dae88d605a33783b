#pragma once

#include "holo/dg/connection.hpp"

namespace holo::dg {

/// Element (sigma, beta) of J^1(F) = F (+) Omega^1(F) with the twisted action
/// f.(sigma, beta) = (f sigma, f beta + df (x) sigma).
struct JetElement
{
    FormValued sigma; // r x 1, 0-forms
    FormValued beta;  // r x 1, 1-forms

    friend bool operator==(const JetElement&, const JetElement&) = default;
};

JetElement jet_zero(const FreeModule& m);
JetElement jet_action(const TruncPoly& f, const JetElement& j);
JetElement eta(const FormValued& sigma);

/// A module morphism F -> J^1(F) for the twisted action, stored by its values
/// on the standard basis: phi(e_a) = (S e_a, B e_a).
struct JetMorphism
{
    PolyMatrix s;
    FormMatrix b;

    JetElement apply(const FormValued& sigma) const;
};

Connection splitting_to_connection(const FreeModule& m, const JetMorphism& phi);
JetMorphism connection_to_splitting(const Connection& c);

/// Raw-pair maps of the Atiyah sequence 0 -> Omega^1(F) -> J^1(F) -> F -> 0.
JetElement atiyah_iota(const FormValued& beta);
FormValued atiyah_pi(const JetElement& j);

struct AtiyahReport
{
    bool iota_injective = false;
    bool pi_surjective = false;
    bool pi_iota_zero = false;
    bool ker_pi_eq_im_iota = false;
    bool exact() const { return iota_injective && pi_surjective && pi_iota_zero && ker_pi_eq_im_iota; }
};

/// Exactness of the sequence on the truncated coefficient spaces, checked by
/// building iota and pi as exact matrices.
AtiyahReport atiyah_exactness(const FreeModule& m);

} // namespace holo::dg
