#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "holo/ym/solver.hpp"

namespace holo::cli {

using brane::BraneComplex;
using brane::FormFamily;
using brane::Point;
using exact::FormMatrix;
using exact::PairingMode;
using exact::PolyMatrix;
using exact::Ring;
using exact::Scalar;

/// Differentials as written in the file, before the delta^2 = 0 check.
using RawDeltas = std::map<int, PolyMatrix>;

struct Model
{
    Ring ring;
    std::map<int, int> ranks;
    RawDeltas deltas;
    /// Empty when the file has no base_connections.
    FormFamily base;
    std::vector<std::pair<std::string, FormFamily>> variations;
    PairingMode mode = PairingMode::hermitian;
    ym::SolverConfig solver;
    /// Empty means the default points of the ring.
    std::vector<Point> eval_points;

    /// Throws NotAComplex when delta^2 != 0.
    BraneComplex complex() const;
    std::vector<Point> points() const;
    bool has_base() const { return !base.empty(); }
};

/// Throws ParseError naming the JSON pointer of the offending field.
Model parse_model(const nlohmann::json& j);
Model parse_model_text(const std::string& text);

/// Inverse of parse_model up to formatting.
nlohmann::json model_to_json(const Model& m);

/// Rows of polynomial strings.
nlohmann::json poly_matrix_json(const PolyMatrix& a);
/// Per-dx coefficient matrices of a 1-form matrix.
nlohmann::json one_form_json(const FormMatrix& a);
/// Any form matrix as {index set: coefficient matrix}.
nlohmann::json form_json(const FormMatrix& a);

} // namespace holo::cli
