#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cohkit/poly.hpp"
#include "cohkit/qstate.hpp"
#include "cohkit/roof.hpp"
#include "cohkit/symmetry.hpp"

namespace cohkit {

// State files: {"dim": d, "amplitudes": [[re, im], ...]} for pure states or
// {"dim": d, "matrix": [[[re, im], ...], ...]} for density matrices.
using StateVariant = std::variant<PureState, DensityMatrix>;

StateVariant parse_state_json(const nlohmann::json& j);
StateVariant read_state_file(const std::string& path);
nlohmann::json state_to_json(const PureState& psi);
nlohmann::json density_to_json(const DensityMatrix& rho);

// Polynomial files: {"dim": d, "degree": h, "power": m,
//   "terms": [{"exponents": [k_1..k_d], "coeff": [re, im]}, ...]}
HomogeneousPolynomial parse_polynomial_json(const nlohmann::json& j);
HomogeneousPolynomial read_polynomial_file(const std::string& path);
nlohmann::json polynomial_to_json(const HomogeneousPolynomial& p);

// Decomposition witnesses: {"probabilities": [...], "states": [[[re, im], ...], ...]}
nlohmann::json decomposition_to_json(const Decomposition& dec);
Decomposition parse_decomposition_json(const nlohmann::json& j);

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

// Header "K,cbar_g,cg", six-decimal fixed rows.
void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);

}  // namespace cohkit
