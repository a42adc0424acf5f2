#pragma once

#include "poskit/model.hpp"

#include <string>
#include <vector>

namespace poskit {

enum class CartanFamily { A, B, C, D, E, F, G };

/// A simple Lie type, e.g. A3 or G2. Valid ranks: A n>=1, B n>=2, C n>=3,
/// D n>=4, E n in {6,7,8}, F n=4, G n=2.
struct CartanType {
  CartanFamily family = CartanFamily::A;
  int rank = 0;
};

/// Parses "A3", "g2", "D5" (case-insensitive); throws InputError otherwise.
CartanType parse_cartan_type(const std::string& text);

std::string cartan_type_to_string(const CartanType& t);

/// The standard Cartan matrix of the type, generated from the family rules.
std::vector<IVec> cartan_matrix(const CartanType& t);

/// Model of the full flag variety G/B: Schubert divisors D_i and Schubert
/// curves C_i indexed by the simple roots, with D_i . C_j = delta_ij.
VarietyModel build_flag_model(const CartanType& t);

/// Rank-1 model of P^n under PGL(n+1): hyperplane divisor H and one line C.
VarietyModel build_projective_space_model(int n);

} // namespace poskit
