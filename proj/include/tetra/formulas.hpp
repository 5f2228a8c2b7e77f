#pragma once

#include "tetra/bigint.hpp"
#include "tetra/color.hpp"
#include "tetra/qpoly.hpp"

#include <optional>
#include <string>
#include <utility>

namespace tetra {

// Closed forms for order ideals of T_n(S). Each product has a primary form
// and a form over the triple index 1 <= i <= j <= k <= n-1; the *_triple
// variants evaluate the latter with exact division.

QPoly q_factorial(unsigned m);                  // m!_q
QPoly q_binomial(unsigned n, unsigned k);       // [n choose k]_q

QPoly q_factorial_product(int n);               // prod_{j=1..n} j!_q
QPoly q_factorial_product_triple(int n);        // prod [i+1]/[i]
QPoly q_binomial_product(int n);                // prod_{j=1..n} [n choose j]_q
QPoly q_binomial_product_triple(int n);         // prod [j+1]/[j]
QPoly three_color_product(int n);               // prod_{j=1..n-1} (1+q^j)^(n-j)
QPoly three_color_product_triple(int n);        // prod [i+j]/[i+j-1]

/// Carlitz-Riordan q-Catalan number, C_0(q) = C_1(q) = 1.
QPoly carlitz_riordan(int j);
BigInt catalan(int j);
/// (prod_{j=1..n} C_j, prod_{j=1..n} C_j(q)).
std::pair<BigInt, QPoly> catalan_product(int n);
BigInt catalan_product_closed(int n);           // prod binom(2j,j)/(j+1)
BigInt catalan_product_triple(int n);           // prod (i+j+2)/(i+j)

BigInt asm_number(int n);                       // prod_{j=0..n-1} (3j+1)!/(n+j)!
BigInt asm_number_triple(int n);                // prod (i+j+k+1)/(i+j+k-1)
BigInt tspp_number(int n);                      // prod_{1<=i<=j<=n-1} (i+j+n-2)/(i+2j-2)
BigInt tspp_number_triple(int n);               // prod (i+j+k-1)/(i+j+k-2)

enum class FormulaFamily {
  SingleColor,      // q-factorial product
  OppositePair,     // {g,o}, {r,s}, {b,y}
  AdjacentPair,     // the S_1 family
  AdjacentPairDual, // the S_2 family; the q-form describes the dual poset
  ThreeColor,
  FourColor,
  AllSix,
};

std::string family_name(FormulaFamily f);

/// Family of S when a closed form is known; nullopt for the empty set,
/// {r,g,y}, {b,g,s} and the five-color sets.
std::optional<FormulaFamily> formula_family(const ColorSet& s);

/// |J(T_n(S))| from the closed form; NoFormula when none is known.
BigInt formula_count(int n, const ColorSet& s);
/// Rank generating function from the closed form. For the S_2 family this is
/// F(J(T_n^*(S)), q). NoFormula for families without a q-form.
QPoly formula_rank_gf(int n, const ColorSet& s);
bool has_q_formula(const ColorSet& s);

}  // namespace tetra
