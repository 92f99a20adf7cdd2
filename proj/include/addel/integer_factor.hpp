#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>

namespace addel {

// Prime factorization of |n| by trial division plus Pollard rho. Returns
// nullopt only if a cofactor resists the effort bound, which does not happen
// at desk scale.
std::optional<std::map<mpz_class, unsigned>> factor_integer(mpz_class n);

// The squarefree integer d with n = d * s^2 (sign preserved). n != 0.
std::optional<mpz_class> squarefree_part(const mpz_class& n);

// Exact integer square root test.
bool is_perfect_square(const mpz_class& n, mpz_class* root = nullptr);

}  // namespace addel
