#pragma once

#include <concepts>

#include "addel/scalar/ext_field.hpp"
#include "addel/scalar/prime_field.hpp"
#include "addel/scalar/quad_field.hpp"
#include "addel/scalar/rational.hpp"

namespace addel {

// What every coefficient backend must provide. Contexts (a prime, an
// extension modulus, a surd) travel inside elements; a default-constructed
// element is the context-free zero and one_like/from_int mint values in the
// context of an existing element.
template <class K>
concept Field = requires(K a, K b) {
    { K() } -> std::same_as<K>;
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.inverse() } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.is_one() } -> std::same_as<bool>;
    { a == b } -> std::same_as<bool>;
    { one_like(a) } -> std::same_as<K>;
    { zero_like(a) } -> std::same_as<K>;
    { from_int(a, 0L) } -> std::same_as<K>;
    { a.str() } -> std::same_as<std::string>;
};

static_assert(Field<Rat>);
static_assert(Field<Fp>);
static_assert(Field<Fq>);
static_assert(Field<QuadRat>);

}  // namespace addel
