#pragma once

// Class and character vectors by exhaustive enumeration: the commutator-matrix path
// over GF(q) and the Pontryagin-dual path over GF(q) or Z/p^e.

#include <string>

#include "pgc/commat.hpp"
#include "pgc/count_vector.hpp"
#include "pgc/enum_options.hpp"
#include "pgc/liecore.hpp"

namespace pgc::enumctr {

// mu[i] = #{x in F_q^nvars : rk A(x) = i}, base q.
CountVector rank_distribution_A(const gf::Field& field, const commat::LinearFormMatrix& A,
                                const EnumOptions& options = {});
// nu[i] = #{y in F_q^nvars : rk B(y) = 2i}, base q.
CountVector rank_distribution_B(const gf::Field& field, const commat::LinearFormMatrix& B,
                                const EnumOptions& options = {});

struct Vectors {
  CountVector cc;  // base p
  CountVector ch;  // base p
  mpz_class k;
  mpz_class s_size;         // |S(G)| from the class side
  mpz_class s_size_dual;    // |S(G)| from the character side
  std::string method;
};

enum class Method { kAuto, kMatrix, kDual };

Vectors vectors_matrix(const lie::Table& table, const EnumOptions& options = {});
Vectors vectors_dual(const lie::Table& table, const EnumOptions& options = {});
// kAuto: matrix path over fields, dual path over Z/p^e.
Vectors compute_vectors(const lie::Table& table, Method method, const EnumOptions& options = {});

struct ClassNumber {
  mpz_class k;
  mpz_class s_size;
};
ClassNumber class_number(const lie::Table& table, Method method = Method::kAuto, const EnumOptions& options = {});

// Throws ClassTooLarge when the nilpotency class is >= p.
void require_class_below_p(const lie::Table& table);

}  // namespace pgc::enumctr
