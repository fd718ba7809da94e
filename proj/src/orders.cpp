// Copyright (c) 2026 The gsp-census authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "orders.hpp"

#include <string>

#include "errors.hpp"

namespace gspc {

mpz_class pow_ui(uint64_t ell, unsigned long e) {
  mpz_class r;
  mpz_class base(static_cast<unsigned long>(ell));
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class sp_order(unsigned g, uint64_t ell) {
  mpz_class o = pow_ui(ell, static_cast<unsigned long>(g) * g);
  for (unsigned j = 1; j <= g; ++j) o *= pow_ui(ell, 2ul * j) - 1;
  return o;
}

mpz_class gl_order(unsigned r, uint64_t ell) {
  mpz_class o = 1;
  mpz_class er = pow_ui(ell, r);
  for (unsigned j = 0; j < r; ++j) o *= er - pow_ui(ell, j);
  return o;
}

mpz_class gsp_order(unsigned g, uint64_t ell) {
  return (mpz_class(static_cast<unsigned long>(ell)) - 1) * sp_order(g, ell);
}

mpz_class exact_div(const mpz_class& num, const mpz_class& den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw InternalError(std::string("inexact division in ") + what);
  }
  return num / den;
}

}  // namespace gspc
